"""Root-system data for the classical types A_n, B_n, C_n, D_n (Kac's labelling)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

FAMILIES = ("A", "B", "C", "D")
MIN_RANK = {"A": 2, "B": 2, "C": 2, "D": 4}


class RootSystemError(ValueError):
    pass


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix ``a[i][j] = <h_i, alpha_j>`` (0-based storage, 1-based in the API)."""
    n = rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    if family == "D":
        for i in range(n - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        # node n hangs off n-2
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    else:
        for i in range(n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if family == "B":
            a[n - 1][n - 2] = -2
        elif family == "C":
            a[n - 2][n - 1] = -2
    return tuple(tuple(row) for row in a)


def _symmetrizer(a) -> tuple[Fraction, ...]:
    """Positive d_i with d_i a_ij = d_j a_ji, normalised so min d_i = 1."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and d[j] is None:
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    low = min(d)
    return tuple(x / low for x in d)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...] = field(repr=False)
    symmetrizer: tuple[Fraction, ...] = field(repr=False)
    positive_roots: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.rank

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def a(self, i: int, j: int) -> int:
        """<h_i, alpha_j> with 1-based indices."""
        return self.cartan[i - 1][j - 1]

    def index_set(self) -> range:
        return range(1, self.rank + 1)

    def root_norm(self, root: Sequence[int]) -> Fraction:
        """(alpha, alpha) for a root in simple-root coordinates, with (alpha_i, alpha_j) = d_i a_ij."""
        n = self.rank
        return sum(
            (root[i] * root[j] * self.symmetrizer[i] * self.cartan[i][j]
             for i in range(n) for j in range(n) if root[i] and root[j]),
            Fraction(0),
        )

    def coroot_pairing(self, root: Sequence[int], weight: Sequence[int]) -> Fraction:
        """<weight, root^vee> where weight is given by its coordinates <h_i, weight>."""
        num = sum((root[i] * self.symmetrizer[i] * weight[i] for i in range(self.rank)), Fraction(0))
        return 2 * num / self.root_norm(root)

    def pairing_with_simple(self, i: int, root: Sequence[int]) -> int:
        """<h_i, sum_j c_j alpha_j>."""
        return sum(self.cartan[i - 1][j] * root[j] for j in range(self.rank))


def _positive_roots(cartan) -> tuple[tuple[int, ...], ...]:
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                if beta == simple[i]:
                    continue
                # alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i, p - q = <h_i, beta>
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    if tuple(cur) in roots:
                        p += 1
                    else:
                        break
                q = p - sum(cartan[i][j] * beta[j] for j in range(n))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


def build_root_system(family: str, rank: int) -> RootSystem:
    family = family.upper()
    if family not in FAMILIES:
        raise RootSystemError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if not isinstance(rank, int) or rank < MIN_RANK[family]:
        raise RootSystemError(
            f"rank {rank!r} out of range for type {family}: need n >= {MIN_RANK[family]}"
        )
    a = cartan_matrix(family, rank)
    return RootSystem(family, rank, a, _symmetrizer(a), _positive_roots(a))


def check_dominant(rs: RootSystem, weight: Sequence[int]) -> tuple[int, ...]:
    weight = tuple(int(w) for w in weight)
    if len(weight) != rs.rank:
        raise RootSystemError(f"weight {weight} has {len(weight)} entries, expected {rs.rank}")
    if any(w < 0 for w in weight):
        raise RootSystemError(f"weight {weight} is not dominant")
    return weight


def weyl_dimension(rs: RootSystem, weight: Sequence[int]) -> int:
    """Dimension of the irreducible module V(weight) by the Weyl dimension formula."""
    weight = check_dominant(rs, weight)
    rho = (1,) * rs.rank
    shifted = tuple(w + 1 for w in weight)
    num = Fraction(1)
    for root in rs.positive_roots:
        num *= rs.coroot_pairing(root, shifted) / rs.coroot_pairing(root, rho)
    assert num.denominator == 1, num
    return int(num)


def dominant_weights(rank: int, max_total: int):
    """All dominant weights with coordinate sum <= max_total, in a fixed order."""
    def rec(prefix, remaining, slots):
        if slots == 0:
            yield tuple(prefix)
            return
        for v in range(remaining + 1):
            yield from rec(prefix + [v], remaining - v, slots - 1)

    out = list(rec([], max_total, rank))
    return sorted(out, key=lambda w: (sum(w), tuple(-x for x in w)))
