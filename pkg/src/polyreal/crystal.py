"""Crystal structures on Z^infinity_iota and Z^infinity_iota[lambda].

For ``x = (..., a_2, a_1)`` put ``sigma_k(x) = a_k + sum_{j>k} a_{i_k, i_j} a_j``.
Then ``eps_i(x)`` is the maximum of ``sigma_k`` over ``k`` with ``i_k = i``
(the tail of the sequence contributes the value 0), ``wt(x) = -sum a_k alpha_{i_k}``
and ``phi_i = eps_i + <h_i, wt>``.  ``f_i`` adds one at the smallest maximising
``k`` and ``e_i`` removes one at the largest.  The lambda-version is the tensor
product with the one-element crystal ``R_lambda``.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .linform import LinForm
from .sequence import IotaSequence


class CrystalError(RuntimeError):
    pass


class PointOverflowError(CrystalError):
    pass


@dataclass(frozen=True)
class CrystalPoint:
    """A finitely supported integer vector, keyed by flat index."""

    items: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "CrystalPoint":
        return cls(tuple(sorted((k, int(v)) for k, v in d.items() if v != 0)))

    @classmethod
    def from_double(cls, seq: IotaSequence, d: Mapping[tuple[int, int], int]) -> "CrystalPoint":
        return cls.from_dict({seq.double_to_flat(s, j): a for (s, j), a in d.items()})

    @property
    def coords(self) -> dict[int, int]:
        return dict(self.items)

    def get(self, k: int) -> int:
        for kk, v in self.items:
            if kk == k:
                return v
        return 0

    @property
    def max_index(self) -> int:
        return self.items[-1][0] if self.items else 0

    def total(self) -> int:
        return sum(v for _, v in self.items)

    def is_zero(self) -> bool:
        return not self.items

    def bump(self, k: int, delta: int) -> "CrystalPoint":
        d = dict(self.items)
        d[k] = d.get(k, 0) + delta
        return CrystalPoint.from_dict(d)

    def to_double(self, seq: IotaSequence) -> dict[tuple[int, int], int]:
        return {seq.flat_to_double(k): v for k, v in self.items}

    def to_json(self, seq: IotaSequence) -> list[dict]:
        out = [{"s": s, "j": j, "a": a} for (s, j), a in self.to_double(seq).items()]
        return sorted(out, key=lambda r: (r["s"], r["j"]))

    @classmethod
    def from_json(cls, seq: IotaSequence, rows: Iterable[Mapping]) -> "CrystalPoint":
        d: dict[int, int] = {}
        for r in rows:
            k = seq.double_to_flat(int(r["s"]), int(r["j"]))
            d[k] = d.get(k, 0) + int(r["a"])
        return cls.from_dict(d)


ZERO = CrystalPoint()


class Crystal:
    """The crystal Z^infinity_iota, optionally twisted by a dominant weight lambda."""

    def __init__(self, seq: IotaSequence, weight: Sequence[int] | None = None, window: int | None = None):
        self.seq = seq
        self.n = seq.n
        self.weight = tuple(weight) if weight is not None else None
        if self.weight is not None and len(self.weight) != self.n:
            raise ValueError(f"weight {self.weight} must have {self.n} entries")
        self.window = window
        self._max_k = seq.max_flat(window) if window is not None else None
        self._cache: dict[CrystalPoint, tuple] = {}

    # raw Z^infinity data

    def _data(self, x: CrystalPoint):
        """(sigma by k, total root coefficients c_l) for x."""
        hit = self._cache.get(x)
        if hit is not None:
            return hit
        seq, a = self.seq, self.seq.rs.a
        top = x.max_index + seq.period
        coords = x.coords
        c = [0] * (self.n + 1)
        sigma = {}
        for k in range(top, 0, -1):
            ik = seq.letter(k)
            ak = coords.get(k, 0)
            sigma[k] = ak + sum(a(ik, l) * c[l] for l in range(1, self.n + 1) if c[l])
            c[ik] += ak
        res = (sigma, tuple(c))
        if len(self._cache) > 200_000:
            self._cache.clear()
        self._cache[x] = res
        return res

    def sigma(self, x: CrystalPoint, k: int) -> int:
        if k > x.max_index:
            return 0
        return self._data(x)[0][k]

    def epsilon_raw(self, x: CrystalPoint, i: int) -> int:
        sigma, _ = self._data(x)
        return max(v for k, v in sigma.items() if self.seq.letter(k) == i)

    def root_coords(self, x: CrystalPoint) -> tuple[int, ...]:
        """wt(x) = -sum_l c_l alpha_l, returned as (-c_1, ..., -c_n)."""
        c = self._data(x)[1]
        return tuple(-c[l] for l in range(1, self.n + 1))

    def pairing(self, x: CrystalPoint, i: int) -> int:
        """<h_i, wt(x)>."""
        c = self._data(x)[1]
        a = self.seq.rs.a
        return -sum(a(i, l) * c[l] for l in range(1, self.n + 1))

    def phi_raw(self, x: CrystalPoint, i: int) -> int:
        return self.epsilon_raw(x, i) + self.pairing(x, i)

    def _argmax(self, x: CrystalPoint, i: int):
        sigma, _ = self._data(x)
        vals = [(k, v) for k, v in sigma.items() if self.seq.letter(k) == i]
        eps = max(v for _, v in vals)
        ks = [k for k, v in vals if v == eps]
        return eps, min(ks), max(ks)

    def _check(self, x: CrystalPoint) -> CrystalPoint:
        if self._max_k is not None and x.max_index > self._max_k:
            raise PointOverflowError(
                f"point support reaches flat index {x.max_index}, beyond the window of {self.window} rows"
            )
        return x

    def f_raw(self, x: CrystalPoint, i: int) -> CrystalPoint:
        _, kmin, _ = self._argmax(x, i)
        return self._check(x.bump(kmin, 1))

    def e_raw(self, x: CrystalPoint, i: int) -> CrystalPoint | None:
        eps, _, kmax = self._argmax(x, i)
        if eps <= 0:
            return None
        return x.bump(kmax, -1)

    # public structure (lambda-twisted when a weight is set)

    def _lam(self, i: int) -> int:
        return self.weight[i - 1] if self.weight is not None else 0

    def wt(self, x: CrystalPoint) -> tuple[int, ...]:
        """<h_i, wt> for i = 1..n (including lambda when twisted)."""
        return tuple(self.pairing(x, i) + self._lam(i) for i in range(1, self.n + 1))

    def epsilon(self, x: CrystalPoint, i: int) -> int:
        if self.weight is None:
            return self.epsilon_raw(x, i)
        return max(self.epsilon_raw(x, i), -self._lam(i) - self.pairing(x, i))

    def phi(self, x: CrystalPoint, i: int) -> int:
        if self.weight is None:
            return self.phi_raw(x, i)
        return max(0, self.phi_raw(x, i) + self._lam(i))

    def f(self, x: CrystalPoint, i: int) -> CrystalPoint | None:
        if self.weight is not None and not self.phi_raw(x, i) > -self._lam(i):
            return None
        return self.f_raw(x, i)

    def e(self, x: CrystalPoint, i: int) -> CrystalPoint | None:
        if self.weight is not None and not self.phi_raw(x, i) >= -self._lam(i):
            return None
        return self.e_raw(x, i)


# module-level wrappers


def sigma(seq: IotaSequence, x: CrystalPoint, k: int) -> int:
    return Crystal(seq).sigma(x, k)


def epsilon(seq: IotaSequence, x: CrystalPoint, i: int) -> int:
    return Crystal(seq).epsilon(x, i)


def phi(seq: IotaSequence, x: CrystalPoint, i: int) -> int:
    return Crystal(seq).phi(x, i)


def weight(seq: IotaSequence, x: CrystalPoint) -> tuple[int, ...]:
    """wt(x) in the simple-root basis."""
    return Crystal(seq).root_coords(x)


def ftilde_infty(seq: IotaSequence, i: int, x: CrystalPoint) -> CrystalPoint:
    return Crystal(seq).f(x, i)


def etilde_infty(seq: IotaSequence, i: int, x: CrystalPoint) -> CrystalPoint | None:
    return Crystal(seq).e(x, i)


def ftilde_lambda(seq: IotaSequence, lam: Sequence[int], i: int, x: CrystalPoint) -> CrystalPoint | None:
    return Crystal(seq, lam).f(x, i)


def etilde_lambda(seq: IotaSequence, lam: Sequence[int], i: int, x: CrystalPoint) -> CrystalPoint | None:
    return Crystal(seq, lam).e(x, i)


def default_lambda_window(seq: IotaSequence) -> int:
    return seq.n + 2


def generate_b_lambda(seq: IotaSequence, lam: Sequence[int], window: int | None = None,
                      cap: int = 1_000_000) -> list[CrystalPoint]:
    """BFS closure of the zero vector under the lambda-twisted f_i, in discovery order."""
    if window is None:
        window = default_lambda_window(seq)
    cr = Crystal(seq, lam, window)
    seen = {ZERO: None}
    queue = deque([ZERO])
    while queue:
        x = queue.popleft()
        for i in range(1, seq.n + 1):
            y = cr.f(x, i)
            if y is not None and y not in seen:
                seen[y] = None
                if len(seen) > cap:
                    raise CrystalError(f"B(lambda) generation exceeded cap of {cap} points")
                queue.append(y)
    return list(seen)


def generate_b_infty(seq: IotaSequence, depth: int, window: int | None = None) -> list[CrystalPoint]:
    """Points of B(infinity) with sum of coordinates <= depth."""
    if window is None:
        window = depth + seq.n + 2
    cr = Crystal(seq, None, window)
    seen = {ZERO: None}
    layer = [ZERO]
    for _ in range(depth):
        nxt = []
        for x in layer:
            for i in range(1, seq.n + 1):
                y = cr.f(x, i)
                if y not in seen:
                    seen[y] = None
                    nxt.append(y)
        layer = nxt
    return list(seen)


def random_b_infty_points(seq: IotaSequence, count: int, max_depth: int, rng: random.Random) -> list[CrystalPoint]:
    """Random points reached by random f-words of length <= max_depth."""
    cr = Crystal(seq)
    out = []
    for _ in range(count):
        x = ZERO
        for _ in range(rng.randint(0, max_depth)):
            x = cr.f(x, rng.randint(1, seq.n))
        out.append(x)
    return out


# epsilon-star


def in_sigma(seq: IotaSequence, x: CrystalPoint, forms: Iterable[LinForm] | None = None) -> bool:
    """Membership of x in Sigma_iota, tested on Tab^N with N large enough for x."""
    from .tableaux import gen_tab_infty

    if any(v < 0 for _, v in x.items):
        return False
    if forms is None:
        rows = max(seq.n, seq.flat_to_double(x.max_index)[0] if x.items else 0) + 1
        forms = gen_tab_infty(seq, rows)
    return all(f.evaluate(x) >= 0 for f in forms)


def epsilon_star(seq: IotaSequence, x: CrystalPoint, i: int, check: bool = True) -> int:
    """eps*_i(x) = max{-phi(x) : phi in Tab_{X,iota,i}[0] and 0}."""
    from .tableaux import epsilon_star_forms

    if check and not in_sigma(seq, x):
        raise CrystalError("point is not in the image Sigma_iota of B(infinity)")
    return max(-f.evaluate(x) for f in epsilon_star_forms(seq, i))


def highest_weight_path(seq: IotaSequence, x: CrystalPoint) -> list[int]:
    """Letters i_1, i_2, ... with x = f_{i_1} f_{i_2} ... (0), found by greedy e-steps."""
    cr = Crystal(seq)
    letters = []
    budget = x.total()
    while not x.is_zero():
        if len(letters) > budget:
            raise CrystalError("e-reduction did not reach 0; input is not in the B(infinity) image")
        for i in range(1, seq.n + 1):
            y = cr.e(x, i)
            if y is not None:
                letters.append(i)
                x = y
                break
        else:
            raise CrystalError("no e_i applies to a nonzero point; input is not in the B(infinity) image")
    return letters


def transfer(seq: IotaSequence, target: IotaSequence, x: CrystalPoint) -> CrystalPoint:
    """Image of x under the crystal isomorphism Im Psi_seq -> Im Psi_target."""
    path = highest_weight_path(seq, x)
    cr = Crystal(target)
    y = ZERO
    for i in reversed(path):
        y = cr.f(y, i)
    return y


def epsilon_star_oracle(seq: IotaSequence, x: CrystalPoint, i: int) -> int:
    """First coordinate of x transported to a rotation of the word that starts with i."""
    rot = seq.rotation_starting_with(i)
    return transfer(seq, rot, x).get(1)
