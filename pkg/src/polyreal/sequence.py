"""Periodic index sequences iota and the combinatorial data derived from them.

A word ``(w_1, ..., w_L)`` stands for the infinite sequence obtained by repeating
it to the left, exactly as it is displayed::

    iota = (..., w_1, ..., w_L, w_1, ..., w_L)

so ``i_1 = w_L``, ``i_2 = w_{L-1}`` and so on.  The word ``3,1,2`` therefore
gives ``iota = (..., 3, 1, 2, 3, 1, 2)`` with ``i_1 = 2``.

Flat indices ``k >= 1`` and double indices ``(s, j)`` (the ``s``-th occurrence
of the letter ``j`` counted from the right) are interchangeable.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .cartan import RootSystem


class SequenceError(ValueError):
    pass


class NotAdaptedError(SequenceError):
    pass


class IotaSequence:
    def __init__(self, rs: RootSystem, word: Sequence[int]):
        word = tuple(int(w) for w in word)
        n = rs.rank
        if not word:
            raise SequenceError("empty word")
        bad = [w for w in word if not 1 <= w <= n]
        if bad:
            raise SequenceError(f"letters {bad} outside I = {{1..{n}}}")
        missing = sorted(set(range(1, n + 1)) - set(word))
        if missing:
            raise SequenceError(f"letters {missing} never occur in word {word}")
        L = len(word)
        for p in range(L):
            if word[p] == word[(p + 1) % L]:
                raise SequenceError(
                    f"word {word} has equal cyclically adjacent letters at positions {p + 1}, {(p + 1) % L + 1}"
                )
        self.rs = rs
        self.word = word
        self.period = L
        # letters of one period in iota order: i_1, ..., i_L
        self._letters = tuple(reversed(word))
        self._positions = {j: [] for j in range(1, n + 1)}
        for pos, j in enumerate(self._letters, start=1):
            self._positions[j].append(pos)
        self._count = {j: len(p) for j, p in self._positions.items()}
        self._rank_in_period = {}
        for j, ps in self._positions.items():
            for r, pos in enumerate(ps):
                self._rank_in_period[pos] = r

    def __repr__(self):
        return f"IotaSequence({self.rs.name}, word={','.join(map(str, self.word))})"

    def __eq__(self, other):
        return isinstance(other, IotaSequence) and self.rs == other.rs and self.word == other.word

    def __hash__(self):
        return hash((self.rs.family, self.rs.rank, self.word))

    @property
    def n(self) -> int:
        return self.rs.rank

    def letter(self, k: int) -> int:
        """i_k."""
        if k < 1:
            raise SequenceError(f"flat index must be >= 1, got {k}")
        return self._letters[(k - 1) % self.period]

    def letters(self, count: int) -> list[int]:
        return [self.letter(k) for k in range(1, count + 1)]

    # index conversions

    def flat_to_double(self, k: int) -> tuple[int, int]:
        j = self.letter(k)
        q, r = divmod(k - 1, self.period)
        return q * self._count[j] + self._rank_in_period[r + 1] + 1, j

    def double_to_flat(self, s: int, j: int) -> int:
        if s < 1 or not 1 <= j <= self.n:
            raise SequenceError(f"invalid double index ({s}, {j})")
        q, r = divmod(s - 1, self._count[j])
        return q * self.period + self._positions[j][r]

    def max_flat(self, rows: int) -> int:
        """Largest flat index whose double index has s <= rows."""
        return max(self.double_to_flat(rows, j) for j in range(1, self.n + 1))

    def flats_up_to_row(self, rows: int) -> list[int]:
        return sorted(self.double_to_flat(s, j) for j in range(1, self.n + 1) for s in range(1, rows + 1))

    def k_plus(self, k: int) -> int:
        j = self.letter(k)
        s, _ = self.flat_to_double(k)
        return self.double_to_flat(s + 1, j)

    def k_minus(self, k: int) -> int:
        s, j = self.flat_to_double(k)
        return 0 if s == 1 else self.double_to_flat(s - 1, j)

    def iota_first(self, i: int) -> int:
        """iota^(i) = min{k : i_k = i}."""
        return self._positions[i][0]

    # adaptedness and p/P data

    @cached_property
    def adapted(self) -> bool:
        a = self.rs.a
        two = self._letters * 2
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                if a(i, j) == 0:
                    continue
                sub = [x for x in two if x in (i, j)]
                if any(sub[t] == sub[t + 1] for t in range(len(sub) - 1)):
                    return False
        return True

    def is_adapted(self) -> bool:
        return self.adapted

    def require_adapted(self):
        if not self.adapted:
            raise NotAdaptedError(f"{self!r} is not adapted to the Cartan matrix of type {self.rs.name}")

    def p_value(self, i: int, j: int) -> int:
        """1 if the {i,j}-subsequence reads (..., j, i, j, i), i.e. i occurs first."""
        self.require_adapted()
        if i == j or self.rs.a(i, j) == 0:
            raise SequenceError(f"p_{{{i},{j}}} is defined only for distinct linked nodes")
        return 1 if self.iota_first(i) < self.iota_first(j) else 0

    @cached_property
    def _P(self) -> tuple[int, ...]:
        self.require_adapted()
        n = self.n
        P = [0] * (n + 2)
        acc = 0
        top = n - 1 if self.rs.family == "D" else n
        for k in range(2, top + 1):
            acc += self.p_value(k, k - 1)
            P[k] = acc
        if self.rs.family == "D":
            P[n] = P[n - 2] + self.p_value(n, n - 2)
        return tuple(P)

    def P(self, k: int) -> int:
        if not 0 <= k <= self.n + 1:
            raise SequenceError(f"P({k}) undefined: need 0 <= k <= {self.n + 1}")
        return self._P[k]

    def rotations(self) -> Iterable["IotaSequence"]:
        L = self.period
        for r in range(L):
            yield IotaSequence(self.rs, self.word[r:] + self.word[:r])

    def rotation_starting_with(self, i: int) -> "IotaSequence":
        """A cyclic rotation of the word whose i_1 equals ``i``."""
        for seq in self.rotations():
            if seq.letter(1) == i:
                return seq
        raise SequenceError(f"letter {i} does not occur")


def parse_word(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    if not text.strip() or any(not p for p in parts):
        raise SequenceError(f"malformed word {text!r}: expected comma-separated letters")
    out = []
    for pos, p in enumerate(parts, start=1):
        try:
            out.append(int(p))
        except ValueError:
            raise SequenceError(f"malformed word {text!r}: entry {pos} ({p!r}) is not an integer") from None
    return tuple(out)


def permutation_words(rs: RootSystem) -> list[IotaSequence]:
    """Every word that is a permutation of I (each is a distinct sequence iota)."""
    from itertools import permutations

    out = []
    for perm in permutations(range(1, rs.rank + 1)):
        seq = IotaSequence(rs, perm)
        out.append(seq)
    return out


def adapted_permutation_words(rs: RootSystem) -> list[IotaSequence]:
    return [s for s in permutation_words(rs) if s.is_adapted()]
