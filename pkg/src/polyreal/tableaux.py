"""Boxes, column tableaux and the inequality families they generate.

Entries are encoded as integers: an unbarred letter ``t`` is ``+t``, a barred
letter ``t-bar`` is ``-t`` and the special symbol ``(n+1)-bar`` of types C and
D is ``-(n+1)``.  The order on the alphabets is never read off this encoding;
``entry_rank`` and the comparison helpers below implement it explicitly,
including the type D partial order in which ``n`` and ``n-bar`` are
incomparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .linform import LinForm, beta_minus, form_from_double, lambda_form
from .sequence import IotaSequence


class TableauError(ValueError):
    pass


# alphabets and orders


def alphabet(family: str, n: int) -> tuple[int, ...]:
    """The letters of J_X in increasing order (type D: n listed before n-bar)."""
    if family == "A":
        return tuple(range(1, n + 2))
    return tuple(range(1, n + 1)) + tuple(-t for t in range(n, 0, -1))


def entry_rank(family: str, n: int, e: int) -> int:
    if e > 0:
        return e
    t = -e
    if family == "D":
        return n if t == n else 2 * n - t
    return 2 * n + 1 - t


def is_special(n: int, e: int) -> bool:
    return e == -(n + 1)


def check_entry(family: str, n: int, e: int):
    ok = (
        (family == "A" and 1 <= e <= n + 1)
        or (family != "A" and e != 0 and abs(e) <= n)
        or (family in ("C", "D") and e == -(n + 1))
    )
    if not ok:
        raise TableauError(f"entry {e} is not admissible for type {family}{n}")


def lt(family: str, n: int, a: int, b: int) -> bool:
    """a < b in J_X (false for the incomparable pair n, n-bar in type D)."""
    return entry_rank(family, n, a) < entry_rank(family, n, b)


def le(family: str, n: int, a: int, b: int) -> bool:
    return a == b or lt(family, n, a, b)


def chain_ok(family: str, n: int, a: int, b: int) -> bool:
    """The column condition between consecutive entries a (above) and b (below)."""
    if family == "D":
        # a is not >= b: strictly smaller, or {a, b} = {n, n-bar}
        return lt(family, n, a, b) or {a, b} == {n, -n}
    return lt(family, n, a, b)


def entry_label(n: int, e: int) -> str:
    if e > 0:
        return str(e)
    return f"{-e}bar"


# boxes and columns


def box_form(seq: IotaSequence, entry: int, s: int) -> LinForm:
    """The linear form of a single box with letter ``entry`` and shift ``s``."""
    fam = seq.rs.family
    n = seq.n
    check_entry(fam, n, entry)
    P = seq.P
    t: dict[tuple[int, int], int] = {}

    def add(row, col, c):
        t[(row, col)] = t.get((row, col), 0) + c

    if entry == -(n + 1):
        add(s + P(n), n, 1)
    elif entry > 0:
        j = entry
        if fam == "C" and j == n:
            add(s + P(n), n, 2)
            add(s + P(n - 1) + 1, n - 1, -1)
        elif fam == "D" and j == n - 1:
            add(s + P(n - 1), n - 1, 1)
            add(s + P(n), n, 1)
            add(s + P(n - 2) + 1, n - 2, -1)
        else:
            add(s + P(j), j, 1)
            add(s + P(j - 1) + 1, j - 1, -1)
    else:
        j = -entry
        if fam == "C" and j == n:
            add(s + P(n - 1) + 1, n - 1, 1)
            add(s + P(n) + 1, n, -2)
        elif fam == "D" and j == n:
            add(s + P(n - 1), n - 1, 1)
            add(s + P(n) + 1, n, -1)
        elif fam == "D" and j == n - 1:
            add(s + P(n - 2) + 1, n - 2, 1)
            add(s + P(n - 1) + 1, n - 1, -1)
            add(s + P(n) + 1, n, -1)
        elif fam == "D":
            add(s + P(j - 1) + n - j, j - 1, 1)
            add(s + P(j) + n - j, j, -1)
        else:
            add(s + P(j - 1) + n - j + 1, j - 1, 1)
            add(s + P(j) + n - j + 1, j, -1)
    return form_from_double(seq, t)


@dataclass(frozen=True)
class ColumnTableau:
    family: str
    entries: tuple[int, ...]
    shift: int

    def __len__(self):
        return len(self.entries)

    def replace(self, pos: int, value: int) -> "ColumnTableau":
        """Copy with entries[pos] (0-based) set to value."""
        e = list(self.entries)
        e[pos] = value
        return ColumnTableau(self.family, tuple(e), self.shift)

    def with_entries(self, entries) -> "ColumnTableau":
        return ColumnTableau(self.family, tuple(entries), self.shift)

    def label(self, n: int) -> str:
        return f"[{','.join(entry_label(n, e) for e in self.entries)}]_{self.shift}"

    def to_json(self) -> dict:
        return {"family": self.family, "shift": self.shift, "entries": list(self.entries)}

    @classmethod
    def from_json(cls, data: dict) -> "ColumnTableau":
        return cls(str(data["family"]), tuple(int(e) for e in data["entries"]), int(data["shift"]))


def expand(seq: IotaSequence, T: ColumnTableau) -> LinForm:
    """box(j_k)_s + box(j_{k-1})_{s+1} + ... + box(j_1)_{s+k-1}."""
    k = len(T.entries)
    total = LinForm()
    for i, e in enumerate(T.entries, start=1):
        total = total + box_form(seq, e, T.shift + k - i)
    return total


def is_admissible_column(family: str, n: int, entries: tuple[int, ...]) -> bool:
    """Membership test for the column shapes of Tab_{X,iota} (shift ignored)."""
    if not entries:
        return False
    try:
        for e in entries:
            check_entry(family, n, e)
    except TableauError:
        return False
    k = len(entries)
    if entries[0] == -(n + 1):
        if family not in ("C", "D") or k > n + 1:
            return False
        rest = entries[1:]
        if any(e > 0 or e == -(n + 1) for e in rest):
            return False
        return all(lt(family, n, a, b) for a, b in zip(rest, rest[1:]))
    if any(e == -(n + 1) for e in entries):
        return False
    max_k = {"A": n, "B": n, "C": n - 1, "D": n - 2}[family]
    if k > max_k:
        return False
    if not all(chain_ok(family, n, a, b) for a, b in zip(entries, entries[1:])):
        return False
    if family == "B" and k == n and len({abs(e) for e in entries}) != n:
        return False
    return True


def _chains(family: str, n: int, length: int, letters: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All columns of the given length over ``letters`` satisfying the chain condition."""
    if family != "D":
        yield from combinations(letters, length)
        return

    def rec(prefix):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for e in letters:
            # only consecutive pairs are constrained, so n, n-bar, n, ... may alternate
            if not prefix or chain_ok(family, n, prefix[-1], e):
                yield from rec(prefix + [e])

    yield from rec([])


def _special_columns(n: int, length: int, family: str) -> Iterator[tuple[int, ...]]:
    barred = tuple(-t for t in range(n, 0, -1))
    for rest in combinations(barred, length - 1):
        yield (-(n + 1),) + rest


def tab_infty_shapes(seq: IotaSequence) -> list[tuple[tuple[int, ...], int]]:
    """(entries, minimal shift) for every column shape of Tab_{X,iota}."""
    fam, n, P = seq.rs.family, seq.n, seq.P
    out = []
    letters = alphabet(fam, n)
    if fam in ("A", "B"):
        for k in range(1, n + 1):
            for c in _chains(fam, n, k, letters):
                if fam == "B" and k == n and len({abs(e) for e in c}) != n:
                    continue
                out.append((c, 1 - P(k)))
    elif fam == "C":
        for k in range(1, n):
            for c in _chains(fam, n, k, letters):
                out.append((c, 1 - P(k)))
        for k in range(1, n + 2):
            for c in _special_columns(n, k, fam):
                out.append((c, 1 - P(n)))
    else:
        for k in range(1, n - 1):
            for c in _chains(fam, n, k, letters):
                out.append((c, 1 - P(k)))
        for k in range(1, n + 2):
            lo = 1 - P(n - 1) if k % 2 == 0 else 1 - P(n)
            for c in _special_columns(n, k, fam):
                out.append((c, lo))
    return out


def gen_tab_infty_tableaux(seq: IotaSequence, max_shift: int | None = None) -> list[ColumnTableau]:
    """Every tableau of Tab_{X,iota} with shift <= max_shift (default n, i.e. Tab^n)."""
    seq.require_adapted()
    if max_shift is None:
        max_shift = seq.n
    fam = seq.rs.family
    return [
        ColumnTableau(fam, c, s)
        for c, lo in tab_infty_shapes(seq)
        for s in range(lo, max_shift + 1)
    ]


def gen_tab_infty(seq: IotaSequence, max_shift: int | None = None) -> set[LinForm]:
    return {expand(seq, T) for T in gen_tab_infty_tableaux(seq, max_shift)}


# the families Tab_{X,iota,k}[lambda]


@dataclass(frozen=True)
class LambdaItem:
    """One member of Tab_{X,iota,k}[lambda]: a column plus Lambda_k, or a raw form."""

    k: int
    branch: str
    tableau: ColumnTableau | None = None
    raw: LinForm | None = None

    def form(self, seq: IotaSequence) -> LinForm:
        if self.tableau is not None:
            return expand(seq, self.tableau).shift_const(lam={self.k: 1})
        return self.raw

    def label(self, n: int) -> str:
        if self.tableau is not None:
            return f"{self.tableau.label(n)} + L{self.k}"
        return f"raw {self.raw}"


def cond12(seq: IotaSequence, k: int) -> tuple[bool, bool]:
    n, first = seq.n, seq.iota_first
    c1 = k < n and first(k) > first(k + 1)
    c2 = k > 1 and first(k) > first(k - 1)
    return c1, c2


def _raw(seq: IotaSequence, k: int, terms: dict[tuple[int, int], int]) -> LinForm:
    return form_from_double(seq, terms, 0, {k: 1})


def _d_flag(seq: IotaSequence, t: int) -> bool:
    """C_t: iota^(t) < iota^(n-2)."""
    a, b = seq.iota_first(t), seq.iota_first(seq.n - 2)
    assert a != b, "first occurrences of distinct letters never coincide"
    return a < b


def tab_lambda_items(seq: IotaSequence, k: int) -> list[LambdaItem]:
    seq.require_adapted()
    fam, n, P = seq.rs.family, seq.n, seq.P
    if not 1 <= k <= n:
        raise TableauError(f"k = {k} outside I = 1..{n}")
    letters = alphabet(fam, n)
    lam_seed = LambdaItem(k, "seed", raw=_raw(seq, k, {(1, k): -1}))

    def col(entries, s, branch):
        return LambdaItem(k, branch, tableau=ColumnTableau(fam, tuple(entries), s))

    def boxes(lo_entry, s, branch, hi_entry=None):
        return [
            col((t,), s, branch)
            for t in letters
            if le(fam, n, lo_entry, t) and (hi_entry is None or le(fam, n, t, hi_entry))
        ]

    c1, c2 = cond12(seq, k)
    if fam == "A":
        if not c1 and not c2:
            return [lam_seed]
        if c1 and not c2:
            return boxes(k + 1, 1 - P(k + 1), "only1")
        if c2 and not c1:
            tail = tuple(range(k + 1, n + 2))
            return [
                col(head + tail, -P(k - 1) - n + k, "only2")
                for head in combinations(range(1, k + 1), k - 1)
            ]
        return [
            col(c, -P(k - 1), "both")
            for c in combinations(letters, k)
            if c[-1] > k
        ]

    if fam in ("B", "C") and k < n:
        if not c1 and not c2:
            return [lam_seed]
        if c1 and not c2:
            return boxes(k + 1, 1 - P(k + 1), "only1")
        if c2 and not c1:
            return boxes(-k, -P(k - 1) - n + k, "only2")
        return [
            col(c, -P(k - 1), "both")
            for c in combinations(letters, k)
            if lt(fam, n, k, c[-1])
        ]

    if fam in ("B", "C"):  # k == n
        if seq.iota_first(n) < seq.iota_first(n - 1):
            return [lam_seed]
        if fam == "B":
            return [
                col(c, -P(n - 1), "top")
                for c in combinations(letters, n)
                if lt(fam, n, n, c[-1]) and len({abs(e) for e in c}) == n
            ]
        return [
            col(c, -P(n - 1), "top")
            for length in range(2, n + 2)
            for c in _special_columns(n, length, fam)
        ]

    # type D
    if k <= n - 3:
        if not c1 and not c2:
            return [lam_seed]
        if c1 and not c2:
            return boxes(k + 1, 1 - P(k + 1), "only1")
        if c2 and not c1:
            return boxes(-k, 1 - P(k - 1) - n + k, "only2")
        return [
            col(c, -P(k - 1), "both")
            for c in _chains(fam, n, k, letters)
            if lt(fam, n, k, c[-1])
        ]
    if k == n - 2:
        flags = (_d_flag(seq, n - 3), _d_flag(seq, n - 1), _d_flag(seq, n))
        if flags == (False, False, False):
            return [lam_seed]
        if flags == (False, True, False):
            return [
                LambdaItem(k, "case2", raw=_raw(seq, k, {(1, n - 2): -1, (1, n - 1): 1})),
                LambdaItem(k, "case2", raw=_raw(seq, k, {(2, n - 1): -1})),
            ]
        if flags == (False, False, True):
            return [
                LambdaItem(k, "case3", raw=_raw(seq, k, {(1, n - 2): -1, (1, n): 1})),
                LambdaItem(k, "case3", raw=_raw(seq, k, {(2, n): -1})),
            ]
        if flags == (True, False, False):
            return boxes(-(n - 2), -1 - P(n - 3), "case4")
        if flags == (False, True, True):
            return boxes(n - 1, -P(n - 2), "case5")
        if flags == (True, True, False):
            return [
                col(c, -1 - P(n - 2), "case6")
                for length in range(3, n + 2, 2)
                for c in _special_columns(n, length, fam)
                if length != 3 or le(fam, n, -(n - 2), c[2])
            ]
        if flags == (True, False, True):
            return [
                col(c, -1 - P(n - 2), "case7")
                for length in range(2, n + 2, 2)
                for c in _special_columns(n, length, fam)
                if length != 2 or le(fam, n, -(n - 2), c[1])
            ]
        if flags == (True, True, True):
            return [
                col(c, -P(n - 3), "case8")
                for c in _chains(fam, n, n - 2, letters)
                if le(fam, n, n - 1, c[-1])
            ]
        raise AssertionError(f"unreachable type D flag combination {flags}")
    if k == n - 1:
        if _d_flag(seq, n - 1):
            return [lam_seed]
        return [
            col(c, -P(n - 2), "top")
            for length in range(2, n + 2, 2)
            for c in _special_columns(n, length, fam)
            if length != 2 or le(fam, n, -(n - 1), c[1])
        ]
    # k == n
    if _d_flag(seq, n):
        return [lam_seed]
    return [
        col(c, -P(n - 2), "top")
        for length in range(3, n + 2, 2)
        for c in _special_columns(n, length, fam)
    ]


def gen_tab_lambda_k(seq: IotaSequence, k: int) -> set[LinForm]:
    return {item.form(seq) for item in tab_lambda_items(seq, k)}


def gen_tab_lambda(seq: IotaSequence) -> set[LinForm]:
    """Tab_{X,iota}[lambda]: the union over k plus the zero form."""
    out = {LinForm()}
    for k in seq.rs.index_set():
        out |= gen_tab_lambda_k(seq, k)
    return out


def epsilon_star_forms(seq: IotaSequence, i: int) -> set[LinForm]:
    zero = (0,) * seq.n
    return {f.specialize(zero) for f in gen_tab_lambda_k(seq, i)} | {LinForm()}


def collisions(seq: IotaSequence, tableaux) -> list[tuple[object, object]]:
    """Pairs of distinct tableau items that expand to the same form."""
    seen: dict[LinForm, object] = {}
    out = []
    for T in tableaux:
        f = T.form(seq) if isinstance(T, LambdaItem) else expand(seq, T)
        if f in seen and seen[f] != T:
            out.append((seen[f], T))
        else:
            seen[f] = T
    return out


# predicted operator actions from the closedness propositions
#
# Each predictor returns None when the proposition does not cover the pair
# (T, operator), ("same",) for "T otherwise", ("tableau", T') for an entry
# replacement and ("form", phi) for an explicit linear form.


def _at(entries, idx):
    """entries[idx] for 1-based idx, or None outside [1, k]."""
    if 1 <= idx <= len(entries):
        return entries[idx - 1]
    return None


def predict_A(seq: IotaSequence, T: ColumnTableau, m: int, j: int, lam_k: int | None = None):
    P = seq.P
    e, s, k = T.entries, T.shift, len(T.entries)
    for i in range(1, k + 1):
        if e[i - 1] == j and _at(e, i + 1) != j + 1 and m == s + k - i + P(j):
            return ("tableau", T.replace(i - 1, j + 1))
    for i in range(1, k + 1):
        if e[i - 1] == j + 1 and _at(e, i - 1) != j:
            mm = s + k - i + 1 + P(j)
            if m == mm and mm > 1:
                return ("tableau", T.replace(i - 1, j))
            if m == mm == 1:
                base = expand(seq, T)
                if lam_k is not None:
                    base = base.shift_const(lam={lam_k: 1})
                return ("form", base + beta_minus(seq, seq.double_to_flat(1, j)))
    return ("same",)


def _predict_BC_main(seq, T, m, j, k):
    """Proposition case table for a 'both' column of type B or C with 2 <= k <= n-1, and B with k = n."""
    n, P = seq.n, seq.P
    e = T.entries
    base = -P(k - 1)
    i1 = i2 = i3 = i4 = i5 = i6 = None
    for i in range(1, k + 1):
        if j < n and e[i - 1] == j and _at(e, i + 1) != j + 1 and m == base + k - i + P(j):
            i1 = i
        if j < n and e[i - 1] == -(j + 1) and _at(e, i + 1) != -j and m == base + k - i + n - j + P(j):
            i2 = i
        if j == n and e[i - 1] == n and _at(e, i + 1) != -n and m == base + k - i + P(n):
            i3 = i
        if j < n and _at(e, i - 1) != j and e[i - 1] == j + 1 and m == 1 + base + k - i + P(j):
            i4 = i
        if j < n and _at(e, i - 1) != -(j + 1) and e[i - 1] == -j and m == 1 + base + k - i + n - j + P(j):
            i5 = i
        if j == n and _at(e, i - 1) != n and e[i - 1] == -n and m == 1 + base + k - i + P(n):
            i6 = i
    h1, h2, h3, h4, h5, h6 = (x is not None for x in (i1, i2, i3, i4, i5, i6))
    top = seq.rs.family == "B" and k == n
    if h1 and h2:
        return ("tableau", T.replace(i1 - 1, j + 1).replace(i2 - 1, -j))
    if h3:
        return ("tableau", T.replace(i3 - 1, -n))
    if h4 and h5:
        return ("tableau", T.replace(i4 - 1, j).replace(i5 - 1, -(j + 1)))
    if h6:
        return ("tableau", T.replace(i6 - 1, n))
    if not top:
        if h1 and not h2 and not h5:
            return ("tableau", T.replace(i1 - 1, j + 1))
        if h2 and not h1 and not h4:
            return ("tableau", T.replace(i2 - 1, -j))
        if h4 and not h2 and not h5:
            return ("tableau", T.replace(i4 - 1, j))
        if h5 and not h1 and not h4:
            return ("tableau", T.replace(i5 - 1, -(j + 1)))
    return ("same",)


def _predict_C_special(seq, T, m, j):
    n, P = seq.n, seq.P
    e = T.entries
    k = len(e)
    base = -P(n - 1)
    for i in range(1, k + 1):
        if j < n and e[i - 1] == -(j + 1) and _at(e, i + 1) != -j and m == base + k - i + n - j + P(j):
            return ("tableau", T.replace(i - 1, -j))
    for i in range(1, k + 1):
        if j < n and _at(e, i - 1) != -(j + 1) and e[i - 1] == -j and m == 1 + base + k - i + n - j + P(j):
            return ("tableau", T.replace(i - 1, -(j + 1)))
    if j == n and m == base - 1 + k + P(n):
        if _at(e, 2) == -n:
            return ("tableau", T.with_entries((e[0],) + e[2:]))
        return ("tableau", T.with_entries((e[0], -n) + e[1:]))
    return ("same",)


def _predict_D_main(seq, T, m, j, k):
    n, P = seq.n, seq.P
    e = T.entries
    base = -P(k - 1)
    if j < n:
        i1 = i2 = i3 = i4 = None
        for i in range(1, k + 1):
            if e[i - 1] == j and _at(e, i + 1) != j + 1 and m == base + k - i + P(j):
                i1 = i
            if e[i - 1] == -(j + 1) and _at(e, i + 1) not in (-j, n) and m == -1 + base + k - i + n - j + P(j):
                i2 = i
            if e[i - 1] == j + 1 and _at(e, i - 1) not in (j, -n) and m == base + k - i + 1 + P(j):
                i3 = i
            if e[i - 1] == -j and _at(e, i - 1) != -(j + 1) and m == base + k - i + n - j + P(j):
                i4 = i
        h1, h2, h3, h4 = (x is not None for x in (i1, i2, i3, i4))
        if h1 and h2:
            return ("tableau", T.replace(i1 - 1, j + 1).replace(i2 - 1, -j))
        if h3 and h4:
            return ("tableau", T.replace(i3 - 1, j).replace(i4 - 1, -(j + 1)))
        if h1 and not h2 and not h4:
            return ("tableau", T.replace(i1 - 1, j + 1))
        if h2 and not h1 and not h3:
            return ("tableau", T.replace(i2 - 1, -j))
        if h3 and not h2 and not h4:
            return ("tableau", T.replace(i3 - 1, j))
        if h4 and not h1 and not h3:
            return ("tableau", T.replace(i4 - 1, -(j + 1)))
        return ("same",)
    for i in range(1, k + 1):
        nxt, prv = _at(e, i + 1), _at(e, i - 1)
        if e[i - 1] == n - 1 and nxt not in (-n, -(n - 1)) and m == base + k - i + P(n):
            return ("tableau", T.replace(i - 1, -n))
        if e[i - 1] == n and nxt not in (-n, -(n - 1)) and m == base + k - i + P(n):
            return ("tableau", T.replace(i - 1, -(n - 1)))
        if e[i - 1] == -n and prv not in (n - 1, n) and m == base + k - i + 1 + P(n):
            return ("tableau", T.replace(i - 1, n - 1))
        if e[i - 1] == -(n - 1) and prv not in (n - 1, n) and m == base + k - i + 1 + P(n):
            return ("tableau", T.replace(i - 1, n))
    return ("same",)


def _predict_D_special(seq, T, m, j):
    n, P = seq.n, seq.P
    e = T.entries
    k = len(e)
    base = -P(n - 2)
    for i in range(1, k + 1):
        if j < n and e[i - 1] == -(j + 1) and _at(e, i + 1) != -j and m == -1 + base + k - i + n - j + P(j):
            return ("tableau", T.replace(i - 1, -j))
    for i in range(1, k + 1):
        if j < n and e[i - 1] == -j and _at(e, i - 1) != -(j + 1) and m == base + k - i + n - j + P(j):
            return ("tableau", T.replace(i - 1, -(j + 1)))
    if j == n:
        if _at(e, 2) not in (-n, -(n - 1)) and m == base + k - 1 + P(n):
            return ("tableau", T.with_entries((e[0], -n, -(n - 1)) + e[1:]))
        if _at(e, 2) == -n and _at(e, 3) == -(n - 1) and m == base + k - 2 + P(n):
            return ("tableau", T.with_entries((e[0],) + e[3:]))
    return ("same",)


def predict_lambda_action(seq: IotaSequence, item: LambdaItem, m: int, j: int):
    """Predicted value of S_hat_{m,j} on a member of Tab_{X,iota,k}[lambda], or None if uncovered."""
    if item.tableau is None:
        return None
    fam, n, k = seq.rs.family, seq.n, item.k
    T = item.tableau
    if fam == "A":
        return predict_A(seq, T, m, j, lam_k=k)
    # the B, C, D propositions exclude the seed lambda^(k) itself
    if item.form(seq) == lambda_form(seq, k):
        return None
    if fam in ("B", "C"):
        if item.branch == "both" and 2 <= k <= n - 1:
            return _predict_BC_main(seq, T, m, j, k)
        if fam == "B" and item.branch == "top":
            return _predict_BC_main(seq, T, m, j, n)
        if fam == "C" and item.branch == "top":
            return _predict_C_special(seq, T, m, j)
        return None
    first = seq.iota_first
    if k <= n - 2 and item.branch in ("both", "case8") or (k == 1 and item.branch == "only1"):
        if k == 1 and not first(1) > first(2):
            return None
        return _predict_D_main(seq, T, m, j, k)
    if k in (n - 1, n) and item.branch == "top":
        return _predict_D_special(seq, T, m, j)
    return None
