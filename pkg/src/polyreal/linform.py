"""Sparse linear forms on Q^infinity with symbolic weight constants.

A form is ``c + sum_k c_k Lambda_k + sum_m phi_m x_m`` where ``Lambda_k``
stands for ``<h_k, lambda>`` and ``m`` runs over flat indices.  Keeping the
Lambda part symbolic lets one closure computation serve every dominant weight.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .sequence import IotaSequence


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _clean(d: Mapping[int, object] | None) -> tuple[tuple[int, object], ...]:
    if not d:
        return ()
    return tuple(sorted((k, _norm(v)) for k, v in d.items() if v != 0))


class LinForm:
    __slots__ = ("const", "lam", "terms", "_d", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None, const=0, lam: Mapping[int, object] | None = None):
        self.const = _norm(Fraction(const)) if isinstance(const, Fraction) else const
        self.lam = _clean(lam)
        self.terms = _clean(terms)
        self._d = None
        self._hash = hash((self.const, self.lam, self.terms))

    @classmethod
    def x(cls, k: int, coeff=1) -> "LinForm":
        return cls({k: coeff})

    @classmethod
    def zero(cls) -> "LinForm":
        return _ZERO

    @property
    def coeffs(self) -> dict[int, object]:
        if self._d is None:
            self._d = dict(self.terms)
        return self._d

    def coeff(self, k: int):
        return self.coeffs.get(k, 0)

    def lam_coeff(self, k: int):
        return dict(self.lam).get(k, 0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.terms)

    @property
    def max_index(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    def is_zero(self) -> bool:
        return not self.terms and not self.lam and self.const == 0

    def without_lambda(self) -> "LinForm":
        return LinForm(self.coeffs, self.const)

    def specialize(self, weight: Iterable[int]) -> "LinForm":
        """Replace every Lambda_k by the number weight[k-1]."""
        w = tuple(weight)
        c = self.const + sum(v * w[k - 1] for k, v in self.lam)
        return LinForm(self.coeffs, c)

    def shift_const(self, c=0, lam: Mapping[int, int] | None = None) -> "LinForm":
        new_lam = dict(self.lam)
        for k, v in (lam or {}).items():
            new_lam[k] = new_lam.get(k, 0) + v
        return LinForm(self.coeffs, self.const + c, new_lam)

    def __eq__(self, other):
        if not isinstance(other, LinForm):
            return NotImplemented
        return self._hash == other._hash and self.terms == other.terms and self.const == other.const and self.lam == other.lam

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (self.max_index, self.terms, self.lam, self.const)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __add__(self, other: "LinForm") -> "LinForm":
        return self.axpy(1, other)

    def __sub__(self, other: "LinForm") -> "LinForm":
        return self.axpy(-1, other)

    def __neg__(self) -> "LinForm":
        return self.scale(-1)

    def scale(self, c) -> "LinForm":
        if c == 0:
            return _ZERO
        return LinForm({k: c * v for k, v in self.terms}, c * self.const, {k: c * v for k, v in self.lam})

    def axpy(self, c, other: "LinForm") -> "LinForm":
        """self + c * other."""
        if c == 0 or other.is_zero():
            return self
        d = dict(self.coeffs)
        for k, v in other.terms:
            d[k] = d.get(k, 0) + c * v
        lam = dict(self.lam)
        for k, v in other.lam:
            lam[k] = lam.get(k, 0) + c * v
        return LinForm(d, self.const + c * other.const, lam)

    def evaluate(self, point, weight: Iterable[int] | None = None):
        """Value at ``point`` (a CrystalPoint or a mapping flat index -> int) for the weight ``weight``."""
        coords = getattr(point, "coords", point) or {}
        total = self.const
        if self.lam:
            if weight is None:
                raise ValueError("form has Lambda terms but no weight was given")
            w = tuple(weight)
            total += sum(v * w[k - 1] for k, v in self.lam)
        for k, v in self.terms:
            a = coords.get(k)
            if a:
                total += v * a
        return total

    def constant_at(self, weight: Iterable[int]):
        return self.evaluate({}, weight)

    # presentation

    def __repr__(self):
        return f"LinForm({self.format()})"

    def format(self, seq: IotaSequence | None = None) -> str:
        parts = []
        for k, v in self.terms:
            if seq is None:
                name = f"x{k}"
            else:
                s, j = seq.flat_to_double(k)
                name = f"x[{s},{j}]"
            parts.append((v, name))
        for k, v in self.lam:
            parts.append((v, f"L{k}"))
        if self.const:
            parts.append((self.const, ""))
        if not parts:
            return "0"
        out = []
        for v, name in parts:
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            body = name if (mag == 1 and name) else (f"{mag}{name}" if name else f"{mag}")
            out.append(f"{sign} {body}" if out else (f"-{body}" if v < 0 else body))
        return " ".join(out)

    def to_json(self, seq: IotaSequence) -> dict:
        terms = []
        for k, v in self.terms:
            s, j = seq.flat_to_double(k)
            terms.append({"s": s, "j": j, "coeff": _json_num(v)})
        terms.sort(key=lambda t: (t["s"], t["j"]))
        return {
            "const": _json_num(self.const),
            "lambda": {str(k): _json_num(v) for k, v in self.lam},
            "terms": terms,
        }

    @classmethod
    def from_json(cls, seq: IotaSequence, data: Mapping) -> "LinForm":
        terms = {}
        for t in data.get("terms", []):
            k = seq.double_to_flat(int(t["s"]), int(t["j"]))
            terms[k] = terms.get(k, 0) + _parse_num(t["coeff"])
        lam = {int(k): _parse_num(v) for k, v in data.get("lambda", {}).items()}
        return cls(terms, _parse_num(data.get("const", 0)), lam)


def _json_num(v):
    if isinstance(v, Fraction):
        return str(v)
    return int(v)


def _parse_num(v):
    if isinstance(v, str):
        return _norm(Fraction(v))
    return v


_ZERO = LinForm()


def form_from_double(seq: IotaSequence, terms: Mapping[tuple[int, int], int], const=0, lam=None) -> LinForm:
    """Build a form from ``{(s, j): coeff}``; entries with s <= 0, j = 0 or j = n+1 are dropped as zero."""
    d: dict[int, int] = {}
    n = seq.n
    for (s, j), c in terms.items():
        if s <= 0 or j <= 0 or j > n or c == 0:
            continue
        k = seq.double_to_flat(s, j)
        d[k] = d.get(k, 0) + c
    return LinForm(d, const, lam)


# the vectors beta_k and the operators S_k, S_hat_k


@lru_cache(maxsize=None)
def beta_plus(seq: IotaSequence, k: int) -> LinForm:
    """beta_k = x_k + sum_{k<j<k+} a_{i_k, i_j} x_j + x_{k+}."""
    if k < 1:
        raise ValueError("beta_0 is the zero form; handle k = 0 at the call site")
    a = seq.rs.a
    ik = seq.letter(k)
    kp = seq.k_plus(k)
    d = {k: 1, kp: 1}
    for j in range(k + 1, kp):
        c = a(ik, seq.letter(j))
        if c:
            d[j] = c
    return LinForm(d)


@lru_cache(maxsize=None)
def beta_minus(seq: IotaSequence, k: int) -> LinForm:
    km = seq.k_minus(k)
    if km > 0:
        return beta_plus(seq, km)
    a = seq.rs.a
    ik = seq.letter(k)
    d = {k: 1}
    for j in range(1, k):
        c = a(ik, seq.letter(j))
        if c:
            d[j] = c
    return LinForm(d, 0, {ik: -1})


@lru_cache(maxsize=None)
def lambda_form(seq: IotaSequence, i: int) -> LinForm:
    """lambda^(i) = Lambda_i - sum_{j < iota^(i)} a_{i, i_j} x_j - x_{iota^(i)}."""
    return -beta_minus(seq, seq.iota_first(i))


def xi_form(seq: IotaSequence, i: int) -> LinForm:
    return lambda_form(seq, i).without_lambda()


def apply_S_hat(seq: IotaSequence, k: int, phi: LinForm) -> LinForm:
    c = phi.coeff(k)
    if c == 0:
        return phi
    if c > 0:
        return phi.axpy(-c, beta_plus(seq, k))
    return phi.axpy(-c, beta_minus(seq, k))


def apply_S(seq: IotaSequence, k: int, phi: LinForm) -> LinForm:
    c = phi.coeff(k)
    if c == 0:
        return phi
    if c > 0:
        return phi.axpy(-c, beta_plus(seq, k))
    km = seq.k_minus(k)
    if km == 0:
        return phi
    return phi.axpy(-c, beta_plus(seq, km))


def evaluate(phi: LinForm, point, weight: Iterable[int] | None = None):
    return phi.evaluate(point, weight)
