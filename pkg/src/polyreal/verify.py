"""Executable checks that tie the generated inequality systems to the crystals."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cartan import RootSystem, build_root_system, dominant_weights, weyl_dimension
from .closure import (
    check_positivity,
    check_strict_positivity,
    default_seed_rows,
    default_window,
    is_ample,
    xi_infty,
    xi_lambda,
    xi_lambda_k,
)
from .crystal import (
    Crystal,
    CrystalPoint,
    epsilon_star,
    epsilon_star_oracle,
    generate_b_lambda,
    random_b_infty_points,
)
from .linform import LinForm, apply_S, apply_S_hat, beta_plus
from .sequence import IotaSequence, permutation_words
from .tableaux import (
    box_form,
    expand,
    gen_tab_infty,
    gen_tab_infty_tableaux,
    gen_tab_lambda,
    gen_tab_lambda_k,
    predict_A,
    predict_lambda_action,
    tab_lambda_items,
)

SWEEP = (("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4))
REALIZATION_BUDGET = 50_000


class LatticeBoundError(RuntimeError):
    pass


@dataclass
class VerificationReport:
    subject: str
    parameters: dict
    outcome: bool = True
    witnesses: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, witness):
        self.outcome = False
        self.witnesses.append(witness)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "parameters": self.parameters,
            "outcome": "pass" if self.outcome else "fail",
            "witnesses": [str(w) for w in self.witnesses[:20]],
            "counts": self.counts,
            "notes": self.notes,
        }


def _params(seq: IotaSequence, **extra) -> dict:
    d = {"family": seq.rs.family, "rank": seq.n, "word": list(seq.word)}
    d.update(extra)
    return d


def all_words(rs: RootSystem) -> list[IotaSequence]:
    """Adapted permutation words; every permutation of I is adapted."""
    return [s for s in permutation_words(rs) if s.is_adapted()]


# lattice points


def _restrict(phi: LinForm, max_k: int) -> LinForm:
    return LinForm({k: v for k, v in phi.terms if k <= max_k}, phi.const, dict(phi.lam))


def _enumerate(variables: list[int], ineqs: list[LinForm], upper: dict[int, int]) -> list[dict[int, int]]:
    pos = {v: i for i, v in enumerate(variables)}
    rows = []
    for f in ineqs:
        rows.append((f.const, [(pos[k], c) for k, c in f.terms if k in pos]))
    by_var: list[list[int]] = [[] for _ in variables]
    for r, (_, terms) in enumerate(rows):
        for p, _ in terms:
            by_var[p].append(r)
    partial = [c for c, _ in rows]
    optimistic = [sum(c * upper[variables[p]] for p, c in terms if c > 0) for _, terms in rows]
    coeff = [dict(terms) for _, terms in rows]
    # forms without variables are checked once
    if any(partial[r] < 0 for r, (_, terms) in enumerate(rows) if not terms):
        return []
    out = []
    value = [0] * len(variables)

    def rec(d):
        if d == len(variables):
            out.append({variables[p]: value[p] for p in range(len(variables)) if value[p]})
            return
        u = upper[variables[d]]
        lo, hi = 0, u
        for r in by_var[d]:
            c = coeff[r][d]
            rest = partial[r] + optimistic[r] - (c * u if c > 0 else 0)
            if c > 0:
                lo = max(lo, -(rest // c))
            else:
                hi = min(hi, rest // (-c))
        for x in range(lo, hi + 1):
            value[d] = x
            for r in by_var[d]:
                c = coeff[r][d]
                partial[r] += c * x
                if c > 0:
                    optimistic[r] -= c * u
            rec(d + 1)
            for r in by_var[d]:
                c = coeff[r][d]
                partial[r] -= c * x
                if c > 0:
                    optimistic[r] += c * u
        value[d] = 0

    rec(0)
    return out


def lattice_points(seq: IotaSequence, ineqs: Iterable[LinForm], lam: Sequence[int] | None = None,
                   bounds: dict[int, int] | None = None, reference: Iterable[CrystalPoint] | None = None,
                   rows: int | None = None, margin: int = 2) -> set[CrystalPoint]:
    """Nonnegative integer points with x_{m,i} = 0 for m > rows satisfying every inequality.

    With explicit ``bounds`` (flat index -> upper limit) the box is used as given.
    Otherwise the box is the bounding box of ``reference`` plus ``margin``; it is
    enlarged whenever a solution touches its upper face, at most three times.
    """
    if rows is None:
        rows = seq.n
    max_k = seq.max_flat(rows)
    variables = seq.flats_up_to_row(rows)
    weight = tuple(lam) if lam is not None else (0,) * seq.n
    forms = [_restrict(f.specialize(weight) if f.lam else f, max_k) for f in ineqs]
    forms = list(dict.fromkeys(forms))
    if bounds is not None:
        upper = {v: bounds.get(v, 0) for v in variables}
        return {CrystalPoint.from_dict(p) for p in _enumerate(variables, forms, upper)}
    base = {v: 0 for v in variables}
    for x in reference or ():
        for k, a in x.items:
            if k in base:
                base[k] = max(base[k], a)
    extra = margin
    for _ in range(4):
        upper = {v: base[v] + extra for v in variables}
        pts = _enumerate(variables, forms, upper)
        if not any(p.get(v, 0) >= upper[v] for p in pts for v in variables):
            return {CrystalPoint.from_dict(p) for p in pts}
        extra *= 2
    raise LatticeBoundError("solutions keep touching the bounding box: the system looks unbounded")


def inequality_system(seq: IotaSequence) -> list[LinForm]:
    """Tab_{X,iota}[lambda] (symbolic) together with Tab^n_{X,iota}."""
    forms = sorted(gen_tab_lambda(seq)) + sorted(gen_tab_infty(seq, seq.n))
    return list(dict.fromkeys(forms))


# realization


def verify_realization(seq: IotaSequence, lam: Sequence[int], system: list[LinForm] | None = None,
                       budget: int = REALIZATION_BUDGET) -> VerificationReport:
    t0 = time.perf_counter()
    lam = tuple(lam)
    rep = VerificationReport("realization", _params(seq, **{"lambda": list(lam)}))
    dim = weyl_dimension(seq.rs, lam)
    rep.counts["weyl_dimension"] = dim
    if dim > budget:
        rep.notes.append(f"skipped: Weyl dimension {dim} exceeds budget {budget}")
        rep.counts["skipped"] = 1
        return rep
    crystal_pts = set(generate_b_lambda(seq, lam))
    if system is None:
        system = inequality_system(seq)
    poly_pts = lattice_points(seq, system, lam, reference=crystal_pts)
    rep.counts.update({"crystal": len(crystal_pts), "polytope": len(poly_pts)})
    for x in sorted(crystal_pts - poly_pts, key=lambda p: p.items)[:5]:
        rep.fail(("crystal point outside polytope", x.to_json(seq)))
    for x in sorted(poly_pts - crystal_pts, key=lambda p: p.items)[:5]:
        rep.fail(("polytope point outside crystal", x.to_json(seq)))
    if len(crystal_pts) != dim:
        rep.fail(("cardinality differs from Weyl dimension", len(crystal_pts), dim))
    rep.seconds = time.perf_counter() - t0
    return rep


# closure equality


def verify_closure_equality(seq: IotaSequence, seed_rows: int | None = None) -> VerificationReport:
    """Xi_iota = Tab and Xi_iota[lambda] = Tab[lambda] + Tab, symbolically in lambda.

    The closures are seeded with x_{s,j}, s <= seed_rows.  Equality is checked
    as Tab^n <= closure <= Tab(shift <= seed_rows).
    """
    t0 = time.perf_counter()
    n = seq.n
    if seed_rows is None:
        seed_rows = default_seed_rows(seq)
    rep = VerificationReport("closure", _params(seq, seed_rows=seed_rows, window=default_window(seq, seed_rows)))
    xi = xi_infty(seq, seed_rows).as_set()
    tab_n = gen_tab_infty(seq, n)
    tab_all = gen_tab_infty(seq, seed_rows)
    for f in sorted(tab_n - xi)[:5]:
        rep.fail(("Tab^n form missing from Xi", f.format(seq)))
    for f in sorted(xi - tab_all)[:5]:
        rep.fail(("Xi form outside Tab", f.format(seq)))
    rep.counts.update({"xi": len(xi), "tab_n": len(tab_n), "tab": len(tab_all)})
    zero = LinForm()
    for k in range(1, n + 1):
        got = xi_lambda_k(seq, k).as_set()
        want = gen_tab_lambda_k(seq, k) | {zero}
        for f in sorted(got - want):
            rep.fail((f"Xi_k[lambda] form outside Tab_k[lambda], k={k}", f.format(seq)))
        for f in sorted(want - got):
            rep.fail((f"Tab_k[lambda] form missing from Xi_k[lambda], k={k}", f.format(seq)))
        rep.counts[f"tab_lambda_{k}"] = len(want)
    full = xi_lambda(seq, seed_rows).as_set()
    tab_lam = gen_tab_lambda(seq)
    for f in sorted((tab_lam | tab_n) - full)[:5]:
        rep.fail(("form missing from Xi[lambda]", f.format(seq)))
    for f in sorted(full - (tab_lam | tab_all))[:5]:
        rep.fail(("Xi[lambda] form outside Tab[lambda] + Tab", f.format(seq)))
    rep.counts["xi_lambda"] = len(full)
    rep.seconds = time.perf_counter() - t0
    return rep


# closedness


def _outcome_form(seq, pred, base: LinForm, lam_k: int | None):
    kind = pred[0]
    if kind == "same":
        return base
    if kind == "form":
        return pred[1]
    f = expand(seq, pred[1])
    return f.shift_const(lam={lam_k: 1}) if lam_k is not None else f


def verify_closedness(seq: IotaSequence) -> VerificationReport:
    """S_hat-stability of Tab_k[lambda] + {0} and agreement with the proposition case tables."""
    t0 = time.perf_counter()
    rep = VerificationReport("closedness", _params(seq))
    zero = LinForm()
    covered = uncovered = applications = 0
    for k in seq.rs.index_set():
        items = tab_lambda_items(seq, k)
        family = {it.form(seq) for it in items} | {zero}
        for it in items:
            f = it.form(seq)
            for m in f.support:
                applications += 1
                g = apply_S_hat(seq, m, f)
                if g not in family:
                    rep.fail(("S_hat leaves Tab_k[lambda]", k, it.label(seq.n), seq.flat_to_double(m), g.format(seq)))
                s, j = seq.flat_to_double(m)
                pred = predict_lambda_action(seq, it, s, j)
                if pred is None:
                    uncovered += 1
                    continue
                covered += 1
                want = _outcome_form(seq, pred, f, k)
                if want != g:
                    rep.fail(("case prediction differs", k, it.label(seq.n), (s, j), pred[0], want.format(seq), g.format(seq)))
    # B(infinity) columns: S-stability, and the type A case table
    tab_wide = gen_tab_infty(seq, seq.n + 4)
    for T in gen_tab_infty_tableaux(seq, seq.n):
        f = expand(seq, T)
        for m in f.support:
            applications += 1
            g = apply_S(seq, m, f)
            if g not in tab_wide and g != zero:
                rep.fail(("S leaves Tab", T.label(seq.n), seq.flat_to_double(m), g.format(seq)))
            if seq.rs.family == "A":
                s, j = seq.flat_to_double(m)
                pred = predict_A(seq, T, s, j)
                covered += 1
                want = _outcome_form(seq, pred, f, None)
                if want != apply_S_hat(seq, m, f):
                    rep.fail(("type A case prediction differs", T.label(seq.n), (s, j)))
    rep.counts.update({"applications": applications, "predicted": covered, "not_covered": uncovered})
    rep.seconds = time.perf_counter() - t0
    return rep


# positivity


def verify_positivity_suite(seq: IotaSequence) -> VerificationReport:
    t0 = time.perf_counter()
    rep = VerificationReport("positivity", _params(seq))
    p = check_positivity(seq)
    sp = check_strict_positivity(seq)
    rep.counts.update({"positivity": int(p), "strict_positivity": int(sp)})
    if not p:
        rep.fail("positivity condition fails")
    if not sp:
        rep.fail("strict positivity condition fails")
    rep.seconds = time.perf_counter() - t0
    return rep


# box identities


def box_identities(seq: IotaSequence, max_shift: int) -> list[tuple[str, int, LinForm, LinForm]]:
    """(name, s, lhs, rhs) for every identity of the box lemma with s up to max_shift."""
    fam, n, P = seq.rs.family, seq.n, seq.P
    box = lambda e, s: box_form(seq, e, s)  # noqa: E731

    def beta(s, j):
        if s < 1:
            raise ValueError
        return beta_plus(seq, seq.double_to_flat(s, j))

    out = []

    def add(name, s, lhs, rhs_fn):
        try:
            rhs = rhs_fn()
        except ValueError:
            return
        out.append((name, s, lhs, rhs))

    if fam == "A":
        for j in range(1, n + 1):
            for s in range(1 - P(j), max_shift + 1):
                add("A-box", s, box(j + 1, s), lambda: box(j, s) - beta(s + P(j), j))
        return out
    if fam in ("B", "C"):
        tag = fam
        for j in range(1, n):
            for s in range(1 - P(j), max_shift + 1):
                add(f"{tag}-box1", s, box(j + 1, s), lambda: box(j, s) - beta(s + P(j), j))
        c = 2 if fam == "C" else 1
        for s in range(1 - P(n), max_shift + 1):
            add(f"{tag}-box2", s, box(-n, s), lambda: box(n, s) - beta(s + P(n), n).scale(c))
        for j in range(2, n + 1):
            for s in range(j - P(j - 1) - n, max_shift + 1):
                add(f"{tag}-box3", s, box(-(j - 1), s), lambda: box(-j, s) - beta(s + P(j - 1) + n - j + 1, j - 1))
        if fam == "C":
            for s in range(1 - P(n), max_shift + 1):
                add("BC-pr3", s, box(-(n + 1), s + 1) + box(-n, s),
                    lambda: box(-(n + 1), s) - beta(s + P(n), n))
        return out
    for j in range(1, n):
        for s in range(1 - P(j), max_shift + 1):
            add("D-box1", s, box(j + 1, s), lambda: box(j, s) - beta(s + P(j), j))
    for s in range(1 - P(n), max_shift + 1):
        add("D-box2", s, box(-n, s), lambda: box(n - 1, s) - beta(s + P(n), n))
        add("D-box3", s, box(-(n - 1), s), lambda: box(n, s) - beta(s + P(n), n))
        add("D-box5", s, box(-(n + 1), s + 2) + box(-n, s + 1) + box(-(n - 1), s),
            lambda: box(-(n + 1), s) - beta(s + P(n), n))
    for j in range(2, n + 1):
        for s in range(1 + j - P(j - 1) - n, max_shift + 1):
            add("D-box4", s, box(-(j - 1), s), lambda: box(-j, s) - beta(s + P(j - 1) + n - j, j - 1))
    return out


def verify_box_identities(seq: IotaSequence, max_shift: int | None = None) -> VerificationReport:
    t0 = time.perf_counter()
    if max_shift is None:
        max_shift = seq.n + 2
    rep = VerificationReport("box-identities", _params(seq, max_shift=max_shift))
    ids = box_identities(seq, max_shift)
    names: dict[str, int] = {}
    for name, s, lhs, rhs in ids:
        names[name] = names.get(name, 0) + 1
        if lhs != rhs:
            rep.fail((name, s, lhs.format(seq), rhs.format(seq)))
    rep.counts.update(names)
    rep.seconds = time.perf_counter() - t0
    return rep


# crystal axioms


def check_axioms_at(cr: Crystal, x: CrystalPoint) -> list[str]:
    """Violated crystal axioms at x, as short messages."""
    bad = []
    n = cr.n
    a = cr.seq.rs.a
    wt = cr.wt(x)
    for i in range(1, n + 1):
        eps, ph = cr.epsilon(x, i), cr.phi(x, i)
        if ph != eps + wt[i - 1]:
            bad.append(f"(1) at i={i}")
        for op, sign in ((cr.e, 1), (cr.f, -1)):
            y = op(x, i)
            if y is None:
                continue
            wy = cr.wt(y)
            if any(wy[l - 1] != wt[l - 1] + sign * a(l, i) for l in range(1, n + 1)):
                bad.append(f"(2) at i={i}")
            if cr.epsilon(y, i) != eps - sign or cr.phi(y, i) != ph + sign:
                bad.append(f"({3 if sign == 1 else 4}) at i={i}")
            back = cr.f(y, i) if sign == 1 else cr.e(y, i)
            if back != x:
                bad.append(f"(5) at i={i}")
    return bad


def verify_crystal_axioms(seq: IotaSequence, lam: Sequence[int] | None = None, samples: int = 1000,
                          seed: int = 0, max_depth: int = 12) -> VerificationReport:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    rep = VerificationReport("crystal-axioms", _params(seq, **{"lambda": list(lam) if lam else None}))
    if lam is None:
        cr = Crystal(seq)
        points = random_b_infty_points(seq, samples, max_depth, rng)
    else:
        cr = Crystal(seq, lam)
        pool = generate_b_lambda(seq, lam)
        points = [rng.choice(pool) for _ in range(samples)]
    for x in points:
        bad = check_axioms_at(cr, x)
        if bad:
            rep.fail((x.to_json(seq), bad))
    rep.counts["points"] = len(points)
    rep.seconds = time.perf_counter() - t0
    return rep


# golden fixtures


def _A2():
    return IotaSequence(build_root_system("A", 2), (2, 1))


def _fd(seq, terms, const=0, lam=None):
    from .linform import form_from_double

    return form_from_double(seq, terms, const, lam)


def golden_a2_xi_lambda(rows: int = 4) -> tuple[set[LinForm], set[LinForm]]:
    """(expected, generated) for Xi_iota[lambda], iota = (..., 2, 1, 2, 1), cut to rows <= rows."""
    seq = _A2()
    expected = set()
    for k in range(1, rows + 1):
        expected |= {
            _fd(seq, {(k, 1): 1}),
            _fd(seq, {(k, 2): 1, (k + 1, 1): -1}),
            _fd(seq, {(k + 1, 2): -1}),
            _fd(seq, {(k, 2): 1}),
            _fd(seq, {(k + 1, 1): 1, (k + 1, 2): -1}),
            _fd(seq, {(k + 2, 1): -1}),
        }
    expected |= {
        LinForm(),
        _fd(seq, {(1, 1): -1}, 0, {1: 1}),
        _fd(seq, {(1, 1): 1, (1, 2): -1}, 0, {2: 1}),
        _fd(seq, {(2, 1): -1}, 0, {2: 1}),
    }
    max_k = seq.max_flat(rows)
    expected = {f for f in expected if f.max_index <= max_k}
    got = {f for f in xi_lambda(seq, rows + 2) if f.max_index <= max_k}
    return expected, got


def _rows_of(seq, lo, hi, patterns):
    """Expand patterns {(row offset, j): c} over shifts lo..hi."""
    return {_fd(seq, {(s + r, j): c for (r, j), c in pat.items()}) for s in range(lo, hi + 1) for pat in patterns}


def a3_example_expected() -> tuple[IotaSequence, dict[int, set[LinForm]], set[LinForm]]:
    """iota = (..., 3, 1, 2, 3, 1, 2) of type A3: Tab_k[lambda] for k = 1, 2, 3 and Tab^3."""
    seq = IotaSequence(build_root_system("A", 3), (3, 1, 2))
    fd = lambda t, k: _fd(seq, t, 0, {k: 1})  # noqa: E731
    lam = {
        1: {fd({(1, 2): 1, (1, 1): -1}, 1), fd({(1, 3): 1, (2, 2): -1}, 1), fd({(2, 3): -1}, 1)},
        2: {fd({(1, 2): -1}, 2)},
        3: {fd({(1, 2): 1, (1, 3): -1}, 3), fd({(1, 1): 1, (2, 2): -1}, 3), fd({(2, 1): -1}, 3)},
    }
    tab = _rows_of(seq, 1, 3, [{(0, 1): 1}, {(1, 2): 1, (1, 1): -1}, {(1, 3): 1, (2, 2): -1}, {(2, 3): -1}])
    tab |= _rows_of(seq, 0, 3, [
        {(1, 2): 1}, {(1, 3): 1, (2, 2): -1, (1, 1): 1}, {(1, 1): 1, (2, 3): -1}, {(1, 3): 1, (2, 1): -1},
        {(2, 2): 1, (2, 1): -1, (2, 3): -1}, {(3, 2): -1},
    ])
    tab |= _rows_of(seq, 0, 3, [{(1, 3): 1}, {(2, 2): 1, (2, 3): -1}, {(2, 1): 1, (3, 2): -1}, {(3, 1): -1}])
    return seq, lam, tab


def c3_example_expected() -> tuple[IotaSequence, dict[int, set[LinForm]], set[LinForm]]:
    """iota = (..., 3, 1, 2, 3, 1, 2) of type C3: Tab_k[lambda] for k = 1, 2, 3 and Tab^3."""
    seq = IotaSequence(build_root_system("C", 3), (3, 1, 2))
    fd = lambda t, k: _fd(seq, t, 0, {k: 1})  # noqa: E731
    lam = {
        1: {
            fd({(1, 2): 1, (1, 1): -1}, 1), fd({(1, 3): 2, (2, 2): -1}, 1), fd({(2, 2): 1, (2, 3): -2}, 1),
            fd({(2, 1): 1, (3, 2): -1}, 1), fd({(3, 1): -1}, 1),
        },
        2: {fd({(1, 2): -1}, 2)},
        3: {
            fd({(1, 2): 1, (1, 3): -1}, 3), fd({(1, 3): 1, (1, 1): 1, (2, 2): -1}, 3),
            fd({(1, 3): 1, (2, 1): -1}, 3), fd({(1, 1): 1, (2, 3): -1}, 3),
            fd({(2, 2): 1, (2, 1): -1, (2, 3): -1}, 3), fd({(2, 3): 1, (3, 2): -1}, 3), fd({(3, 3): -1}, 3),
        },
    }
    tab = _rows_of(seq, 1, 3, [
        {(0, 1): 1}, {(1, 2): 1, (1, 1): -1}, {(1, 3): 2, (2, 2): -1}, {(2, 2): 1, (2, 3): -2},
        {(2, 1): 1, (3, 2): -1}, {(3, 1): -1},
    ])
    tab |= _rows_of(seq, 0, 3, [
        {(1, 2): 1}, {(1, 3): 2, (2, 2): -1, (1, 1): 1}, {(1, 1): 1, (2, 2): 1, (2, 3): -2},
        {(1, 1): 1, (2, 1): 1, (3, 2): -1}, {(1, 1): 1, (3, 1): -1}, {(1, 3): 2, (2, 1): -1},
        {(2, 2): 2, (2, 1): -1, (2, 3): -2}, {(2, 2): 1, (3, 2): -1}, {(2, 2): 1, (2, 1): -1, (3, 1): -1},
        {(2, 3): 2, (3, 2): -2, (2, 1): 1}, {(2, 3): 2, (3, 2): -1, (3, 1): -1}, {(2, 1): 1, (3, 3): -2},
        {(3, 2): 1, (3, 3): -2, (3, 1): -1}, {(4, 2): -1},
    ])
    tab |= _rows_of(seq, 0, 3, [
        {(1, 3): 1}, {(2, 2): 1, (2, 3): -1}, {(2, 3): 1, (2, 1): 1, (3, 2): -1}, {(2, 3): 1, (3, 1): -1},
        {(2, 1): 1, (3, 3): -1}, {(3, 2): 1, (3, 1): -1, (3, 3): -1}, {(3, 3): 1, (4, 2): -1}, {(4, 3): -1},
    ])
    return seq, lam, tab


COUNTEREXAMPLE_CHAIN = (
    (1, {1: 1}),
    (2, {5: -1, 4: 1, 2: 1}),
    (5, {5: -1, 3: 1}),
    (2, {4: -1, 3: 1, 2: -1, 1: 1}),
    (None, {4: -1, 3: 1}),
)


def counterexample_sequence() -> IotaSequence:
    """iota = (..., 2, 1, 2, 3, 2, 1) of type A3."""
    return IotaSequence(build_root_system("A", 3), (2, 3, 2, 1))


def counterexample_chain() -> list[tuple[LinForm, LinForm]]:
    """(expected, generated) along x_1 -> S_1 -> S_2 -> S_5 -> S_2."""
    seq = counterexample_sequence()
    out = []
    phi = LinForm.x(1)
    for idx, (k, terms) in enumerate(COUNTEREXAMPLE_CHAIN):
        lam = {2: -1} if k is None else None
        out.append((LinForm(terms, 0, lam), phi))
        if k is not None:
            phi = apply_S_hat(seq, k, phi)
    return out


EPS_STAR_FIXTURES = (
    ("A", 3, (3, 1, 2), {(1, 2): 1, (1, 1): 2, (1, 3): 1, (2, 2): 3, (2, 1): 1, (2, 3): 2}, (2, 1, 1)),
    ("C", 3, (3, 1, 2), {(1, 2): 1, (1, 1): 3, (1, 3): 2, (2, 2): 7, (2, 1): 2, (2, 3): 4, (3, 2): 2}, (3, 1, 2)),
)


def verify_epsilon_star_fixtures() -> VerificationReport:
    rep = VerificationReport("epsilon-star", {})
    for fam, n, word, coords, expected in EPS_STAR_FIXTURES:
        seq = IotaSequence(build_root_system(fam, n), word)
        x = CrystalPoint.from_double(seq, coords)
        formula = tuple(epsilon_star(seq, x, i) for i in range(1, n + 1))
        oracle = tuple(epsilon_star_oracle(seq, x, i) for i in range(1, n + 1))
        rep.counts[f"{fam}{n}"] = {"formula": list(formula), "oracle": list(oracle)}
        if formula != expected:
            rep.fail((f"{fam}{n} formula", formula, expected))
        if oracle != expected:
            rep.fail((f"{fam}{n} oracle", oracle, expected))
    return rep


def run_paper_examples() -> VerificationReport:
    t0 = time.perf_counter()
    rep = VerificationReport("paper-examples", {})
    expected, got = golden_a2_xi_lambda()
    if expected != got:
        rep.fail(("A2 Xi[lambda]", sorted(f.format() for f in expected ^ got)))
    rep.counts["a2_xi_lambda"] = len(got)
    for idx, (want, have) in enumerate(counterexample_chain()):
        if want != have:
            rep.fail(("counterexample step", idx, want.format(), have.format()))
    seq = counterexample_sequence()
    if is_ample(seq, (0, 1, 0)):
        rep.fail("counterexample pair reported ample")
    for name, fixture in (("A3 example", a3_example_expected), ("C3 example", c3_example_expected)):
        sq, lam_sets, tab = fixture()
        for k, want in lam_sets.items():
            if gen_tab_lambda_k(sq, k) != want:
                rep.fail((f"{name} Tab_k[lambda]", k))
            if xi_lambda_k(sq, k).as_set() != want | {LinForm()}:
                rep.fail((f"{name} Xi_k[lambda]", k))
        got = gen_tab_infty(sq, 3)
        if got != tab:
            rep.fail((f"{name} Tab^3", sorted(f.format(sq) for f in got ^ tab)))
        rep.counts[f"{name}_tab3"] = len(got)
    eps = verify_epsilon_star_fixtures()
    if not eps.outcome:
        rep.fail(("epsilon-star", eps.witnesses))
    rep.seconds = time.perf_counter() - t0
    return rep


def sweep(families: Iterable[tuple[str, int]] = SWEEP):
    for fam, n in families:
        rs = build_root_system(fam, n)
        for seq in all_words(rs):
            yield seq


def realization_weights(n: int, max_total: int = 2) -> list[tuple[int, ...]]:
    return dominant_weights(n, max_total)
