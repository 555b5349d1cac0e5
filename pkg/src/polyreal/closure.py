"""Fixpoint closures of linear forms under the S / S_hat operators.

Windows are measured in rows: a window of ``W`` rows admits the flat indices
of every ``x_{s,j}`` with ``s <= W``.  For the B(infinity) closures the seeds
``x_{s,j}`` are taken only up to ``seed_rows``; the hard window sits
``3n + 2`` rows above that and exists purely as an overflow guard.  This works
because an operator never moves a form out of its tableau component, and each
component spans a bounded band of rows.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .linform import LinForm, apply_S, apply_S_hat, lambda_form, xi_form
from .sequence import IotaSequence

DEFAULT_CAP = 100_000


class ClosureError(RuntimeError):
    pass


class WindowOverflowError(ClosureError):
    def __init__(self, form: LinForm, window_rows: int, seq: IotaSequence):
        self.form = form
        self.window_rows = window_rows
        super().__init__(
            f"form {form.format(seq)} has support beyond the window of {window_rows} rows; enlarge --window"
        )


class CapExceededError(ClosureError):
    pass


@dataclass
class ClosureSet:
    forms: tuple[LinForm, ...]
    seeds: str
    window: int
    operator: str = "S_hat"
    meta: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.forms)

    def __iter__(self):
        return iter(self.forms)

    def __contains__(self, phi):
        return phi in self.as_set()

    def as_set(self) -> frozenset[LinForm]:
        s = self.meta.get("_set")
        if s is None:
            s = frozenset(self.forms)
            self.meta["_set"] = s
        return s


def default_seed_rows(seq: IotaSequence) -> int:
    return 2 * seq.n + 1


def default_window(seq: IotaSequence, seed_rows: int | None = None) -> int:
    if seed_rows is None:
        seed_rows = default_seed_rows(seq)
    return seed_rows + 3 * seq.n + 2


def close(
    seq: IotaSequence,
    seeds: Iterable[LinForm],
    operator: str = "S_hat",
    window: int | None = None,
    cap: int = DEFAULT_CAP,
    stop: Callable[[LinForm], bool] | None = None,
    seeds_label: str = "custom",
) -> ClosureSet:
    """Breadth-first closure of ``seeds``.

    ``stop`` is an optional early-exit predicate: BFS halts as soon as a form
    satisfies it and the partial set is returned with ``meta['stopped_at']``.
    """
    if operator not in ("S", "S_hat"):
        raise ValueError(f"unknown operator {operator!r}")
    op = apply_S_hat if operator == "S_hat" else apply_S
    if window is None:
        window = default_window(seq)
    max_k = seq.max_flat(window)

    seen: dict[LinForm, None] = {}
    queue: deque[LinForm] = deque()

    def push(phi: LinForm):
        if phi in seen:
            return False
        if phi.max_index > max_k:
            raise WindowOverflowError(phi, window, seq)
        seen[phi] = None
        if len(seen) > cap:
            raise CapExceededError(f"closure exceeded cap of {cap} forms; raise --cap")
        queue.append(phi)
        return True

    for phi in seeds:
        if push(phi) and stop is not None and stop(phi):
            return ClosureSet(tuple(seen), seeds_label, window, operator, {"stopped_at": phi})
    while queue:
        phi = queue.popleft()
        for k in phi.support:
            psi = op(seq, k, phi)
            if push(psi) and stop is not None and stop(psi):
                return ClosureSet(tuple(seen), seeds_label, window, operator, {"stopped_at": psi})
    return ClosureSet(tuple(seen), seeds_label, window, operator)


def x_seeds(seq: IotaSequence, rows: int) -> list[LinForm]:
    return [LinForm.x(k) for k in seq.flats_up_to_row(rows)]


def xi_infty(seq: IotaSequence, seed_rows: int | None = None, window: int | None = None,
             cap: int = DEFAULT_CAP) -> ClosureSet:
    if seed_rows is None:
        seed_rows = default_seed_rows(seq)
    if window is None:
        window = default_window(seq, seed_rows)
    return close(seq, x_seeds(seq, seed_rows), "S", window, cap, seeds_label=f"x[s,j], s<={seed_rows}")


def xi_lambda_k(seq: IotaSequence, k: int, window: int | None = None, cap: int = DEFAULT_CAP) -> ClosureSet:
    return close(seq, [lambda_form(seq, k)], "S_hat", window, cap, seeds_label=f"lambda^({k})")


def xi_lambda(seq: IotaSequence, seed_rows: int | None = None, window: int | None = None,
              cap: int = DEFAULT_CAP) -> ClosureSet:
    """Closure of the x-seeds together with every lambda^(i), symbolic in Lambda."""
    if seed_rows is None:
        seed_rows = default_seed_rows(seq)
    if window is None:
        window = default_window(seq, seed_rows)
    seeds = [lambda_form(seq, i) for i in seq.rs.index_set()] + x_seeds(seq, seed_rows)
    return close(seq, seeds, "S_hat", window, cap, seeds_label=f"lambda^(i) and x[s,j], s<={seed_rows}")


def xi_i(seq: IotaSequence, i: int, window: int | None = None, cap: int = DEFAULT_CAP) -> ClosureSet:
    """S_hat-closure of xi^(i), taken at lambda = 0 so that it stays free of weight constants."""
    forms = close(seq, [lambda_form(seq, i)], "S_hat", window, cap).forms
    out = tuple(dict.fromkeys(f.specialize((0,) * seq.n) for f in forms))
    return ClosureSet(out, f"xi^({i})", window or default_window(seq), "S_hat")


# predicates


def is_ample(seq: IotaSequence, weight: Sequence[int], seed_rows: int | None = None,
             window: int | None = None, cap: int = DEFAULT_CAP) -> bool:
    """True iff every form of Xi_iota[lambda] is nonnegative at the zero vector."""
    return ample_witness(seq, weight, seed_rows, window, cap) is None


def ample_witness(seq: IotaSequence, weight: Sequence[int], seed_rows: int | None = None,
                  window: int | None = None, cap: int = DEFAULT_CAP) -> LinForm | None:
    weight = tuple(weight)
    if seed_rows is None:
        seed_rows = default_seed_rows(seq)
    if window is None:
        window = default_window(seq, seed_rows)
    seeds = [lambda_form(seq, i) for i in seq.rs.index_set()] + x_seeds(seq, seed_rows)
    res = close(seq, seeds, "S_hat", window, cap, stop=lambda f: f.constant_at(weight) < 0)
    return res.meta.get("stopped_at")


def symbolically_nonnegative(phi: LinForm) -> bool:
    """Heuristic: constant >= 0 and every Lambda coefficient >= 0 implies phi(0) >= 0 on all of P_+."""
    return phi.const >= 0 and all(v >= 0 for _, v in phi.lam)


def first_occurrences(seq: IotaSequence) -> frozenset[int]:
    return frozenset(seq.iota_first(i) for i in seq.rs.index_set())


def positivity_violations(seq: IotaSequence, forms: Iterable[LinForm]) -> list[LinForm]:
    firsts = first_occurrences(seq)
    return [f for f in forms if any(f.coeff(k) < 0 for k in firsts)]


def check_positivity(seq: IotaSequence, seed_rows: int | None = None, window: int | None = None,
                     cap: int = DEFAULT_CAP) -> bool:
    return not positivity_violations(seq, xi_infty(seq, seed_rows, window, cap))


def check_strict_positivity(seq: IotaSequence, seed_rows: int | None = None, window: int | None = None,
                            cap: int = DEFAULT_CAP) -> bool:
    forms = list(xi_infty(seq, seed_rows, window, cap))
    seeds = {xi_form(seq, i) for i in seq.rs.index_set()}
    for i in seq.rs.index_set():
        forms.extend(f for f in xi_i(seq, i, window, cap) if f not in seeds)
    return not positivity_violations(seq, forms)
