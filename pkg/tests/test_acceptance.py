"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py`` or under pytest
(the lines are printed with output capture disabled).
"""

import time

import pytest

from polyreal.cartan import build_root_system, dominant_weights
from polyreal.closure import is_ample
from polyreal.sequence import permutation_words
from polyreal.verify import (
    SWEEP,
    all_words,
    counterexample_sequence,
    inequality_system,
    run_paper_examples,
    sweep,
    verify_box_identities,
    verify_closedness,
    verify_closure_equality,
    verify_crystal_axioms,
    verify_epsilon_star_fixtures,
    verify_positivity_suite,
    verify_realization,
)

BOX_RANKS = [(f, n) for f in "ABCD" for n in range(2, 6) if not (f == "D" and n < 4)]


def _criterion_1():
    rep = run_paper_examples()
    if not rep.outcome:
        return False, str(rep.witnesses[:3])
    return True, "A2 Xi[lambda], counterexample chain, A3 and C3 example sets"


def _criterion_2():
    rep = verify_epsilon_star_fixtures()
    return rep.outcome, str(rep.counts)


def _run_all(fn, seqs):
    n = 0
    for seq in seqs:
        rep = fn(seq)
        n += 1
        if not rep.outcome:
            return False, f"{seq!r}: {rep.witnesses[:3]}"
    return True, f"{n} words"


def _criterion_3():
    return _run_all(verify_closure_equality, sweep())


def _criterion_4():
    cases = 0
    for seq in sweep():
        system = inequality_system(seq)
        for lam in dominant_weights(seq.n, 2):
            rep = verify_realization(seq, lam, system)
            cases += 1
            if not rep.outcome or rep.counts.get("skipped"):
                return False, f"{seq!r} lambda={lam}: {rep.witnesses[:3]} {rep.notes}"
    return True, f"{cases} (word, lambda) cases"


def _criterion_5():
    ok, detail = _run_all(verify_positivity_suite, sweep())
    if not ok:
        return ok, detail
    bad = counterexample_sequence()
    if bad.is_adapted() or is_ample(bad, (0, 1, 0)):
        return False, "the non-adapted A3 word was reported ample"
    return True, detail + "; non-adapted A3 word (2,3,2,1) is not ample at lambda=(0,1,0)"


def _criterion_6():
    seqs = [s for f, n in BOX_RANKS for s in permutation_words(build_root_system(f, n))]
    ok, detail = _run_all(verify_box_identities, seqs)
    return ok, detail + " up to rank 5"


def _criterion_7():
    predicted = 0
    for seq in sweep():
        rep = verify_closedness(seq)
        if not rep.outcome:
            return False, f"{seq!r}: {rep.witnesses[:3]}"
        predicted += rep.counts["predicted"]
    return True, f"{predicted} case predictions agree"


def _criterion_8():
    configs = 0
    for fam, n in SWEEP:
        words = all_words(build_root_system(fam, n))
        for seq in (words[0], words[-1]):
            for lam in (None, (1,) * n):
                rep = verify_crystal_axioms(seq, lam, samples=1000, seed=configs)
                configs += 1
                if not rep.outcome:
                    return False, f"{seq!r} lambda={lam}: {rep.witnesses[:3]}"
    return True, f"{configs} configurations x 1000 points"


CRITERIA = [
    (1, "golden example suite", _criterion_1, 5),
    (2, "epsilon-star fixtures, formula and oracle", _criterion_2, 5),
    (3, "closure equals tableaux", _criterion_3, 300),
    (4, "realization: crystal equals lattice points", _criterion_4, 600),
    (5, "positivity suites", _criterion_5, 60),
    (6, "box identities", _criterion_6, 30),
    (7, "closedness propositions", _criterion_7, 300),
    (8, "crystal axioms", _criterion_8, 60),
]


def evaluate(num):
    _, name, fn, limit = CRITERIA[num - 1]
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    ok = ok and dt < limit
    line = f"CRITERION {num} {'PASS' if ok else 'FAIL'}: {name} ({detail}; {dt:.1f}s, limit {limit}s)"
    return ok, line


@pytest.mark.parametrize("num", [c[0] for c in CRITERIA])
def test_acceptance(num, capsys):
    ok, line = evaluate(num)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    import sys

    results = [evaluate(c[0]) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
