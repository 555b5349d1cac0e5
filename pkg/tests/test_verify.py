import itertools

import pytest
from hypothesis import given, settings, strategies as st

from polyreal.cartan import build_root_system
from polyreal.crystal import CrystalPoint, generate_b_lambda
from polyreal.linform import LinForm
from polyreal.sequence import permutation_words
from polyreal.verify import (
    LatticeBoundError,
    box_identities,
    counterexample_chain,
    inequality_system,
    lattice_points,
    golden_a2_xi_lambda,
    run_paper_examples,
    verify_box_identities,
    verify_closedness,
    verify_closure_equality,
    verify_crystal_axioms,
    verify_positivity_suite,
    verify_realization,
)

from conftest import seq_of


def brute_force(seq, forms, rows, bound, lam):
    ks = seq.flats_up_to_row(rows)
    out = set()
    for vals in itertools.product(range(bound + 1), repeat=len(ks)):
        x = dict(zip(ks, vals))
        if all(f.specialize(lam).evaluate(x) >= 0 for f in forms):
            out.add(CrystalPoint.from_dict(x))
    return out


def test_lattice_points_against_brute_force(a2):
    # x1 <= L1, x2 <= x1 + L2, x3 <= x2, x4 = 0
    forms = [LinForm({1: -1}, 0, {1: 1}), LinForm({1: 1, 2: -1}, 0, {2: 1}), LinForm({2: 1, 3: -1}),
             LinForm({4: -1})]
    lam = (2, 1)
    got = lattice_points(a2, forms, lam, bounds={k: 4 for k in range(1, 5)})
    assert got == brute_force(a2, forms, 2, 4, lam)
    assert lattice_points(a2, forms, lam, reference=[CrystalPoint()]) == got


def test_lattice_points_unbounded(a2):
    with pytest.raises(LatticeBoundError):
        lattice_points(a2, [LinForm({1: 1})], (0, 0), reference=[CrystalPoint()])


def test_a2_membership_examples(a2):
    lam = (1, 1)
    pts = lattice_points(a2, inequality_system(a2), lam, reference=generate_b_lambda(a2, lam))
    assert CrystalPoint.from_double(a2, {(1, 1): 1, (1, 2): 1, (2, 1): 1}) in pts
    assert CrystalPoint.from_double(a2, {(2, 1): 2}) not in pts
    assert len(pts) == 8


@settings(max_examples=10, deadline=None)
@given(st.sampled_from([("A", 3, (3, 1, 2)), ("C", 2, (1, 2)), ("B", 2, (2, 1))]), st.data())
def test_lattice_points_monotone_in_lambda(case, data):
    fam, n, word = case
    seq = seq_of(fam, n, word)
    lam = [data.draw(st.integers(0, 1)) for _ in range(n)]
    bigger = list(lam)
    bigger[data.draw(st.integers(0, n - 1))] += 1
    system = inequality_system(seq)
    small = lattice_points(seq, system, lam, reference=generate_b_lambda(seq, lam))
    large = lattice_points(seq, system, bigger, reference=generate_b_lambda(seq, bigger))
    assert small <= large


def test_lambda_coefficients_are_plus_one():
    for fam, n in (("A", 3), ("B", 3), ("C", 3), ("D", 4)):
        seq = permutation_words(build_root_system(fam, n))[0]
        assert all(v == 1 for f in inequality_system(seq) for _, v in f.lam)


def test_realization_report(c3):
    rep = verify_realization(c3, (0, 0, 1))
    assert rep.outcome and rep.counts["crystal"] == rep.counts["polytope"] == 14
    assert rep.to_json()["outcome"] == "pass"


def test_realization_detects_missing_inequality():
    seq = seq_of("B", 3, (1, 3, 2))
    system = inequality_system(seq)
    trimmed = [f for f in system if f != [g for g in system if g.lam][-1]]
    rep = verify_realization(seq, (1, 1, 0), trimmed)
    assert not rep.outcome and rep.counts["polytope"] > rep.counts["crystal"]


def test_realization_budget(a3):
    rep = verify_realization(a3, (5, 5, 5), budget=100)
    assert rep.outcome and rep.counts["skipped"] == 1


@pytest.mark.parametrize("family,rank", [("A", 5), ("B", 5), ("C", 5), ("D", 5), ("B", 2), ("C", 2)])
def test_box_identities(family, rank):
    for seq in permutation_words(build_root_system(family, rank))[:3]:
        rep = verify_box_identities(seq)
        assert rep.outcome, rep.witnesses
        assert sum(rep.counts.values()) > 0


def test_box_identity_names():
    names = {n for n, *_ in box_identities(seq_of("C", 3, (3, 1, 2)), 3)}
    assert names == {"C-box1", "C-box2", "C-box3", "BC-pr3"}
    names = {n for n, *_ in box_identities(seq_of("D", 4, (1, 2, 3, 4)), 3)}
    assert names == {f"D-box{i}" for i in range(1, 6)}


@pytest.mark.parametrize("family,rank,word", [("A", 3, (3, 1, 2)), ("C", 3, (3, 1, 2)), ("B", 2, (2, 1)),
                                              ("D", 4, (3, 1, 4, 2))])
def test_closure_and_closedness(family, rank, word):
    seq = seq_of(family, rank, word)
    assert verify_closure_equality(seq).outcome
    rep = verify_closedness(seq)
    assert rep.outcome, rep.witnesses
    assert rep.counts["predicted"] > 0
    assert verify_positivity_suite(seq).outcome


def test_crystal_axioms_small(a3):
    assert verify_crystal_axioms(a3, samples=200).outcome
    assert verify_crystal_axioms(a3, (1, 0, 2), samples=200).outcome


def test_golden_examples():
    rep = run_paper_examples()
    assert rep.outcome, rep.witnesses
    expected, got = golden_a2_xi_lambda()
    assert expected == got
    assert all(want == have for want, have in counterexample_chain())
