import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from polyreal.cartan import build_root_system, weyl_dimension
from polyreal.crystal import (
    Crystal,
    CrystalError,
    CrystalPoint,
    PointOverflowError,
    ZERO,
    epsilon_star,
    epsilon_star_oracle,
    generate_b_infty,
    generate_b_lambda,
    in_sigma,
    random_b_infty_points,
)
from polyreal.sequence import permutation_words
from polyreal.tableaux import gen_tab_infty, gen_tab_lambda

from conftest import seq_of

A3_POINT = {(1, 2): 1, (1, 1): 2, (1, 3): 1, (2, 2): 3, (2, 1): 1, (2, 3): 2}
C3_POINT = {(1, 2): 1, (1, 1): 3, (1, 3): 2, (2, 2): 7, (2, 1): 2, (2, 3): 4, (3, 2): 2}


@pytest.mark.parametrize("family,coords,expected", [("A", A3_POINT, (2, 1, 1)), ("C", C3_POINT, (3, 1, 2))])
def test_epsilon_star_examples(family, coords, expected):
    seq = seq_of(family, 3, (3, 1, 2))
    x = CrystalPoint.from_double(seq, coords)
    assert tuple(epsilon_star(seq, x, i) for i in (1, 2, 3)) == expected
    assert tuple(epsilon_star_oracle(seq, x, i) for i in (1, 2, 3)) == expected


def test_epsilon_star_of_zero(a3):
    assert [epsilon_star(a3, ZERO, i) for i in (1, 2, 3)] == [0, 0, 0]


def test_epsilon_star_rejects_points_outside_image(a3):
    with pytest.raises(CrystalError):
        epsilon_star(a3, CrystalPoint.from_double(a3, {(2, 1): 1}), 1)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_epsilon_star_matches_oracle_on_random_points(family, rank):
    rng = random.Random(7)
    seq = permutation_words(build_root_system(family, rank))[1]
    for x in random_b_infty_points(seq, 500, 8, rng):
        i = rng.randint(1, rank)
        assert epsilon_star(seq, x, i, check=False) == epsilon_star_oracle(seq, x, i)


def test_a2_first_steps(a2):
    cr = Crystal(a2)
    assert cr.f(ZERO, 1) == CrystalPoint.from_double(a2, {(1, 1): 1})
    assert cr.f(ZERO, 2) == CrystalPoint.from_double(a2, {(1, 2): 1})
    assert cr.e(ZERO, 1) is None
    assert cr.epsilon(ZERO, 1) == 0


@pytest.mark.parametrize("family,rank,lam", [
    ("A", 2, (1, 1)), ("A", 3, (1, 0, 0)), ("C", 3, (0, 0, 1)), ("B", 3, (0, 0, 1)), ("D", 4, (0, 1, 0, 0)),
    ("B", 2, (1, 1)), ("C", 2, (2, 0)),
])
def test_b_lambda_size_and_weights(family, rank, lam):
    seq = permutation_words(build_root_system(family, rank))[-1]
    pts = generate_b_lambda(seq, lam)
    assert len(pts) == len(set(pts)) == weyl_dimension(seq.rs, lam)
    cr = Crystal(seq, lam)
    weights = Counter(cr.wt(x) for x in pts)
    assert weights[tuple(lam)] == 1
    # every f_i from the highest weight vector stops after <h_i, lambda> steps
    for i in seq.rs.index_set():
        assert cr.phi(ZERO, i) == lam[i - 1]


def test_b_lambda_points_satisfy_inequalities(c3):
    lam = (1, 0, 1)
    forms = [f.specialize(lam) for f in gen_tab_lambda(c3)] + list(gen_tab_infty(c3, 3))
    for x in generate_b_lambda(c3, lam):
        assert all(f.evaluate(x) >= 0 for f in forms)


def test_b_infty_points_lie_in_sigma(a3):
    pts = generate_b_infty(a3, 4)
    assert len(pts) == len(set(pts))
    assert all(in_sigma(a3, x) for x in pts)


def test_point_overflow(a3):
    cr = Crystal(a3, None, window=1)
    x = ZERO
    with pytest.raises(PointOverflowError):
        for t in range(30):
            x = cr.f(x, 1 + t % 3)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 4), st.integers(1, 3), st.integers(-3, 3)), max_size=6))
def test_point_json_roundtrip(rows):
    seq = seq_of("A", 3, (3, 1, 2))
    x = CrystalPoint.from_json(seq, [{"s": s, "j": j, "a": a} for s, j, a in rows])
    assert CrystalPoint.from_json(seq, x.to_json(seq)) == x
