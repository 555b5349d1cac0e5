import pytest
from hypothesis import given, settings, strategies as st

from polyreal.cartan import build_root_system
from polyreal.closure import (
    CapExceededError,
    WindowOverflowError,
    ample_witness,
    check_positivity,
    check_strict_positivity,
    close,
    is_ample,
    positivity_violations,
    symbolically_nonnegative,
    xi_i,
    xi_infty,
    xi_lambda,
    xi_lambda_k,
)
from polyreal.linform import LinForm, apply_S_hat, form_from_double, lambda_form, xi_form
from polyreal.sequence import permutation_words
from polyreal.tableaux import gen_tab_infty, gen_tab_lambda_k

from conftest import seq_of


def test_a2_lambda_closures(a2):
    assert xi_lambda_k(a2, 1).as_set() == {lambda_form(a2, 1), LinForm()}
    assert xi_lambda_k(a2, 2).as_set() == {
        lambda_form(a2, 2), form_from_double(a2, {(2, 1): -1}, 0, {2: 1}), LinForm(),
    }


def test_a2_xi_i_at_zero_weight(a2):
    assert xi_i(a2, 2).as_set() == {LinForm(), xi_form(a2, 2), form_from_double(a2, {(2, 1): -1})}


def test_bfs_order_is_deterministic(a3):
    first = xi_lambda(a3, 3).forms
    assert xi_lambda(a3, 3).forms == first
    assert first[:3] == tuple(lambda_form(a3, i) for i in (1, 2, 3))


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_fixpoint(family, rank):
    seq = permutation_words(build_root_system(family, rank))[0]
    for k in seq.rs.index_set():
        res = xi_lambda_k(seq, k)
        members = res.as_set()
        for f in res:
            for m in f.support:
                assert apply_S_hat(seq, m, f) in members


def test_window_overflow(a3):
    with pytest.raises(WindowOverflowError, match="enlarge --window"):
        xi_infty(a3, seed_rows=3, window=3)


def test_cap(a3):
    with pytest.raises(CapExceededError):
        xi_infty(a3, seed_rows=3, cap=10)


def test_early_stop(a3):
    res = close(a3, [LinForm.x(1)], stop=lambda f: f.coeff(1) == 0)
    assert res.meta["stopped_at"].coeff(1) == 0


def test_counterexample_is_not_ample():
    seq = seq_of("A", 3, (2, 3, 2, 1))
    w = ample_witness(seq, (0, 1, 0))
    assert w is not None and w.constant_at((0, 1, 0)) < 0
    assert w == form_from_double(seq, {(1, 3): 1, (2, 2): -1}, 0, {2: -1})


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("B", 2), ("C", 2), ("B", 3), ("C", 3)])
def test_positivity_for_adapted(family, rank):
    for seq in permutation_words(build_root_system(family, rank)):
        assert check_positivity(seq)
        assert check_strict_positivity(seq)


def test_xi_seeds_violate_positivity(a3):
    # the exclusion of xi^(i) in strict positivity is essential
    for i in a3.rs.index_set():
        assert positivity_violations(a3, [xi_form(a3, i)])


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([("A", 3, (3, 1, 2)), ("C", 3, (3, 1, 2)), ("B", 2, (1, 2)), ("D", 4, (2, 4, 1, 3))]),
       st.data())
def test_ample_for_adapted(case, data):
    fam, n, word = case
    seq = seq_of(fam, n, word)
    lam = tuple(data.draw(st.integers(0, 3)) for _ in range(n))
    assert is_ample(seq, lam)


def test_symbolic_nonnegativity_heuristic(a3):
    assert symbolically_nonnegative(LinForm({1: -1}, 0, {1: 1}))
    assert not symbolically_nonnegative(LinForm({}, 0, {2: -1}))


def test_closure_matches_tableaux_c3(c3):
    for k in (1, 2, 3):
        assert xi_lambda_k(c3, k).as_set() == gen_tab_lambda_k(c3, k) | {LinForm()}
    xi = xi_infty(c3).as_set()
    assert gen_tab_infty(c3, 3) <= xi <= gen_tab_infty(c3, 7)
