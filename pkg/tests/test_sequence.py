import pytest
from hypothesis import given, settings, strategies as st

from polyreal.cartan import build_root_system
from polyreal.sequence import (
    NotAdaptedError,
    SequenceError,
    parse_word,
    permutation_words,
)

from conftest import seq_of


def test_word_is_read_as_displayed():
    seq = seq_of("A", 3, (3, 1, 2))
    assert seq.letters(6) == [2, 1, 3, 2, 1, 3]


def test_double_index_a2(a2):
    # x_{2l-1} = x_{l,1}, x_{2l} = x_{l,2}
    assert [a2.flat_to_double(k) for k in range(1, 7)] == [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)]


def test_iota_first_and_p(a3):
    assert [a3.iota_first(i) for i in (1, 2, 3)] == [2, 1, 3]
    assert a3.p_value(2, 1) == 1 and a3.p_value(3, 2) == 0
    assert a3.P(2) == a3.P(3) == 1 and a3.P(1) == 0


def test_d_type_p_uses_branch_node():
    seq = seq_of("D", 4, (4, 3, 2, 1))
    assert seq.P(4) == seq.P(2) + seq.p_value(4, 2)


def test_adapted_examples():
    assert seq_of("A", 3, (3, 1, 2)).is_adapted()
    # the counterexample iota = (..., 2, 1, 2, 3, 2, 1) is not adapted
    bad = seq_of("A", 3, (2, 3, 2, 1))
    assert not bad.is_adapted()
    with pytest.raises(NotAdaptedError):
        bad.P(2)


@pytest.mark.parametrize("word,msg", [
    ((1, 1, 2), "adjacent"),
    ((1, 2, 1), "adjacent"),
    ((1, 2, 4), "outside"),
    ((1,), "never occur"),
])
def test_invalid_words(word, msg):
    with pytest.raises(SequenceError, match=msg):
        seq_of("A", 2, word)


def test_parse_word():
    assert parse_word("3, 1,2") == (3, 1, 2)
    with pytest.raises(SequenceError, match="entry 2"):
        parse_word("3,x,2")
    with pytest.raises(SequenceError):
        parse_word("")
    with pytest.raises(SequenceError):
        parse_word("1,,2")


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_every_permutation_word_is_adapted(family, rank):
    words = permutation_words(build_root_system(family, rank))
    assert words and all(s.is_adapted() for s in words)


def test_rotation_starting_with(a3):
    for i in (1, 2, 3):
        assert a3.rotation_starting_with(i).letter(1) == i


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([("A", 3, (3, 1, 2)), ("C", 3, (2, 3, 2, 1, 3, 1)), ("D", 4, (1, 2, 3, 4)),
                        ("B", 2, (2, 1, 2, 1))]),
       st.integers(1, 200))
def test_flat_double_roundtrip(case, k):
    fam, n, word = case
    seq = seq_of(fam, n, word)
    s, j = seq.flat_to_double(k)
    assert seq.letter(k) == j
    assert seq.double_to_flat(s, j) == k
    assert seq.k_plus(k) > k
    km = seq.k_minus(k)
    assert km == 0 or (km < k and seq.letter(km) == j and seq.k_plus(km) == k)


def test_max_flat(a3):
    assert a3.max_flat(2) == 6
    assert a3.flats_up_to_row(1) == [1, 2, 3]
