import pytest
from hypothesis import given
from hypothesis import strategies as st

from mrantipode.algebra import Element
from mrantipode.words import (
    WordError,
    delta,
    detect_sigma_ab,
    eta,
    format_word,
    parse_word,
    shift,
    sigma_A,
    sigma_ab,
    standardize,
)
from oracles import standardize_bruteforce

distinct_words = st.lists(st.integers(1, 20), max_size=6, unique=True).map(tuple)


@pytest.mark.parametrize(
    "w, expected",
    [
        ((1, 1, 3), (1, 2, 3)),
        ((), ()),
        ((5, 2, 3), standardize_bruteforce((5, 2, 3))),
    ],
)
def test_standardize_examples(w, expected):
    assert standardize(w) == expected


def test_standardize_523_frozen():
    assert standardize_bruteforce((5, 2, 3)) == (3, 1, 2)
    assert standardize((5, 2, 3)) == (3, 1, 2)


@given(st.lists(st.integers(1, 6), max_size=6).map(tuple))
def test_standardize_matches_bruteforce(w):
    assert standardize(w) == standardize_bruteforce(w)


@given(distinct_words, st.integers(0, 10))
def test_standardize_shift_invariant(w, m):
    assert standardize(shift(w, m)) == standardize(w)


@given(st.permutations(range(1, 7)))
def test_standardize_idempotent_on_permutations(p):
    p = tuple(p)
    assert standardize(p) == p


def test_shift():
    assert shift((1, 1, 3), 3) == (4, 4, 6)
    assert shift((2, 1), 2) == (4, 3)
    assert shift((3, 1, 2), 0) == (3, 1, 2)


def test_eta_delta_conventions():
    assert eta(2, 5) == Element.word((2, 3, 4, 5))
    assert eta(5, 4) == Element.one()
    assert eta(6, 4) == Element.zero()
    assert delta(4, 2) == Element.word((4, 3, 2))
    for n in range(1, 6):
        assert delta(n, n + 1) == Element.one()
    assert delta(4, 6) == Element.zero()


@given(st.integers(-3, 12), st.integers(-3, 12))
def test_eta_delta_share_letters(k, l):
    up, down = eta(k, l), delta(l, k)
    assert bool(up) == bool(down)
    if up:
        (u,), (d,) = up.support(), down.support()
        assert sorted(u) == sorted(d)
    if k >= 1:
        assert bool(up) == (k <= l + 1)


def test_sigma_A_examples():
    assert sigma_A(7, {2, 5}) == (5, 2, 1, 3, 4, 6, 7)
    assert sigma_A(4, {3, 4}) == (4, 3, 1, 2)
    assert sigma_A(5, range(1, 6)) == (5, 4, 3, 2, 1)


@pytest.mark.parametrize("n, A", [(4, set()), (4, {5}), (3, {0, 1})])
def test_sigma_A_rejects(n, A):
    with pytest.raises(WordError):
        sigma_A(n, A)


@pytest.mark.parametrize("n", range(2, 9))
def test_sigma_marked_one_is_single_marked(n):
    for a in range(2, n + 1):
        assert sigma_A(n, {1, a}) == sigma_A(n, {a})


@pytest.mark.parametrize("n", range(2, 9))
def test_sigma_ab_is_concatenation_of_runs(n):
    for a in range(2, n + 1):
        for b in range(1, a):
            runs = (a, b) + tuple(range(1, b)) + tuple(range(b + 1, a)) + tuple(range(a + 1, n + 1))
            assert sigma_ab(n, a, b) == runs
            assert detect_sigma_ab(runs) == (n, a, b)


def test_detect_rejects_other_shapes():
    assert detect_sigma_ab((2, 1, 4, 3)) is None
    assert detect_sigma_ab((1, 2, 3)) is None
    assert detect_sigma_ab((1,)) is None


def test_word_text_roundtrip():
    assert format_word(()) == "e"
    assert format_word((4, 3, 1, 2)) == "4312"
    long = (10, 3, 1, 2, 4, 5, 6, 7, 8, 9)
    assert format_word(long) == "10,3,1,2,4,5,6,7,8,9"
    assert parse_word(format_word(long)) == long
    assert parse_word("e") == ()


def test_parse_word_rejects_ambiguous_and_repeats():
    with pytest.raises(WordError):
        parse_word("1234567890")
    with pytest.raises(WordError):
        parse_word("112")
    with pytest.raises(WordError):
        parse_word("12a")


def test_degree_cap_from_environment(monkeypatch):
    monkeypatch.setenv("MR_MAX_DEGREE", "5")
    with pytest.raises(WordError):
        parse_word("1,2,3,4,5,6")
    monkeypatch.setenv("MR_MAX_DEGREE", "zero")
    with pytest.raises(WordError):
        parse_word("1")
