from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mrantipode.algebra import (
    INT64_MAX,
    CoefficientOverflow,
    Element,
    add,
    component_last,
    concat,
    format_element,
    from_records,
    parse_element,
    scale,
    shifted_shuffle,
    shuffle,
    strip_last,
    to_records,
)
from mrantipode.hopf import antipode
from mrantipode.words import WordError
from oracles import shifted_shuffle_bruteforce, shuffle_bruteforce


@st.composite
def disjoint_words(draw, count=2, max_total=8):
    """Words with pairwise disjoint letters drawn from 1..max_total."""
    letters = draw(st.permutations(range(1, max_total + 1)))
    cuts = sorted(draw(st.lists(st.integers(0, max_total), min_size=count, max_size=count)))
    words, start = [], 0
    for c in cuts:
        words.append(tuple(letters[start:c]))
        start = c
    return words


def as_counter(x: Element):
    return dict(x.items())


def test_add_examples(el):
    assert el("21") + el({"21": -1}) == Element.zero()
    assert el("12") + el("12") == el({"12": 2})
    assert add(el({"231": 1, "132": -1}), el({"312": -1})) == el({"231": 1, "132": -1, "312": -1})


def test_scale_examples(el):
    x = el({"231": 1, "132": -1})
    assert scale(x, -1) == el({"231": -1, "132": 1})
    assert scale(x, 0) == Element.zero()
    n = 3
    assert scale(el("23"), (-1) ** (n + 1)) == el("23")


def test_overflow_is_reported(el):
    big = el({"12": INT64_MAX})
    with pytest.raises(CoefficientOverflow):
        big + el("12")
    with pytest.raises(CoefficientOverflow):
        scale(big, 2)


def test_concat_examples(el):
    assert concat(el({"13": 1, "31": 1}), el("2")) == el({"132": 1, "312": 1})
    x = el({"13": 1, "31": -1})
    assert concat(x, Element.one()) == x
    assert concat(x, Element.zero()) == Element.zero()
    with pytest.raises(WordError):
        concat(el("12"), el("23"))


def test_shuffle_examples(el):
    assert shuffle(el("12"), el("34")) == el({w: 1 for w in ["1234", "1324", "1342", "3124", "3142", "3412"]})
    assert shuffle(el("2"), el("43")) == el({w: 1 for w in ["243", "423", "432"]})
    assert dict(shuffle(el("2"), el("43")).items()) == dict(shuffle_bruteforce((2,), (4, 3)))
    u = el("312")
    assert shuffle(u, Element.one()) == u
    with pytest.raises(WordError):
        shuffle(el("12"), el("2"))


def test_shifted_shuffle_examples(el):
    expected = el({w: 1 for w in ["2134", "2314", "2341", "3214", "3241", "3421"]})
    assert shifted_shuffle(el("21"), el("12")) == expected
    assert shifted_shuffle(Element.one(), el("312")) == el("312")
    assert shifted_shuffle(el("1"), el("21")) == el({"132": 1, "312": 1, "321": 1})
    assert dict(shifted_shuffle_bruteforce((1,), (2, 1))) == dict(shifted_shuffle(el("1"), el("21")).items())


def test_components_of_s213(el):
    s = antipode((2, 1, 3))
    assert component_last(s, 1) == el("231")
    assert component_last(s, 3) == Element.zero()
    assert strip_last(component_last(s, 2), 2) == el({"13": -1, "31": -1})
    assert component_last(s, 7) == Element.zero()
    assert strip_last(el("5"), 5) == Element.one()
    assert strip_last(component_last(antipode((4, 3, 1, 2)), 1), 1) == el("423")
    with pytest.raises(WordError):
        strip_last(s, 2)


@settings(max_examples=60, deadline=None)
@given(disjoint_words(2))
def test_shuffle_matches_bruteforce(words):
    u, v = words
    got = shuffle(Element.word(u), Element.word(v))
    assert as_counter(got) == dict(shuffle_bruteforce(u, v))
    assert len(got) == comb(len(u) + len(v), len(u))
    assert all(c == 1 for _, c in got.items())


@settings(max_examples=60, deadline=None)
@given(disjoint_words(2))
def test_shuffle_commutative(words):
    u, v = (Element.word(w) for w in words)
    assert shuffle(u, v) == shuffle(v, u)


@settings(max_examples=60, deadline=None)
@given(disjoint_words(3))
def test_shuffle_associative(words):
    u, v, w = (Element.word(x) for x in words)
    assert shuffle(shuffle(u, v), w) == shuffle(u, shuffle(v, w))


@settings(max_examples=60, deadline=None)
@given(disjoint_words(2))
def test_right_recursion(words):
    u, v = words
    if not u or not v:
        return
    a, b = u[-1], v[-1]
    lhs = shuffle(Element.word(u), Element.word(v))
    rhs = concat(shuffle(Element.word(u[:-1]), Element.word(v)), Element.word((a,))) + concat(
        shuffle(Element.word(u), Element.word(v[:-1])), Element.word((b,))
    )
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(disjoint_words(2))
def test_leibniz_rule_for_components(words):
    u, v = (Element.word(w) for w in words)
    for j in range(1, 9):
        def star(x):
            return strip_last(component_last(x, j), j)

        assert star(shuffle(u, v)) == shuffle(star(u), v) + shuffle(u, star(v))


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(1, 6)))
def test_components_partition(p):
    x = antipode(tuple(p))
    assert sum((component_last(x, j) for j in range(1, 6)), Element.zero()) == x


def test_homogeneous_products_stay_homogeneous(el):
    assert shuffle(el("21"), el("34")).degrees() == {4}
    assert shifted_shuffle(el({"21": 1, "12": -1}), el("1")).degrees() == {3}


def test_text_and_records_roundtrip(el):
    x = el({"4312": -1, "4231": 1, "1423": 2})
    text = format_element(x)
    assert text == "+2*1423 +4231 -4312"
    assert parse_element(text) == x
    assert from_records(to_records(x)) == x
    assert to_records(x)[0] == {"word": [1, 4, 2, 3], "coeff": 2}
    assert format_element(Element.zero()) == "0"
    assert format_element(Element.one()) == "+e"
    assert parse_element("0") == Element.zero()
