"""Integer-linear combinations of words and the products acting on them."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .words import EMPTY, Word, WordError, as_word, format_word, parse_word, shift

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class CoefficientOverflow(OverflowError):
    pass


def _checked(c: int) -> int:
    if not INT64_MIN <= c <= INT64_MAX:
        raise CoefficientOverflow(f"coefficient {c} leaves the signed 64-bit range")
    return c


class Element:
    """A finite formal sum of words with nonzero integer coefficients.

    Instances are immutable.  ``+``, ``-`` and ``*`` (by an int) are the
    module operations; products of words live in :func:`concat` and
    :func:`shuffle`.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, int] | Iterable[tuple[Word, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, int] = {}
        for w, c in items:
            w = tuple(w)
            acc[w] = acc.get(w, 0) + c
        self._terms = {w: _checked(c) for w, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Word, int]) -> "Element":
        # trusted constructor: zeros already dropped, range already checked
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "Element":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Element":
        """The empty word with coefficient 1."""
        return cls._raw({EMPTY: 1})

    @classmethod
    def word(cls, letters: Iterable[int], coeff: int = 1) -> "Element":
        return cls({as_word(letters): coeff})

    # -- container protocol -------------------------------------------------

    def items(self):
        return self._terms.items()

    def support(self) -> frozenset[Word]:
        return frozenset(self._terms)

    def coefficient(self, w: Iterable[int]) -> int:
        return self._terms.get(tuple(w), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Word]:
        return iter(sorted(self._terms))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sorted_terms(self) -> list[tuple[Word, int]]:
        return sorted(self._terms.items())

    def degrees(self) -> set[int]:
        return {len(w) for w in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    # -- module structure ---------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return add(self, scale(other, -1))

    def __neg__(self) -> "Element":
        return scale(self, -1)

    def __mul__(self, c: int) -> "Element":
        if not isinstance(c, int):
            return NotImplemented
        return scale(self, c)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Element({format_element(self)!r})"

    def __str__(self) -> str:
        return format_element(self)


def add(x: Element, y: Element) -> Element:
    if len(x) < len(y):
        x, y = y, x
    terms = dict(x._terms)
    for w, c in y._terms.items():
        s = terms.get(w, 0) + c
        if s:
            terms[w] = _checked(s)
        else:
            del terms[w]
    return Element._raw(terms)


def total(elements: Iterable[Element]) -> Element:
    """Sum of an iterable of Elements (accumulates in place)."""
    terms: dict[Word, int] = {}
    for x in elements:
        for w, c in x._terms.items():
            terms[w] = terms.get(w, 0) + c
    return Element(terms)


def scale(x: Element, c: int) -> Element:
    if c == 0:
        return Element.zero()
    return Element._raw({w: _checked(k * c) for w, k in x._terms.items()})


def _check_disjoint(u: Word, v: Word) -> None:
    if set(u) & set(v):
        raise WordError(f"letter collision between {format_word(u)} and {format_word(v)}")


def concat(*factors: Element) -> Element:
    """Bilinear concatenation of any number of Elements."""
    result = Element.one()
    for y in factors:
        terms: dict[Word, int] = {}
        for u, c in result._terms.items():
            for v, k in y._terms.items():
                _check_disjoint(u, v)
                w = u + v
                terms[w] = terms.get(w, 0) + c * k
        result = Element(terms)
    return result


@lru_cache(maxsize=1 << 16)
def _positions(total_len: int, left_len: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(total_len), left_len))


def shuffle_words(u: Word, v: Word) -> Iterator[Word]:
    """All interleavings of ``u`` and ``v``, each exactly once."""
    m, n = len(u), len(v)
    if not m:
        yield v
        return
    if not n:
        yield u
        return
    for pos in _positions(m + n, m):
        out = [0] * (m + n)
        chosen = set(pos)
        iu = iter(u)
        iv = iter(v)
        for i in range(m + n):
            out[i] = next(iu) if i in chosen else next(iv)
        yield tuple(out)


@lru_cache(maxsize=1 << 14)
def _shuffle_pair(u: Word, v: Word) -> tuple[Word, ...]:
    _check_disjoint(u, v)
    return tuple(shuffle_words(u, v))


def _shuffle2(x: Element, y: Element) -> Element:
    terms: dict[Word, int] = {}
    for u, c in x._terms.items():
        for v, k in y._terms.items():
            ck = c * k
            for w in _shuffle_pair(u, v):
                terms[w] = terms.get(w, 0) + ck
    return Element(terms)


def shuffle(*factors: Element) -> Element:
    """Bilinear shuffle product; the empty word is the unit."""
    result = Element.one()
    for y in factors:
        result = _shuffle2(result, y)
    return result


def shifted_shuffle(p: Element, q: Element) -> Element:
    """Product of the permutation algebra: shuffle ``p`` with ``q`` raised by |p|.

    Both arguments must be homogeneous; single permutations are the usual
    case, but the left factor may be any homogeneous Element (for example an
    antipode).
    """
    if not p or not q:
        return Element.zero()
    (m,) = p.degrees()
    shifted = Element._raw({shift(v, m): k for v, k in q._terms.items()})
    return _shuffle2(p, shifted)


def component_last(x: Element, j: int) -> Element:
    """Sub-sum of the terms ending in the letter ``j``."""
    return Element._raw({w: c for w, c in x._terms.items() if w and w[-1] == j})


def strip_last(x: Element, j: int) -> Element:
    """Drop the common final letter ``j`` from every term."""
    terms = {}
    for w, c in x._terms.items():
        if not w or w[-1] != j:
            raise WordError(f"term {format_word(w)} does not end in {j}")
        terms[w[:-1]] = c
    return Element._raw(terms)


def component(x: Element, j: int) -> Element:
    """Shorthand for ``strip_last(component_last(x, j), j)``."""
    return strip_last(component_last(x, j), j)


def last_letters(x: Element) -> set[int]:
    return {w[-1] for w in x._terms if w}


# -- text and record formats --------------------------------------------------


def format_element(x: Element) -> str:
    if not x:
        return "0"
    parts = []
    for w, c in x.sorted_terms():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        parts.append(f"{sign}{format_word(w)}" if mag == 1 else f"{sign}{mag}*{format_word(w)}")
    return " ".join(parts)


def parse_element(text: str) -> Element:
    """Inverse of :func:`format_element`."""
    text = text.strip()
    if text == "0":
        return Element.zero()
    terms: dict[Word, int] = {}
    for token in text.split():
        sign = -1 if token[0] == "-" else 1
        body = token[1:] if token[0] in "+-" else token
        if "*" in body:
            mag, body = body.split("*", 1)
            coeff = sign * int(mag)
        else:
            coeff = sign
        w = parse_word(body)
        terms[w] = terms.get(w, 0) + coeff
    return Element(terms)


def to_records(x: Element) -> list[dict]:
    return [{"word": list(w), "coeff": c} for w, c in x.sorted_terms()]


def from_records(records: Iterable[Mapping]) -> Element:
    return Element((as_word(r["word"]), int(r["coeff"])) for r in records)
