"""Coproduct, counit and the recursive antipode of the permutation Hopf algebra."""

from __future__ import annotations

import threading
from math import comb
from typing import Iterable, Mapping, Sequence

from .algebra import Element, _checked, scale, shifted_shuffle, total
from .words import EMPTY, Word, as_permutation, format_word, standardize

Pair = tuple[Word, Word]


class TensorElement:
    """Integer combination of ordered pairs of permutations."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Pair, int] | Iterable[tuple[Pair, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Pair, int] = {}
        for pair, c in items:
            pair = tuple(tuple(p) for p in pair)
            acc[pair] = acc.get(pair, 0) + c
        self._terms = {k: _checked(c) for k, c in acc.items() if c}

    def items(self):
        return self._terms.items()

    def sorted_terms(self):
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            f"{c}·({'⊗'.join(format_word(p) for p in pair)})" for pair, c in self.sorted_terms()
        )

    __repr__ = __str__


def deconcatenations(p: Sequence[int]) -> list[Pair]:
    return [(standardize(p[:i]), standardize(p[i:])) for i in range(len(p) + 1)]


def coproduct(p: Sequence[int]) -> TensorElement:
    return TensorElement((pair, 1) for pair in deconcatenations(p))


def counit(x: Element) -> int:
    return x.coefficient(EMPTY)


# -- antipode -----------------------------------------------------------------

_cache: dict[Word, Element] = {EMPTY: Element.one()}
_lock = threading.Lock()


def clear_cache() -> None:
    with _lock:
        _cache.clear()
        _cache[EMPTY] = Element.one()


def _lookup(q: Word) -> Element | None:
    with _lock:
        return _cache.get(q)


def _store(q: Word, value: Element) -> Element:
    with _lock:
        return _cache.setdefault(q, value)


def _antipode_step(q: Word) -> Element:
    # every proper prefix of q has already been cached
    n = len(q)
    parts = []
    for i in range(n):
        s = _lookup(standardize(q[:i]))
        parts.append(shifted_shuffle(s, Element.word(standardize(q[i:]))))
    return scale(total(parts), -1)


def antipode(p: Sequence[int]) -> Element:
    """S(p) by the deconcatenation recursion, memoized on standardized prefixes.

    The prefixes of a standardized prefix are again standardized prefixes of
    ``p``, so the work list is just the prefixes in increasing length.
    """
    p = as_permutation(p)
    hit = _lookup(p)
    if hit is not None:
        return hit
    for i in range(1, len(p) + 1):
        q = standardize(p[:i])
        if _lookup(q) is None:
            _store(q, _antipode_step(q))
    return _lookup(p)


def antipode_of(x: Element) -> Element:
    """Linear extension of :func:`antipode`."""
    return total(scale(antipode(w), c) for w, c in x.items())


def recursive_term_count(p: Sequence[int]) -> int:
    """Number of signed terms generated by the recursion before cancellation.

    Counts, for every prefix computed on the way to ``S(p)``, the size of each
    shifted shuffle set it adds up.
    """
    p = as_permutation(p)
    count = 0
    for k in range(1, len(p) + 1):
        q = standardize(p[:k])
        for i in range(k):
            count += len(antipode(standardize(q[:i]))) * comb(k, i)
    return count


# -- axiom checkers -------------------------------------------------------------


def convolution_sums(p: Sequence[int]) -> tuple[Element, Element]:
    """Left and right convolution sums m(S⊗id)Δ(p) and m(id⊗S)Δ(p)."""
    left = []
    right = []
    for alpha, beta in deconcatenations(p):
        left.append(shifted_shuffle(antipode(alpha), Element.word(beta)))
        right.append(shifted_shuffle(Element.word(alpha), antipode(beta)))
    return total(left), total(right)


def check_antipode_axiom(p: Sequence[int]) -> bool:
    """Both convolution identities vanish for a nonempty permutation."""
    p = as_permutation(p)
    if not p:
        raise ValueError("the antipode axiom check needs |p| >= 1")
    left, right = convolution_sums(p)
    return not left and not right


def _triple(p: Sequence[int], left_first: bool) -> dict[tuple[Word, Word, Word], int]:
    out: dict[tuple[Word, Word, Word], int] = {}
    for alpha, beta in deconcatenations(p):
        if left_first:
            for a1, a2 in deconcatenations(alpha):
                key = (a1, a2, beta)
                out[key] = out.get(key, 0) + 1
        else:
            for b1, b2 in deconcatenations(beta):
                key = (alpha, b1, b2)
                out[key] = out.get(key, 0) + 1
    return out


def check_coassociativity(p: Sequence[int]) -> bool:
    p = as_permutation(p)
    return _triple(p, True) == _triple(p, False)


def product(x: Element, y: Element) -> Element:
    """Bilinear extension of the shifted shuffle to non-homogeneous Elements."""
    return total(
        scale(shifted_shuffle(Element.word(u), Element.word(v)), c * k)
        for u, c in x.items()
        for v, k in y.items()
    )


def format_tensor(t: TensorElement) -> str:
    return str(t)


__all__ = [
    "TensorElement",
    "antipode",
    "antipode_of",
    "check_antipode_axiom",
    "check_coassociativity",
    "clear_cache",
    "convolution_sums",
    "coproduct",
    "counit",
    "deconcatenations",
    "product",
    "recursive_term_count",
]
