"""Words, permutations and the monotone segments used to build sigma_A.

A word is a plain tuple of positive integers in one-line notation; the
empty tuple is the empty word.  Permutations are words whose letter set is
exactly ``{1, ..., n}``.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

Word = tuple[int, ...]

EMPTY: Word = ()
DEFAULT_MAX_DEGREE = 32


class WordError(ValueError):
    """Raised for malformed words, permutations or index sets."""


def max_degree() -> int:
    """Global letter cap; ``MR_MAX_DEGREE`` overrides the default."""
    raw = os.environ.get("MR_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        value = int(raw)
    except ValueError:
        raise WordError(f"MR_MAX_DEGREE must be an integer, got {raw!r}") from None
    if value < 1:
        raise WordError(f"MR_MAX_DEGREE must be positive, got {value}")
    return value


def as_word(letters: Iterable[int]) -> Word:
    """Validate and freeze a word with pairwise distinct positive letters."""
    w = tuple(letters)
    cap = max_degree()
    for x in w:
        if not isinstance(x, int) or isinstance(x, bool):
            raise WordError(f"letters must be integers, got {x!r}")
        if x < 1:
            raise WordError(f"letters must be >= 1, got {x}")
        if x > cap:
            raise WordError(f"letter {x} exceeds the degree cap {cap}")
    if len(set(w)) != len(w):
        raise WordError(f"repeated letter in {w}")
    return w


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def as_permutation(letters: Iterable[int]) -> Word:
    w = as_word(letters)
    if not is_permutation(w):
        raise WordError(f"{format_word(w)} is not a permutation of [{len(w)}]")
    return w


def standardize(w: Sequence[int]) -> Word:
    """Return the permutation order-isomorphic to ``w``.

    Repeated letters are allowed: equal letters are ranked left to right,
    so ``standardize((1, 1, 3)) == (1, 2, 3)``.
    """
    for x in w:
        if x < 1:
            raise WordError(f"letters must be >= 1, got {x}")
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    result = [0] * len(w)
    for rank, i in enumerate(order, start=1):
        result[i] = rank
    return tuple(result)


def shift(w: Sequence[int], m: int) -> Word:
    """Add ``m`` to every letter.  Repeats pass through untouched."""
    if m < 0:
        raise WordError(f"shift must be nonnegative, got {m}")
    return tuple(x + m for x in w)


def eta(k: int, l: int):
    """The increasing word k(k+1)...l as an Element.

    ``k == l + 1`` gives the empty word and ``k >= l + 2`` the zero element.
    """
    from .algebra import Element

    if k >= l + 2:
        return Element.zero()
    if k == l + 1:
        return Element.one()
    if k < 1:
        # a word containing a nonpositive letter is the zero element
        return Element.zero()
    return Element.word(range(k, l + 1))


def delta(l: int, k: int):
    """The decreasing word l(l-1)...k, with the same conventions as :func:`eta`."""
    from .algebra import Element

    if k >= l + 2:
        return Element.zero()
    if k == l + 1:
        return Element.one()
    if k < 1:
        return Element.zero()
    return Element.word(range(l, k - 1, -1))


def sigma_A(n: int, A: Iterable[int]) -> Word:
    """Decreasing word on ``A`` followed by the increasing word on ``[n] - A``."""
    marked = set(A)
    if n < 1:
        raise WordError(f"degree must be positive, got {n}")
    if not marked:
        raise WordError("A must be nonempty")
    if not marked <= set(range(1, n + 1)):
        raise WordError(f"A={sorted(marked)} is not a subset of [{n}]")
    rest = [x for x in range(1, n + 1) if x not in marked]
    return as_permutation(sorted(marked, reverse=True) + rest)


def sigma_ab(n: int, a: int, b: int) -> Word:
    if not 1 <= b < a <= n:
        raise WordError(f"need 1 <= b < a <= n, got n={n}, a={a}, b={b}")
    return sigma_A(n, {a, b})


def detect_sigma_ab(p: Sequence[int]) -> tuple[int, int, int] | None:
    """Return ``(n, a, b)`` if ``p`` equals ``sigma_ab(n, a, b)``, else None."""
    n = len(p)
    if n < 2 or not is_permutation(p):
        return None
    a, b = p[0], p[1]
    if a <= b:
        return None
    if tuple(p) != sigma_ab(n, a, b):
        return None
    return n, a, b


def format_word(w: Sequence[int]) -> str:
    """Compact digits up to degree 9, comma-separated beyond; ``e`` is empty."""
    if not w:
        return "e"
    if max(w) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("e", "∅", ""):
        return EMPTY
    if "," in text:
        try:
            letters = [int(part) for part in text.split(",")]
        except ValueError:
            raise WordError(f"cannot parse word {text!r}") from None
        return as_word(letters)
    if not text.isdigit():
        raise WordError(f"cannot parse word {text!r}")
    if len(text) >= 10:
        # "103..." is ambiguous at degree >= 10
        raise WordError(f"words of length >= 10 need comma syntax: {text!r}")
    return as_word(int(c) for c in text)
