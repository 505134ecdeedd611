"""Closed formulas for the antipode of sigma_{a,b} = a b 1 ... n.

Each case formula is assembled from :func:`eta`, :func:`delta`, shuffles and
concatenations and kept as a list of signed *parts*.  A part is one shuffle
set (every coefficient +1) together with the sign it enters with, which is
what the cancellation audit inspects.  Summing the parts gives the component
``S(sigma)_j^*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .algebra import Element, concat, scale, shuffle, total
from .words import WordError, delta, eta


class CaseId(str, Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"
    E = "e"
    F = "f"
    G = "g"
    H = "h"
    I = "i"
    J = "j"
    K = "k"
    L = "l"
    M = "m"
    N = "n"
    L7A = "L7a"
    L7B = "L7b"
    L7C = "L7c"
    L7D = "L7d"
    L7E = "L7e"
    HPRIME = "Hprime"

    def __str__(self) -> str:
        return self.value


THEOREM_CASES = tuple(CaseId(c) for c in "abcdefghijklmn")


@dataclass(frozen=True)
class SigmaSpec:
    n: int
    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.b < self.a <= self.n:
            raise WordError(f"need 1 <= b < a <= n, got n={self.n}, a={self.a}, b={self.b}")


@dataclass(frozen=True)
class Part:
    sign: int
    terms: Element
    label: str

    def value(self) -> Element:
        return scale(self.terms, self.sign)


def w(*letters: int) -> Element:
    """Single word; a nonpositive letter makes it the zero element."""
    if any(x < 1 for x in letters):
        return Element.zero()
    return Element.word(letters)


def sgn(exponent: int) -> int:
    return (-1) ** exponent


def _check_j(spec: SigmaSpec, j: int) -> None:
    if not 1 <= j <= spec.n:
        raise WordError(f"j={j} outside [1, {spec.n}]")


def classify(spec: SigmaSpec, j: int) -> CaseId:
    """Which theorem item governs ``S(sigma_{a,b})_j^*``."""
    _check_j(spec, j)
    a, b = spec.a, spec.b
    if j == 1:
        if b == 1:
            return CaseId.A
        if b == 2:
            return CaseId.B
        return CaseId.C
    if j == 2:
        if b == 1:
            return CaseId.D if a == 2 else CaseId.E
        if b == 2:
            return CaseId.F
        return CaseId.G
    if j <= b - 1:
        return CaseId.H
    if j == b:
        return CaseId.I
    if j == b + 1:
        return CaseId.J if a == b + 1 else CaseId.K
    if j <= a - 1:
        return CaseId.L
    if j == a:
        return CaseId.M
    return CaseId.N


# -- building blocks ----------------------------------------------------------


def _alternating_head(j: int, tail: Element, sign: int) -> list[Part]:
    """(1 ⧢ (j-1)η_{2,j-2} - δ_{j-1,j-2}η_{1,j-3}) ⧢ tail, split into its two sets."""
    return [
        Part(sign, shuffle(w(1), concat(w(j - 1), eta(2, j - 2)), tail), "1⧢(j-1)η[2,j-2]⧢δ[n,j+1]"),
        Part(-sign, shuffle(concat(delta(j - 1, j - 2), eta(1, j - 3)), tail), "δ[j-1,j-2]η[1,j-3]⧢δ[n,j+1]"),
    ]


def case_parts(case: CaseId, n: int, a: int, b: int, j: int) -> list[Part]:
    """The signed shuffle sets making up the formula for ``case``."""
    if case is CaseId.A:
        return [Part(sgn(n + 1), concat(shuffle(w(2), delta(n, 4)), w(3)), "(2⧢δ[n,4])3")]
    if case is CaseId.B:
        return [Part(sgn(n), concat(shuffle(w(3, 2), delta(n, 5)), w(4)), "(32⧢δ[n,5])4")]
    if case is CaseId.C:
        parts = [
            Part(
                sgn(n + b + 1),
                concat(shuffle(concat(w(b + 1), eta(2, b - 1)), delta(n, b + 2)), w(b)),
                "((b+1)η[2,b-1]⧢δ[n,b+2])b",
            )
        ]
        for k in range(4, b + 1):
            parts.append(
                Part(sgn(n + k), shuffle(concat(w(k), eta(2, k - 1)), delta(n, k + 1)), f"kη[2,k-1]⧢δ[n,k+1] k={k}")
            )
        return parts
    if case is CaseId.D:
        return [Part(sgn(n), shuffle(w(1), delta(n, 3)), "1⧢δ[n,3]")]
    if case is CaseId.E:
        return [
            Part(sgn(n), shuffle(w(1), delta(n, 3)), "1⧢δ[n,3]"),
            Part(sgn(n), shuffle(w(3, 1), delta(n, 4)), "31⧢δ[n,4]"),
        ]
    if case is CaseId.F:
        return [Part(sgn(n + 1), shuffle(w(1), concat(shuffle(w(3), delta(n, 5)), w(4))), "1⧢(3⧢δ[n,5])4")]
    if case is CaseId.G:
        return [
            Part(sgn(n + 1), shuffle(w(1), concat(shuffle(w(3), delta(n, 5)), w(4))), "1⧢(3⧢δ[n,5])4"),
            Part(sgn(n + 1), shuffle(w(4, 3, 1), delta(n, 5)), "431⧢δ[n,5]"),
        ]
    if case in (CaseId.H, CaseId.I, CaseId.J, CaseId.K):
        s = sgn(n + j + 1)
        parts = _alternating_head(j, delta(n, j + 1), s)
        if case in (CaseId.H, CaseId.I):
            parts.append(
                Part(s, shuffle(w(1), concat(w(j + 1), eta(2, j - 1)), delta(n, j + 2)), "1⧢(j+1)η[2,j-1]⧢δ[n,j+2]")
            )
        if case is CaseId.H:
            parts.append(
                Part(s, shuffle(concat(delta(j + 2, j + 1), eta(1, j - 1)), delta(n, j + 3)), "δ[j+2,j+1]η[1,j-1]⧢δ[n,j+3]")
            )
        if case is CaseId.K:
            parts.append(
                Part(-s, shuffle(concat(w(j + 1, j - 1), eta(1, j - 2)), delta(n, j + 2)), "(j+1)(j-1)η[1,j-2]⧢δ[n,j+2]")
            )
        return parts
    if case in (CaseId.L, CaseId.M):
        s = sgn(n + j)
        parts = [
            Part(
                s,
                shuffle(concat(w(j - 1, b), eta(1, b - 1), eta(b + 1, j - 2)), delta(n, j + 1)),
                "(j-1)bη[1,b-1]η[b+1,j-2]⧢δ[n,j+1]",
            )
        ]
        if case is CaseId.L:
            parts.append(
                Part(
                    s,
                    shuffle(concat(w(j + 1, b), eta(1, b - 1), eta(b + 1, j - 1)), delta(n, j + 2)),
                    "(j+1)bη[1,b-1]η[b+1,j-1]⧢δ[n,j+2]",
                )
            )
        return parts
    if case is CaseId.N:
        return []
    raise ValueError(f"{case} is not a theorem case")


def component_parts(spec: SigmaSpec, j: int) -> tuple[CaseId, list[Part]]:
    case = classify(spec, j)
    return case, case_parts(case, spec.n, spec.a, spec.b, j)


def theorem_component(spec: SigmaSpec, j: int) -> Element:
    """``S(sigma_{a,b})_j^*`` from the closed formula."""
    _, parts = component_parts(spec, j)
    return total(p.value() for p in parts)


def theorem_antipode(spec: SigmaSpec) -> Element:
    return total(concat(theorem_component(spec, j), w(j)) for j in range(1, spec.n + 1))


def closed_term_count(spec: SigmaSpec) -> int:
    """Terms written out by the closed formula before any collection."""
    return sum(len(p.terms) for j in range(1, spec.n + 1) for p in component_parts(spec, j)[1])


# -- cancellation-free variant of case (h) at j in {3, 4} ------------------------


def hprime_parts(spec: SigmaSpec, j: int) -> list[Part]:
    n = spec.n
    if j not in (3, 4) or not j <= spec.b - 1:
        raise WordError(f"the (h') variant needs j in {{3, 4}} and j <= b-1, got j={j}, b={spec.b}")
    if j == 3:
        s = sgn(n)
        return [
            Part(s, shuffle(w(1, 2), delta(n, 4)), "12⧢δ[n,4]"),
            Part(s, shuffle(w(1), w(4, 2), delta(n, 5)), "1⧢42⧢δ[n,5]"),
            Part(s, shuffle(w(5, 4, 1, 2), delta(n, 6)), "5412⧢δ[n,6]"),
        ]
    s = sgn(n + 1)
    return [
        Part(s, shuffle(w(1, 3, 2), delta(n, 5)), "132⧢δ[n,5]"),
        Part(s, shuffle(w(3, 1, 2), delta(n, 5)), "312⧢δ[n,5]"),
        Part(s, shuffle(w(1), w(5, 2, 3), delta(n, 6)), "1⧢523⧢δ[n,6]"),
        Part(s, shuffle(w(6, 5, 1, 2, 3), delta(n, 7)), "65123⧢δ[n,7]"),
    ]


def hprime_component(spec: SigmaSpec, j: int) -> Element:
    return total(p.value() for p in hprime_parts(spec, j))


# -- the special case A = {n-1, n} ------------------------------------------------


def lemma7_case(n: int, j: int) -> CaseId:
    if n < 4:
        raise WordError(f"the A={{n-1,n}} formulas need n >= 4, got {n}")
    if not 1 <= j <= n:
        raise WordError(f"j={j} outside [1, {n}]")
    if j == 1:
        return CaseId.L7A
    if j == 2:
        return CaseId.L7B
    if j <= n - 2:
        return CaseId.L7C
    if j == n - 1:
        return CaseId.L7D
    return CaseId.L7E


def lemma7_component(n: int, j: int) -> Element:
    case = lemma7_case(n, j)
    if case is CaseId.L7A:
        head = concat(w(n), eta(2, n - 1))
        return head + total(
            scale(shuffle(concat(w(k), eta(2, k - 1)), delta(n, k + 1)), sgn(n + k)) for k in range(4, n)
        )
    if case is CaseId.L7B:
        return scale(
            shuffle(w(1), concat(shuffle(w(3), delta(n, 5)), w(4))) + shuffle(w(4, 3, 1), delta(n, 5)),
            sgn(n + 1),
        )
    if case is CaseId.L7C:
        return total(p.value() for p in case_parts(CaseId.H, n, n, n - 1, j))
    if case is CaseId.L7D:
        alt = shuffle(w(1), concat(w(n - 2), eta(2, n - 3))) - concat(delta(n - 2, n - 3), eta(1, n - 4))
        return shuffle(w(1), concat(w(n), eta(2, n - 2))) + shuffle(alt, w(n))
    return concat(delta(n - 1, n - 2), eta(1, n - 3)) - shuffle(w(1), concat(w(n - 1), eta(2, n - 2)))


# -- the two former conjectures -----------------------------------------------------


def conjecture1_rhs(n: int, a: int) -> Element:
    """Closed antipode of sigma_{{a}} = a 1 2 ... n (a removed)."""
    if not 1 < a <= n:
        raise WordError(f"need 1 < a <= n, got n={n}, a={a}")
    terms = [
        scale(concat(shuffle(w(2), delta(n, 4)), w(3, 1)), sgn(n - 1)),
        scale(concat(shuffle(concat(w(a - 1), eta(1, a - 2)), delta(n, a + 1)), w(a)), sgn(n + a)),
    ]
    for j in range(2, a):
        inner = concat(shuffle(concat(w(j - 1), eta(1, j - 2)), delta(n, j + 1)), w(j)) + concat(
            shuffle(concat(w(j + 1), eta(1, j - 1)), delta(n, j + 2)), w(j)
        )
        terms.append(scale(inner, sgn(n + j)))
    return total(terms)


def conjecture2_rhs(n: int, a: int) -> Element:
    """Closed antipode of sigma_{{a,2}} = a 2 1 3 ... n."""
    if not 2 < a <= n:
        raise WordError(f"need 2 < a <= n, got n={n}, a={a}")
    terms = [
        scale(
            concat(shuffle(w(3, 2), delta(n, 5)), w(4, 1)) + concat(shuffle(w(1, 2), delta(n, 4)), w(3)),
            sgn(n),
        ),
        scale(concat(shuffle(w(1), concat(shuffle(w(3), delta(n, 5)), w(4))), w(2)), sgn(n - 1)),
    ]
    for j in range(3, a):
        inner = concat(shuffle(concat(w(j + 1, 2, 1), eta(3, j - 1)), delta(n, j + 2)), w(j)) - concat(
            shuffle(concat(w(j, 2, 1), eta(3, j - 1)), delta(n, j + 2)), w(j + 1)
        )
        terms.append(scale(inner, sgn(n + j)))
    return total(terms)


# -- alternating shuffle identities ---------------------------------------------------

LEMMA_KINDS = ("L32", "L33", "L34")


def lemma_identity(kind: str, *params: int) -> tuple[Element, Element]:
    """Both sides of one of the alternating shuffle identities.

    ``L32``: params ``(k, n)`` with ``0 <= k <= n - 1``.
    ``L33``: params ``(j, k, n)`` with ``1 <= j <= k <= n - 1``.
    ``L34``: params ``(k, n)`` with ``2 <= k <= n - 1``.
    """
    if kind == "L32":
        k, n = params
        if not (0 <= k and 1 <= n and k <= n - 1):
            raise WordError(f"L32 needs 0 <= k <= n-1, got k={k}, n={n}")
        lhs = total(scale(shuffle(delta(i, k + 1), eta(i + 1, n)), sgn(i)) for i in range(k, n))
        rhs = scale(delta(n, k + 1), sgn(n + 1))
        return lhs, rhs
    if kind == "L33":
        j, k, n = params
        if not 1 <= j <= k <= n - 1:
            raise WordError(f"L33 needs 1 <= j <= k <= n-1, got j={j}, k={k}, n={n}")
        dkj = delta(k, j)
        lhs = scale(concat(dkj, eta(k + 1, n)), sgn(k)) + total(
            scale(shuffle(concat(shuffle(dkj, delta(i, k + 2)), w(k + 1)), eta(i + 1, n)), sgn(i))
            for i in range(k + 1, n)
        )
        rhs = scale(concat(shuffle(dkj, delta(n, k + 2)), w(k + 1)), sgn(n + 1))
        return lhs, rhs
    if kind == "L34":
        k, n = params
        if not 2 <= k <= n - 1:
            raise WordError(f"L34 needs 2 <= k <= n-1, got k={k}, n={n}")
        head = concat(w(k + 1), eta(2, k - 1))
        lhs = scale(concat(w(k + 1), eta(2, k), eta(k + 2, n)), sgn(k)) + total(
            scale(shuffle(concat(shuffle(head, delta(i, k + 2)), w(k)), eta(i + 1, n)), sgn(i))
            for i in range(k + 1, n)
        )
        rhs = scale(concat(shuffle(head, delta(n, k + 2)), w(k)), sgn(n + 1))
        return lhs, rhs
    raise WordError(f"unknown identity {kind!r}; expected one of {LEMMA_KINDS}")


def lemma_parameters(kind: str, max_n: int):
    """Every admissible parameter tuple for ``kind`` with n <= max_n."""
    for n in range(1, max_n + 1):
        if kind == "L32":
            for k in range(0, n):
                yield (k, n)
        elif kind == "L33":
            for k in range(1, n):
                for j in range(1, k + 1):
                    yield (j, k, n)
        elif kind == "L34":
            for k in range(2, n):
                yield (k, n)
        else:
            raise WordError(f"unknown identity {kind!r}")
