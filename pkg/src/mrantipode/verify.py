"""Exhaustive verification campaigns and the recursive-vs-closed benchmark.

Every campaign returns a :class:`VerificationReport`.  Failures are data: a
campaign never raises because an identity does not hold.
"""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import permutations
from math import comb, factorial
from typing import Any, Callable, Iterable

from . import closedform, hopf
from .algebra import Element, component, component_last, format_element
from .closedform import CaseId, SigmaSpec
from .expr import evaluate
from .words import format_word, sigma_ab

DEFAULT_EQUIVALENCE_MAX_N = 8
DEFAULT_AXIOM_MAX_N = 5
DEFAULT_LEMMA_MAX_N = 9
LEMMA31_CAP = 8
LEMMA36_CAP = 7
LEMMA37_CAP = 8
MAX_DIFF_TERMS = 10


@dataclass
class VerificationReport:
    campaign: str
    range: dict[str, Any]
    checked: int = 0
    expected: int | None = None
    failures: list[dict[str, Any]] = field(default_factory=list)
    observations: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_record(self, deterministic: bool = False) -> dict[str, Any]:
        rec = asdict(self)
        rec["passed"] = self.passed
        if deterministic:
            rec.pop("wall_time")
        return rec

    def to_text(self, deterministic: bool = False) -> str:
        bounds = ", ".join(f"{k}={v}" for k, v in self.range.items())
        lines = [f"campaign: {self.campaign}", f"range: {bounds}"]
        count = f"checked: {self.checked}"
        if self.expected is not None:
            count += f" (expected {self.expected})"
        lines.append(count)
        for key, value in self.observations.items():
            lines.append(f"{key}: {value}")
        lines.append(f"failures: {len(self.failures)}")
        for fail in self.failures:
            lines.append("  - " + json.dumps(fail, ensure_ascii=False, sort_keys=True))
        if not deterministic:
            lines.append(f"wall_time: {self.wall_time:.3f}s")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def diff_terms(expected: Element, actual: Element, limit: int = MAX_DIFF_TERMS) -> list[str]:
    """The first ``limit`` words whose coefficients differ, as ``word: exp -> act``."""
    words = sorted(expected.support() | actual.support())
    out = []
    for wd in words:
        e, a = expected.coefficient(wd), actual.coefficient(wd)
        if e != a:
            out.append(f"{format_word(wd)}: {e} -> {a}")
            if len(out) == limit:
                break
    return out


def _mismatch(instance: Any, expected: Element, actual: Element) -> dict[str, Any]:
    return {
        "instance": instance,
        "expected": format_element(expected),
        "actual": format_element(actual),
        "diff": diff_terms(expected, actual),
    }


def _map(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def sigma_specs(max_n: int, min_n: int = 2) -> list[SigmaSpec]:
    return [SigmaSpec(n, a, b) for n in range(min_n, max_n + 1) for a in range(2, n + 1) for b in range(1, a)]


# -- oracle equivalence -----------------------------------------------------------


def _equivalence_one(spec: SigmaSpec) -> dict | None:
    expected = hopf.antipode(sigma_ab(spec.n, spec.a, spec.b))
    actual = closedform.theorem_antipode(spec)
    if expected == actual:
        return None
    return _mismatch([spec.n, spec.a, spec.b], expected, actual)


def sweep_oracle_equivalence(max_n: int = DEFAULT_EQUIVALENCE_MAX_N, jobs: int = 1) -> VerificationReport:
    if not 2 <= max_n <= 12:
        raise ValueError(f"max_n must lie in [2, 12], got {max_n}")
    start = time.perf_counter()
    specs = sigma_specs(max_n)
    results = _map(_equivalence_one, specs, jobs)
    report = VerificationReport(
        "equivalence",
        {"min_n": 2, "max_n": max_n},
        checked=len(specs),
        expected=sum(comb(n, 2) for n in range(2, max_n + 1)),
        failures=[r for r in results if r is not None],
    )
    report.wall_time = time.perf_counter() - start
    return report


# -- printed fixtures --------------------------------------------------------------------

# S(sigma_{A,n})_j^* for n in {2, 3, 4}, j = 1..4, exactly as printed.
TABLE2: dict[tuple[frozenset[int], int], tuple[str, str, str, str]] = {
    (frozenset({1, 2}), 2): ("0", "1", "0", "0"),
    (frozenset({1, 2}), 3): ("23", "-(1⧢3)", "0", "0"),
    (frozenset({1, 3}), 3): ("23", "-(1⧢3+31)", "21", "0"),
    (frozenset({2, 3}), 3): ("0", "0", "-12", "0"),
    (frozenset({1, 2}), 4): ("-(2⧢4)3", "1⧢43", "0", "0"),
    (frozenset({1, 3}), 4): ("-(2⧢4)3", "1⧢43+31⧢4", "-(21⧢4)", "0"),
    (frozenset({1, 4}), 4): ("-(2⧢4)3", "1⧢43+31⧢4", "-(21⧢4+412)", "312"),
    (frozenset({2, 3}), 4): ("324", "-(1⧢34)", "(1⧢2-21)⧢4", "0"),
    (frozenset({2, 4}), 4): ("324", "-(1⧢34)", "(1⧢2-21)⧢4-421", "321"),
    (frozenset({3, 4}), 4): ("423", "-(1⧢34+431)", "(1⧢2-21)⧢4+1⧢42", "-(1⧢32-321)"),
}


def check_table2() -> VerificationReport:
    """Compare each printed cell with the closed formula and the recursion."""
    start = time.perf_counter()
    report = VerificationReport("table2", {"n": [2, 3, 4], "j": [1, 2, 3, 4]}, expected=4 * len(TABLE2))
    for (A, n), cells in TABLE2.items():
        a, b = max(A), min(A)
        spec = SigmaSpec(n, a, b)
        oracle = hopf.antipode(sigma_ab(n, a, b))
        closed = closedform.theorem_antipode(spec)
        for j, text in enumerate(cells, start=1):
            report.checked += 1
            expected = evaluate(text)
            instance = {"A": sorted(A), "n": n, "j": j, "cell": text}
            if j <= n:
                actual = closedform.theorem_component(spec, j)
            else:
                actual = component(closed, j)
            if actual != expected:
                report.failures.append(_mismatch(instance, expected, actual))
            via_oracle = component(oracle, j)
            if via_oracle != expected:
                report.failures.append(_mismatch({**instance, "source": "recursive"}, expected, via_oracle))
    report.wall_time = time.perf_counter() - start
    return report


# -- Hopf axioms ----------------------------------------------------------------------


def _axioms_one(p: tuple[int, ...]) -> dict | None:
    left, right = hopf.convolution_sums(p)
    coassoc = hopf.check_coassociativity(p)
    if not left and not right and coassoc:
        return None
    return {
        "instance": format_word(p),
        "left_convolution": format_element(left),
        "right_convolution": format_element(right),
        "coassociative": coassoc,
    }


def sweep_axioms(max_n: int = DEFAULT_AXIOM_MAX_N, jobs: int = 1) -> VerificationReport:
    if not 1 <= max_n <= 6:
        raise ValueError(f"max_n must lie in [1, 6], got {max_n}")
    start = time.perf_counter()
    perms = [p for n in range(1, max_n + 1) for p in permutations(range(1, n + 1))]
    results = _map(_axioms_one, perms, jobs)
    report = VerificationReport(
        "axioms",
        {"min_n": 1, "max_n": max_n},
        checked=len(perms),
        expected=sum(factorial(n) for n in range(1, max_n + 1)),
        failures=[r for r in results if r is not None],
    )
    report.observations["S(1)"] = format_element(hopf.antipode((1,)))
    # S^2 = id is recorded, not asserted: the algebra is neither commutative nor cocommutative
    report.observations["involutive_count"] = sum(
        1 for p in perms if hopf.antipode_of(hopf.antipode(p)) == Element.word(p)
    )
    report.wall_time = time.perf_counter() - start
    return report


# -- lemma suite -------------------------------------------------------------------------


def monotone_antipode_cases(max_n: int) -> Iterable[tuple[str, int, Element, Element]]:
    """Antipodes of 12...n and n...21 against their signed reversals."""
    from .words import delta, eta

    for n in range(1, max_n + 1):
        up = tuple(range(1, n + 1))
        sign = (-1) ** n
        yield "eta", n, delta(n, 1) * sign, hopf.antipode(up)
        yield "delta", n, eta(1, n) * sign, hopf.antipode(up[::-1])


def increasing_suffix_cases(max_n: int) -> Iterable[tuple[tuple[int, ...], int]]:
    """Pairs (sigma, i) with sigma_i ... sigma_n = i (i+1) ... n and 2 <= i <= n."""
    for n in range(2, max_n + 1):
        for i in range(2, n + 1):
            tail = tuple(range(i, n + 1))
            for head in permutations(range(1, i)):
                yield head + tail, i


def sweep_lemmas(
    max_n: int = DEFAULT_LEMMA_MAX_N,
    lemma31_cap: int = LEMMA31_CAP,
    lemma36_cap: int = LEMMA36_CAP,
    lemma37_cap: int = LEMMA37_CAP,
) -> VerificationReport:
    if not 1 <= max_n <= 9:
        raise ValueError(f"max_n must lie in [1, 9], got {max_n}")
    start = time.perf_counter()
    n31, n36, n37 = min(max_n, lemma31_cap), min(max_n, lemma36_cap), min(max_n, lemma37_cap)
    report = VerificationReport(
        "lemmas",
        {"identities_max_n": max_n, "monotone_max_n": n31, "zero_component_max_n": n36, "special_case_max_n": n37},
    )
    counts = {}

    c = 0
    for kind, n, expected, actual in monotone_antipode_cases(n31):
        c += 1
        if expected != actual:
            report.failures.append(_mismatch({"lemma": "monotone", "word": kind, "n": n}, expected, actual))
    counts["monotone"] = c

    for kind in closedform.LEMMA_KINDS:
        c = 0
        for params in closedform.lemma_parameters(kind, max_n):
            c += 1
            lhs, rhs = closedform.lemma_identity(kind, *params)
            if lhs != rhs:
                report.failures.append(_mismatch({"lemma": kind, "params": list(params)}, rhs, lhs))
        counts[kind] = c

    c = 0
    for sigma, i in increasing_suffix_cases(n36):
        s = hopf.antipode(sigma)
        for j in range(i, len(sigma) + 1):
            c += 1
            part = component_last(s, j)
            if part:
                report.failures.append(
                    _mismatch({"lemma": "zero_component", "sigma": format_word(sigma), "i": i, "j": j}, Element.zero(), part)
                )
    counts["zero_component"] = c

    c = 0
    for n in range(4, n37 + 1):
        spec = SigmaSpec(n, n, n - 1)
        for j in range(1, n + 1):
            c += 1
            expected = closedform.theorem_component(spec, j)
            actual = closedform.lemma7_component(n, j)
            if expected != actual:
                report.failures.append(_mismatch({"lemma": "special_case", "n": n, "j": j}, expected, actual))
    counts["special_case"] = c

    report.observations["instances"] = counts
    report.checked = sum(counts.values())
    report.expected = report.checked
    report.wall_time = time.perf_counter() - start
    return report


# -- cancellation audit -------------------------------------------------------------------

ALTERNATING_CASES = (CaseId.H, CaseId.I, CaseId.J, CaseId.K)


def documented_overlap_word(n: int, j: int) -> tuple[int, ...]:
    """The word δ_{n,j+1}(j-1)η_{1,j-2} shared by the two case-(k) sets."""
    return tuple(range(n, j, -1)) + (j - 1,) + tuple(range(1, j - 1))


def _is_documented_pair(labels: list[str]) -> bool:
    return labels[0].startswith("1⧢") and labels[1].startswith("(j+1)(j-1)")


def audit_component(spec: SigmaSpec, j: int) -> dict[str, Any]:
    """Overlap structure of the signed shuffle sets behind one component.

    Returns the case, every overlapping pair of sets with the sign relation,
    and which opposite-sign overlaps fall outside the documented exceptions.
    """
    case, parts = closedform.component_parts(spec, j)
    exceptional = case in ALTERNATING_CASES and j in (3, 4)
    overlaps = []
    violations = []
    for x in range(len(parts)):
        for y in range(x + 1, len(parts)):
            shared = parts[x].terms.support() & parts[y].terms.support()
            if not shared:
                continue
            opposite = parts[x].sign != parts[y].sign
            entry = {"pair": [parts[x].label, parts[y].label], "size": len(shared), "opposite": opposite}
            overlaps.append(entry)
            if case is CaseId.K and _is_documented_pair(entry["pair"]):
                word = documented_overlap_word(spec.n, j)
                if shared != {word} or not opposite:
                    violations.append({**entry, "reason": "case (k) overlap differs from the documented word"})
            elif opposite and not exceptional:
                violations.append({**entry, "reason": "opposite-sign overlap outside the documented exceptions"})
    if case is CaseId.K:
        labels = [p.label for p in parts]
        if not any(l.startswith("(j+1)(j-1)") for l in labels):
            violations.append({"reason": "case (k) is missing its second shuffle set"})
    return {"case": case.value, "overlaps": overlaps, "violations": violations, "exceptional": exceptional}


def audit_cancellation(max_n: int = DEFAULT_EQUIVALENCE_MAX_N) -> VerificationReport:
    """Cancellation-freeness of the closed formulas.

    A failure is an opposite-sign overlap between two shuffle sets of one
    formula outside the documented exceptions (cases h-k at j in {3, 4}), or
    a case-(k) overlap that is not exactly the documented word.  Same-sign
    overlaps and coefficients of absolute value above 1 are not
    cancellations; they are counted under ``observations``.
    """
    if not 2 <= max_n <= 10:
        raise ValueError(f"max_n must lie in [2, 10], got {max_n}")
    start = time.perf_counter()
    specs = sigma_specs(max_n)
    report = VerificationReport("cancellation", {"min_n": 2, "max_n": max_n}, expected=len(specs))
    not_unit = []
    same_sign = 0
    disjoint_violations = []
    documented_k = 0
    for spec in specs:
        report.checked += 1
        total = closedform.theorem_antipode(spec)
        big = sorted((wd, c) for wd, c in total.items() if abs(c) != 1)
        if big:
            not_unit.append({"spec": [spec.n, spec.a, spec.b], "max_abs_coeff": max(abs(c) for _, c in big)})
        for j in range(1, spec.n + 1):
            audit = audit_component(spec, j)
            for ov in audit["overlaps"]:
                if not ov["opposite"]:
                    same_sign += 1
                documented = audit["case"] == "k" and _is_documented_pair(ov["pair"])
                if documented:
                    documented_k += 1
                elif not audit["exceptional"]:
                    disjoint_violations.append({"spec": [spec.n, spec.a, spec.b], "j": j, **ov})
            for v in audit["violations"]:
                report.failures.append({"spec": [spec.n, spec.a, spec.b], "j": j, "case": audit["case"], **v})
    report.observations["specs_with_coefficient_beyond_1"] = len(not_unit)
    report.observations["first_specs_with_coefficient_beyond_1"] = not_unit[:MAX_DIFF_TERMS]
    report.observations["same_sign_overlaps"] = same_sign
    report.observations["documented_case_k_overlaps"] = documented_k
    report.observations["overlaps_outside_exceptions"] = len(disjoint_violations)
    report.observations["first_overlaps_outside_exceptions"] = disjoint_violations[:MAX_DIFF_TERMS]
    report.wall_time = time.perf_counter() - start
    return report


def coefficient_violations(max_n: int) -> list[tuple[SigmaSpec, int]]:
    """Specs whose closed antipode has a coefficient outside {-1, +1}."""
    out = []
    for spec in sigma_specs(max_n):
        worst = max(abs(c) for _, c in closedform.theorem_antipode(spec).items())
        if worst != 1:
            out.append((spec, worst))
    return out


# -- benchmark ------------------------------------------------------------------------


@dataclass
class BenchRow:
    n: int
    instances: int
    recursive_seconds: float | None
    recursive_terms: int | None
    closed_seconds: float | None
    closed_terms: int | None
    final_terms: int


def benchmark(max_n_recursive: int = 8, max_n_closed: int = 10) -> list[BenchRow]:
    """Time the recursion (cold cache) and the closed formula on every sigma_{a,b}.

    Term counts are summed over all specs of each degree: signed terms
    generated before collection for either route, and distinct basis words
    in the final antipode.
    """
    if not 2 <= max_n_recursive <= 12 or not 2 <= max_n_closed <= 12:
        raise ValueError("benchmark caps must lie in [2, 12]")
    rows = []
    for n in range(2, max(max_n_recursive, max_n_closed) + 1):
        specs = sigma_specs(n, min_n=n)
        rec_t = rec_terms = clo_t = clo_terms = None
        final = 0
        if n <= max_n_recursive:
            rec_t, rec_terms = 0.0, 0
            for spec in specs:
                hopf.clear_cache()
                p = sigma_ab(spec.n, spec.a, spec.b)
                t0 = time.perf_counter()
                s = hopf.antipode(p)
                rec_t += time.perf_counter() - t0
                rec_terms += hopf.recursive_term_count(p)
                final += len(s)
        if n <= max_n_closed:
            clo_t, clo_terms = 0.0, 0
            closed_final = 0
            for spec in specs:
                t0 = time.perf_counter()
                s = closedform.theorem_antipode(spec)
                clo_t += time.perf_counter() - t0
                clo_terms += closedform.closed_term_count(spec)
                closed_final += len(s)
            final = closed_final
        rows.append(BenchRow(n, len(specs), rec_t, rec_terms, clo_t, clo_terms, final))
    hopf.clear_cache()
    return rows


def format_bench(rows: list[BenchRow], deterministic: bool = False) -> str:
    def t(x):
        return "-" if x is None else ("*" if deterministic else f"{x:.4f}")

    def c(x):
        return "-" if x is None else str(x)

    header = f"{'n':>3} {'specs':>5} {'rec_s':>9} {'rec_terms':>10} {'closed_s':>9} {'closed_terms':>12} {'final_terms':>11}"
    lines = [header]
    for r in rows:
        lines.append(
            f"{r.n:>3} {r.instances:>5} {t(r.recursive_seconds):>9} {c(r.recursive_terms):>10} "
            f"{t(r.closed_seconds):>9} {c(r.closed_terms):>12} {r.final_terms:>11}"
        )
    return "\n".join(lines)


CAMPAIGNS: dict[str, Callable[..., VerificationReport]] = {
    "equivalence": sweep_oracle_equivalence,
    "table2": check_table2,
    "axioms": sweep_axioms,
    "lemmas": sweep_lemmas,
    "cancellation": audit_cancellation,
}


# -- mutation sensitivity -----------------------------------------------------------


@contextmanager
def flipped_part(case: CaseId, index: int | None):
    """Temporarily negate one shuffle set of ``case`` (all of them if index is None).

    Patches :func:`closedform.case_parts` for the duration of the block; not
    safe to use while other threads evaluate closed forms.
    """
    original = closedform.case_parts

    def mutated(c, n, a, b, j):
        parts = original(c, n, a, b, j)
        if c is not case:
            return parts
        return [
            closedform.Part(-p.sign, p.terms, p.label) if index is None or i == index else p
            for i, p in enumerate(parts)
        ]

    closedform.case_parts = mutated
    try:
        yield
    finally:
        closedform.case_parts = original


def mutation_targets(max_n: int) -> list[tuple[CaseId, int | None]]:
    """Every (case, part index) that occurs with a nonzero set at degree <= max_n."""
    seen: set[tuple[CaseId, int]] = set()
    for spec in sigma_specs(max_n):
        for j in range(1, spec.n + 1):
            case, parts = closedform.component_parts(spec, j)
            for i, p in enumerate(parts):
                if p.terms:
                    seen.add((case, i))
    cases = sorted({c for c, _ in seen}, key=lambda c: c.value)
    targets: list[tuple[CaseId, int | None]] = [(c, None) for c in cases]
    targets += sorted(seen, key=lambda t: (t[0].value, t[1]))
    return targets


def mutation_sensitivity(max_n: int = 6) -> VerificationReport:
    """Flip one sign at a time and require the equivalence sweep to notice."""
    start = time.perf_counter()
    targets = mutation_targets(max_n)
    report = VerificationReport("mutation", {"max_n": max_n}, expected=len(targets))
    for case, index in targets:
        report.checked += 1
        with flipped_part(case, index):
            caught = not sweep_oracle_equivalence(max_n).passed
        if not caught:
            report.failures.append({"case": case.value, "part": "all" if index is None else index, "reason": "not caught"})
    report.observations["cases_covered"] = sorted({c.value for c, _ in targets})
    report.wall_time = time.perf_counter() - start
    return report


CAMPAIGNS["mutation"] = mutation_sensitivity
