"""Command-line entry point: ``mr-antipode <verb> ...``.

Exit status: 0 on success, 1 when a verification finds failures, 2 on usage
or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import closedform, hopf, verify
from .algebra import format_element, to_records
from .closedform import SigmaSpec
from .words import WordError, detect_sigma_ab, format_word, is_permutation, max_degree, parse_word, sigma_ab

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str, record) -> None:
    if args.format == "records":
        print(json.dumps(record, ensure_ascii=False, sort_keys=True))
    else:
        print(text)


def _spec(n: int, a: int, b: int) -> SigmaSpec:
    try:
        return SigmaSpec(n, a, b)
    except WordError as exc:
        raise UsageError(str(exc)) from None


def cmd_antipode(args) -> int:
    try:
        p = parse_word(args.perm)
    except WordError as exc:
        raise UsageError(str(exc)) from None
    if not is_permutation(p):
        raise UsageError(f"{args.perm} is not a permutation")
    if args.method == "closed":
        shape = detect_sigma_ab(p)
        if shape is None:
            raise UsageError(f"{format_word(p)} is not of the form a b 1...n; use --method recursive")
        result = closedform.theorem_antipode(SigmaSpec(*shape))
    else:
        result = hopf.antipode(p)
    _emit(args, format_element(result), {"perm": list(p), "method": args.method, "antipode": to_records(result)})
    return EXIT_OK


def cmd_sigma(args) -> int:
    _spec(args.n, args.a, args.b)
    p = sigma_ab(args.n, args.a, args.b)
    _emit(args, format_word(p), {"n": args.n, "a": args.a, "b": args.b, "sigma": list(p)})
    return EXIT_OK


def cmd_component(args) -> int:
    spec = _spec(args.n, args.a, args.b)
    if not 1 <= args.j <= args.n:
        raise UsageError(f"j must lie in [1, {args.n}], got {args.j}")
    case = closedform.classify(spec, args.j)
    value = closedform.theorem_component(spec, args.j)
    _emit(
        args,
        f"case {case.value}\n{format_element(value)}",
        {"n": args.n, "a": args.a, "b": args.b, "j": args.j, "case": case.value, "component": to_records(value)},
    )
    return EXIT_OK


def _campaign_reports(args) -> list[verify.VerificationReport]:
    names = list(verify.CAMPAIGNS) if args.campaign == "all" else [args.campaign]
    reports = []
    for name in names:
        fn = verify.CAMPAIGNS[name]
        kwargs = {}
        if args.max_n is not None and name != "table2":
            kwargs["max_n"] = args.max_n
        if args.jobs > 1 and name in ("equivalence", "axioms"):
            kwargs["jobs"] = args.jobs
        try:
            reports.append(fn(**kwargs))
        except ValueError as exc:
            raise UsageError(f"{name}: {exc}") from None
    return reports


def cmd_verify(args) -> int:
    reports = _campaign_reports(args)
    if args.format == "records":
        print(json.dumps([r.to_record(args.deterministic) for r in reports], ensure_ascii=False, sort_keys=True))
    else:
        print("\n\n".join(r.to_text(args.deterministic) for r in reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_bench(args) -> int:
    try:
        rows = verify.benchmark(args.max_n_recursive, args.max_n_closed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    record = [asdict(r) for r in rows]
    if args.deterministic:
        for r in record:
            r.pop("recursive_seconds")
            r.pop("closed_seconds")
    _emit(args, verify.format_bench(rows, args.deterministic), record)
    # counting check: collection can only shrink the recursion's term list
    ok = all(r.recursive_terms is None or r.recursive_terms >= r.final_terms for r in rows)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_identities(args) -> int:
    try:
        lhs, rhs = closedform.lemma_identity(args.kind, *args.params)
    except (WordError, ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    equal = lhs == rhs
    _emit(
        args,
        f"lhs: {format_element(lhs)}\nrhs: {format_element(rhs)}\n{'EQUAL' if equal else 'DIFFERENT'}",
        {"kind": args.kind, "params": args.params, "lhs": to_records(lhs), "rhs": to_records(rhs), "equal": equal},
    )
    return EXIT_OK if equal else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "records"), default="text")
    common.add_argument("--deterministic", action="store_true", help="suppress timing fields")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")

    parser = argparse.ArgumentParser(prog="mr-antipode", description="Antipodes in the permutation Hopf algebra.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("antipode", parents=[common], help="antipode of a permutation")
    p.add_argument("perm", help='one-line notation, e.g. 4312, "10,3,1,2,..." or e')
    p.add_argument("--method", choices=("recursive", "closed"), default="recursive")
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("sigma", parents=[common], help="the permutation a b 1 ... n")
    for name in ("n", "a", "b"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("component", parents=[common], help="closed-form component S(sigma)_j^*")
    for name in ("n", "a", "b", "j"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_component)

    p = sub.add_parser("verify", parents=[common], help="run a verification campaign")
    p.add_argument("campaign", choices=(*verify.CAMPAIGNS, "all"))
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="recursive vs closed-form timings")
    p.add_argument("--max-n-recursive", type=int, default=8)
    p.add_argument("--max-n-closed", type=int, default=10)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("identities", parents=[common], help="both sides of an alternating shuffle identity")
    p.add_argument("kind", choices=closedform.LEMMA_KINDS)
    p.add_argument("params", type=int, nargs="+")
    p.set_defaults(func=cmd_identities)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        max_degree()
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        return args.func(args)
    except (UsageError, WordError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
