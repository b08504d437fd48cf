"""Command-line front end: ``vknot report|compare|cosmetic|fuzz|family|fixture``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Iterable

from .codec import CodecError, GaussCode, parse
from .corpus import UnknownFixture, family_kn, family_labels, fixture, fixture_names
from .lfpoly import InvariantBundle, bundle, bundle_to_json, cosmetic_verdicts, distinguish
from .moves import apply, walk

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def read_code(text: str) -> GaussCode:
    """Parse a Gauss code, or look up a fixture when the text names one."""
    try:
        return parse(text)
    except CodecError as exc:
        if text.strip() in fixture_names():
            return fixture(text.strip()).code
        raise InputError(f"{type(exc).__name__}: {exc}") from exc


def render_bundle(b: InvariantBundle) -> str:
    lines = [f"code: {b.code.to_string() or '(empty)'}", f"writhe: {b.writhe}", "crossings:"]
    for ic in b.crossings:
        lines.append(f"  {ic.label}: sign {ic.sign:+d}, index {ic.index}")
    lines.append(f"P = {b.P}")
    lines.append(f"W = {b.W}")
    ns = sorted(b.nset)
    lines.append("nset: {" + ", ".join(map(str, ns)) + "}")
    for n in ns:
        lines.append(f"dwrithe_{n} = {b.writhes.dwrithe(n)}")
    for n in ns:
        lines.append(f"L^{n} = {b.L[n]}")
    for n in ns:
        lines.append(f"F^{n} = {b.F[n]}")
    for n in ns:
        lines.append(f"T_{n} = {{{', '.join(map(str, sorted(b.T[n])))}}}")
    lines.append("L^n = F^n = P for all other n")
    lines.append(render_cosmetic_lines(b.cosmetic))
    return "\n".join(lines)


def render_cosmetic_lines(verdicts) -> str:
    rows = ["cosmetic:"]
    for label, v in verdicts.items():
        rows.append(f"  {label}: {v.status} ({v.reason})")
    return "\n".join(rows)


def _emit(obj, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(obj))
    else:
        print(text)


def _codes(args) -> Iterable[str]:
    if args.batch:
        for line in sys.stdin:
            yield line.rstrip("\n")
    else:
        if args.code is None:
            raise InputError("a code argument is required unless --batch is given")
        yield args.code


def _per_code(args, handler: Callable[[GaussCode], tuple[object, str]]) -> int:
    status = EXIT_OK
    for text in _codes(args):
        try:
            code = read_code(text)
        except InputError as exc:
            print(f"error: {exc}", file=sys.stderr)
            status = EXIT_INPUT
            continue
        obj, rendered = handler(code)
        _emit(obj, args.json, rendered)
    return status


def cmd_report(args) -> int:
    def handle(code):
        b = bundle(code)
        return bundle_to_json(b), render_bundle(b)

    return _per_code(args, handle)


def cmd_cosmetic(args) -> int:
    def handle(code):
        verdicts = cosmetic_verdicts(code)
        obj = {
            "code": code.to_string(),
            "cosmetic": {str(k): {"status": v.status, "reason": v.reason} for k, v in verdicts.items()},
        }
        return obj, f"code: {code.to_string() or '(empty)'}\n" + render_cosmetic_lines(verdicts)

    return _per_code(args, handle)


def cmd_compare(args) -> int:
    c1, c2 = read_code(args.code1), read_code(args.code2)
    verdict = distinguish(bundle(c1), bundle(c2))
    obj = {
        "code1": c1.to_string(),
        "code2": c2.to_string(),
        "distinguished": verdict.distinguished,
        "witness": verdict.witness,
    }
    _emit(obj, args.json, str(verdict))
    return EXIT_OK


def cmd_fuzz(args) -> int:
    code = read_code(args.code)
    if args.moves < 0 or args.walks < 0 or args.max_crossings < 0:
        raise InputError("--moves, --walks and --max-crossings must be non-negative")
    reference = bundle(code).signature()
    applied = 0
    violations = []
    for i in range(args.walks):
        seed = args.seed + i
        result = walk(code, args.moves, seed, args.max_crossings)
        applied += len(result.trace)
        if args.every_step:
            current = code
            for step, site in enumerate(result.trace):
                current = apply(current, site)
                if bundle(current).signature() != reference:
                    violations.append((seed, result.trace[: step + 1], current))
                    break
        elif bundle(result.final).signature() != reference:
            violations.append((seed, result.trace, result.final))
    obj = {
        "code": code.to_string(),
        "walks": args.walks,
        "moves_per_walk": args.moves,
        "moves_applied": applied,
        "seed": args.seed,
        "max_crossings": args.max_crossings,
        "violations": [
            {"seed": s, "trace": [str(site) for site in trace], "final": final.to_string()}
            for s, trace, final in violations
        ],
    }
    lines = [
        f"walks: {args.walks}, moves applied: {applied}, violations: {len(violations)} "
        f"(seed {args.seed}, max crossings {args.max_crossings})"
    ]
    for s, trace, final in violations:
        lines.append(f"violation in walk seed {s}: {final.to_string()}")
        lines.extend(f"  {site}" for site in trace)
    _emit(obj, args.json, "\n".join(lines))
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_family(args) -> int:
    if args.n < 1:
        raise InputError("--n must be at least 1")
    code = family_kn(args.n, args.mutant)
    obj = {
        "n": args.n,
        "mutant": args.mutant,
        "code": code.to_string(),
        "labels": family_labels(args.n),
    }
    _emit(obj, args.json, code.to_string())
    return EXIT_OK


def cmd_fixture(args) -> int:
    if args.list:
        _emit(fixture_names(), args.json, "\n".join(fixture_names()))
        return EXIT_OK
    if args.name is None:
        raise InputError("--name or --list is required")
    try:
        f = fixture(args.name)
    except UnknownFixture as exc:
        raise InputError(str(exc)) from exc
    obj = {"name": f.name, "code": f.code.to_string(), "expected": f.expected}
    _emit(obj, args.json, f"{f.code.to_string()}\n{json.dumps(f.expected, indent=2)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vknot", description="Index-type invariants of virtual knots from signed Gauss codes."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")

    for name, func, help_ in (
        ("report", cmd_report, "full invariant report"),
        ("cosmetic", cmd_cosmetic, "crossings proven not cosmetic"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("code", nargs="?", help="Gauss code such as O1+O2+U1+U2+, or a fixture name")
        p.add_argument("--batch", action="store_true", help="read one code per line from stdin")
        add_json(p)
        p.set_defaults(func=func)

    p = sub.add_parser("compare", help="try to tell two knots apart")
    p.add_argument("code1")
    p.add_argument("code2")
    add_json(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("fuzz", help="check invariance along random Reidemeister walks")
    p.add_argument("code")
    p.add_argument("--moves", type=int, default=50)
    p.add_argument("--walks", type=int, default=100)
    p.add_argument("--seed", type=int, default=0, help="walk i uses seed SEED+i")
    p.add_argument("--max-crossings", type=int, default=20)
    p.add_argument("--every-step", action="store_true", help="compare after every move, not only at the end")
    add_json(p)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("family", help="Gauss code of K_n or its mutant MK_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mutant", action="store_true")
    add_json(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("fixture", help="built-in example diagrams")
    p.add_argument("--name")
    p.add_argument("--list", action="store_true")
    add_json(p)
    p.set_defaults(func=cmd_fixture)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
