"""Command-line interface.

Exit codes, everywhere: 0 success, 1 relation failed to verify (which for
valid input would mean a library bug, not a property of the input), 2
invalid input (parse errors, parallel lines, out-of-range n, unknown
format), 3 intersection points sharing an x-coordinate when --shear was
not given.

With --json the only bytes on stdout are one JSON document; all
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path

from .braids import BraidWord, braids_equal, boundary_word_image, free_reduce
from .families import (
    make_daisy,
    make_doubled_daisy,
    make_pencil,
    realize_wajnryb,
)
from .files import (
    ArrangementFileError,
    arrangement_to_json,
    load_arrangement,
    save_arrangement,
)
from .framed import FramedElement, elements_equal, outer_boundary_twist
from .geometry import (
    Arrangement,
    DuplicateSlope,
    NonGenericX,
    shear_to_generic,
)
from .monodromy import lantern_relation, total_monodromy, verify_relation
from .relation import UnknownFormat, export_relation, relation_to_dict
from .svgplot import render_arrangement_svg

EXIT_OK = 0
EXIT_RELATION_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_NON_GENERIC = 3


def _info(message: str) -> None:
    print(message, file=sys.stderr)


def _prepare(arr: Arrangement, shear: bool) -> tuple[Arrangement, Fraction]:
    """Apply the genericity shear when asked; NonGenericX escapes otherwise."""
    if not shear:
        return arr, Fraction(0)
    sheared, t = shear_to_generic(arr)
    if t != 0:
        _info(f"applied shear (x, y) -> (x - t*y, y) with t = {t}")
    return sheared, t


def _verify_payload(path: str, shear: bool) -> tuple[int, dict]:
    arr = load_arrangement(path)
    arr, t = _prepare(arr, shear)
    relation = lantern_relation(arr)
    report = verify_relation(relation)
    relation = replace(relation, report=report)
    code = EXIT_OK if report.verified else EXIT_RELATION_FAILED
    payload = {
        "file": path,
        "verified": report.verified,
        "exit_code": code,
        "shear_t": str(t) if t != 0 else None,
        "relation": relation_to_dict(relation),
    }
    return code, payload


def _print_verify_human(payload: dict) -> None:
    relation = payload["relation"]
    print(f"{payload['file']}: {relation['text']}")
    report = relation["report"]
    print(f"  braid part: {'equal' if report['braid_ok'] else 'DIFFERENT'}")
    print(f"  framings:   {'equal' if report['framing_ok'] else 'DIFFERENT'}")
    if payload["shear_t"]:
        print(f"  shear t:    {payload['shear_t']}")
    if payload["verified"]:
        print("  verified")
    else:
        print("  NOT VERIFIED - for valid input this indicates a library bug;")
        print("  the witness below separates the two sides in the free group")
        if report["witness"]:
            print(f"  witness generator: x_{report['witness']['generator']}")


def cmd_verify(args: argparse.Namespace) -> int:
    if args.batch:
        directory = Path(args.path)
        if not directory.is_dir():
            _info(f"{args.path} is not a directory")
            return EXIT_INVALID_INPUT
        paths = sorted(
            str(p) for p in directory.iterdir() if p.suffix in (".json", ".txt")
        )
        if not paths:
            _info(f"no .json or .txt arrangement files in {args.path}")
            return EXIT_INVALID_INPUT
    else:
        paths = [args.path]

    worst = EXIT_OK
    payloads = []
    for path in paths:
        try:
            code, payload = _verify_payload(path, args.shear)
        except NonGenericX as err:
            _info(f"{path}: {err}")
            _info("hint: rerun with --shear to normalize the arrangement")
            code, payload = EXIT_NON_GENERIC, {
                "file": path,
                "verified": False,
                "exit_code": EXIT_NON_GENERIC,
                "error": str(err),
            }
        except (ArrangementFileError, DuplicateSlope, ValueError, OSError) as err:
            _info(f"{path}: {err}")
            code, payload = EXIT_INVALID_INPUT, {
                "file": path,
                "verified": False,
                "exit_code": EXIT_INVALID_INPUT,
                "error": str(err),
            }
        worst = max(worst, code)
        payloads.append(payload)

    if args.json:
        document = payloads[0] if not args.batch else {
            "results": payloads,
            "exit_code": worst,
        }
        print(json.dumps(document, indent=2))
    else:
        for payload in payloads:
            if "relation" in payload:
                _print_verify_human(payload)
            else:
                print(f"{payload['file']}: ERROR (exit {payload['exit_code']})")
    return worst


_FAMILIES = {
    "pencil": (make_pencil, 2),
    "wajnryb": (realize_wajnryb, 3),
    "daisy": (make_daisy, 3),
    "doubled-daisy": (make_doubled_daisy, 5),
}


def cmd_make(args: argparse.Namespace) -> int:
    maker, minimum = _FAMILIES[args.kind]
    if args.n < minimum:
        _info(f"family {args.kind!r} needs n >= {minimum}, got {args.n}")
        return EXIT_INVALID_INPUT
    arr = maker(args.n)
    if args.output:
        save_arrangement(arr, args.output)
    else:
        sys.stdout.write(arrangement_to_json(arr))
    return EXIT_OK


def cmd_relation(args: argparse.Namespace) -> int:
    try:
        arr = load_arrangement(args.path)
        arr, t = _prepare(arr, args.shear)
        relation = lantern_relation(arr)
        relation = replace(relation, report=verify_relation(relation))
        text = export_relation(relation, args.format)
    except NonGenericX as err:
        _info(f"{args.path}: {err}")
        _info("hint: rerun with --shear to normalize the arrangement")
        return EXIT_NON_GENERIC
    except (ArrangementFileError, DuplicateSlope, UnknownFormat, ValueError, OSError) as err:
        _info(f"{args.path}: {err}")
        return EXIT_INVALID_INPUT
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if relation.report.verified else EXIT_RELATION_FAILED


def cmd_plot(args: argparse.Namespace) -> int:
    try:
        arr = load_arrangement(args.path)
        arr, _ = _prepare(arr, args.shear)
        svg = render_arrangement_svg(arr)
    except NonGenericX as err:
        _info(f"{args.path}: {err}")
        _info("hint: rerun with --shear to normalize the arrangement")
        return EXIT_NON_GENERIC
    except (ArrangementFileError, DuplicateSlope, ValueError, OSError) as err:
        _info(f"{args.path}: {err}")
        return EXIT_INVALID_INPUT
    Path(args.output).write_text(svg)
    return EXIT_OK


def _random_generic_arrangement(rng: random.Random, n: int) -> Arrangement:
    from .geometry import validate_arrangement

    slopes: set[Fraction] = set()
    while len(slopes) < n:
        slopes.add(Fraction(rng.randint(-24, 24), rng.randint(1, 5)))
    entries = [
        (slope, Fraction(rng.randint(-12, 12), rng.randint(1, 4)))
        for slope in sorted(slopes, reverse=True)
    ]
    arr = validate_arrangement(entries)
    arr, _ = shear_to_generic(arr)
    return arr


def cmd_selftest(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    failures = 0

    def suite(label: str, ok: bool) -> None:
        nonlocal failures
        print(f"{'ok  ' if ok else 'FAIL'} {label}")
        if not ok:
            failures += 1

    ok = True
    for n in range(2, 7):
        for i in range(1, n - 1):
            u = BraidWord(n, (i, i + 1, i))
            v = BraidWord(n, (i + 1, i, i + 1))
            ok = ok and braids_equal(u, v)
        for i in range(1, n - 1):
            for j in range(i + 2, n):
                ok = ok and braids_equal(BraidWord(n, (i, j)), BraidWord(n, (j, i)))
    suite("braid relations hold under the free-group oracle", ok)

    ok = True
    for _ in range(40):
        n = rng.randint(2, 6)
        word = BraidWord(
            n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(30))
        )
        ok = ok and boundary_word_image(word) == tuple(range(1, n + 1))
    suite("random words fix the boundary word x_1...x_n", ok)

    ok = True
    for _ in range(20):
        n = rng.randint(2, 6)
        arr = _random_generic_arrangement(rng, n)
        report = verify_relation(lantern_relation(arr))
        ok = ok and report.verified
        total = total_monodromy(arr)
        full_twist_unframed = FramedElement(outer_boundary_twist(n).braid, (0,) * n)
        ok = ok and elements_equal(total, full_twist_unframed)
    suite("random arrangements verify and have full-twist total monodromy", ok)

    ok = free_reduce((1, -1, 2, 3, -3, -2, 5)) == (5,)
    suite("free reduction collapses cancelling pairs", ok)

    print("selftest:", "ok" if failures == 0 else f"{failures} failures")
    return EXIT_OK if failures == 0 else EXIT_RELATION_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="lanterns",
        description=(
            "Compile real line arrangements into generalized lantern relations "
            "on Dehn twists and verify them exactly."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify the relation an arrangement carries")
    p_verify.add_argument("path", help="arrangement file, or a directory with --batch")
    p_verify.add_argument("--shear", action="store_true", help="normalize non-generic x-coordinates")
    p_verify.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    p_verify.add_argument("--batch", action="store_true", help="verify every .json/.txt file in a directory")
    p_verify.set_defaults(func=cmd_verify)

    p_make = sub.add_parser("make", help="write a named arrangement family")
    p_make.add_argument("kind", choices=sorted(_FAMILIES))
    p_make.add_argument("n", type=int)
    p_make.add_argument("-o", "--output", default=None)
    p_make.set_defaults(func=cmd_make)

    p_rel = sub.add_parser("relation", help="emit the relation in text, latex, or json")
    p_rel.add_argument("path")
    p_rel.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p_rel.add_argument("--shear", action="store_true")
    p_rel.add_argument("-o", "--output", default=None)
    p_rel.set_defaults(func=cmd_relation)

    p_plot = sub.add_parser("plot", help="draw the arrangement as a static SVG")
    p_plot.add_argument("path")
    p_plot.add_argument("-o", "--output", required=True)
    p_plot.add_argument("--shear", action="store_true")
    p_plot.set_defaults(func=cmd_plot)

    p_self = sub.add_parser("selftest", help="run seeded randomized property checks")
    p_self.add_argument("--seed", type=int, default=0)
    p_self.set_defaults(func=cmd_selftest)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
