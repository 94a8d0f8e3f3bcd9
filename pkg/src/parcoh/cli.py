"""Command-line front end.

    parcoh analyze INPUT [--json] [--depth N]
    parcoh example KIND [--p P] [--with-i] [--dim N] [--rank R]
    parcoh verify INPUT

"analyze" runs the full pipeline and prints the report (text by default,
JSON with --json); "example" prints a ready-to-analyze input document;
"verify" runs only the validation passes.  INPUT of "-" reads stdin.

Exit codes: 0 success, 1 validation error, 2 inconsistent input data,
3 missing required inputs.
"""
from __future__ import annotations

import argparse
import sys

from .errors import AnalysisError, MissingInputError
from .examples import build_example
from .inputs import parse_analysis_input
from .invariants import analyze
from .lattice import validate_lattice
from .zmod import abelianization_rank

_EXAMPLE_ALIASES = {
    "pell": "unit_solvmanifold",
    "unit_solvmanifold": "unit_solvmanifold",
    "iwasawa": "iwasawa",
    "torus": "torus",
    "sl2c": "sl2_times_c",
    "sl2_times_c": "sl2_times_c",
}


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parcoh",
        description="Exact invariants of compact complex parallelizable "
                    "manifolds from structure constants and lattice data.")
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="run the full analysis pipeline")
    pa.add_argument("input", help="analysis input file, or '-' for stdin")
    pa.add_argument("--json", action="store_true", help="emit the JSON report")
    pa.add_argument("--depth", type=int, default=None,
                    help="word length for the core verification (default 4)")

    pe = sub.add_parser("example", help="emit a ready-made analysis input")
    pe.add_argument("kind", choices=sorted(_EXAMPLE_ALIASES),
                    help="example family")
    pe.add_argument("--p", type=int, default=2,
                    help="non-square Pell parameter (unit solvmanifold)")
    pe.add_argument("--with-i", action="store_true", dest="with_i",
                    help="adjoin the unit i to the solvmanifold lattice")
    pe.add_argument("--dim", type=int, default=1, help="torus dimension")
    pe.add_argument("--rank", type=int, default=1,
                    help="asserted quotient Betti rank (sl2c)")

    pv = sub.add_parser("verify", help="run validation passes only")
    pv.add_argument("input", help="analysis input file, or '-' for stdin")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "example":
            kind = _EXAMPLE_ALIASES[args.kind]
            params = {"p": args.p, "with_i": args.with_i,
                      "n": args.dim, "rank": args.rank}
            ai = build_example(kind, **params)
            sys.stdout.write(ai.to_json())
            return 0
        text = _read_input(args.input)
        ai = parse_analysis_input(text)
        if args.command == "verify":
            ai.algebra.validate()
            validate_lattice(ai.algebra, ai.lattice)
            if ai.lattice.presentation is not None:
                abelianization_rank(ai.lattice.presentation.generator_count,
                                    ai.lattice.presentation.relators)
            sys.stdout.write("ok: algebra, automorphisms and presentation "
                             "pass validation\n")
            return 0
        depth = args.depth if args.depth is not None else ai.options.depth
        if depth < 1:
            sys.stderr.write("error: --depth must be a positive integer\n")
            return 1
        result = analyze(ai.algebra, ai.lattice, depth)
        report = result.report
        sys.stdout.write(report.to_json() if args.json else report.to_text())
        return 2 if report.rigid == "INCONSISTENT" else 0
    except MissingInputError as exc:
        sys.stderr.write(f"error (missing input): {exc}\n")
        return 3
    except AnalysisError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
