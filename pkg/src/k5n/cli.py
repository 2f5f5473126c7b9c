"""Command-line front end: JSON in, JSON out, pipeline-friendly.

Exit codes: 0 success, 1 domain failure (validation or precondition
failed), 2 usage error (bad flags, malformed JSON).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import api
from .jsonio import FormatError


def _read_doc(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from exc
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _emit(doc, out: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k5n",
        description="Verification and classification of crossing-minimal "
                    "K_{5,n} rotation systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("antidist", help="antidistance between two rotations")
    p.add_argument("rot1")
    p.add_argument("rot2")

    p = sub.add_parser("gen", help="generate a drawing")
    gensub = p.add_subparsers(dest="family", required=True)
    g = gensub.add_parser("drs", help="two-parameter antipodal-free drawing")
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--s", type=int, required=True)
    g.add_argument("-o", "--output")
    g = gensub.add_parser("zar", help="two-class antipodal drawing")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("-o", "--output")

    p = sub.add_parser("verify", help="validate a drawing file")
    p.add_argument("file")
    p.add_argument("-o", "--output")

    p = sub.add_parser("key", help="key and core of a clean drawing")
    p.add_argument("file")
    p.add_argument("-o", "--output")

    p = sub.add_parser("solve-key", help="positive solutions of a key's system")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--output")

    p = sub.add_parser("forbid-check",
                       help="exhaustive realizability check of a key fragment")
    p.add_argument("file")
    p.add_argument("-o", "--output")

    p = sub.add_parser("classify", help="classify antipodal-free optimal drawings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--output")

    p = sub.add_parser("decompose",
                       help="strip antipodal pairs and identify the residual")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "antidist":
            print(api.handle_antidist(args.rot1, args.rot2)["antidistance"])
            return 0
        if args.command == "gen":
            if args.family == "drs":
                doc = api.handle_gen_drs(args.r, args.s)
            else:
                doc = api.handle_gen_zar(args.n)
        elif args.command == "verify":
            doc = api.handle_verify(_read_doc(args.file))
        elif args.command == "key":
            doc = api.handle_key(_read_doc(args.file))
        elif args.command == "solve-key":
            doc = api.handle_solve_key(_read_doc(args.file), args.n)
        elif args.command == "forbid-check":
            doc = api.handle_forbid_check(_read_doc(args.file))
        elif args.command == "classify":
            doc = api.handle_classify(args.n)
        else:
            doc = api.handle_decompose(_read_doc(args.file))
        _emit(doc, getattr(args, "output", None))
        return 0
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except api.DomainError as exc:
        if exc.payload:
            _emit(exc.payload, getattr(args, "output", None))
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
