"""``ringlab`` command line.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 validation or size error.
"""

from __future__ import annotations

import argparse
import sys

from . import classify as C
from . import expr as ex
from . import ringfile
from . import theorems as T
from .core import RingError
from .radicals import jacobson_data
from .subsets import center, idempotents, nilpotents, units

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVALID = 0, 1, 2, 3

SETS = {
    "J": lambda r: jacobson_data(r).jacobson.subset,
    "sqrtJ": lambda r: jacobson_data(r).sqrt_jacobson,
    "units": units,
    "idem": idempotents,
    "nilp": nilpotents,
    "center": center,
}
KINDS = {"unit": C.DecompKind.UNIT, "nil": C.DecompKind.NIL, "j": C.DecompKind.J, "sqrtj": C.DecompKind.SQRTJ}


class UsageError(Exception):
    pass


def _ring(text: str):
    return ex.evaluate(ex.parse(text))


def cmd_classify(args, out):
    report = C.classify_all(_ring(args.expr))
    print(report.to_json() if args.json else report.to_text(), file=out)
    return EXIT_OK


def cmd_subsets(args, out):
    ring = _ring(args.expr)
    subset = SETS[args.set](ring)
    for i in subset.members:
        print(f"{i}\t{ring.label(i)}", file=out)
    return EXIT_OK


def cmd_decompose(args, out):
    ring = _ring(args.expr)
    if not 0 <= args.element < ring.order:
        raise RingError(f"element {args.element} out of range for {ring.name} (order {ring.order})")
    ds = C.decompositions(ring, args.element, KINDS[args.kind])
    if args.strong:
        ds = [d for d in ds if d.commutes]
    if args.count:
        print(len(ds), file=out)
        return EXIT_OK
    if not ds:
        print(f"no {args.kind} decomposition of element {args.element}", file=sys.stderr)
        return EXIT_OK
    if not (args.all or args.strong):
        ds = ds[:1]
    lab = ring.label
    for d in ds:
        print(
            f"{d.a} = {d.e} + {d.z}\t{lab(d.a)} = {lab(d.e)} + {lab(d.z)}\tcommutes={str(d.commutes).lower()}",
            file=out,
        )
    return EXIT_OK


def cmd_verify(args, out):
    if args.theorem is not None and args.theorem not in T.REGISTRY:
        raise UsageError(f"unknown theorem id {args.theorem!r}")
    ids = [args.theorem] if args.theorem else None
    corpus = None if args.corpus == "default" else T.load_corpus(args.corpus)
    result = T.run_suite(corpus, ids=ids)
    T.print_suite(result, out=out, err=sys.stderr)
    for e in result.errors:
        print(f"error: {e.get('input')}: {e['error']}", file=sys.stderr)
    if result.failed:
        return EXIT_FAIL
    return EXIT_INVALID if result.errors else EXIT_OK


def cmd_export(args, out):
    ring = _ring(args.expr)
    ringfile.dump(ring, args.output)
    print(f"wrote {ring.name} (order {ring.order}) to {args.output}", file=sys.stderr)
    return EXIT_OK


def cmd_import(args, out):
    ring = ringfile.load(args.file)
    if args.classify or args.json:
        report = C.classify_all(ring)
        print(report.to_json() if args.json else report.to_text(), file=out)
    else:
        mode = ring._cache["validation"].mode
        print(f"{ring.name}: order {ring.order}, axioms ok ({mode})", file=out)
    return EXIT_OK


def cmd_elements(args, out):
    ring = _ring(args.expr)
    for i, lab in enumerate(ring.labels):
        print(f"{i}\t{lab}", file=out)
    return EXIT_OK


def cmd_parse(args, out):
    print(ex.to_tree(ex.parse(args.expr)), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ringlab", description="Finite ring radicals and clean-type decompositions.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("classify", help="decide every clean-family property")
    s.add_argument("expr")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_classify)

    s = sub.add_parser("subsets", help="list a distinguished subset")
    s.add_argument("expr")
    s.add_argument("--set", required=True, choices=list(SETS))
    s.set_defaults(fn=cmd_subsets)

    s = sub.add_parser("decompose", help="decompositions a = e + z of one element")
    s.add_argument("expr")
    s.add_argument("--element", required=True, type=int)
    s.add_argument("--kind", required=True, choices=list(KINDS))
    g = s.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true", help="every decomposition (default: the first)")
    g.add_argument("--strong", action="store_true", help="only commuting decompositions")
    s.add_argument("--count", action="store_true", help="print the number of decompositions")
    s.set_defaults(fn=cmd_decompose)

    s = sub.add_parser("verify", help="run the theorem registry")
    s.add_argument("--theorem", default=None)
    s.add_argument("--corpus", default="default", help="'default' or a file with one expression per line")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("export", help="write a RINGFILE")
    s.add_argument("expr")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(fn=cmd_export)

    s = sub.add_parser("import", help="read and validate a RINGFILE")
    s.add_argument("file")
    s.add_argument("--classify", action="store_true")
    s.add_argument("--json", action="store_true", help="classify and print the JSON report")
    s.set_defaults(fn=cmd_import)

    s = sub.add_parser("elements", help="index to label table")
    s.add_argument("expr")
    s.set_defaults(fn=cmd_elements)

    s = sub.add_parser("parse", help="print the expression AST")
    s.add_argument("expr")
    s.set_defaults(fn=cmd_parse)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.fn(args, out)
    except (ex.ParseError, ringfile.RingFileError, UsageError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except (RingError, IndexError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
