"""Command line interface.

Subcommands: validate, signs, decide, invariants, construct, report. File
arguments accept ``-`` for stdin/stdout. Exit codes: 0 success (SAT where a
decision is involved), 1 UNSAT, 2 invalid input, 3 usage error. All output is
a pure function of the input; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .charpair import Omniorientation, all_signs
from .constructions import cp2_sum, cpn, hirzebruch, product, vertex_cut
from .errors import QuasitoricError
from .fileformat import PairDocument, format_sign, parse, serialize
from .invariants import compute_invariants
from .polytope import f_vector, h_vector
from .positivity import decide_positive


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load(path: str) -> PairDocument:
    return parse(_read(path))


def _summary_lines(pair) -> list[str]:
    poly = pair.polytope
    return [
        f"dim {poly.dim}",
        f"facets {poly.num_facets}",
        f"vertices {poly.num_vertices}",
        "f_vector " + " ".join(str(x) for x in f_vector(poly)),
        "h_vector " + " ".join(str(x) for x in h_vector(poly)),
    ]


def _sign_lines(pair, omni) -> list[str]:
    signs = all_signs(pair, omni)
    return [
        "vertex " + " ".join(str(j) for j in v) + " : " + format_sign(s)
        for v, s in zip(pair.polytope.vertices, signs)
    ]


def _decide_lines(result) -> list[str]:
    if result.satisfiable:
        omni = result.certificate
        signs = [omni.global_sign, *omni.facet_signs]
        return ["SAT", "omniorientation " + " ".join(format_sign(s) for s in signs)]
    return ["UNSAT", "witness " + " ".join(str(i) for i in result.witness)]


def _invariant_lines(report) -> list[str]:
    lines = [f"euler = {report.euler}", f"chern_top = {report.chern_top}"]
    if report.signature is not None:
        lines.append(f"signature = {report.signature}")
        lines.append(f"todd = {report.todd}")
        lines.append(f"almost_complex_4d = {'true' if report.almost_complex_4d else 'false'}")
    return lines


def cmd_validate(args) -> int:
    pair = _load(args.file).to_pair()
    print("valid")
    for line in _summary_lines(pair):
        print(line)
    return 0


def cmd_signs(args) -> int:
    doc = _load(args.file)
    if doc.omniorientation is None:
        print("error: signs requires an omniorientation directive", file=sys.stderr)
        return 2
    pair = doc.to_pair()
    for line in _sign_lines(pair, doc.omniorientation):
        print(line)
    return 0


def cmd_decide(args) -> int:
    pair = _load(args.file).to_pair()
    result = decide_positive(pair)
    for line in _decide_lines(result):
        print(line)
    return 0 if result.satisfiable else 1


def cmd_invariants(args) -> int:
    doc = _load(args.file)
    pair = doc.to_pair()
    omni = doc.omniorientation or Omniorientation.all_positive(pair.polytope.num_facets)
    for line in _invariant_lines(compute_invariants(pair, omni)):
        print(line)
    return 0


def cmd_report(args) -> int:
    doc = _load(args.file)
    pair = doc.to_pair()
    lines = _summary_lines(pair)
    if doc.omniorientation is not None:
        lines += _sign_lines(pair, doc.omniorientation)
    result = decide_positive(pair)
    lines += _decide_lines(result)
    lines.append(f"positive_count = {result.solution_count}")
    omni = doc.omniorientation or Omniorientation.all_positive(pair.polytope.num_facets)
    lines += _invariant_lines(compute_invariants(pair, omni))
    for line in lines:
        print(line)
    return 0 if result.satisfiable else 1


def cmd_construct(args) -> int:
    name = args.name
    params = args.params

    def usage(msg):
        print(f"error: construct {name}: {msg}", file=sys.stderr)
        return 3

    def integer(token):
        try:
            return int(token)
        except ValueError:
            raise _UsageError(f"not an integer: {token!r}") from None

    try:
        if name == "cpn":
            if len(params) != 1:
                return usage("takes one parameter n >= 1")
            n = integer(params[0])
            if n < 1:
                return usage("n must be >= 1")
            pair = cpn(n)
        elif name == "hirzebruch":
            if len(params) != 1:
                return usage("takes one integer parameter")
            pair = hirzebruch(integer(params[0]))
        elif name == "cp2k":
            if len(params) != 1:
                return usage("takes one parameter k >= 1")
            k = integer(params[0])
            if k < 1:
                return usage("k must be >= 1")
            pair = cp2_sum(k)
        elif name == "product":
            if len(params) != 2:
                return usage("takes two input files")
            pair = product(_load(params[0]).to_pair(), _load(params[1]).to_pair())
        elif name == "vertex-cut":
            if len(params) != 2:
                return usage("takes an input file and a vertex index")
            base = _load(params[0]).to_pair()
            idx = integer(params[1])
            if not 0 <= idx < base.polytope.num_vertices:
                return usage(f"vertex index out of range [0, {base.polytope.num_vertices})")
            pair = vertex_cut(base, base.polytope.vertices[idx])
        else:  # pragma: no cover - argparse choices guard this
            return usage("unknown construction")
    except _UsageError as exc:
        return usage(str(exc))
    _write(args.output, serialize(PairDocument.from_pair(pair)))
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="qtm", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for cmd, func in (
        ("validate", cmd_validate),
        ("signs", cmd_signs),
        ("decide", cmd_decide),
        ("invariants", cmd_invariants),
        ("report", cmd_report),
    ):
        p = sub.add_parser(cmd)
        p.add_argument("file", help=".qtm file, or - for stdin")
        p.set_defaults(func=func)

    p = sub.add_parser("construct")
    p.add_argument("name", choices=["cpn", "hirzebruch", "product", "vertex-cut", "cp2k"])
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output", default="-", help="output file, - for stdout")
    p.set_defaults(func=cmd_construct)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 3
    try:
        return args.func(args)
    except QuasitoricError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:  # console_scripts entry point
    raise SystemExit(main())
