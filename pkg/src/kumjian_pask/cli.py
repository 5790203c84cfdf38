"""Command-line front end.

    kpalg normalize --k 2 --level 2 "p[(1,1)->(0,1);2] . p[(1,1)->(0,1);2]*"
    kpalg mul --k 1 --level 2 "v(0)" "v(0)"
    kpalg star --k 2 --level 2 "p[(1,1)->(1,0);2]"
    kpalg basis --k 1 --level 2 --window -2..2 --degree-bound 1 --shape pair
    kpalg check all --k 2 --level 2 --seed 42 --cases 500

k and level are always explicit.  Element arguments starting with '@' are
read from the named file.  Exit status: 0 on success or passing checks, 1
on check failure, 2 on usage errors (including malformed elements).
Output is byte-reproducible from flags and seed; no environment variables
are consulted.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import verify
from .algebra import Window, enumerate_basis, kp_mul, kp_star
from .freealg import Element, ring_from_spec
from .kgraph import KGraphError, StandardKGraph
from .rewrite import TraceStep, normalize
from .syntax import ElementSyntaxError, format_element, format_word, parse_element


class UsageError(Exception):
    pass


_RANGE_RE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


def _parse_window(text: str, k: int, degree_bound: int) -> Window:
    pieces = text.split(",")
    if len(pieces) == 1:
        pieces = pieces * k
    if len(pieces) != k:
        raise UsageError(f"window needs 1 or {k} ranges, got {len(pieces)}")
    lo, hi = [], []
    for piece in pieces:
        m = _RANGE_RE.match(piece.strip())
        if not m:
            raise UsageError(f"bad window range {piece!r}, expected lo..hi")
        lo.append(int(m.group(1)))
        hi.append(int(m.group(2)))
    try:
        return Window(tuple(lo), tuple(hi), degree_bound)
    except KGraphError as exc:
        raise UsageError(str(exc)) from None


def _parse_coords_flag(text: str, k: int, flag: str) -> tuple[int, ...]:
    try:
        coords = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers") from None
    if len(coords) != k:
        raise UsageError(f"{flag} needs {k} coordinates, got {len(coords)}")
    return coords


def _element_arg(text: str, graph: StandardKGraph, ring) -> Element:
    if text.startswith("@"):
        try:
            with open(text[1:], "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read element file: {exc}") from None
    try:
        return parse_element(text, graph, ring)
    except (ElementSyntaxError, KGraphError) as exc:
        raise UsageError(f"bad element: {exc}") from None


def _element_payload(elem: Element) -> dict:
    return {
        "ring": elem.ring.name,
        "terms": [{"coeff": elem.ring.coeff_str(c),
                   "word": [w_text for w_text in format_word(w).split(" . ")]}
                  for w, c in elem.sorted_terms()],
    }


def _print_element(elem: Element, fmt: str) -> None:
    if fmt == "structured":
        print(json.dumps({"element": _element_payload(elem)},
                         sort_keys=True, separators=(",", ":")))
    else:
        print(format_element(elem))


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=int, required=True,
                        help="rank of the lattice (no default)")
    parser.add_argument("--level", type=int, required=True,
                        help="level of the standard k-graph (no default)")
    parser.add_argument("--ring", default="int",
                        help="coefficient ring: int or zmod:N (default int)")
    parser.add_argument("--format", choices=("text", "structured"),
                        default="text", help="output format (default text)")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="kpalg",
        description="Kumjian-Pask algebra engine over standard k-graphs")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="reduce an element to normal form")
    _add_common(p)
    p.add_argument("element")
    p.add_argument("--trace", action="store_true",
                   help="print one line per rewrite step")

    p = sub.add_parser("mul", help="multiply two elements in the quotient")
    _add_common(p)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("star", help="star of an element in the quotient")
    _add_common(p)
    p.add_argument("element")

    p = sub.add_parser("basis", help="enumerate basis words in a window")
    _add_common(p)
    p.add_argument("--window", default="-2..2",
                   help="vertex box lo..hi, uniform or per-coordinate "
                        "(default -2..2)")
    p.add_argument("--degree-bound", type=int, default=2,
                   help="max |degree| of enumerated paths (default 2)")
    p.add_argument("--shape", default="all",
                   choices=("all", "vertex", "path", "ghost", "pair"))
    p.add_argument("--range-left", default=None,
                   help="filter: range of the (left) path, comma-separated")
    p.add_argument("--range-right", default=None,
                   help="filter: range of the right (ghost) path of a pair")

    p = sub.add_parser("check", help="run verification suites")
    _add_common(p)
    p.add_argument("which", choices=("lemma3", "lemma8", "lemma12", "lemma13",
                                     "confluence", "kp", "all"))
    p.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    p.add_argument("--cases", type=int, default=100,
                   help="cases per randomized check (default 100)")
    p.add_argument("--window", default="-3..3",
                   help="sampling window (default -3..3)")
    p.add_argument("--degree-bound", type=int, default=3,
                   help="sampling degree bound (default 3)")
    p.add_argument("--case-index", type=int, default=None,
                   help="run a single case index (for reproduction)")
    return top


def _run(args: argparse.Namespace) -> int:
    try:
        graph = StandardKGraph(args.k, args.level)
        ring = ring_from_spec(args.ring)
    except (KGraphError, ValueError) as exc:
        raise UsageError(str(exc)) from None

    if args.command == "normalize":
        elem = _element_arg(args.element, graph, ring)
        trace = None
        if args.trace:
            def trace(step: TraceStep) -> None:
                m = step.measure
                print(f"rule={step.rule.value} pos={step.pos + 1} "
                      f"measure=({m.length},{m.entropy},{m.degree_value},"
                      f"{m.one_level_value},{m.ar_value})")
        _print_element(normalize(graph, elem, trace=trace), args.format)
        return 0

    if args.command == "mul":
        left = _element_arg(args.left, graph, ring)
        right = _element_arg(args.right, graph, ring)
        _print_element(kp_mul(graph, left, right), args.format)
        return 0

    if args.command == "star":
        elem = _element_arg(args.element, graph, ring)
        _print_element(kp_star(graph, elem), args.format)
        return 0

    if args.command == "basis":
        window = _parse_window(args.window, graph.k, args.degree_bound)
        range_left = (None if args.range_left is None else
                      _parse_coords_flag(args.range_left, graph.k, "--range-left"))
        range_right = (None if args.range_right is None else
                       _parse_coords_flag(args.range_right, graph.k, "--range-right"))
        words = enumerate_basis(graph, window, shape=args.shape,
                                range_left=range_left, range_right=range_right)
        if args.format == "structured":
            print(json.dumps({"words": [format_word(w) for w in words]},
                             sort_keys=True, separators=(",", ":")))
        else:
            for w in words:
                print(format_word(w))
        return 0

    # check
    window = _parse_window(args.window, graph.k, args.degree_bound)
    if args.which == "all":
        reports = verify.run_all(graph, args.seed, args.cases, window, ring,
                                 args.case_index)
    elif args.which == "kp":
        reports = [verify.check_kp_relations(graph, window, ring)]
    else:
        reports = [verify.CHECKS[args.which](graph, args.seed, args.cases,
                                             window, ring, args.case_index)]
    if args.format == "structured":
        print(json.dumps({"reports": [r.as_dict() for r in reports]},
                         sort_keys=True, separators=(",", ":")))
    else:
        for r in reports:
            for line in r.text_lines():
                print(line)
            for f in r.failures:
                print(f"repro: kpalg check {r.name} --k {args.k} "
                      f"--level {args.level} --seed {args.seed} "
                      f"--cases {args.cases} --case-index {f.index} "
                      f"--window {args.window} "
                      f"--degree-bound {args.degree_bound}")
    return 0 if all(r.passed for r in reports) else 1


_DASH_VALUE_FLAGS = {"--window", "--range-left", "--range-right"}


def _merge_dash_values(argv: list[str]) -> list[str]:
    """Join flags with values that begin with '-' (e.g. --window -2..2) so
    argparse does not mistake the value for an option."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if (tok in _DASH_VALUE_FLAGS and i + 1 < len(argv)
                and argv[i + 1].startswith("-")):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        args = parser.parse_args(_merge_dash_values(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
