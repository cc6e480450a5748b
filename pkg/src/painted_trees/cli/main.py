#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
Command-line entry point `painted-trees`.

Verbs:
    enumerate        Painted trees of a family and degree.
    coproduct        Coproduct of a painted tree.
    product          One-sided product of two painted trees.
    antipode         One-sided antipode of a painted tree.
    poset            Face poset of a family or of the tubings of a graph.
    tubings          Tubings or marked tubings of a graph.
    bijection        Checks one of the tubing bijections in a degree.
    shuffle-product  Shuffle product of two maximal star-graph tubings.
    count            Counting formulas over a range of parameters.
    verify           Verification suites.
    export           Writes count tables, posets and plots to files.

Trees are given in canonical string form or as paths to JSON files. Results go to stdout unless
`--output` names a file. Exit status is 0 on success, 1 when a check fails and 2 on a usage
error; errors are printed as `error: <ClassName>: <message>`.

Usage:
    $ painted-trees count ptera --n 0..9
    $ painted-trees product --family binary/binary --side left "<tree>" "<tree>"
    $ painted-trees verify all --max-degree 3
"""

# Standard library imports
import argparse
import json
import sys
from itertools import product as cartesian_product
from pathlib import Path
from typing import List, Optional, Sequence

# Local application/library specific imports
from painted_trees.bijections.isomorphisms import BIJECTION_BUILDERS, verify_order_iso
from painted_trees.cli.checks import DEFAULT_MAX_DEGREE, DEFAULT_WORKERS, SUITES, run_suites
from painted_trees.data_export.exporter import (
    export_count_table,
    export_poset_dot,
    export_poset_json,
    save_f_vectors,
    save_hasse_diagram,
)
from painted_trees.enumeration.counting import COUNT_KINDS, count_table
from painted_trees.errors import InvalidArgumentError, PaintedTreesError
from painted_trees.hopf.hopf_operations import Side, antipode, coproduct, product
from painted_trees.painted.painted_tree import PaintedFamily, PaintedTree
from painted_trees.painted.splitting import EnumerationLevel, enumerate_painted
from painted_trees.posets.face_poset import FacePoset
from painted_trees.posets.growth import build_poset
from painted_trees.shuffle_algebra.stello_shuffle import StelloVertexNotation, star_product
from painted_trees.tubings.graphs import GRAPH_KINDS, make_graph
from painted_trees.tubings.marked_tubings import (
    composihedron_poset,
    cubeahedron_poset,
    enumerate_marked_tubings,
    marked_poset,
)
from painted_trees.tubings.tubings import enumerate_tubings, tubing_poset

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
DEFAULT_DEGREE = 3

TUBING_POSETS = {
    "tubings": tubing_poset,
    "marked": marked_poset,
    "composihedron": composihedron_poset,
    "cubeahedron": cubeahedron_poset,
}


def parse_range(text: str) -> List[int]:  # pylint: disable=unused-variable
    """
    Parses "a..b" (inclusive), "a,b,c" or a single integer.

    Raises:
        InvalidArgumentError: If the text is not a range of non-negative integers.
    """
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            values = list(range(int(low), int(high) + 1))
        else:
            values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as error:
        raise InvalidArgumentError(f"Invalid range: {text!r}") from error
    if not values or min(values) < 0:
        raise InvalidArgumentError(f"Invalid range: {text!r}")
    return values


def read_tree(family: PaintedFamily, text: str) -> PaintedTree:  # pylint: disable=unused-variable
    """A painted tree from its canonical string, or from a JSON file when the text is a path."""
    if text.endswith(".json"):
        with open(text, "r", encoding="utf-8") as file:
            tree = PaintedTree.from_json(json.load(file))
        if tree.family != family:
            raise InvalidArgumentError(f"{text} holds a tree of {tree.family}, not {family}.")
        return tree
    return PaintedTree.parse(family, text)


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        print(text)
        return
    Path(output).write_text(text + "\n", encoding="utf-8")
    print(f"Output saved successfully to: {output}")


def _render(value, output_format: str) -> str:
    if output_format == "json":
        return json.dumps(value.to_json(), indent=2)
    return str(value)


def _graph_from_args(args):
    return make_graph(args.graph, *args.sizes)


def _poset_from_args(args) -> FacePoset:
    if args.graph is not None:
        return TUBING_POSETS[args.order](_graph_from_args(args))
    if args.family is None:
        raise InvalidArgumentError("A poset needs --family or --graph.")
    return build_poset(PaintedFamily.parse(args.family), args.degree)


def _count_grid(args) -> List[Sequence[int]]:
    _, arity, _ = COUNT_KINDS[args.kind]
    if arity == 1:
        return [(n,) for n in parse_range(args.n)]
    if args.m is None:
        raise InvalidArgumentError(f"Count {args.kind} takes --m and --n.")
    return list(cartesian_product(parse_range(args.m), parse_range(args.n)))


def run_enumerate(args) -> int:
    level = EnumerationLevel.VERTEX_ONLY if args.vertices else EnumerationLevel.ALL_FACES
    trees = enumerate_painted(PaintedFamily.parse(args.family), args.degree, level)
    if args.format == "json":
        _emit(json.dumps([tree.to_json() for tree in trees], indent=2), args.output)
    else:
        _emit("\n".join(str(tree) for tree in trees), args.output)
    return EXIT_OK


def run_coproduct(args) -> int:
    family = PaintedFamily.parse(args.family)
    _emit(_render(coproduct(read_tree(family, args.tree)), args.format), args.output)
    return EXIT_OK


def run_product(args) -> int:
    family = PaintedFamily.parse(args.family)
    result = product(read_tree(family, args.left), read_tree(family, args.right), Side(args.side))
    _emit(_render(result, args.format), args.output)
    return EXIT_OK


def run_antipode(args) -> int:
    family = PaintedFamily.parse(args.family)
    result = antipode(read_tree(family, args.tree), Side(args.side))
    _emit(_render(result, args.format), args.output)
    return EXIT_OK


def run_poset(args) -> int:
    poset = _poset_from_args(args)
    if args.format == "json":
        text = poset.to_json_string()
    elif args.format == "dot":
        text = poset.to_dot()
    else:
        text = f"{poset.name}: {len(poset)} elements, f-vector {poset.f_vector()}"
    _emit(text, args.output)
    return EXIT_OK


def run_tubings(args) -> int:
    graph = _graph_from_args(args)
    if args.marked:
        items = enumerate_marked_tubings(graph)
    else:
        items = enumerate_tubings(graph, maximal_only=args.maximal)
    if args.format == "json":
        _emit(json.dumps([item.to_json() for item in items], indent=2), args.output)
    else:
        _emit("\n".join(str(item) for item in items), args.output)
    return EXIT_OK


def run_bijection(args) -> int:
    report = verify_order_iso(BIJECTION_BUILDERS[args.name](args.degree))
    _emit(_render(report, args.format), args.output)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def run_shuffle_product(args) -> int:
    left = StelloVertexNotation.parse(args.left)
    right = StelloVertexNotation.parse(args.right)
    _emit(_render(star_product(left, right), args.format), args.output)
    return EXIT_OK


def run_count(args) -> int:
    table = count_table(args.kind, _count_grid(args), brute_force=args.brute_force)
    if args.output:
        export_count_table(table, args.output)
    elif args.format == "json":
        print(table.to_dataframe().to_json(orient="records"))
    elif args.format == "csv":
        print(table.to_dataframe().to_csv(index=False), end="")
    else:
        print(table)
    return EXIT_OK


def run_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(names, args.max_degree, args.workers)
    failed = any(result.counts_as_failure for result in results)
    if args.format == "json":
        report = {"ok": not failed, "checks": [result.to_json() for result in results]}
        _emit(json.dumps(report, indent=2), args.output)
    else:
        _emit("\n".join(str(result) for result in results), args.output)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def run_export(args) -> int:
    if args.what == "count":
        export_count_table(
            count_table(args.kind, _count_grid(args), brute_force=args.brute_force), args.output
        )
    elif args.what == "poset":
        poset = _poset_from_args(args)
        if args.format == "dot":
            export_poset_dot(poset, args.output)
        else:
            export_poset_json(poset, args.output)
    elif args.what == "hasse":
        save_hasse_diagram(_poset_from_args(args), args.output)
    else:
        families = [PaintedFamily.parse(text) for text in args.families]
        save_f_vectors(families, args.degree, args.output)
    return EXIT_OK


def _add_family(parser, required: bool = True):
    parser.add_argument(
        "--family", required=required, help="Painted family as forest/base, e.g. plane/wo."
    )


def _add_graph(parser):
    parser.add_argument("--graph", choices=sorted(GRAPH_KINDS), default=None)
    parser.add_argument("--sizes", type=int, nargs="+", default=[], help="Graph size(s).")
    parser.add_argument("--order", choices=sorted(TUBING_POSETS), default="tubings")


def _add_output(parser, formats: Sequence[str] = ("json", "text"), default: str = "json"):
    parser.add_argument("--format", choices=list(formats), default=default)
    parser.add_argument("--output", default=None, help="File to write instead of stdout.")


def _add_count_args(parser):
    parser.add_argument("kind", choices=sorted(COUNT_KINDS))
    parser.add_argument("--n", default="0..9", help="Range such as 0..9 or 1,2,5.")
    parser.add_argument("--m", default=None, help="First parameter range for two-parameter counts.")
    parser.add_argument("--brute-force", action="store_true", help="Add enumerated counts.")


def build_parser() -> argparse.ArgumentParser:  # pylint: disable=unused-variable
    parser = argparse.ArgumentParser(
        prog="painted-trees",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    sub = verbs.add_parser("enumerate", help="List painted trees.")
    _add_family(sub)
    sub.add_argument("--degree", type=int, required=True)
    sub.add_argument("--vertices", action="store_true", help="Only vertex trees.")
    _add_output(sub, default="text")
    sub.set_defaults(handler=run_enumerate)

    sub = verbs.add_parser("coproduct", help="Coproduct of a painted tree.")
    _add_family(sub)
    sub.add_argument("tree")
    _add_output(sub)
    sub.set_defaults(handler=run_coproduct)

    sub = verbs.add_parser("product", help="Product of two painted trees.")
    _add_family(sub)
    sub.add_argument("--side", choices=[side.value for side in Side], default=Side.LEFT.value)
    sub.add_argument("left")
    sub.add_argument("right")
    _add_output(sub)
    sub.set_defaults(handler=run_product)

    sub = verbs.add_parser("antipode", help="Antipode of a painted tree.")
    _add_family(sub)
    sub.add_argument("--side", choices=[side.value for side in Side], default=Side.LEFT.value)
    sub.add_argument("tree")
    _add_output(sub)
    sub.set_defaults(handler=run_antipode)

    sub = verbs.add_parser("poset", help="Face poset of a family or a graph.")
    _add_family(sub, required=False)
    sub.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    _add_graph(sub)
    _add_output(sub, formats=("json", "dot", "text"), default="text")
    sub.set_defaults(handler=run_poset)

    sub = verbs.add_parser("tubings", help="Tubings of a graph.")
    sub.add_argument("--graph", choices=sorted(GRAPH_KINDS), required=True)
    sub.add_argument("--sizes", type=int, nargs="+", required=True)
    sub.add_argument("--maximal", action="store_true", help="Only maximal tubings.")
    sub.add_argument("--marked", action="store_true", help="Marked tubings instead.")
    _add_output(sub, default="text")
    sub.set_defaults(handler=run_tubings)

    sub = verbs.add_parser("bijection", help="Check a tubing bijection.")
    sub.add_argument("name", choices=sorted(BIJECTION_BUILDERS))
    sub.add_argument("--degree", type=int, default=2)
    _add_output(sub)
    sub.set_defaults(handler=run_bijection)

    sub = verbs.add_parser("shuffle-product", help="Product of Tub_r(u) notations.")
    sub.add_argument("left")
    sub.add_argument("right")
    _add_output(sub)
    sub.set_defaults(handler=run_shuffle_product)

    sub = verbs.add_parser("count", help="Counting formulas.")
    _add_count_args(sub)
    _add_output(sub, formats=("csv", "json", "text"), default="text")
    sub.set_defaults(handler=run_count)

    sub = verbs.add_parser("verify", help="Run verification suites.")
    sub.add_argument("suite", choices=["all"] + sorted(SUITES))
    sub.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    sub.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    _add_output(sub, default="text")
    sub.set_defaults(handler=run_verify)

    sub = verbs.add_parser("export", help="Write results to files.")
    exports = sub.add_subparsers(dest="what", required=True)
    target = exports.add_parser("count")
    _add_count_args(target)
    target.add_argument("--output", required=True)
    target = exports.add_parser("poset")
    _add_family(target, required=False)
    target.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    _add_graph(target)
    target.add_argument("--format", choices=["dot", "json"], default="dot")
    target.add_argument("--output", required=True)
    target = exports.add_parser("hasse")
    _add_family(target, required=False)
    target.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    _add_graph(target)
    target.add_argument("--output", required=True)
    target = exports.add_parser("fvectors")
    target.add_argument("--families", nargs="+", required=True)
    target.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    target.add_argument("--output", required=True)
    sub.set_defaults(handler=run_export)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:  # pylint: disable=unused-variable
    """
    Parses the arguments and runs the verb.

    Returns:
        int: 0 on success, 1 when a check fails, 2 on a usage error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_OK if error.code in (0, None) else EXIT_USAGE
    try:
        return args.handler(args)
    except PaintedTreesError as error:
        print(f"error: {type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
