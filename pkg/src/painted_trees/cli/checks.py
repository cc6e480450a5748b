#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module collects the verification suites run by `painted-trees verify`. Each suite yields
`CheckResult` rows; the suites are independent and can be spread over worker processes.

Classes:
- `CheckResult`: Outcome of one check.

Functions:
- `poset_checks`, `tubing_checks`, `bijection_checks`, `hopf_checks`, `antipode_checks`,
  `shuffle_checks`, `count_checks`.
- `run_suites`: Runs suites sequentially or on a process pool.
"""

# Standard library imports
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Dict, List, Sequence

# Local application/library specific imports
from painted_trees.bijections.isomorphisms import BIJECTION_BUILDERS, verify_order_iso
from painted_trees.enumeration.counting import (
    COUNT_KINDS,
    DOUBLE_SUM,
    catalan_transform,
    ptera_vertices,
)
from painted_trees.hopf.formal_sums import FormalSum
from painted_trees.hopf.hopf_operations import (
    Side,
    acting_trees,
    action_law_holds,
    coassociativity_holds,
    connection_axioms_hold,
    convolution_check,
    counit_law_holds,
    product,
    product_associativity_holds,
    supported_sides,
)
from painted_trees.painted.painted_tree import PaintedFamily, unit_tree
from painted_trees.painted.splitting import enumerate_painted
from painted_trees.posets.face_poset import verify_poset_axioms
from painted_trees.posets.growth import build_poset
from painted_trees.shuffle_algebra.stello_shuffle import (
    associativity_failures,
    shuffle_associativity_holds,
    shuffles,
)
from painted_trees.tubings.graphs import make_graph
from painted_trees.tubings.tubings import all_tubes, facet_decomposition_holds

DEFAULT_MAX_DEGREE = 4
DEFAULT_WORKERS = 1


@dataclass
class CheckResult:  # pylint: disable=unused-variable
    """
    Attributes:
        suite (str): The suite the check belongs to.
        name (str): What was checked.
        ok (bool): Whether the check passed.
        detail (str): Extra information, failures first.
        informational (bool): Failures are reported without failing the run.
    """

    suite: str
    name: str
    ok: bool
    detail: str = ""
    informational: bool = False

    @property
    def counts_as_failure(self) -> bool:
        return not self.ok and not self.informational

    def __str__(self) -> str:
        status = "pass" if self.ok else ("note" if self.informational else "FAIL")
        text = f"{self.suite} {self.name}: {status}"
        return f"{text} ({self.detail})" if self.detail else text

    def to_json(self) -> Dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "ok": self.ok,
            "detail": self.detail,
            "informational": self.informational,
        }


def poset_checks(max_degree: int) -> List[CheckResult]:  # pylint: disable=unused-variable
    """
    Poset axioms and the Euler relation for every family up to max_degree. Families without a
    known polytope are informational.
    """
    results = []
    for family in PaintedFamily.all():
        for degree in range(1, max_degree + 1):
            poset = build_poset(family, degree)
            report = verify_poset_axioms(poset)
            results.append(
                CheckResult(
                    "posets",
                    f"{family} n={degree}",
                    report.ok,
                    "; ".join(report.violations[:3]),
                    informational=not family.is_proven,
                )
            )
            ranked = poset.ranks is not None
            results.append(
                CheckResult(
                    "posets",
                    f"euler {family} n={degree}",
                    ranked and poset.satisfies_euler_relation(),
                    f"alternating sum {poset.euler_sum()}" if ranked else "not ranked",
                    informational=not family.is_proven,
                )
            )
    return results


def tubing_checks(max_degree: int) -> List[CheckResult]:  # pylint: disable=unused-variable
    """Facet decompositions of every proper tube of the path, complete, star and fan graphs."""
    results = []
    for kind, sizes in [("path", ()), ("complete", ()), ("star", ()), ("fan", (1,))]:
        for size in range(2, max_degree + 2):
            graph = make_graph(kind, *sizes, size)
            failures = [
                sorted(tube)
                for tube in all_tubes(graph)[:-1]
                if not facet_decomposition_holds(graph, tube)
            ]
            results.append(
                CheckResult(
                    "tubings",
                    f"facets of {kind} n={size}",
                    not failures,
                    str(failures[:3]) if failures else "",
                )
            )
    return results


def bijection_checks(max_degree: int) -> List[CheckResult]:  # pylint: disable=unused-variable
    results = []
    for builder in BIJECTION_BUILDERS.values():
        for degree in range(1, max_degree + 1):
            report = verify_order_iso(builder(degree))
            results.append(
                CheckResult(
                    "bijections",
                    report.name,
                    report.ok,
                    "; ".join(report.counterexamples[:3]),
                )
            )
    return results


def _failures(label: str, checks) -> CheckResult:
    failures = [name for name, ok in checks if not ok]
    return CheckResult("hopf", label, not failures, ", ".join(failures[:3]))


def hopf_checks(max_degree: int) -> List[CheckResult]:  # pylint: disable=unused-variable
    """
    Coassociativity and the counit law on every face tree of every family up to max_degree.
    On the sides a family admits, the unit law, the connection axioms, the action law and product
    associativity are checked up to total degree max_degree - 1.
    """
    results = []
    lower = max_degree - 1
    for family in PaintedFamily.all():
        trees = {degree: enumerate_painted(family, degree) for degree in range(max_degree + 1)}
        for degree in range(max_degree + 1):
            results.append(
                _failures(
                    f"coassociativity {family} n={degree}",
                    ((str(tree), coassociativity_holds(tree)) for tree in trees[degree]),
                )
            )
            results.append(
                _failures(
                    f"counit {family} n={degree}",
                    ((str(tree), counit_law_holds(tree)) for tree in trees[degree]),
                )
            )
        for side in supported_sides(family):
            results.extend(_side_checks(family, side, trees, lower))
    return results


def _side_checks(family: PaintedFamily, side: Side, trees, bound: int) -> List[CheckResult]:
    eta = unit_tree(family)
    target = family.forest_kind if side is Side.LEFT else family.base_kind
    small = [tree for degree in range(bound + 1) for tree in trees[degree]]
    unit_pairs = (
        (
            str(tree),
            (product(eta, tree, side) if side is Side.LEFT else product(tree, eta, side))
            == FormalSum.basis(tree),
        )
        for tree in small
    )
    actions = (
        (f"{acting} on {tree}", action_law_holds(acting, tree, side))
        for acting_degree in range(bound + 1)
        for acting in acting_trees(target, acting_degree)
        for degree in range(bound + 1 - acting_degree)
        for tree in trees[degree]
    )
    triples = (
        (f"{first} {second} {third}", product_associativity_holds(first, second, third, side))
        for first_degree in range(bound + 1)
        for second_degree in range(bound + 1 - first_degree)
        for third_degree in range(bound + 1 - first_degree - second_degree)
        for first in trees[first_degree]
        for second in trees[second_degree]
        for third in trees[third_degree]
    )
    label = f"{family} {side.value} n<={bound}"
    return [
        _failures(f"unit {label}", unit_pairs),
        _failures(
            f"connection {label}",
            ((str(tree), connection_axioms_hold(tree, target)) for tree in small),
        ),
        _failures(f"action {label}", actions),
        _failures(f"associativity {label}", triples),
    ]


def antipode_checks(max_degree: int) -> List[CheckResult]:  # pylint: disable=unused-variable
    """The antipode convolution identity on every face tree, for each supported side."""
    results = []
    for family in PaintedFamily.all():
        for side in supported_sides(family):
            for degree in range(max_degree + 1):
                failures = [
                    str(tree)
                    for tree in enumerate_painted(family, degree)
                    if not convolution_check(tree, side)
                ]
                results.append(
                    CheckResult(
                        "antipode",
                        f"{family} {side.value} n={degree}",
                        not failures,
                        ", ".join(failures[:3]),
                    )
                )
    return results


def shuffle_checks(max_degree: int) -> List[CheckResult]:  # pylint: disable=unused-variable
    """Shuffle counts, iterated shuffles and star product associativity up to max_degree + 2."""
    results = []
    bound = max_degree + 2
    iterated = [
        (first, second, bound - first - second)
        for first in range(bound + 1)
        for second in range(bound + 1 - first)
    ]
    bad = [sizes for sizes in iterated if not shuffle_associativity_holds(*sizes)]
    results.append(
        CheckResult(
            "shuffle", f"iterated shuffles n+m+r={bound}", not bad, str(bad[:3]) if bad else ""
        )
    )
    counts_ok = all(
        len(shuffles(first, second)) == comb(first + second, first)
        for first in range(max_degree + 1)
        for second in range(max_degree + 1)
    )
    results.append(CheckResult("shuffle", "shuffle counts", counts_ok))
    failures = associativity_failures(bound)
    results.append(
        CheckResult(
            "shuffle",
            f"star product associativity n+m+p<={bound}",
            not failures,
            ", ".join(failures[:3]),
        )
    )
    return results


def count_checks(max_degree: int) -> List[CheckResult]:  # pylint: disable=unused-variable
    """Formulas against enumeration, and the two forms of the vertex count against each other."""
    results = []
    for kind, (formula, arity, brute_force) in COUNT_KINDS.items():
        if arity == 1:
            grid = [(n,) for n in range(1, max_degree + 1)]
        else:
            grid = [(m, n) for m in range(1, max_degree + 1) for n in range(1, max_degree + 1)]
        mismatches = [params for params in grid if formula(*params) != brute_force(*params)]
        results.append(
            CheckResult("counts", kind, not mismatches, str(mismatches[:3]) if mismatches else "")
        )
    factorials = [factorial(k) for k in range(10)]
    transform_ok = catalan_transform(factorials) == [ptera_vertices(n) for n in range(10)] and all(
        ptera_vertices(n, DOUBLE_SUM) == ptera_vertices(n) for n in range(10)
    )
    results.append(CheckResult("counts", "closed form, double sum and transform", transform_ok))
    return results


SUITES: Dict[str, Callable[[int], List[CheckResult]]] = {
    "posets": poset_checks,
    "tubings": tubing_checks,
    "bijections": bijection_checks,
    "hopf": hopf_checks,
    "antipode": antipode_checks,
    "shuffle": shuffle_checks,
    "counts": count_checks,
}


def run_suites(  # pylint: disable=unused-variable
    names: Sequence[str], max_degree: int = DEFAULT_MAX_DEGREE, workers: int = DEFAULT_WORKERS
) -> List[CheckResult]:
    """
    Runs the named suites and concatenates their results in the order given.

    Parameters:
        names (Sequence[str]): Keys of `SUITES`.
        max_degree (int): Largest degree checked.
        workers (int): Worker processes; 1 runs in-process.

    Returns:
        List[CheckResult]: All results.
    """
    suites = [SUITES[name] for name in names]
    if workers <= 1 or len(suites) == 1:
        batches = [suite(max_degree) for suite in suites]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(suite, max_degree) for suite in suites]
            batches = [future.result() for future in futures]
    return [result for batch in batches for result in batch]
