#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module checks that the tubing bijections are isomorphisms of posets.

A `PosetIso` pairs two finite posets with a map on elements. `verify_order_iso` checks that the
map is a bijection, that it preserves and reflects the order on every pair of elements and that
both sides have the same f-vector.

Classes:
- `PosetIso`: A candidate isomorphism.
- `IsoReport`: Findings of a check.

Functions:
- `verify_order_iso`: Runs the checks.
- `perma_iso`, `stella1_iso`, `lift_iso`, `stella2_iso`, `stella3_iso`, `ptera_iso`,
  `composite_iso`, `identity_iso`: Candidate isomorphisms in a given degree.
"""

# Standard library imports
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Hashable, List, Optional, Set, Tuple

# Related third-party imports
import networkx as nx

# Local application/library specific imports
from painted_trees.bijections.painted_bijections import (
    LIFT_FAMILY,
    PERMA_FAMILY,
    PTERA_FAMILY,
    STELLA1_FAMILY,
    STELLA2_FAMILY,
    perma_from_tubing,
    phi_prime_lift,
    phi_ptera,
    phi_stella1,
    phi_stella2,
    phi_stella2_inverse,
    stella3_map,
)
from painted_trees.errors import InvalidArgumentError, RankError
from painted_trees.posets.face_poset import FacePoset
from painted_trees.posets.growth import build_poset
from painted_trees.tubings.graphs import complete_graph, fan_graph, star_graph, suspension
from painted_trees.tubings.marked_tubings import composihedron_poset, cubeahedron_poset
from painted_trees.tubings.tubings import tubing_poset

MAX_COUNTEREXAMPLES = 5


@dataclass
class PosetIso:  # pylint: disable=unused-variable
    """
    A map between the elements of two posets.

    Attributes:
        name (str): Label for reports.
        source (FacePoset): The domain.
        target (FacePoset): The codomain.
        mapping (Dict[Hashable, Hashable]): Image of every source element.
    """

    name: str
    source: FacePoset
    target: FacePoset
    mapping: Dict[Hashable, Hashable]

    @classmethod
    def from_function(
        cls, name: str, source: FacePoset, target: FacePoset, function: Callable
    ) -> "PosetIso":
        mapping = {element: function(element) for element in source.elements}
        return cls(name, source, target, mapping)


@dataclass
class IsoReport:  # pylint: disable=unused-variable
    """
    Outcome of `verify_order_iso`.

    Attributes:
        name (str): The isomorphism label.
        bijective (bool): The map is a bijection onto the target elements.
        order_preserving (bool): s <= t implies f(s) <= f(t).
        order_reflecting (bool): f(s) <= f(t) implies s <= t.
        source_f_vector (Optional[List[int]]): f-vector of the source, None if unranked.
        target_f_vector (Optional[List[int]]): f-vector of the target, None if unranked.
        counterexamples (List[str]): Up to five descriptions of failures.
    """

    name: str
    bijective: bool
    order_preserving: bool
    order_reflecting: bool
    source_f_vector: Optional[List[int]] = None
    target_f_vector: Optional[List[int]] = None
    counterexamples: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.bijective
            and self.order_preserving
            and self.order_reflecting
            and self.source_f_vector == self.target_f_vector
        )

    def __str__(self) -> str:
        status = "pass" if self.ok else "FAIL"
        return f"{self.name}: {status} (f-vector {self.source_f_vector})"

    def to_json(self) -> Dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "bijective": self.bijective,
            "orderPreserving": self.order_preserving,
            "orderReflecting": self.order_reflecting,
            "sourceFVector": self.source_f_vector,
            "targetFVector": self.target_f_vector,
            "counterexamples": self.counterexamples,
        }


def order_pairs(poset: FacePoset) -> Set[Tuple[int, int]]:  # pylint: disable=unused-variable
    """All index pairs (i, j) with element i <= element j."""
    graph = poset.to_networkx()
    pairs = set()
    for node in graph.nodes:
        pairs.add((node, node))
        pairs.update((node, upper) for upper in nx.descendants(graph, node))
    return pairs


def _f_vector(poset: FacePoset) -> Optional[List[int]]:
    try:
        return poset.f_vector()
    except RankError:
        return None


def verify_order_iso(iso: PosetIso) -> IsoReport:  # pylint: disable=unused-variable
    """
    Checks bijectivity, order preservation in both directions on all pairs, and f-vectors.

    Parameters:
        iso (PosetIso): The candidate isomorphism.

    Returns:
        IsoReport: The findings.
    """
    source, target = iso.source, iso.target
    counterexamples: List[str] = []

    def note(message: str) -> None:
        if len(counterexamples) < MAX_COUNTEREXAMPLES:
            counterexamples.append(message)

    images: List[int] = []
    bijective = len(source) == len(target)
    for element in source.elements:
        image = iso.mapping.get(element)
        try:
            images.append(target.index(image))
        except InvalidArgumentError:
            bijective = False
            images.append(-1)
            note(f"{element} maps to {image}, which is not in the target")
    if len(set(images)) != len(images):
        bijective = False
        note("two elements share an image")

    preserving = reflecting = True
    if bijective:
        source_pairs = order_pairs(source)
        target_pairs = order_pairs(target)
        for first, second in product(range(len(source)), repeat=2):
            below = (first, second) in source_pairs
            image_below = (images[first], images[second]) in target_pairs
            if below and not image_below:
                preserving = False
                note(f"{source.elements[first]} <= {source.elements[second]} is not preserved")
            elif image_below and not below:
                reflecting = False
                note(f"{source.elements[first]} <= {source.elements[second]} is not reflected")
    else:
        preserving = reflecting = False

    return IsoReport(
        iso.name,
        bijective,
        preserving,
        reflecting,
        _f_vector(source),
        _f_vector(target),
        counterexamples,
    )


def perma_iso(degree: int) -> PosetIso:  # pylint: disable=unused-variable
    """Tubings of the complete graph on 0..n against the permutohedron family."""
    return PosetIso.from_function(
        f"perma n={degree}",
        tubing_poset(suspension(complete_graph(degree))),
        build_poset(PERMA_FAMILY, degree),
        perma_from_tubing,
    )


def stella1_iso(degree: int) -> PosetIso:  # pylint: disable=unused-variable
    return PosetIso.from_function(
        f"stella1 n={degree}",
        tubing_poset(star_graph(degree)),
        build_poset(STELLA1_FAMILY, degree),
        phi_stella1,
    )


def lift_iso(degree: int) -> PosetIso:  # pylint: disable=unused-variable
    return PosetIso.from_function(
        f"lift n={degree}",
        composihedron_poset(complete_graph(degree)),
        build_poset(LIFT_FAMILY, degree),
        phi_prime_lift,
    )


def stella2_iso(degree: int) -> PosetIso:  # pylint: disable=unused-variable
    return PosetIso.from_function(
        f"stella2 n={degree}",
        cubeahedron_poset(complete_graph(degree)),
        build_poset(STELLA2_FAMILY, degree),
        phi_stella2,
    )


def stella3_iso(degree: int) -> PosetIso:  # pylint: disable=unused-variable
    return PosetIso.from_function(
        f"stella3 n={degree}",
        cubeahedron_poset(complete_graph(degree)),
        tubing_poset(star_graph(degree)),
        stella3_map,
    )


def ptera_iso(degree: int) -> PosetIso:  # pylint: disable=unused-variable
    return PosetIso.from_function(
        f"ptera n={degree}",
        tubing_poset(fan_graph(1, degree)),
        build_poset(PTERA_FAMILY, degree),
        phi_ptera,
    )


def composite_iso(degree: int) -> PosetIso:  # pylint: disable=unused-variable
    """
    Weakly ordered forests over corollas to corolla forests over weakly ordered trees, through
    the cubeahedron and the stellohedron.
    """
    return PosetIso.from_function(
        f"stella1 o stella3 o stella2^-1 n={degree}",
        build_poset(STELLA2_FAMILY, degree),
        build_poset(STELLA1_FAMILY, degree),
        lambda tree: phi_stella1(stella3_map(phi_stella2_inverse(tree))),
    )


def identity_iso(poset: FacePoset) -> PosetIso:  # pylint: disable=unused-variable
    return PosetIso.from_function(
        f"identity on {poset.name}", poset, poset, lambda element: element
    )


BIJECTION_BUILDERS = {
    "perma": perma_iso,
    "stella1": stella1_iso,
    "lift": lift_iso,
    "stella2": stella2_iso,
    "stella3": stella3_iso,
    "ptera": ptera_iso,
    "composite": composite_iso,
}
