#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module provides finite posets given by their covering relations, as produced by the growth
preorder on painted trees and by the tubing orders. A `FacePoset` is built from any strict
relation: the relation is closed transitively and reduced to its covers with networkx. When the
relation has cycles it is not a poset; the raw edges are kept, no ranks are assigned and
`verify_poset_axioms` reports the cycles.

Classes:
- `FacePoset`: Elements, covers, ranks, f-vector and Euler relation.
- `PosetReport`: Result of an axiom check.

Functions:
- `verify_poset_axioms`: Checks antisymmetry, a unique maximum and graded covers.
"""

# Standard library imports
import json
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

# Related third-party imports
import networkx as nx

# Local application/library specific imports
from painted_trees.errors import InvalidArgumentError, RankError


@dataclass
class FacePoset:  # pylint: disable=unused-variable
    """
    A finite poset stored by its Hasse diagram.

    Attributes:
        elements (List[Hashable]): The elements, in a fixed order.
        covers (List[Tuple[int, int]]): Pairs (i, j) where element i is covered by element j. If
            the input relation had cycles these are the raw relation edges instead.
        ranks (Optional[List[int]]): Length of the longest chain from a minimal element up to each
            element, or None when the relation is not acyclic.
        name (str): Label used in reports and exports.
        conjectural (bool): Marks posets whose polytopality is not established.
    """

    elements: List[Hashable]
    covers: List[Tuple[int, int]]
    ranks: Optional[List[int]] = None
    name: str = ""
    conjectural: bool = False
    _index: Dict[Hashable, int] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        self._index = {element: position for position, element in enumerate(self.elements)}

    @classmethod
    def from_relation(
        cls,
        elements: Sequence[Hashable],
        relation: Iterable[Tuple[Hashable, Hashable]],
        name: str = "",
        conjectural: bool = False,
    ) -> "FacePoset":
        """
        Builds the poset generated by a strict relation.

        Parameters:
            elements (Sequence[Hashable]): All elements.
            relation (Iterable[Tuple]): Pairs (s, t) meaning s lies below t. Need not be
                transitive or minimal.
            name (str): Label for reports.
            conjectural (bool): Whether to mark the poset as conjectural.

        Returns:
            FacePoset: The poset.

        Raises:
            InvalidArgumentError: If a pair mentions an unknown element.
        """
        elements = list(elements)
        index = {element: position for position, element in enumerate(elements)}
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(elements)))
        for lower, upper in relation:
            if lower not in index or upper not in index:
                raise InvalidArgumentError(f"Relation pair ({lower}, {upper}) is not in the poset.")
            if lower != upper:
                graph.add_edge(index[lower], index[upper])
        if not nx.is_directed_acyclic_graph(graph):
            return cls(elements, sorted(graph.edges()), None, name, conjectural)
        hasse = nx.transitive_reduction(graph)
        ranks = [0] * len(elements)
        for node in nx.topological_sort(hasse):
            for successor in hasse.successors(node):
                ranks[successor] = max(ranks[successor], ranks[node] + 1)
        return cls(elements, sorted(hasse.edges()), ranks, name, conjectural)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, element: Hashable) -> int:
        if element not in self._index:
            raise InvalidArgumentError(f"{element} is not an element of the poset.")
        return self._index[element]

    def to_networkx(self) -> nx.DiGraph:
        """The Hasse diagram with edges pointing upwards, labelled by canonical strings."""
        graph = nx.DiGraph()
        for position, element in enumerate(self.elements):
            rank = None if self.ranks is None else self.ranks[position]
            graph.add_node(position, label=str(element), rank=rank)
        graph.add_edges_from(self.covers)
        return graph

    def leq(self, lower: Hashable, upper: Hashable) -> bool:
        """Reflexive reachability along covers."""
        source, target = self.index(lower), self.index(upper)
        return source == target or nx.has_path(self.to_networkx(), source, target)

    def upper_covers(self, element: Hashable) -> List[Hashable]:
        position = self.index(element)
        return [self.elements[upper] for lower, upper in self.covers if lower == position]

    def maximal_elements(self) -> List[Hashable]:
        has_upper = {lower for lower, _ in self.covers}
        return [
            element for position, element in enumerate(self.elements) if position not in has_upper
        ]

    def minimal_elements(self) -> List[Hashable]:
        has_lower = {upper for _, upper in self.covers}
        return [
            element for position, element in enumerate(self.elements) if position not in has_lower
        ]

    def f_vector(self) -> List[int]:
        """
        Counts the elements of every rank, rank 0 (vertices) first.

        Raises:
            RankError: If the poset carries no rank function.
        """
        if self.ranks is None:
            raise RankError(f"Poset {self.name or '(unnamed)'} is not ranked.")
        counts = [0] * (max(self.ranks, default=-1) + 1)
        for rank in self.ranks:
            counts[rank] += 1
        return counts

    def euler_sum(self) -> int:
        """The alternating sum f0 - f1 + ... over every rank below the top."""
        return sum((-1) ** rank * count for rank, count in enumerate(self.f_vector()[:-1]))

    def satisfies_euler_relation(self) -> bool:
        """
        Compares `euler_sum` with 1 - (-1)^d, the Euler characteristic of the boundary sphere of a
        d-dimensional polytope, d being the rank of the top.
        """
        dimension = len(self.f_vector()) - 1
        return self.euler_sum() == 1 - (-1) ** dimension

    def to_json(self) -> Dict:
        return {
            "elements": [str(element) for element in self.elements],
            "covers": [[lower, upper] for lower, upper in self.covers],
            "ranks": self.ranks,
        }

    def to_json_string(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def to_dot(self) -> str:
        """DOT text of the Hasse diagram."""
        graph = nx.DiGraph()
        for position, element in enumerate(self.elements):
            graph.add_node(position, label=f'"{element}"')
        graph.add_edges_from(self.covers)
        return nx.nx_pydot.to_pydot(graph).to_string()


@dataclass
class PosetReport:  # pylint: disable=unused-variable
    """
    Outcome of `verify_poset_axioms`.

    Attributes:
        name (str): The poset label.
        antisymmetric (bool): No relation cycles.
        unique_maximum (bool): Exactly one maximal element.
        graded (bool): Every cover raises the rank by one and minimal elements have rank 0.
        conjectural (bool): Copied from the poset.
        violations (List[str]): Human-readable descriptions of every failure.
    """

    name: str
    antisymmetric: bool
    unique_maximum: bool
    graded: bool
    conjectural: bool = False
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        label = " (conjectural)" if self.conjectural else ""
        return f"{self.name}{label}: {status}"


def verify_poset_axioms(poset: FacePoset) -> PosetReport:  # pylint: disable=unused-variable
    """
    Checks that the relation is antisymmetric, that there is a unique maximal element and that
    covers are graded.

    Parameters:
        poset (FacePoset): The poset to check.

    Returns:
        PosetReport: The findings; `violations` is empty when every check passes.
    """
    violations: List[str] = []
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(poset)))
    graph.add_edges_from(poset.covers)

    antisymmetric = nx.is_directed_acyclic_graph(graph)
    if not antisymmetric:
        for cycle in nx.simple_cycles(graph):
            members = ", ".join(str(poset.elements[node]) for node in cycle)
            violations.append(f"relation cycle through {members}")
            if len(violations) >= 5:
                break

    maxima = [node for node in graph.nodes if graph.out_degree(node) == 0]
    unique_maximum = antisymmetric and len(maxima) == 1
    if antisymmetric and len(maxima) != 1:
        violations.append(f"{len(maxima)} maximal elements")

    graded = antisymmetric and poset.ranks is not None
    if graded:
        for node in graph.nodes:
            if graph.in_degree(node) == 0 and poset.ranks[node] != 0:
                graded = False
                violations.append(f"minimal element {poset.elements[node]} has nonzero rank")
        for lower, upper in poset.covers:
            if poset.ranks[upper] != poset.ranks[lower] + 1:
                graded = False
                violations.append(
                    f"cover {poset.elements[lower]} < {poset.elements[upper]} skips a rank"
                )
    return PosetReport(
        poset.name, antisymmetric, unique_maximum, graded, poset.conjectural, violations
    )
