#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module implements tubes and tubings of simple graphs, the face poset of the graph
associahedron.

A tube is a nonempty set of nodes inducing a connected subgraph; the universal tube is the whole
node set and belongs to every tubing. Two tubes are compatible when they are nested, or disjoint
with no edge between them. A tubing is a set of pairwise compatible tubes; on a disconnected
graph it may not contain every tube spanned by a connected component. Tubings are ordered by
reverse inclusion, so maximal tubings are the vertices and the universal tubing alone is the top.

Classes:
- `Tubing`: An immutable set of tubes with canonical string and JSON forms.

Functions:
- `is_tube`, `all_tubes`, `compatible`: Tubes and compatibility.
- `enumerate_tubings`: All tubings, or only the maximal ones.
- `reconnected_complement`: The graph left after contracting a tube away.
- `facet_counts`, `facet_decomposition_holds`: The product structure of the faces inside a tube.
- `tubing_leq`, `tubing_poset`: The order on tubings.
"""

# Standard library imports
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

# Related third-party imports
import networkx as nx

# Local application/library specific imports
from painted_trees.errors import (
    GraphMismatchError,
    InvalidTubingError,
    UnsupportedStructureError,
)
from painted_trees.posets.face_poset import FacePoset

Tube = FrozenSet[int]


def tube_key(tube: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:  # pylint: disable=unused-variable
    """Sort key: smaller tubes first, then lexicographic."""
    nodes = tuple(sorted(tube))
    return (len(nodes), nodes)


def tube_string(tube: Iterable[int]) -> str:  # pylint: disable=unused-variable
    return "{" + ",".join(str(node) for node in sorted(tube)) + "}"


@dataclass(frozen=True)
class Tubing:  # pylint: disable=unused-variable
    """
    A tubing, stored with its universal tube.

    Attributes:
        tubes (FrozenSet[Tube]): Every tube of the tubing, the universal tube included.
    """

    tubes: FrozenSet[Tube]

    @classmethod
    def of(cls, universal: Iterable[int], tubes: Iterable[Iterable[int]] = ()) -> "Tubing":
        universal = frozenset(universal)
        return cls(frozenset({universal} | {frozenset(tube) for tube in tubes}))

    @property
    def universal(self) -> Tube:
        return max(self.tubes, key=len)

    def proper_tubes(self) -> List[Tube]:
        """Non-universal tubes, smaller first."""
        universal = self.universal
        return sorted((tube for tube in self.tubes if tube != universal), key=tube_key)

    def __len__(self) -> int:
        return len(self.tubes)

    def __iter__(self) -> Iterator[Tube]:
        return iter(sorted(self.tubes, key=tube_key))

    def __contains__(self, tube) -> bool:
        return frozenset(tube) in self.tubes

    def __str__(self) -> str:
        return "".join(tube_string(tube) for tube in self)

    def to_json(self) -> Dict:
        return {"tubes": [sorted(tube) for tube in self]}


def is_tube(graph: nx.Graph, nodes: Iterable[int]) -> bool:  # pylint: disable=unused-variable
    nodes = set(nodes)
    return bool(nodes) and nodes <= set(graph.nodes) and nx.is_connected(graph.subgraph(nodes))


def all_tubes(graph: nx.Graph) -> List[Tube]:  # pylint: disable=unused-variable
    """Every tube of the graph, the universal tube included (even when disconnected)."""
    nodes = sorted(graph.nodes)
    tubes = [
        frozenset(subset)
        for size in range(1, len(nodes) + 1)
        for subset in combinations(nodes, size)
        if nx.is_connected(graph.subgraph(subset))
    ]
    universal = frozenset(nodes)
    if nodes and universal not in tubes:
        tubes.append(universal)
    return sorted(tubes, key=tube_key)


def compatible(  # pylint: disable=unused-variable
    graph: nx.Graph, first: Tube, second: Tube
) -> bool:
    """Nested, or disjoint and not adjacent."""
    if first <= second or second <= first:
        return True
    if first & second:
        return False
    return not any(graph.has_edge(a, b) for a in first for b in second)


def _component_tubes(graph: nx.Graph) -> FrozenSet[Tube]:
    return frozenset(frozenset(component) for component in nx.connected_components(graph))


def _compatibility_graph(graph: nx.Graph) -> Tuple[nx.Graph, Tube]:
    universal = frozenset(graph.nodes)
    proper = [tube for tube in all_tubes(graph) if tube != universal]
    pairs = nx.Graph()
    pairs.add_nodes_from(proper)
    for first, second in combinations(proper, 2):
        if compatible(graph, first, second):
            pairs.add_edge(first, second)
    return pairs, universal


def is_tubing(graph: nx.Graph, tubing: Tubing) -> bool:  # pylint: disable=unused-variable
    """Checks tubes, pairwise compatibility and the component rule for disconnected graphs."""
    universal = frozenset(graph.nodes)
    if universal not in tubing.tubes:
        return False
    proper = [tube for tube in tubing.tubes if tube != universal]
    if not all(is_tube(graph, tube) for tube in proper):
        return False
    if not all(compatible(graph, first, second) for first, second in combinations(proper, 2)):
        return False
    components = _component_tubes(graph)
    return not (len(components) > 1 and components <= set(proper))


def enumerate_tubings(  # pylint: disable=unused-variable
    graph: nx.Graph, maximal_only: bool = False
) -> List[Tubing]:
    """
    Lists every tubing of a graph, or only the maximal ones (n tubes for n nodes, the universal
    tube included), sorted by size and canonical string. Tubings are the cliques of the
    compatibility graph on proper tubes.

    Parameters:
        graph (nx.Graph): The graph.
        maximal_only (bool): Whether to list only maximal tubings.

    Returns:
        List[Tubing]: The tubings.
    """
    if graph.number_of_nodes() == 0:
        return []
    pairs, universal = _compatibility_graph(graph)
    components = _component_tubes(graph)
    disconnected = len(components) > 1
    if maximal_only and not disconnected:
        cliques: Iterable = nx.find_cliques(pairs) if pairs.number_of_nodes() else [[]]
    else:
        cliques = [[]] + list(nx.enumerate_all_cliques(pairs))
    result = set()
    for clique in cliques:
        if disconnected and components <= set(clique):
            continue
        result.add(Tubing(frozenset(clique) | {universal}))
    if maximal_only:
        size = graph.number_of_nodes()
        result = {tubing for tubing in result if len(tubing) == size}
    return sorted(result, key=lambda tubing: (-len(tubing), str(tubing)))


def reconnected_complement(  # pylint: disable=unused-variable
    graph: nx.Graph, tube: Iterable[int]
) -> nx.Graph:
    """
    The graph on the nodes outside a node set, where a and b are adjacent when they are adjacent
    in the graph or both adjacent to one connected component of the set.
    """
    tube = set(tube)
    complement = nx.Graph()
    complement.add_nodes_from(node for node in graph.nodes if node not in tube)
    complement.add_edges_from(
        (a, b) for a, b in graph.edges if a not in tube and b not in tube
    )
    for component in nx.connected_components(graph.subgraph(tube)):
        neighbours = sorted(
            {other for node in component for other in graph.neighbors(node)} - tube
        )
        complement.add_edges_from(combinations(neighbours, 2))
    return complement


def facet_counts(  # pylint: disable=unused-variable
    graph: nx.Graph, tube: Iterable[int]
) -> Tuple[int, int, int]:
    """
    Counts the faces of the facet of a proper tube t against its two factors: the tubings of the
    subgraph induced by t and those of the reconnected complement of t.

    Parameters:
        graph (nx.Graph): A connected graph.
        tube (Iterable[int]): A proper tube of the graph.

    Returns:
        Tuple[int, int, int]: Tubings containing t, tubings of G(t), tubings of G*(t).

    Raises:
        UnsupportedStructureError: If the graph is not connected.
        InvalidTubingError: If the node set is not a proper tube.
    """
    tube = frozenset(tube)
    if graph.number_of_nodes() == 0 or not nx.is_connected(graph):
        raise UnsupportedStructureError("Facet decompositions need a connected graph.")
    if not is_tube(graph, tube) or tube == frozenset(graph.nodes):
        raise InvalidTubingError(f"{tube_string(tube)} is not a proper tube of the graph.")
    containing = sum(1 for tubing in enumerate_tubings(graph) if tube in tubing.tubes)
    inside = len(enumerate_tubings(graph.subgraph(tube).copy()))
    outside = len(enumerate_tubings(reconnected_complement(graph, tube)))
    return containing, inside, outside


def facet_decomposition_holds(  # pylint: disable=unused-variable
    graph: nx.Graph, tube: Iterable[int]
) -> bool:
    containing, inside, outside = facet_counts(graph, tube)
    return containing == inside * outside


def tubing_leq(lower: Tubing, upper: Tubing) -> bool:  # pylint: disable=unused-variable
    """
    lower <= upper when upper is a subset of lower.

    Raises:
        GraphMismatchError: If the tubings live on different graphs.
    """
    if lower.universal != upper.universal:
        raise GraphMismatchError("Tubings of different graphs cannot be compared.")
    return upper.tubes <= lower.tubes


def tubing_poset(graph: nx.Graph) -> FacePoset:  # pylint: disable=unused-variable
    """
    The face poset of the graph associahedron: all tubings, covers removing one proper tube.

    Raises:
        InvalidTubingError: If the graph has no nodes.
    """
    tubings = enumerate_tubings(graph)
    if not tubings:
        raise InvalidTubingError("A graph without nodes has no tubings.")
    present = set(tubings)
    relation = []
    for lower in tubings:
        for tube in lower.proper_tubes():
            upper = Tubing(lower.tubes - {tube})
            if upper in present:
                relation.append((lower, upper))
    return FacePoset.from_relation(tubings, relation, name=f"tubings of {graph_name(graph)}")


def graph_name(graph: nx.Graph) -> str:  # pylint: disable=unused-variable
    return graph.graph.get("name") or f"graph({graph.number_of_nodes()} nodes)"
