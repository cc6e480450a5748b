#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module constructs the simple graphs whose tubings are studied in the package, with fixed
node labels:

- path P_n, complete K_n and edgeless C_n: nodes 1..n;
- star St_n: center 0 joined to leaves 1..n;
- fan F_{m,n}: path 1..n, with apexes 0 and n+1..n+m-1 joined to every path node;
- complete bipartite K_{m,n}: parts 0..m-1 and m..m+n-1;
- suspension of a graph without node 0: node 0 joined to every node.

Graphs are `networkx.Graph` objects.
"""

# Standard library imports
import json
from typing import Dict, Union

# Related third-party imports
import networkx as nx

# Local application/library specific imports
from painted_trees.errors import InvalidArgumentError


def _check_size(*sizes: int) -> None:
    for size in sizes:
        if size < 0:
            raise InvalidArgumentError(f"Graph sizes must be non-negative, received {size}.")


def path_graph(size: int) -> nx.Graph:  # pylint: disable=unused-variable
    _check_size(size)
    graph = nx.Graph()
    graph.add_nodes_from(range(1, size + 1))
    graph.add_edges_from((node, node + 1) for node in range(1, size))
    return graph


def complete_graph(size: int) -> nx.Graph:  # pylint: disable=unused-variable
    _check_size(size)
    return nx.complete_graph(range(1, size + 1))


def edgeless_graph(size: int) -> nx.Graph:  # pylint: disable=unused-variable
    _check_size(size)
    return nx.empty_graph(range(1, size + 1))


def suspension(graph: nx.Graph) -> nx.Graph:  # pylint: disable=unused-variable
    """
    Adds node 0 adjacent to every node of the graph.

    Raises:
        InvalidArgumentError: If the graph already has a node 0.
    """
    if 0 in graph:
        raise InvalidArgumentError("The suspension node 0 is already present.")
    suspended = graph.copy()
    suspended.add_node(0)
    suspended.add_edges_from((0, node) for node in graph.nodes)
    return suspended


def star_graph(size: int) -> nx.Graph:  # pylint: disable=unused-variable
    """St_n, the suspension of the edgeless graph."""
    return suspension(edgeless_graph(size))


def fan_graph(apexes: int, size: int) -> nx.Graph:  # pylint: disable=unused-variable
    """
    F_{m,n}: the join of m apexes with the path 1..n. The first apex is 0, so F_{1,n} is the
    suspension of the path.

    Raises:
        InvalidArgumentError: If a size is negative or there is no apex.
    """
    _check_size(apexes, size)
    if apexes < 1:
        raise InvalidArgumentError("A fan graph needs at least one apex.")
    graph = path_graph(size)
    for apex in [0] + list(range(size + 1, size + apexes)):
        graph.add_node(apex)
        graph.add_edges_from((apex, node) for node in range(1, size + 1))
    return graph


def complete_bipartite_graph(  # pylint: disable=unused-variable
    left: int, right: int
) -> nx.Graph:
    """K_{m,n} with parts 0..m-1 and m..m+n-1, so K_{1,n} is the star St_n."""
    _check_size(left, right)
    graph = nx.Graph()
    graph.add_nodes_from(range(left + right))
    graph.add_edges_from(
        (first, second) for first in range(left) for second in range(left, left + right)
    )
    return graph


GRAPH_KINDS = {
    "path": (path_graph, 1),
    "complete": (complete_graph, 1),
    "edgeless": (edgeless_graph, 1),
    "star": (star_graph, 1),
    "fan": (fan_graph, 2),
    "complete_bipartite": (complete_bipartite_graph, 2),
}


def make_graph(kind: str, *sizes: int) -> nx.Graph:  # pylint: disable=unused-variable
    """
    Builds a graph by kind name, e.g. make_graph("fan", 1, 4).

    Raises:
        InvalidArgumentError: If the kind is unknown or the number of sizes is wrong.
    """
    if kind not in GRAPH_KINDS:
        raise InvalidArgumentError(
            f"Unknown graph kind: {kind}. Choose one of {', '.join(sorted(GRAPH_KINDS))}."
        )
    constructor, arity = GRAPH_KINDS[kind]
    if len(sizes) != arity:
        raise InvalidArgumentError(f"Graph kind {kind} takes {arity} size(s).")
    return constructor(*sizes)


def graph_to_json(graph: nx.Graph) -> Dict:  # pylint: disable=unused-variable
    return {
        "nodes": sorted(graph.nodes),
        "edges": sorted(sorted(edge) for edge in graph.edges),
    }


def graph_from_json(data: Union[Dict, str]) -> nx.Graph:  # pylint: disable=unused-variable
    if isinstance(data, str):
        data = json.loads(data)
    graph = nx.Graph()
    graph.add_nodes_from(data["nodes"])
    graph.add_edges_from(tuple(edge) for edge in data["edges"])
    return graph
