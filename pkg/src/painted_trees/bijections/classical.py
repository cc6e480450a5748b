#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module implements the three classical bijections between tubings and trees from which the
painted-tree bijections are assembled:

- tubings of a complete graph and ordered set partitions of its nodes, hence weakly ordered trees
  (node i of the graph is gap i of the tree, the innermost tube is the top level);
- tubings of a path graph and plane trees (a gap sits at the depth given by the number of tubes
  containing its node);
- tubings of an edgeless graph and proper subsets of its nodes (the singleton tubes).

Nodes are identified with gaps in increasing label order.
"""

# Standard library imports
from typing import FrozenSet, Iterable, List, Sequence, Tuple

# Related third-party imports
import networkx as nx

# Local application/library specific imports
from painted_trees.errors import InvalidTubingError
from painted_trees.tree_core.plane_trees import (
    LevelAssignment,
    PlaneTree,
    from_heights,
    tree_from_partition,
    weak_order_partition,
)
from painted_trees.tubings.graphs import edgeless_graph, path_graph
from painted_trees.tubings.tubings import Tube, Tubing, is_tubing


def _require_tubing(graph: nx.Graph, tubing: Tubing) -> None:
    if not is_tubing(graph, tubing):
        raise InvalidTubingError(f"{tubing} is not a tubing of the graph.")


def interval_tubes(  # pylint: disable=unused-variable
    heights: Sequence[int], labels: Sequence[int]
) -> List[Tube]:
    """
    Reads nested intervals off positive depths: every position of depth h spans the maximal run
    of neighbours with depth at least h.

    Parameters:
        heights (Sequence[int]): Depth of every position; positions of depth 0 or less are skipped.
        labels (Sequence[int]): Node label of every position.

    Returns:
        List[Tube]: The distinct intervals, as node sets.
    """
    tubes = set()
    for position, height in enumerate(heights):
        if height <= 0:
            continue
        low = position
        while low > 0 and heights[low - 1] >= height:
            low -= 1
        high = position
        while high + 1 < len(heights) and heights[high + 1] >= height:
            high += 1
        tubes.add(frozenset(labels[low : high + 1]))
    return list(tubes)


def tube_depths(  # pylint: disable=unused-variable
    tubes: Iterable[Tube], labels: Sequence[int]
) -> List[int]:
    """Number of the given tubes containing each label."""
    tubes = list(tubes)
    return [sum(1 for tube in tubes if label in tube) for label in labels]


def complete_tubing_to_partition(  # pylint: disable=unused-variable
    tubing: Tubing,
) -> Tuple[Tuple[int, ...], ...]:
    """
    The ordered partition of a complete-graph tubing: block j holds the nodes in the j-th smallest
    tube and in no smaller one.

    Raises:
        InvalidTubingError: If the tubes are not nested.
    """
    chain = sorted(tubing.tubes, key=len)
    blocks = []
    inner: FrozenSet[int] = frozenset()
    for tube in chain:
        if not inner < tube:
            raise InvalidTubingError(f"Tubes of {tubing} are not nested.")
        blocks.append(tuple(sorted(tube - inner)))
        inner = tube
    return tuple(blocks)


def partition_to_complete_tubing(  # pylint: disable=unused-variable
    partition: Sequence[Sequence[int]],
) -> Tubing:
    tubes = []
    inner: FrozenSet[int] = frozenset()
    for block in partition:
        inner = inner | frozenset(block)
        tubes.append(inner)
    return Tubing(frozenset(tubes))


def wot_from_complete_tubing(  # pylint: disable=unused-variable
    tubing: Tubing,
) -> Tuple[PlaneTree, LevelAssignment]:
    """
    The weakly ordered tree of a tubing on a complete graph with nodes labelled in any increasing
    order; the k-th smallest node is gap k.

    Raises:
        InvalidTubingError: If the tubing is not a tubing of the complete graph on its nodes.
    """
    labels = sorted(tubing.universal)
    graph = nx.complete_graph(labels)
    _require_tubing(graph, tubing)
    position = {label: index + 1 for index, label in enumerate(labels)}
    partition = [
        [position[node] for node in block] for block in complete_tubing_to_partition(tubing)
    ]
    return tree_from_partition(partition)


def complete_tubing_from_wot(  # pylint: disable=unused-variable
    tree: PlaneTree, levels: LevelAssignment, labels: Sequence[int] = ()
) -> Tubing:
    """Inverse of `wot_from_complete_tubing`; gaps are relabelled by labels (default 1..n)."""
    labels = list(labels) or list(range(1, tree.degree + 1))
    partition = weak_order_partition(tree, levels)
    return partition_to_complete_tubing(
        [[labels[gap - 1] for gap in block] for block in partition]
    )


def path_tubing_to_plane_tree(tubing: Tubing) -> PlaneTree:  # pylint: disable=unused-variable
    """
    The plane tree of a tubing of the path 1..n.

    Raises:
        InvalidTubingError: If the tubing is not a tubing of the path.
    """
    size = len(tubing.universal)
    _require_tubing(path_graph(size), tubing)
    tree, _ = from_heights(tube_depths(tubing.tubes, range(1, size + 1)))
    return tree


def plane_tree_to_path_tubing(tree: PlaneTree) -> Tubing:  # pylint: disable=unused-variable
    """The tubing of the path 1..n whose tubes are the gap sets of the subtrees of a plane tree."""
    labels = list(range(1, tree.degree + 1))
    return Tubing(frozenset(interval_tubes(tree.depth_heights(), labels)))


def edgeless_tubing_to_subset(tubing: Tubing) -> FrozenSet[int]:  # pylint: disable=unused-variable
    """
    The nodes whose singleton tube belongs to a tubing of the edgeless graph on 1..n.

    Raises:
        InvalidTubingError: If the tubing is not a tubing of the edgeless graph.
    """
    size = len(tubing.universal)
    _require_tubing(edgeless_graph(size), tubing)
    return frozenset(node for tube in tubing.proper_tubes() for node in tube)


def subset_to_edgeless_tubing(  # pylint: disable=unused-variable
    size: int, subset: Iterable[int]
) -> Tubing:
    """
    Inverse of `edgeless_tubing_to_subset`.

    Raises:
        InvalidTubingError: If the subset is not a proper subset of 1..size.
    """
    subset = frozenset(subset)
    universe = frozenset(range(1, size + 1))
    if not subset < universe:
        raise InvalidTubingError(f"{sorted(subset)} is not a proper subset of 1..{size}.")
    return Tubing.of(universe, ([node] for node in subset))

