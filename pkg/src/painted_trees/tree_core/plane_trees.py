#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module provides plane rooted trees and their level structures. A plane tree is stored as a
nested tuple of children; its internal nodes are indexed in depth-first (preorder) order and its
gaps between adjacent leaves are numbered 1..n from left to right. Every gap is caught by exactly
one internal node (the node a raindrop falling into the gap would land on), which gives the
correspondence between gaps and nodes used throughout the package.

Level structures are recorded as `LevelAssignment` objects: block 1 holds the nodes farthest from
the root and the last block holds the root.

Classes:
- `TreeKind`: Enum of the tree kinds (corolla, plane, binary, ordered, weakly ordered).
- `PlaneTree`: Immutable plane rooted tree with canonical string and JSON forms.
- `LevelAssignment`: Weak vertical order on the internal nodes of a tree.

Functions:
- `corolla`: The corolla with a given number of leaves.
- `from_heights`: Builds the plane tree whose gaps carry the given heights.
- `levels_from_heights`: Level assignment induced by gap heights.
- `ordered_set_partitions`: All ordered set partitions of a sequence.
- `weak_order_partition`: Ordered partition of the gaps induced by a level assignment.
- `tree_from_partition`: Inverse of `weak_order_partition`.
- `ordered_tree_from_permutation`: The ordered tree of a permutation.
- `enumerate_trees`: All trees of a kind with a given number of leaves.
- `tau`: Forgets level data.
- `kappa`: Collapses a tree to the corolla with the same leaves.
"""

# Standard library imports
import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

# Local application/library specific imports
from painted_trees.errors import (
    InvalidArgumentError,
    InvalidLevelError,
    StructuralError,
)

LEAF_STRING = "."


class TreeKind(Enum):  # pylint: disable=unused-variable
    """
    Enumerates the kinds of rooted plane trees.

    Attributes:
        COROLLA: At most one internal node.
        PLANE: Any plane tree whose nodes have at least two children.
        BINARY: Every node has exactly two children.
        ORDERED: Binary tree with a linear vertical order of its nodes.
        WEAKLY_ORDERED: Plane tree with a weak vertical order of its nodes.
    """

    COROLLA = "corolla"
    PLANE = "plane"
    BINARY = "binary"
    ORDERED = "ordered"
    WEAKLY_ORDERED = "weakly_ordered"


@dataclass(frozen=True)
class PlaneTree:  # pylint: disable=unused-variable
    """
    An immutable rooted plane tree. A leaf is the tree with no children; an internal node carries
    an ordered tuple of at least two subtrees.

    Attributes:
        children (Tuple[PlaneTree, ...]): The subtrees of the root, from left to right.
    """

    children: Tuple["PlaneTree", ...] = ()

    def __post_init__(self):
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) == 1:
            raise StructuralError("An internal node must have at least two children.")
        for child in self.children:
            if not isinstance(child, PlaneTree):
                raise StructuralError(f"Invalid subtree: {child!r}")

    def __str__(self) -> str:
        if self.is_leaf:
            return LEAF_STRING
        return "(" + "".join(str(child) for child in self.children) + ")"

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def leaf_count(self) -> int:
        if self.is_leaf:
            return 1
        return sum(child.leaf_count for child in self.children)

    @property
    def degree(self) -> int:
        """The grading degree, one less than the number of leaves (equal to the gap count)."""
        return self.leaf_count - 1

    @property
    def node_count(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + sum(child.node_count for child in self.children)

    @property
    def is_corolla(self) -> bool:
        return all(child.is_leaf for child in self.children)

    @property
    def is_binary(self) -> bool:
        return self.is_leaf or (
            len(self.children) == 2 and all(child.is_binary for child in self.children)
        )

    def gap_structure(self) -> Tuple[List[int], List[int], List[int]]:
        """
        Computes the raindrop map together with the parent and depth of every internal node.

        Returns:
            Tuple[List[int], List[int], List[int]]: The preorder index of the node catching each
                gap (gaps in left-to-right order), the preorder index of each node's parent (-1
                for the root) and each node's depth (0 for the root).
        """
        gap_nodes: List[int] = []
        parents: List[int] = []
        depths: List[int] = []

        def walk(tree: "PlaneTree", parent: int, depth: int):
            index = len(parents)
            parents.append(parent)
            depths.append(depth)
            for position, child in enumerate(tree.children):
                if position > 0:
                    gap_nodes.append(index)
                if not child.is_leaf:
                    walk(child, index, depth + 1)

        if not self.is_leaf:
            walk(self, -1, 0)
        return gap_nodes, parents, depths

    def gap_heights(self, node_heights: Sequence[int]) -> List[int]:
        """
        Lists the heights of the gaps when each internal node (in preorder) carries the given
        height.

        Parameters:
            node_heights (Sequence[int]): One height per internal node, indexed in preorder.

        Returns:
            List[int]: The height of every gap, from left to right.
        """
        gap_nodes, _, _ = self.gap_structure()
        if len(node_heights) != self.node_count:
            raise InvalidLevelError(
                f"Expected {self.node_count} node heights, received {len(node_heights)}."
            )
        return [node_heights[node] for node in gap_nodes]

    def depth_heights(self) -> List[int]:
        """Gap heights given by node depth, with the root at height 1."""
        gap_nodes, _, depths = self.gap_structure()
        return [depths[node] + 1 for node in gap_nodes]

    def split(self, leaf: int) -> Tuple["PlaneTree", "PlaneTree"]:
        """
        Splits the tree along the path from a leaf to the root.

        Parameters:
            leaf (int): The leaf to split at, numbered 1..leaf_count.

        Returns:
            Tuple[PlaneTree, PlaneTree]: The left and right pieces.

        Raises:
            InvalidArgumentError: If the leaf is out of range.
        """
        if not 1 <= leaf <= self.leaf_count:
            raise InvalidArgumentError(f"Leaf {leaf} is out of range 1..{self.leaf_count}.")
        heights = self.depth_heights()
        left, _ = from_heights(heights[: leaf - 1])
        right, _ = from_heights(heights[leaf - 1 :])
        return left, right

    def to_json(self) -> Dict:
        return {"children": [child.to_json() for child in self.children]}

    @classmethod
    def from_json(cls, data: Union[Dict, str]) -> "PlaneTree":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "children" not in data:
            raise StructuralError(f"Invalid tree JSON: {data!r}")
        return cls(tuple(cls.from_json(child) for child in data["children"]))

    @classmethod
    def parse(cls, text: str) -> "PlaneTree":
        """
        Parses the canonical nested-parenthesis form, e.g. "((..).)".

        Raises:
            StructuralError: If the text is not a single well-formed tree.
        """
        tree, position = _parse_tree(text.strip(), 0)
        if position != len(text.strip()):
            raise StructuralError(f"Unexpected trailing text in tree: {text!r}")
        return tree


def _parse_tree(text: str, position: int) -> Tuple[PlaneTree, int]:
    if position >= len(text):
        raise StructuralError(f"Unexpected end of tree text: {text!r}")
    if text[position] == LEAF_STRING:
        return PlaneTree(), position + 1
    if text[position] != "(":
        raise StructuralError(f"Unexpected character {text[position]!r} in {text!r}")
    children = []
    position += 1
    while position < len(text) and text[position] != ")":
        child, position = _parse_tree(text, position)
        children.append(child)
    if position >= len(text):
        raise StructuralError(f"Unbalanced parentheses in {text!r}")
    return PlaneTree(tuple(children)), position + 1


def corolla(leaves: int) -> PlaneTree:  # pylint: disable=unused-variable
    """Returns the corolla with the given number of leaves (the bare leaf when leaves is 1)."""
    if leaves < 1:
        raise InvalidArgumentError(f"A tree needs at least one leaf, received {leaves}.")
    if leaves == 1:
        return PlaneTree()
    return PlaneTree(tuple(PlaneTree() for _ in range(leaves)))


def from_heights(heights: Sequence[int]) -> Tuple[PlaneTree, List[int]]:
    """
    Builds the plane tree whose gaps carry the given heights, heights increasing away from the
    root. The gaps of minimal height in a segment form the node at the top of that segment and
    split it into the segments of its children.

    Parameters:
        heights (Sequence[int]): One height per gap, from left to right.

    Returns:
        Tuple[PlaneTree, List[int]]: The tree and, for every gap, the preorder index of its node.
    """
    gap_nodes = [0] * len(heights)
    counter = [0]

    def build(low: int, high: int) -> PlaneTree:
        if low >= high:
            return PlaneTree()
        index = counter[0]
        counter[0] += 1
        lowest = min(heights[low:high])
        cuts = [gap for gap in range(low, high) if heights[gap] == lowest]
        for gap in cuts:
            gap_nodes[gap] = index
        bounds = [low - 1] + cuts + [high]
        return PlaneTree(
            tuple(build(bounds[i] + 1, bounds[i + 1]) for i in range(len(bounds) - 1))
        )

    return build(0, len(heights)), gap_nodes


@dataclass(frozen=True)
class LevelAssignment:  # pylint: disable=unused-variable
    """
    A weak vertical order on the internal nodes of a plane tree.

    Attributes:
        blocks (Tuple[int, ...]): The block of each internal node, indexed in preorder. Block 1
            is farthest from the root; a strict ancestor always lies in a larger block.
    """

    blocks: Tuple[int, ...]

    @property
    def block_count(self) -> int:
        return max(self.blocks, default=0)

    @property
    def is_linear(self) -> bool:
        return len(set(self.blocks)) == len(self.blocks)

    def validate(self, tree: PlaneTree) -> None:
        """
        Checks that the assignment is surjective onto its blocks and respects root proximity.

        Raises:
            InvalidLevelError: If the assignment does not fit the tree.
        """
        if len(self.blocks) != tree.node_count:
            raise InvalidLevelError(
                f"Level map covers {len(self.blocks)} nodes but the tree has {tree.node_count}."
            )
        if set(self.blocks) != set(range(1, self.block_count + 1)):
            raise InvalidLevelError(f"Level map {self.blocks} is not surjective onto its blocks.")
        _, parents, _ = tree.gap_structure()
        for node, parent in enumerate(parents):
            if parent >= 0 and self.blocks[parent] <= self.blocks[node]:
                raise InvalidLevelError(
                    f"Node {parent} is an ancestor of node {node} but not in a larger block."
                )

    def partition(self) -> Tuple[Tuple[int, ...], ...]:
        """The ordered partition of node indices, block 1 first."""
        return tuple(
            tuple(node for node, block in enumerate(self.blocks) if block == level)
            for level in range(1, self.block_count + 1)
        )

    @classmethod
    def from_partition(cls, partition: Sequence[Sequence[int]]) -> "LevelAssignment":
        size = sum(len(block) for block in partition)
        blocks = [0] * size
        for level, block in enumerate(partition, start=1):
            for node in block:
                if not 0 <= node < size or blocks[node]:
                    raise InvalidLevelError(f"Invalid level partition: {partition!r}")
                blocks[node] = level
        return cls(tuple(blocks))

    def heights(self) -> List[int]:
        """Node heights with the root block lowest (height 1)."""
        return [self.block_count - block + 1 for block in self.blocks]


def levels_from_heights(  # pylint: disable=unused-variable
    tree: PlaneTree, gap_heights: Sequence[int]
) -> LevelAssignment:
    """Returns the level assignment whose blocks order the distinct gap heights from the top."""
    gap_nodes, _, _ = tree.gap_structure()
    node_heights = [0] * tree.node_count
    for gap, node in enumerate(gap_nodes):
        node_heights[node] = gap_heights[gap]
    distinct = sorted(set(node_heights), reverse=True)
    rank = {height: position + 1 for position, height in enumerate(distinct)}
    return LevelAssignment(tuple(rank[height] for height in node_heights))


def partition_string(partition: Sequence[Sequence[int]]) -> str:
    """Formats an ordered partition as "{2,5}{1}{3,4}"."""
    return "".join("{" + ",".join(str(item) for item in block) + "}" for block in partition)


def parse_partition(text: str) -> Tuple[Tuple[int, ...], ...]:
    """Parses the output of `partition_string`."""
    text = text.strip()
    if not text:
        return ()
    if not (text.startswith("{") and text.endswith("}")):
        raise StructuralError(f"Invalid ordered partition: {text!r}")
    blocks = []
    for chunk in text[1:-1].split("}{"):
        try:
            blocks.append(tuple(int(item) for item in chunk.split(",") if item.strip()))
        except ValueError as error:
            raise StructuralError(f"Invalid ordered partition: {text!r}") from error
    return tuple(blocks)


def ordered_set_partitions(  # pylint: disable=unused-variable
    items: Sequence,
) -> Iterator[Tuple[Tuple, ...]]:
    """
    Yields every ordered set partition of the items. Each block keeps the input order of its
    items; there are Fubini-many results.
    """
    items = tuple(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for partition in ordered_set_partitions(rest):
        for position in range(len(partition)):
            yield (
                partition[:position]
                + ((first,) + partition[position],)
                + partition[position + 1 :]
            )
        for position in range(len(partition) + 1):
            yield partition[:position] + ((first,),) + partition[position:]


def weak_order_partition(  # pylint: disable=unused-variable
    tree: PlaneTree, levels: LevelAssignment
) -> Tuple[Tuple[int, ...], ...]:
    """
    Computes the ordered partition of the gaps 1..n induced by a weak order of the nodes.

    Parameters:
        tree (PlaneTree): The underlying plane tree.
        levels (LevelAssignment): A valid level assignment on the tree.

    Returns:
        Tuple[Tuple[int, ...], ...]: Block i lists the gaps whose node lies in block i.

    Raises:
        InvalidLevelError: If the level map is inconsistent with the tree.
    """
    levels.validate(tree)
    gap_nodes, _, _ = tree.gap_structure()
    return tuple(
        tuple(gap + 1 for gap, node in enumerate(gap_nodes) if levels.blocks[node] == level)
        for level in range(1, levels.block_count + 1)
    )


def tree_from_partition(  # pylint: disable=unused-variable
    partition: Sequence[Sequence[int]],
) -> Tuple[PlaneTree, LevelAssignment]:
    """
    Rebuilds the weakly ordered tree of an ordered partition of the gaps 1..n.

    Raises:
        InvalidLevelError: If the blocks do not partition 1..n.
    """
    size = sum(len(block) for block in partition)
    heights = [0] * size
    for level, block in enumerate(partition, start=1):
        for gap in block:
            if not 1 <= gap <= size or heights[gap - 1]:
                raise InvalidLevelError(f"Invalid gap partition: {partition!r}")
            heights[gap - 1] = len(partition) - level + 1
    tree, _ = from_heights(heights)
    return tree, levels_from_heights(tree, heights)


def ordered_tree_from_permutation(  # pylint: disable=unused-variable
    sigma: Sequence[int],
) -> Tuple[PlaneTree, LevelAssignment]:
    """The ordered tree whose gap i lies in block sigma(i)."""
    size = len(sigma)
    if sorted(sigma) != list(range(1, size + 1)):
        raise InvalidArgumentError(f"Not a permutation: {tuple(sigma)}")
    return tree_from_partition([[sigma.index(level) + 1] for level in range(1, size + 1)])


@lru_cache(maxsize=None)
def _plane_trees(leaves: int, binary: bool) -> Tuple[PlaneTree, ...]:
    if leaves == 1:
        return (PlaneTree(),)
    trees = []
    for parts in _compositions(leaves, 2 if binary else leaves):
        if len(parts) < 2 or (binary and len(parts) != 2):
            continue
        for children in product(*(_plane_trees(part, binary) for part in parts)):
            trees.append(PlaneTree(children))
    return tuple(trees)


def _compositions(total: int, max_parts: int) -> Iterator[Tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first, max_parts - 1):
            yield (first,) + rest


def leveled_tree_string(tree: PlaneTree, levels: Optional[LevelAssignment]) -> str:
    """Canonical string of a tree with optional level data."""
    if levels is None:
        return str(tree)
    return f"{tree}@{partition_string(levels.partition())}"


def enumerate_trees(  # pylint: disable=unused-variable
    kind: TreeKind, leaves: int
) -> List[Tuple[PlaneTree, Optional[LevelAssignment]]]:
    """
    Lists every tree of a kind with the given number of leaves, in lexicographic order of the
    canonical strings.

    Parameters:
        kind (TreeKind): The kind of tree.
        leaves (int): Number of leaves, at least 1.

    Returns:
        List[Tuple[PlaneTree, Optional[LevelAssignment]]]: Trees paired with their level data
            (None for unleveled kinds).

    Raises:
        InvalidArgumentError: If leaves is smaller than 1.
    """
    if leaves < 1:
        raise InvalidArgumentError(f"A tree needs at least one leaf, received {leaves}.")
    gaps = leaves - 1
    result: List[Tuple[PlaneTree, Optional[LevelAssignment]]]
    if kind is TreeKind.COROLLA:
        result = [(corolla(leaves), None)]
    elif kind in (TreeKind.PLANE, TreeKind.BINARY):
        result = [(tree, None) for tree in _plane_trees(leaves, kind is TreeKind.BINARY)]
    elif kind is TreeKind.ORDERED:
        result = [
            ordered_tree_from_permutation(sigma)
            for sigma in permutations(range(1, gaps + 1))
        ]
    else:
        result = [
            tree_from_partition(partition)
            for partition in ordered_set_partitions(range(1, gaps + 1))
        ]
    return sorted(result, key=lambda item: leveled_tree_string(*item))


def tau(  # pylint: disable=unused-variable
    tree: Union[PlaneTree, Tuple[PlaneTree, Optional[LevelAssignment]]]
) -> PlaneTree:
    """Forgets the level data of a tree, returning its plane structure."""
    if isinstance(tree, PlaneTree):
        return tree
    return tree[0]


def kappa(tree: PlaneTree) -> PlaneTree:  # pylint: disable=unused-variable
    """Returns the corolla with the same number of leaves."""
    return corolla(tau(tree).leaf_count)
