#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module provides ordered forests of plane trees in the four kinds that appear above the paint
line of a painted tree, together with the forgetful maps between them.

Classes:
- `ForestKind`: Enum of the forest kinds.
- `Forest`: Ordered sequence of plane trees with kind-dependent level data.

Functions:
- `beta`: Restricts a forest-wide weak order to one weak order per tree.
- `forest_tau`: Forgets all level data of a forest.
- `forest_kappa`: Replaces every tree of a forest by the corolla with the same leaves.
"""

# Standard library imports
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

# Local application/library specific imports
from painted_trees.errors import InvalidLevelError, KindMismatchError
from painted_trees.tree_core.plane_trees import LevelAssignment, PlaneTree, kappa


class ForestKind(Enum):  # pylint: disable=unused-variable
    """
    Enumerates the forest kinds.

    Attributes:
        WEAKLY_ORDERED_FOREST: One weak order on the nodes of all trees together.
        FOREST_OF_WEAKLY_ORDERED_TREES: An independent weak order per tree.
        FOREST_OF_PLANE_TREES: Plane trees without level data.
        FOREST_OF_COROLLAS: Trees with at most one internal node.
    """

    WEAKLY_ORDERED_FOREST = "wof"
    FOREST_OF_WEAKLY_ORDERED_TREES = "fwot"
    FOREST_OF_PLANE_TREES = "plane"
    FOREST_OF_COROLLAS = "corolla"


@dataclass(frozen=True)
class Forest:  # pylint: disable=unused-variable
    """
    An ordered forest of plane trees.

    Attributes:
        kind (ForestKind): The kind of the forest.
        trees (Tuple[PlaneTree, ...]): The trees from left to right.
        tree_levels (Tuple[Optional[LevelAssignment], ...]): One level assignment per tree for
            forests of weakly ordered trees, empty otherwise.
        levels (Optional[LevelAssignment]): For weakly ordered forests, one assignment over the
            nodes of all trees, numbered tree by tree in preorder.
    """

    kind: ForestKind
    trees: Tuple[PlaneTree, ...]
    tree_levels: Tuple[Optional[LevelAssignment], ...] = ()
    levels: Optional[LevelAssignment] = None

    def validate(self) -> None:
        """
        Checks the kind-specific invariants.

        Raises:
            InvalidLevelError: If level data is missing or does not respect any tree.
            KindMismatchError: If a forest of corollas holds a tree with several nodes.
        """
        if self.kind is ForestKind.FOREST_OF_COROLLAS:
            for tree in self.trees:
                if tree.node_count > 1:
                    raise KindMismatchError(f"Tree {tree} is not a corolla.")
        elif self.kind is ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES:
            if len(self.tree_levels) != len(self.trees):
                raise InvalidLevelError("Every tree needs its own level assignment.")
            for tree, levels in zip(self.trees, self.tree_levels):
                levels.validate(tree)
        elif self.kind is ForestKind.WEAKLY_ORDERED_FOREST:
            if self.levels is None:
                raise InvalidLevelError("A weakly ordered forest needs forest-wide levels.")
            blocks = self.levels.blocks
            if len(blocks) != sum(tree.node_count for tree in self.trees):
                raise InvalidLevelError("Forest levels do not cover every node.")
            if set(blocks) != set(range(1, self.levels.block_count + 1)):
                raise InvalidLevelError(f"Forest levels {blocks} are not surjective.")
            for tree, own in zip(self.trees, self.restrictions()):
                _, parents, _ = tree.gap_structure()
                for node, parent in enumerate(parents):
                    if parent >= 0 and own[parent] <= own[node]:
                        raise InvalidLevelError(f"Forest levels do not respect tree {tree}.")

    def restrictions(self) -> List[Tuple[int, ...]]:
        restricted = []
        offset = 0
        for tree in self.trees:
            restricted.append(self.levels.blocks[offset : offset + tree.node_count])
            offset += tree.node_count
        return restricted


def _reindex(blocks: Tuple[int, ...]) -> LevelAssignment:
    rank = {block: position + 1 for position, block in enumerate(sorted(set(blocks)))}
    return LevelAssignment(tuple(rank[block] for block in blocks))


def beta(forest: Forest) -> Forest:  # pylint: disable=unused-variable
    """
    Restricts the forest-wide weak order to each tree and re-indexes the blocks consecutively.
    Two nodes of one tree compare the same way before and after.

    Raises:
        KindMismatchError: If the input is not a weakly ordered forest.
    """
    if forest.kind is not ForestKind.WEAKLY_ORDERED_FOREST:
        raise KindMismatchError(f"beta expects a weakly ordered forest, received {forest.kind}.")
    forest.validate()
    return Forest(
        ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES,
        forest.trees,
        tuple(_reindex(own) for own in forest.restrictions()),
    )


def forest_tau(forest: Forest) -> Forest:  # pylint: disable=unused-variable
    """Drops all level data, keeping the plane trees."""
    if forest.kind is ForestKind.FOREST_OF_COROLLAS:
        raise KindMismatchError("tau does not apply to a forest of corollas.")
    return Forest(ForestKind.FOREST_OF_PLANE_TREES, forest.trees)


def forest_kappa(forest: Forest) -> Forest:  # pylint: disable=unused-variable
    return Forest(ForestKind.FOREST_OF_COROLLAS, tuple(kappa(tree) for tree in forest.trees))
