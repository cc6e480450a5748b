#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module enumerates painted trees and implements the two structural operations the algebra is
built from: splitting a painted tree along leaf paths and grafting trees onto each other.

Splitting at a multiset of leaves cuts every gap sequence into consecutive intervals, so a
piece keeps the heights of its gaps and the paint line; the family projection then takes care of
nodes that were cut apart. Grafting is the inverse direction: unpainted trees are stacked on the
leaves of a painted tree, or painted trees are stacked on the leaves of a tree painted completely.

Classes:
- `EnumerationLevel`: Vertices only or all faces.
- `GraftMode`: The two grafting directions.

Functions:
- `master_heights`: Every face of the master family in a given degree.
- `enumerate_painted`: Every painted tree of a family and degree.
- `split`: Splits a painted tree at a multiset of leaves.
- `splitting_to_shuffle`: The shuffle permutation associated with a splitting.
- `graft`: Grafts a sequence of trees onto a target.
"""

# Standard library imports
from enum import Enum
from functools import lru_cache
from itertools import permutations
from typing import List, Sequence, Tuple, Union

# Local application/library specific imports
from painted_trees.errors import ArityError, InvalidArgumentError, KindMismatchError
from painted_trees.painted.painted_tree import PaintedFamily, PaintedTree
from painted_trees.tree_core.plane_trees import PlaneTree, ordered_set_partitions


class EnumerationLevel(Enum):  # pylint: disable=unused-variable
    """
    Enumerates the enumeration levels.

    Attributes:
        VERTEX_ONLY: Only the minimal faces (binary or ordered trees at vertex level).
        ALL_FACES: Every face of the polytope.
    """

    VERTEX_ONLY = "vertex-only"
    ALL_FACES = "all-faces"


class GraftMode(Enum):  # pylint: disable=unused-variable
    """
    Enumerates the grafting directions.

    Attributes:
        ONTO_PAINTED: Unpainted trees on the leaves of a painted tree.
        ONTO_UNPAINTED: Painted trees on the leaves of a tree that becomes painted.
    """

    ONTO_PAINTED = "onto-painted"
    ONTO_UNPAINTED = "onto-unpainted"


@lru_cache(maxsize=None)
def master_heights(  # pylint: disable=unused-variable
    degree: int, vertices_only: bool = False
) -> Tuple[Tuple[int, ...], ...]:
    """
    Lists the faces of the master family (weakly ordered forest over weakly ordered tree) of a
    degree as height tuples. Faces are ordered set partitions of {0, ..., degree}; vertices are
    the permutations.

    Raises:
        InvalidArgumentError: If degree is negative.
    """
    if degree < 0:
        raise InvalidArgumentError(f"Degree must be non-negative, received {degree}.")
    if vertices_only:
        return tuple(tuple(sigma) for sigma in permutations(range(degree + 1)))
    result = []
    for partition in ordered_set_partitions(range(degree + 1)):
        heights = [0] * (degree + 1)
        for level, block in enumerate(partition):
            for gap in block:
                heights[gap] = level
        result.append(tuple(heights))
    return tuple(result)


@lru_cache(maxsize=None)
def _enumerate(family: PaintedFamily, degree: int, vertices_only: bool) -> Tuple[PaintedTree, ...]:
    trees = {
        PaintedTree.from_master(family, heights)
        for heights in master_heights(degree, vertices_only)
    }
    return tuple(sorted(trees, key=str))


def enumerate_painted(  # pylint: disable=unused-variable
    family: PaintedFamily, degree: int, level: EnumerationLevel = EnumerationLevel.ALL_FACES
) -> List[PaintedTree]:
    """
    Lists every painted tree of a family with degree+1 leaves, each exactly once, sorted by
    canonical string. Every face of the family is the image of a master face, and every vertex is
    the image of a master vertex.

    Parameters:
        family (PaintedFamily): The family.
        degree (int): Number of gaps.
        level (EnumerationLevel): Vertices only or all faces.

    Returns:
        List[PaintedTree]: The canonical trees.

    Raises:
        InvalidArgumentError: If degree is negative.
    """
    return list(_enumerate(family, degree, level is EnumerationLevel.VERTEX_ONLY))


def _pieces(degree: int, leaves: Sequence[int]) -> List[Tuple[int, int]]:
    if any(not 1 <= leaf <= degree + 1 for leaf in leaves):
        raise InvalidArgumentError(f"Leaves {tuple(leaves)} are out of range 1..{degree + 1}.")
    cuts = sorted(leaves)
    starts = [1] + cuts
    stops = [cut - 1 for cut in cuts] + [degree]
    return list(zip(starts, stops))


def split(  # pylint: disable=unused-variable
    tree: PaintedTree, leaves: Sequence[int]
) -> List[PaintedTree]:
    """
    Splits a painted tree along the paths from the chosen leaves to the root. Repeated leaves give
    single-leaf pieces. Piece i receives the gaps strictly between cut i-1 and cut i.

    Parameters:
        tree (PaintedTree): The tree to split.
        leaves (Sequence[int]): A multiset of leaves, each in 1..degree+1.

    Returns:
        List[PaintedTree]: len(leaves)+1 pieces, left to right, in the same family.

    Raises:
        InvalidArgumentError: If a leaf is out of range.
    """
    pieces = []
    for start, stop in _pieces(tree.degree, leaves):
        heights = (tree.heights[0],) + tuple(tree.heights[start : stop + 1])
        pieces.append(PaintedTree.from_master(tree.family, heights))
    return pieces


def splitting_to_shuffle(  # pylint: disable=unused-variable
    tree: PaintedTree, leaves: Sequence[int]
) -> Tuple[int, ...]:
    """
    Associates a (k, n)-shuffle with the splitting of a degree n tree at the multiset
    l_1 <= ... <= l_k: the first k values are l_i + i - 1 and the remaining positions follow in
    increasing order.

    Raises:
        InvalidArgumentError: If a leaf is out of range.
    """
    _pieces(tree.degree, leaves)
    cuts = sorted(leaves)
    head = [leaf + position for position, leaf in enumerate(cuts)]
    tail = [value for value in range(1, tree.degree + len(cuts) + 1) if value not in set(head)]
    return tuple(head + tail)


def graft(  # pylint: disable=unused-variable
    pieces: Sequence[Union[PlaneTree, PaintedTree]],
    target: Union[PlaneTree, PaintedTree],
    mode: GraftMode = GraftMode.ONTO_PAINTED,
) -> PaintedTree:
    """
    Grafts a sequence of trees onto the leaves of a target.

    With `GraftMode.ONTO_PAINTED` the pieces are unpainted plane trees stacked above a painted
    tree; with `GraftMode.ONTO_UNPAINTED` the pieces are painted trees and the target becomes a
    painted base beneath all of them. The result is projected into the family of the painted
    input.

    Parameters:
        pieces (Sequence): One tree per target leaf.
        target: The tree receiving the pieces.
        mode (GraftMode): The grafting direction.

    Returns:
        PaintedTree: The grafted tree.

    Raises:
        ArityError: If the number of pieces differs from the number of target leaves.
        KindMismatchError: If the inputs do not match the mode.
    """
    pieces = list(pieces)
    if len(pieces) != target.leaf_count:
        raise ArityError(f"Expected {target.leaf_count} pieces, received {len(pieces)}.")

    if mode is GraftMode.ONTO_PAINTED:
        if not isinstance(target, PaintedTree) or any(
            not isinstance(piece, PlaneTree) for piece in pieces
        ):
            raise KindMismatchError("Grafting onto a painted tree takes unpainted pieces.")
        offset = max(target.heights) - target.heights[0]
        gaps: List[int] = []
        for position, piece in enumerate(pieces):
            depths = piece.depth_heights()
            gaps.extend(offset + depth for depth in depths)
            offset += max(depths, default=0)
            if position < target.degree:
                gaps.append(target.heights[position + 1] - target.heights[0])
        return PaintedTree.from_master(target.family, (0,) + tuple(gaps))

    if not isinstance(target, PlaneTree) or any(
        not isinstance(piece, PaintedTree) for piece in pieces
    ):
        raise KindMismatchError("Grafting onto an unpainted tree takes painted pieces.")
    families = {piece.family for piece in pieces}
    if len(families) != 1:
        raise KindMismatchError("Grafted painted pieces must share one family.")
    relative = _stacked([piece.gap_heights() for piece in pieces])
    bottom = min([0] + [height for own in relative for height in own])
    depths = target.depth_heights()
    deepest = max(depths, default=0)
    target_gaps = [bottom + depth - deepest - 1 for depth in depths]
    gaps = []
    for position, own in enumerate(relative):
        gaps.extend(own)
        if position < target.degree:
            gaps.append(target_gaps[position])
    return PaintedTree.from_master(families.pop(), (0,) + tuple(gaps))


def _stacked(relative: List[List[int]]) -> List[List[int]]:
    """
    Shifts the levels of the pieces apart: painted levels of later pieces lie farther from the
    root, and so do their unpainted levels. Levels of one piece keep their order.
    """
    spans = [-min([0] + own) for own in relative]
    stacked = []
    unpainted_offset = 0
    for position, own in enumerate(relative):
        painted_offset = sum(spans[position + 1 :])
        shifted = []
        for height in own:
            if height < 0:
                height -= painted_offset
            elif height > 0:
                height += unpainted_offset
            shifted.append(height)
        stacked.append(shifted)
        unpainted_offset += max([0] + own)
    return stacked
