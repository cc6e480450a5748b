#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module computes the painted growth order on each family of painted trees.

A tree s lies below t when s is obtained from t by growing edges and forgetting. In height terms,
t is refined by every master face whose heights keep all strict comparisons that t makes and that
its family remembers: painted gaps below the paint line, unpainted gaps above it, ancestors below
descendants, and the level comparisons of weakly ordered bases and forests. The images of those
refinements in the family form the down-set of t. Ties in t, nodes of degree above three and
half-painted nodes are exactly the freedoms a refinement may resolve, and an unpainted edge never
grows from a painted node because painted gaps stay below the paint line.

Functions:
- `refinement_constraints`: Strict height comparisons a refinement of a tree must keep.
- `down_set`: All trees below a tree, the tree included.
- `leq`: The growth order.
- `elementary_growths`: The trees covered by a tree.
- `build_poset`: The face poset of a family in a degree.
"""

# Standard library imports
from functools import lru_cache
from typing import FrozenSet, List, Tuple

# Related third-party imports
import numpy as np

# Local application/library specific imports
from painted_trees.errors import KindMismatchError
from painted_trees.painted.painted_tree import BaseKind, PaintedFamily, PaintedTree
from painted_trees.painted.splitting import enumerate_painted, master_heights
from painted_trees.posets.face_poset import FacePoset
from painted_trees.tree_core.forests import ForestKind
from painted_trees.tree_core.plane_trees import from_heights


@lru_cache(maxsize=None)
def _master_matrix(degree: int) -> np.ndarray:
    return np.array(master_heights(degree), dtype=int).reshape(-1, degree + 1)


def _ancestors(parents: List[int]) -> List[FrozenSet[int]]:
    result = []
    for node in range(len(parents)):
        chain = set()
        parent = parents[node]
        while parent >= 0:
            chain.add(parent)
            parent = parents[parent]
        result.append(frozenset(chain))
    return result


def _segments(gaps: List[int]) -> List[int]:
    """Attachment segment of every gap: maximal runs of gaps on or above the paint line."""
    labels = []
    segment = 0
    for height in gaps:
        if height < 0:
            segment += 1
            labels.append(-1)
        else:
            labels.append(segment)
    return labels


def refinement_constraints(  # pylint: disable=unused-variable
    tree: PaintedTree,
) -> List[Tuple[int, int]]:
    """
    Lists the strict comparisons between gap positions (0 being the paint line) that every
    refinement of the tree keeps. A pair (a, b) requires height(a) < height(b).
    """
    gaps = tree.gap_heights()
    family = tree.family
    pairs = set()
    for gap, height in enumerate(gaps, start=1):
        if height < 0:
            pairs.add((gap, 0))
        elif height > 0:
            pairs.add((0, gap))

    shape, gap_nodes = from_heights(gaps)
    _, parents, _ = shape.gap_structure()
    ancestors = _ancestors(parents)
    for lower, lower_node in enumerate(gap_nodes, start=1):
        for upper, upper_node in enumerate(gap_nodes, start=1):
            if lower_node in ancestors[upper_node]:
                pairs.add((lower, upper))

    segments = _segments(gaps)
    for lower, low in enumerate(gaps, start=1):
        for upper, high in enumerate(gaps, start=1):
            if low >= high:
                continue
            if family.base_kind is BaseKind.WEAKLY_ORDERED and low < 0 and high <= 0:
                pairs.add((lower, upper))
            if family.forest_kind is ForestKind.WEAKLY_ORDERED_FOREST and low >= 0 and high > 0:
                pairs.add((lower, upper))
            if (
                family.forest_kind is ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES
                and low > 0
                and segments[lower - 1] == segments[upper - 1]
            ):
                pairs.add((lower, upper))
    return sorted(pairs)


@lru_cache(maxsize=None)
def _down_set(tree: PaintedTree) -> FrozenSet[PaintedTree]:
    matrix = _master_matrix(tree.degree)
    pairs = refinement_constraints(tree)
    mask = np.ones(matrix.shape[0], dtype=bool)
    if pairs:
        lower = [pair[0] for pair in pairs]
        upper = [pair[1] for pair in pairs]
        mask = np.all(matrix[:, lower] < matrix[:, upper], axis=1)
    images = {
        PaintedTree.from_master(tree.family, tuple(int(value) for value in row))
        for row in matrix[mask]
    }
    images.add(tree)
    return frozenset(images)


def down_set(tree: PaintedTree) -> FrozenSet[PaintedTree]:  # pylint: disable=unused-variable
    """Every tree of the family reachable from the tree by growth steps, the tree included."""
    return _down_set(PaintedTree.from_master(tree.family, tree.heights))


def leq(lower: PaintedTree, upper: PaintedTree) -> bool:  # pylint: disable=unused-variable
    """
    Decides lower <= upper in the growth order.

    Raises:
        KindMismatchError: If the trees belong to different families.
    """
    if lower.family != upper.family:
        raise KindMismatchError(f"Cannot compare {lower.family} with {upper.family}.")
    return PaintedTree.from_master(lower.family, lower.heights) in down_set(upper)


def elementary_growths(tree: PaintedTree) -> List[PaintedTree]:  # pylint: disable=unused-variable
    """
    Lists the trees covered by a tree: the maximal elements strictly below it. Vertex trees have
    none.
    """
    tree = PaintedTree.from_master(tree.family, tree.heights)
    below = [other for other in down_set(tree) if other != tree]
    covered = []
    for candidate in below:
        if not any(candidate != other and candidate in down_set(other) for other in below):
            covered.append(candidate)
    return sorted(covered, key=str)


def build_poset(family: PaintedFamily, degree: int) -> FacePoset:  # pylint: disable=unused-variable
    """
    Builds the growth poset of every painted tree of a family with degree+1 leaves. Vertex trees
    get rank 0; the four families without a known polytope are marked conjectural.

    Raises:
        InvalidArgumentError: If degree is negative.
    """
    elements = enumerate_painted(family, degree)
    relation = [(lower, upper) for upper in elements for lower in down_set(upper) if lower != upper]
    return FacePoset.from_relation(
        elements,
        relation,
        name=f"{family} n={degree}",
        conjectural=not family.is_proven,
    )
