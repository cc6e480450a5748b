#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module implements the graded coalgebra of painted trees, the module actions of plane trees
and corollas on it, the connections into plane trees and corollas, and the one-sided Hopf
products, counit and antipodes built from them.

All structure constants are integers, so every result is a `FormalSum` or `TensorSum` with exact
integer coefficients.

Product sides:
- A left product (left unit) is e * e' = c(e) acting on e' from the left. It needs an unpainted
  forest of plane trees or corollas.
- A right product (right unit) is e * e' = e acted on by c(e') from the right. It needs a base of
  plane trees or corollas and a forest that is not a weakly ordered forest.

Functions:
- `coproduct`, `iterated_coproduct`: Splitting at one leaf, or at k leaves.
- `plane_coproduct`: The coproduct of plane trees.
- `action_left`, `action_right`: Module actions, with raw term streams for inspection.
- `connection`: The coalgebra and module map into plane trees or corollas.
- `supported_sides`, `product`: One-sided products.
- `counit`, `unit`: Counit and unit.
- `antipode`: Recursive one-sided antipode.
- `convolution_check`: Checks the antipode convolution identity.
- `coassociativity_holds`, `counit_law_holds`, `action_law_holds`, `connection_axioms_hold`,
  `product_associativity_holds`: Checks of the coalgebra, module and product laws on one input.
- `acting_trees`: The plane trees or corollas of a degree that act on painted trees.
"""

# Standard library imports
from enum import Enum
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator, List, Union

# Local application/library specific imports
from painted_trees.errors import KindMismatchError, UnsupportedStructureError
from painted_trees.hopf.formal_sums import FormalSum, TensorSum, tensor
from painted_trees.painted.painted_tree import BaseKind, PaintedFamily, PaintedTree, unit_tree
from painted_trees.painted.splitting import split
from painted_trees.tree_core.forests import ForestKind
from painted_trees.tree_core.plane_trees import (
    PlaneTree,
    TreeKind,
    corolla,
    enumerate_trees,
    from_heights,
)

LEFT_ACTING_FORESTS = (ForestKind.FOREST_OF_PLANE_TREES, ForestKind.FOREST_OF_COROLLAS)
RIGHT_ACTING_FORESTS = (
    ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES,
    ForestKind.FOREST_OF_PLANE_TREES,
    ForestKind.FOREST_OF_COROLLAS,
)
RIGHT_ACTING_BASES = (BaseKind.PLANE, BaseKind.COROLLA)


class Side(Enum):  # pylint: disable=unused-variable
    """
    Enumerates product sides, named after the side of the unit.

    Attributes:
        LEFT: e * e' = c(e) acting on e', with eta * e = e.
        RIGHT: e * e' = e acted on by c(e'), with e * eta = e.
    """

    LEFT = "left"
    RIGHT = "right"


def coproduct(tree: PaintedTree) -> TensorSum:  # pylint: disable=unused-variable
    """
    Splits a painted tree at each of its leaves. The degrees of each pair add up to the degree of
    the tree and there are degree+1 raw terms.
    """
    return iterated_coproduct(tree, 1)


def iterated_coproduct(  # pylint: disable=unused-variable
    tree: PaintedTree, times: int
) -> TensorSum:
    """
    Splits a painted tree at every multiset of `times` leaves, giving tensors with times+1
    factors. Equals every way of iterating `coproduct` by coassociativity.
    """
    result = TensorSum()
    for leaves in combinations_with_replacement(range(1, tree.leaf_count + 1), times):
        result = result + TensorSum({tuple(split(tree, leaves)): 1})
    return result


def plane_coproduct(tree: PlaneTree) -> TensorSum:  # pylint: disable=unused-variable
    """Splits an unpainted plane tree at each leaf."""
    return TensorSum.from_terms(tree.split(leaf) for leaf in range(1, tree.leaf_count + 1))


def _split_heights(heights: List[int], leaves) -> List[List[int]]:
    """Cuts a gap height list at a multiset of leaves into consecutive intervals."""
    cuts = sorted(leaves)
    starts = [1] + cuts
    stops = [cut - 1 for cut in cuts] + [len(heights)]
    return [heights[start - 1 : stop] for start, stop in zip(starts, stops)]


def left_action_terms(  # pylint: disable=unused-variable
    tree: PlaneTree, painted: PaintedTree
) -> Iterator[PaintedTree]:
    """
    Yields the raw terms of `action_left`: one per multiset of degree(painted) leaves of the
    unpainted tree, before equal terms are collected.

    Raises:
        KindMismatchError: If the painted tree's forest is not made of plane trees or corollas.
    """
    if painted.family.forest_kind not in LEFT_ACTING_FORESTS:
        raise KindMismatchError(
            f"Trees act from the left only on forests of plane trees or corollas, "
            f"not on {painted.family}."
        )
    depth_heights = tree.depth_heights()
    top = max(painted.heights)
    for leaves in combinations_with_replacement(range(1, tree.leaf_count + 1), painted.degree):
        pieces = _split_heights(depth_heights, leaves)
        gaps: List[int] = []
        for position, piece in enumerate(pieces):
            gaps.extend(top + height for height in piece)
            if position < painted.degree:
                gaps.append(painted.heights[position + 1])
        yield PaintedTree.from_master(painted.family, (painted.heights[0],) + tuple(gaps))


def action_left(  # pylint: disable=unused-variable
    tree: PlaneTree, painted: PaintedTree
) -> FormalSum:
    """
    Splits an unpainted tree into degree(painted)+1 pieces in every way and grafts the pieces
    above the leaves of a painted tree. For a forest of corollas the terms are collapsed to
    corollas and collected with multiplicity.

    Parameters:
        tree (PlaneTree): The acting plane tree or corolla.
        painted (PaintedTree): A painted tree whose forest holds plane trees or corollas.

    Returns:
        FormalSum: Terms of degree degree(tree) + degree(painted).

    Raises:
        KindMismatchError: If the painted tree's forest is not made of plane trees or corollas.
    """
    return FormalSum.from_terms(left_action_terms(tree, painted))


def right_action_terms(  # pylint: disable=unused-variable
    painted: PaintedTree, tree: PlaneTree
) -> Iterator[PaintedTree]:
    """
    Yields the raw terms of `action_right`, one per multiset of degree(tree) leaves of the
    painted tree.

    Raises:
        KindMismatchError: If the painted tree's family does not admit the right action.
    """
    family = painted.family
    if Side.RIGHT not in supported_sides(family):
        raise KindMismatchError(
            f"Trees act from the right only on bases of plane trees or corollas without a "
            f"weakly ordered forest, not on {family}."
        )
    relative = painted.gap_heights()
    bottom = min([0] + relative)
    depths = tree.depth_heights()
    deepest = max(depths, default=0)
    tree_gaps = [bottom + depth - deepest - 1 for depth in depths]
    for leaves in combinations_with_replacement(range(1, painted.leaf_count + 1), tree.degree):
        pieces = _split_heights(relative, leaves)
        gaps: List[int] = []
        for position, piece in enumerate(pieces):
            gaps.extend(piece)
            if position < tree.degree:
                gaps.append(tree_gaps[position])
        yield PaintedTree.from_master(family, (0,) + tuple(gaps))


def action_right(  # pylint: disable=unused-variable
    painted: PaintedTree, tree: PlaneTree
) -> FormalSum:
    """
    Splits a painted tree into degree(tree)+1 pieces in every way and grafts them onto the leaves
    of an unpainted tree, which becomes painted and sits below every painted node of the pieces.

    Parameters:
        painted (PaintedTree): A painted tree with a base of plane trees or corollas.
        tree (PlaneTree): The acting plane tree or corolla.

    Returns:
        FormalSum: Terms of degree degree(painted) + degree(tree).

    Raises:
        KindMismatchError: If the family does not admit the right action.
    """
    return FormalSum.from_terms(right_action_terms(painted, tree))


def connection(  # pylint: disable=unused-variable
    painted: PaintedTree, target: Union[ForestKind, BaseKind, str]
) -> PlaneTree:
    """
    Maps a painted tree to an unpainted tree. The plane target forgets paint and levels and keeps
    the branching; the corolla target keeps only the number of leaves.

    Raises:
        KindMismatchError: If the target names neither plane trees nor corollas.
    """
    name = target.value if isinstance(target, Enum) else str(target)
    if name == "plane":
        return from_heights(painted.gap_heights())[0]
    if name == "corolla":
        return corolla(painted.leaf_count)
    raise KindMismatchError(f"Connections map to plane trees or corollas, not {target!r}.")


def supported_sides(family: PaintedFamily) -> List[Side]:  # pylint: disable=unused-variable
    """The product sides a family admits; the four families without ordered trees admit both."""
    sides = []
    if family.forest_kind in LEFT_ACTING_FORESTS:
        sides.append(Side.LEFT)
    if family.base_kind in RIGHT_ACTING_BASES and family.forest_kind in RIGHT_ACTING_FORESTS:
        sides.append(Side.RIGHT)
    return sides


def _check_side(family: PaintedFamily, side: Side) -> None:
    if side not in supported_sides(family):
        raise UnsupportedStructureError(f"Family {family} has no {side.value}-unit product.")


def product(  # pylint: disable=unused-variable
    left: PaintedTree, right: PaintedTree, side: Union[Side, str] = Side.LEFT
) -> FormalSum:
    """
    Multiplies two painted trees of one family.

    Parameters:
        left (PaintedTree): The left factor.
        right (PaintedTree): The right factor.
        side (Side): Which side the unit is on.

    Returns:
        FormalSum: Terms of degree degree(left) + degree(right).

    Raises:
        KindMismatchError: If the factors belong to different families.
        UnsupportedStructureError: If the family has no product on that side.
    """
    side = Side(side)
    if left.family != right.family:
        raise KindMismatchError(f"Cannot multiply {left.family} by {right.family}.")
    _check_side(left.family, side)
    if side is Side.LEFT:
        return action_left(connection(left, left.family.forest_kind), right)
    return action_right(left, connection(right, left.family.base_kind))


def unit(family: PaintedFamily) -> FormalSum:  # pylint: disable=unused-variable
    return FormalSum.basis(unit_tree(family))


def counit(value: Union[FormalSum, PaintedTree]) -> int:  # pylint: disable=unused-variable
    """
    The coefficient of the single-leaf painted tree.

    Raises:
        KindMismatchError: If the value is neither a painted tree nor a sum of painted trees.
    """
    if isinstance(value, PaintedTree):
        return 1 if value.degree == 0 else 0
    if not isinstance(value, FormalSum) or isinstance(value, TensorSum):
        raise KindMismatchError(f"The counit is defined on painted trees, not on {value!r}.")
    total = 0
    for element, coefficient in value.terms.items():
        if not isinstance(element, PaintedTree):
            raise KindMismatchError(f"The counit is defined on painted trees, not on {element!r}.")
        total += coefficient * counit(element)
    return total


def _proper_pairs(tree: PaintedTree):
    for leaf in range(2, tree.leaf_count):
        yield split(tree, (leaf,))


def antipode(  # pylint: disable=unused-variable
    tree: PaintedTree, side: Union[Side, str] = Side.LEFT
) -> FormalSum:
    """
    Computes the antipode recursively over proper splittings (both pieces of positive degree).
    With a right unit S(e) = -eta * e - sum S(e1) * e2; with a left unit the mirrored recursion
    S(e) = -e * eta - sum e1 * S(e2) is used. S(eta) = eta on both sides. Results are memoized on
    the canonical tree.

    Raises:
        UnsupportedStructureError: If the family has no product on that side.
    """
    side = Side(side)
    _check_side(tree.family, side)
    return _antipode(tree, side)


@lru_cache(maxsize=None)
def _antipode(tree: PaintedTree, side: Side) -> FormalSum:
    eta = unit_tree(tree.family)
    if tree.degree == 0:
        return FormalSum.basis(eta)
    if side is Side.RIGHT:
        result = -product(eta, tree, side)
        for first, second in _proper_pairs(tree):
            result = result - _antipode(first, side).map_linear(
                lambda element, second=second: product(element, second, side)
            )
    else:
        result = -product(tree, eta, side)
        for first, second in _proper_pairs(tree):
            result = result - _antipode(second, side).map_linear(
                lambda element, first=first: product(first, element, side)
            )
    return result


def convolution_check(  # pylint: disable=unused-variable
    tree: PaintedTree, side: Union[Side, str] = Side.LEFT
) -> bool:
    """
    Checks the convolution identity over all splittings, trivial ones included: sum S(e1) * e2
    for a right unit, sum e1 * S(e2) for a left unit, equals eta times the counit of the tree.
    """
    side = Side(side)
    total = FormalSum()
    for first, second in (split(tree, (leaf,)) for leaf in range(1, tree.leaf_count + 1)):
        if side is Side.RIGHT:
            total = total + antipode(first, side).map_linear(
                lambda element, second=second: product(element, second, side)
            )
        else:
            total = total + antipode(second, side).map_linear(
                lambda element, first=first: product(first, element, side)
            )
    return total == FormalSum.basis(unit_tree(tree.family)) * counit(tree)


def coassociativity_holds(tree: PaintedTree) -> bool:  # pylint: disable=unused-variable
    """Compares (coproduct x id) coproduct with (id x coproduct) coproduct on one tree."""
    once = coproduct(tree)
    return once.apply_at(0, coproduct) == once.apply_at(1, coproduct)


def counit_law_holds(tree: PaintedTree) -> bool:  # pylint: disable=unused-variable
    """Applying the counit to either factor of the coproduct gives back the tree."""
    left, right = FormalSum(), FormalSum()
    for (first, second), coefficient in coproduct(tree).items():
        left = left + FormalSum.basis(second, coefficient * counit(first))
        right = right + FormalSum.basis(first, coefficient * counit(second))
    return left == right == FormalSum.basis(tree)


def acting_trees(  # pylint: disable=unused-variable
    target: Union[ForestKind, BaseKind, str], degree: int
) -> List[PlaneTree]:
    """
    The unpainted trees of a degree that act on painted trees: every plane tree, or the corolla.

    Raises:
        KindMismatchError: If the target names neither plane trees nor corollas.
    """
    name = target.value if isinstance(target, Enum) else str(target)
    if name == "plane":
        return [tree for tree, _ in enumerate_trees(TreeKind.PLANE, degree + 1)]
    if name == "corolla":
        return [corolla(degree + 1)]
    raise KindMismatchError(f"Only plane trees and corollas act, not {target!r}.")


def action_law_holds(  # pylint: disable=unused-variable
    tree: PlaneTree, painted: PaintedTree, side: Union[Side, str] = Side.LEFT
) -> bool:
    """
    Checks that an action is a coalgebra map: the coproduct of the action of d on e equals the
    sum of (d1 acting on e1) x (d2 acting on e2) over the coproducts of d and e.

    Raises:
        KindMismatchError: If the family does not admit the action on that side.
    """
    side = Side(side)

    def act(acting: PlaneTree, target: PaintedTree) -> FormalSum:
        if side is Side.LEFT:
            return action_left(acting, target)
        return action_right(target, acting)

    expected = TensorSum()
    for (tree_first, tree_second), tree_coefficient in plane_coproduct(tree).items():
        for (first, second), coefficient in coproduct(painted).items():
            pieces = tensor(act(tree_first, first), act(tree_second, second))
            expected = expected + pieces * (tree_coefficient * coefficient)
    return act(tree, painted).map_linear(coproduct) == expected


def connection_axioms_hold(  # pylint: disable=unused-variable
    tree: PaintedTree, target: Union[ForestKind, BaseKind, str]
) -> bool:
    """
    Checks the connection on one tree: it keeps the degree, sends the unit to the single leaf and
    commutes with the coproducts.
    """
    image = connection(tree, target)
    if image.degree != tree.degree:
        return False
    if connection(unit_tree(tree.family), target) != PlaneTree():
        return False
    mapped = TensorSum()
    for (first, second), coefficient in coproduct(tree).items():
        pair = (connection(first, target), connection(second, target))
        mapped = mapped + TensorSum({pair: coefficient})
    return plane_coproduct(image) == mapped


def product_associativity_holds(  # pylint: disable=unused-variable
    first: PaintedTree, second: PaintedTree, third: PaintedTree, side: Union[Side, str]
) -> bool:
    """Compares (first * second) * third with first * (second * third)."""
    side = Side(side)
    grouped_left = product(first, second, side).map_linear(
        lambda element: product(element, third, side)
    )
    grouped_right = product(second, third, side).map_linear(
        lambda element: product(first, element, side)
    )
    return grouped_left == grouped_right
