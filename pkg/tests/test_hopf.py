#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module contains unit tests for the hopf module: formal sums and tensors with integer
coefficients, the coproduct of painted trees, the module actions, the one-sided products, the
counit and the antipode.

Classes:
    `TestFormalSum`: Tests for linear combinations and tensors.
    `TestCoproduct`: Tests for coproducts, coassociativity and the counit.
    `TestProduct`: Tests for connections, actions, one-sided products and their laws.
    `TestAntipode`: Tests for the recursive antipode and the convolution identity.
"""

# Standard library imports
import unittest
from math import comb

# Local application/library specific imports
from painted_trees.errors import ArityError, KindMismatchError, UnsupportedStructureError
from painted_trees.hopf.formal_sums import FormalSum, TensorSum, tensor
from painted_trees.hopf.hopf_operations import (
    Side,
    acting_trees,
    action_left,
    action_law_holds,
    action_right,
    antipode,
    coassociativity_holds,
    connection,
    connection_axioms_hold,
    convolution_check,
    coproduct,
    counit,
    counit_law_holds,
    iterated_coproduct,
    left_action_terms,
    plane_coproduct,
    product,
    product_associativity_holds,
    supported_sides,
    unit,
)
from painted_trees.painted.painted_tree import (
    MASTER_FAMILY,
    PaintedFamily,
    PaintedTree,
    half_painted_corolla,
    unit_tree,
)
from painted_trees.painted.splitting import enumerate_painted
from painted_trees.tree_core.forests import ForestKind
from painted_trees.tree_core.plane_trees import PlaneTree, corolla


class TestFormalSum(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for `FormalSum`, `TensorSum` and `tensor`.
    """

    def test_arithmetic(self):
        first = FormalSum({"a": 1, "b": 2})
        second = FormalSum({"a": -1, "c": 1})
        self.assertEqual(first + second, FormalSum({"b": 2, "c": 1}))
        self.assertEqual(first - first, 0)
        self.assertEqual(3 * first, FormalSum({"a": 3, "b": 6}))
        self.assertEqual((-first).coefficient("b"), -2)
        self.assertEqual(len(first + second), 2)

    def test_collect_terms(self):
        collected = FormalSum.from_terms(["a", "b", "a"])
        self.assertEqual(collected.coefficient("a"), 2)
        self.assertEqual(collected.coefficient("z"), 0)

    def test_string_form(self):
        self.assertEqual(str(FormalSum({"a": 1, "b": -2})), "1*a - 2*b")
        self.assertEqual(str(FormalSum()), "0")

    def test_linear_extensions(self):
        """
        Maps on basis elements extend linearly, and maps on pairs extend bilinearly.
        """
        doubled = FormalSum({"a": 1, "b": 2}).map_linear(lambda element: FormalSum({element: 2}))
        self.assertEqual(doubled, FormalSum({"a": 2, "b": 4}))
        pairs = FormalSum({"a": 1, "b": 1}).bilinear(
            FormalSum({"x": 2}), lambda left, right: FormalSum.basis(left + right)
        )
        self.assertEqual(pairs, FormalSum({"ax": 2, "bx": 2}))

    def test_to_json_and_dataframe(self):
        total = FormalSum({"b": 2, "a": -1})
        self.assertEqual(
            total.to_json(), [{"coef": -1, "basis": "a"}, {"coef": 2, "basis": "b"}]
        )
        frame = total.to_dataframe()
        self.assertEqual(list(frame.columns), ["coef", "degree", "basis"])
        self.assertEqual(list(frame["coef"]), [-1, 2])

    def test_tensor(self):
        result = tensor(FormalSum.basis("a"), FormalSum({"b": 1, "c": 2}))
        self.assertEqual(result, TensorSum({("a", "b"): 1, ("a", "c"): 2}))
        self.assertEqual(result.arity, 2)

    def test_tensor_arity(self):
        with self.assertRaises(ArityError):
            TensorSum({"a": 1})
        with self.assertRaises(ArityError):
            TensorSum({("a",): 1}) + TensorSum({("a", "b"): 1})
        with self.assertRaises(ArityError):
            TensorSum({("a",): 1}).apply_at(1, FormalSum.basis)


class TestCoproduct(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for `coproduct`, `iterated_coproduct`, `plane_coproduct` and `counit`.
    """

    def test_unit_coproduct(self):
        eta = unit_tree(MASTER_FAMILY)
        self.assertEqual(coproduct(eta), TensorSum({(eta, eta): 1}))

    def test_degrees_add_up(self):
        for tree in enumerate_painted(MASTER_FAMILY, 3):
            terms = coproduct(tree)
            self.assertEqual(sum(coefficient for _, coefficient in terms.items()), 4)
            for (first, second), _ in terms.items():
                self.assertEqual(first.degree + second.degree, tree.degree)

    def test_half_painted_corolla(self):
        """
        Splitting the half-painted corolla at a leaf gives two smaller half-painted corollas.
        """
        expected = TensorSum(
            {
                (half_painted_corolla(first), half_painted_corolla(2 - first)): 1
                for first in range(3)
            }
        )
        self.assertEqual(coproduct(half_painted_corolla(2)), expected)

    def test_coassociativity(self):
        for family in [MASTER_FAMILY, PaintedFamily.parse("corolla/corolla")]:
            for tree in enumerate_painted(family, 2):
                twice = iterated_coproduct(tree, 2)
                self.assertEqual(coproduct(tree).apply_at(0, coproduct), twice)
                self.assertEqual(coproduct(tree).apply_at(1, coproduct), twice)

    def test_coassociativity_in_every_family(self):
        for family in PaintedFamily.all():
            for degree in range(5):
                for tree in enumerate_painted(family, degree):
                    with self.subTest(family=str(family), tree=str(tree)):
                        self.assertTrue(coassociativity_holds(tree))

    def test_iterated_term_count(self):
        tree = half_painted_corolla(3)
        for times in range(4):
            total = sum(coefficient for _, coefficient in iterated_coproduct(tree, times).items())
            self.assertEqual(total, comb(3 + times, times))

    def test_plane_coproduct(self):
        tree = PlaneTree.parse("(.(..))")
        self.assertEqual(
            plane_coproduct(tree),
            TensorSum(
                {
                    (PlaneTree(), tree): 1,
                    (corolla(2), corolla(2)): 1,
                    (tree, PlaneTree()): 1,
                }
            ),
        )

    def test_counit(self):
        eta = unit_tree(MASTER_FAMILY)
        tree = half_painted_corolla(2)
        self.assertEqual(counit(eta), 1)
        self.assertEqual(counit(tree), 0)
        self.assertEqual(counit(FormalSum({eta: 3, tree: -2})), 3)

    def test_counit_rejects_other_elements(self):
        with self.assertRaises(KindMismatchError):
            counit(FormalSum({PlaneTree(): 1}))
        with self.assertRaises(KindMismatchError):
            counit(TensorSum({(unit_tree(MASTER_FAMILY),): 1}))
        with self.assertRaises(KindMismatchError):
            counit(PlaneTree())

    def test_counit_axiom(self):
        """
        Applying the counit to the left factor of the coproduct gives back the tree.
        """
        for tree in enumerate_painted(PaintedFamily.parse("plane/wo"), 3):
            total = FormalSum()
            for (first, second), coefficient in coproduct(tree).items():
                total = total + FormalSum.basis(second, coefficient * counit(first))
            self.assertEqual(total, FormalSum.basis(tree))

    def test_counit_law_in_every_family(self):
        for family in PaintedFamily.all():
            for degree in range(4):
                for tree in enumerate_painted(family, degree):
                    self.assertTrue(counit_law_holds(tree), msg=f"{family} {tree}")


class TestProduct(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for connections, module actions and one-sided products.
    """

    def setUp(self):
        self.family = PaintedFamily.parse("plane/plane")
        self.eta = unit_tree(self.family)
        self.painted = PaintedTree.from_master(self.family, (0, -1))
        self.unpainted = PaintedTree.from_master(self.family, (0, 1))

    def test_connection(self):
        tree = PaintedTree.from_master(self.family, (0, -1, 1))
        self.assertEqual(connection(tree, "corolla"), corolla(3))
        self.assertEqual(connection(tree, "plane"), PlaneTree.parse("(.(..))"))
        self.assertEqual(connection(self.eta, "plane"), PlaneTree())
        with self.assertRaises(KindMismatchError):
            connection(tree, "wof")

    def test_supported_sides(self):
        self.assertEqual(supported_sides(self.family), [Side.LEFT, Side.RIGHT])
        self.assertEqual(supported_sides(MASTER_FAMILY), [])
        self.assertEqual(supported_sides(PaintedFamily.parse("corolla/wo")), [Side.LEFT])
        self.assertEqual(supported_sides(PaintedFamily.parse("fwot/plane")), [Side.RIGHT])

    def test_one_sided_units(self):
        """
        The single-leaf tree is a left unit for the left product and a right unit for the right
        product.
        """
        for tree in enumerate_painted(self.family, 2):
            self.assertEqual(product(self.eta, tree, Side.LEFT), FormalSum.basis(tree))
            self.assertEqual(product(tree, self.eta, Side.RIGHT), FormalSum.basis(tree))
        self.assertEqual(unit(self.family), FormalSum.basis(self.eta))

    def test_not_a_two_sided_unit(self):
        self.assertEqual(
            product(self.painted, self.eta, Side.LEFT), FormalSum.basis(self.unpainted)
        )
        self.assertEqual(
            product(self.eta, self.unpainted, Side.RIGHT), FormalSum.basis(self.painted)
        )

    def test_single_leaf_action(self):
        for tree in enumerate_painted(self.family, 2):
            self.assertEqual(action_left(PlaneTree(), tree), FormalSum.basis(tree))
            self.assertEqual(action_right(tree, PlaneTree()), FormalSum.basis(tree))

    def test_corolla_action_raw_terms(self):
        """
        A corolla with three leaves acts on a degree 2 tree by choosing two of its leaves with
        repetition, six raw terms in all.
        """
        tree = PaintedTree.from_master(self.family, (0, -1, -1))
        terms = list(left_action_terms(corolla(3), tree))
        self.assertEqual(len(terms), 6)
        self.assertTrue(all(term.degree == 4 for term in terms))
        self.assertEqual(
            sum(coefficient for _, coefficient in action_left(corolla(3), tree).items()), 6
        )

    def test_product_degrees(self):
        left = PaintedTree.from_master(self.family, (0, -1, 1))
        right = PaintedTree.from_master(self.family, (0, 1, -1))
        for side in supported_sides(self.family):
            for term, _ in product(left, right, side).items():
                self.assertEqual(term.degree, 4)

    def test_acting_trees(self):
        self.assertEqual(acting_trees("corolla", 3), [corolla(4)])
        self.assertEqual(len(acting_trees(ForestKind.FOREST_OF_PLANE_TREES, 2)), 3)
        self.assertEqual(acting_trees("plane", 0), [PlaneTree()])
        with self.assertRaises(KindMismatchError):
            acting_trees("wo", 1)

    def test_actions_respect_the_coproduct(self):
        """
        The coproduct of d acting on e is the sum of (d1 acting on e1) x (d2 acting on e2), for
        the left and the right action, up to total degree 3.
        """
        for family in PaintedFamily.all():
            for side in supported_sides(family):
                target = family.forest_kind if side is Side.LEFT else family.base_kind
                for acting_degree in range(4):
                    for acting in acting_trees(target, acting_degree):
                        for degree in range(4 - acting_degree):
                            for tree in enumerate_painted(family, degree):
                                with self.subTest(
                                    family=str(family), side=side.value, acting=str(acting)
                                ):
                                    self.assertTrue(action_law_holds(acting, tree, side))

    def test_connection_axioms(self):
        for family in PaintedFamily.all():
            for target in ["plane", "corolla"]:
                for degree in range(4):
                    for tree in enumerate_painted(family, degree):
                        with self.subTest(family=str(family), target=target, tree=str(tree)):
                            self.assertTrue(connection_axioms_hold(tree, target))

    def test_product_associativity(self):
        for family in PaintedFamily.all():
            trees = {degree: enumerate_painted(family, degree) for degree in range(4)}
            for side in supported_sides(family):
                for first_degree in range(4):
                    for second_degree in range(4 - first_degree):
                        for third_degree in range(4 - first_degree - second_degree):
                            for first in trees[first_degree]:
                                for second in trees[second_degree]:
                                    for third in trees[third_degree]:
                                        self.assertTrue(
                                            product_associativity_holds(
                                                first, second, third, side
                                            ),
                                            msg=f"{family} {side.value} {first} {second} {third}",
                                        )

    def test_product_errors(self):
        master_tree = half_painted_corolla(1)
        with self.assertRaises(UnsupportedStructureError):
            product(master_tree, master_tree, Side.LEFT)
        with self.assertRaises(KindMismatchError):
            product(self.painted, master_tree, Side.LEFT)
        with self.assertRaises(KindMismatchError):
            action_left(PlaneTree(), master_tree)
        with self.assertRaises(KindMismatchError):
            action_right(master_tree, PlaneTree())


class TestAntipode(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for `antipode` and `convolution_check`.
    """

    def setUp(self):
        self.family = PaintedFamily.parse("plane/plane")
        self.eta = unit_tree(self.family)

    def test_antipode_of_unit(self):
        for side in Side:
            self.assertEqual(antipode(self.eta, side), FormalSum.basis(self.eta))

    def test_degree_one(self):
        """
        In degree 1 the left antipode of every tree is minus the unpainted tree and the right
        antipode is minus the painted tree.
        """
        unpainted = PaintedTree.from_master(self.family, (0, 1))
        painted = PaintedTree.from_master(self.family, (0, -1))
        for tree in enumerate_painted(self.family, 1):
            self.assertEqual(antipode(tree, Side.LEFT), -FormalSum.basis(unpainted))
            self.assertEqual(antipode(tree, Side.RIGHT), -FormalSum.basis(painted))

    def test_convolution_identity(self):
        for family in PaintedFamily.all():
            for side in supported_sides(family):
                for degree in range(4):
                    for tree in enumerate_painted(family, degree):
                        self.assertTrue(convolution_check(tree, side), msg=f"{family} {tree}")

    def test_antipode_is_homogeneous(self):
        for tree in enumerate_painted(self.family, 3):
            for side in Side:
                self.assertTrue(all(term.degree == 3 for term, _ in antipode(tree, side).items()))

    def test_unsupported_side(self):
        with self.assertRaises(UnsupportedStructureError):
            antipode(half_painted_corolla(1), Side.LEFT)
        with self.assertRaises(UnsupportedStructureError):
            antipode(unit_tree(PaintedFamily.parse("corolla/wo")), "right")
