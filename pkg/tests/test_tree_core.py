#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module contains unit tests for the tree_core module: plane trees, level assignments,
ordered set partitions, tree enumeration and the forgetful maps on trees and forests.

Classes:
    `TestPlaneTree`: Tests for parsing, measuring and splitting plane trees.
    `TestLevels`: Tests for level assignments and the partitions they induce.
    `TestEnumerateTrees`: Tests for the number and kind of enumerated trees.
    `TestForests`: Tests for forest validation and the maps beta, tau and kappa.
"""

# Standard library imports
import unittest

# Local application/library specific imports
from painted_trees.errors import (
    InvalidArgumentError,
    InvalidLevelError,
    KindMismatchError,
    StructuralError,
)
from painted_trees.tree_core.forests import Forest, ForestKind, beta, forest_kappa, forest_tau
from painted_trees.tree_core.plane_trees import (
    LevelAssignment,
    PlaneTree,
    TreeKind,
    corolla,
    enumerate_trees,
    kappa,
    ordered_set_partitions,
    ordered_tree_from_permutation,
    parse_partition,
    partition_string,
    tau,
    tree_from_partition,
    weak_order_partition,
)


class TestPlaneTree(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for the `PlaneTree` class and the tree constructors.
    """

    def test_measures(self):
        tree = PlaneTree.parse("((..).(..))")
        self.assertEqual(tree.leaf_count, 5)
        self.assertEqual(tree.node_count, 3)
        self.assertEqual(tree.degree, 4)
        self.assertFalse(tree.is_corolla)
        self.assertFalse(tree.is_binary)

    def test_parse_and_print(self):
        for text in [".", "(..)", "(.(..))", "((..).(..))", "(....)"]:
            self.assertEqual(str(PlaneTree.parse(text)), text)

    def test_parse_errors(self):
        """
        Unbalanced parentheses, trailing text and nodes with a single child are rejected.
        """
        for text in ["((..)", "(..)x", "(.)", "", "a"]:
            with self.assertRaises(StructuralError):
                PlaneTree.parse(text)

    def test_json_round_trip(self):
        tree = PlaneTree.parse("(.(..))")
        self.assertEqual(
            tree.to_json(), {"children": [{"children": []}, {"children": [{"children": []}] * 2}]}
        )
        self.assertEqual(PlaneTree.from_json(tree.to_json()), tree)
        with self.assertRaises(StructuralError):
            PlaneTree.from_json({"nodes": []})

    def test_corolla(self):
        self.assertEqual(corolla(1), PlaneTree())
        self.assertEqual(str(corolla(3)), "(...)")
        self.assertTrue(corolla(4).is_corolla)
        with self.assertRaises(InvalidArgumentError):
            corolla(0)

    def test_split(self):
        """
        Splitting at a leaf cuts along the path to the root; the outermost leaves leave the tree
        whole on one side.
        """
        tree = PlaneTree.parse("(.(..))")
        self.assertEqual(tree.split(1), (PlaneTree(), tree))
        self.assertEqual(tree.split(2), (corolla(2), corolla(2)))
        self.assertEqual(tree.split(3), (tree, PlaneTree()))
        with self.assertRaises(InvalidArgumentError):
            tree.split(4)

    def test_gap_heights_need_one_height_per_node(self):
        tree = PlaneTree.parse("(.(..))")
        self.assertEqual(tree.gap_heights([1, 2]), [1, 2])
        with self.assertRaises(InvalidLevelError):
            tree.gap_heights([1])

    def test_kappa_and_tau(self):
        tree, levels = ordered_tree_from_permutation((3, 2, 4, 1))
        self.assertEqual(tau((tree, levels)), tree)
        self.assertEqual(tau(tree), tree)
        self.assertEqual(kappa(tree), corolla(5))
        self.assertEqual(kappa(PlaneTree()), PlaneTree())


class TestLevels(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for level assignments, ordered partitions of the gaps and their inverses.
    """

    def test_weakly_ordered_tree_of_partition(self):
        """
        The partition ({2,5},{1},{3,4}) describes a six-leaf tree with three levels, and reading
        the partition back off the tree gives the same blocks.
        """
        tree, levels = tree_from_partition([[2, 5], [1], [3, 4]])
        self.assertEqual(str(tree), "((.(..)).(..))")
        self.assertEqual(levels.blocks, (3, 2, 1, 1))
        self.assertEqual(levels.heights(), [1, 2, 3, 3])
        self.assertFalse(levels.is_linear)
        self.assertEqual(weak_order_partition(tree, levels), ((2, 5), (1,), (3, 4)))

    def test_ordered_tree_of_permutation(self):
        tree, levels = ordered_tree_from_permutation((3, 2, 4, 1))
        self.assertEqual(str(tree), "((.(..))(..))")
        self.assertTrue(tree.is_binary)
        self.assertTrue(levels.is_linear)
        self.assertEqual(weak_order_partition(tree, levels), ((4,), (2,), (1,), (3,)))

    def test_invalid_permutation(self):
        with self.assertRaises(InvalidArgumentError):
            ordered_tree_from_permutation((1, 1, 2))

    def test_validate(self):
        """
        A level assignment must cover every node, use consecutive blocks and put every ancestor
        in a larger block.
        """
        tree = PlaneTree.parse("(.(..))")
        LevelAssignment((2, 1)).validate(tree)
        for blocks in [(1, 2), (2,), (3, 1)]:
            with self.assertRaises(InvalidLevelError):
                LevelAssignment(blocks).validate(tree)

    def test_partition_round_trip(self):
        tree, levels = tree_from_partition([[2, 5], [1], [3, 4]])
        self.assertEqual(LevelAssignment.from_partition(levels.partition()), levels)
        self.assertEqual(partition_string(((2, 5), (1,), (3, 4))), "{2,5}{1}{3,4}")
        self.assertEqual(parse_partition("{2,5}{1}{3,4}"), ((2, 5), (1,), (3, 4)))
        with self.assertRaises(StructuralError):
            parse_partition("2,5")
        self.assertEqual(tree.leaf_count, 6)

    def test_invalid_gap_partition(self):
        with self.assertRaises(InvalidLevelError):
            tree_from_partition([[1, 2], [2]])

    def test_ordered_set_partition_counts(self):
        self.assertEqual(
            [len(list(ordered_set_partitions(range(n)))) for n in range(5)], [1, 1, 3, 13, 75]
        )


class TestEnumerateTrees(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for `enumerate_trees`.
    """

    def test_counts(self):
        """
        Binary trees are counted by the Catalan numbers, plane trees by the little Schroeder
        numbers, ordered trees by factorials and weakly ordered trees by the Fubini numbers.
        """
        self.assertEqual(len(enumerate_trees(TreeKind.BINARY, 4)), 5)
        self.assertEqual(len(enumerate_trees(TreeKind.PLANE, 4)), 11)
        self.assertEqual(len(enumerate_trees(TreeKind.ORDERED, 5)), 24)
        self.assertEqual(len(enumerate_trees(TreeKind.WEAKLY_ORDERED, 4)), 13)
        self.assertEqual(len(enumerate_trees(TreeKind.COROLLA, 6)), 1)

    def test_kinds(self):
        self.assertTrue(all(tree.is_binary for tree, _ in enumerate_trees(TreeKind.BINARY, 5)))
        self.assertTrue(
            all(levels is None for _, levels in enumerate_trees(TreeKind.PLANE, 4))
        )
        for tree, levels in enumerate_trees(TreeKind.ORDERED, 4):
            self.assertTrue(tree.is_binary)
            self.assertTrue(levels.is_linear)
            levels.validate(tree)

    def test_single_leaf(self):
        for kind in TreeKind:
            self.assertEqual([tree for tree, _ in enumerate_trees(kind, 1)], [PlaneTree()])

    def test_no_leaves(self):
        with self.assertRaises(InvalidArgumentError):
            enumerate_trees(TreeKind.PLANE, 0)


class TestForests(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for forests and the forgetful maps between forest kinds.
    """

    def setUp(self):
        self.trees = (PlaneTree.parse("(.(..))"), PlaneTree.parse("(..)"))
        self.forest = Forest(
            ForestKind.WEAKLY_ORDERED_FOREST, self.trees, levels=LevelAssignment((3, 1, 2))
        )

    def test_beta_restricts_levels(self):
        """
        The forest-wide order (3, 1 | 2) restricts to (2, 1) on the first tree and (1) on the
        second, keeping the relative order inside each tree.
        """
        result = beta(self.forest)
        self.assertIs(result.kind, ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES)
        self.assertEqual(result.trees, self.trees)
        self.assertEqual(
            result.tree_levels, (LevelAssignment((2, 1)), LevelAssignment((1,)))
        )
        result.validate()

    def test_beta_needs_weakly_ordered_forest(self):
        with self.assertRaises(KindMismatchError):
            beta(Forest(ForestKind.FOREST_OF_PLANE_TREES, self.trees))

    def test_tau_drops_levels(self):
        result = forest_tau(self.forest)
        self.assertIs(result.kind, ForestKind.FOREST_OF_PLANE_TREES)
        self.assertEqual(result.trees, self.trees)
        self.assertIsNone(result.levels)
        with self.assertRaises(KindMismatchError):
            forest_tau(Forest(ForestKind.FOREST_OF_COROLLAS, (corolla(2),)))

    def test_kappa_gives_corollas(self):
        result = forest_kappa(self.forest)
        self.assertEqual(result.trees, (corolla(3), corolla(2)))
        leaves = (PlaneTree(), PlaneTree())
        plane_forest = Forest(ForestKind.FOREST_OF_PLANE_TREES, leaves)
        self.assertEqual(forest_kappa(plane_forest).trees, leaves)

    def test_validate(self):
        """
        A forest of corollas rejects trees with several nodes, and a weakly ordered forest needs
        forest-wide levels that respect every tree.
        """
        self.forest.validate()
        with self.assertRaises(KindMismatchError):
            Forest(ForestKind.FOREST_OF_COROLLAS, self.trees).validate()
        with self.assertRaises(InvalidLevelError):
            Forest(ForestKind.WEAKLY_ORDERED_FOREST, self.trees).validate()
        with self.assertRaises(InvalidLevelError):
            Forest(
                ForestKind.WEAKLY_ORDERED_FOREST, self.trees, levels=LevelAssignment((1, 2, 3))
            ).validate()
