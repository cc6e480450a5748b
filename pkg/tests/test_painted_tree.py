#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module contains unit tests for the `PaintedTree` class and the twelve painted families.

The tests check family parsing, the canonical height representation, the structural views of a
painted tree (base, attachments and forest), the string and JSON forms, family validation and the
fractional maps between families.

Classes:
    `TestPaintedFamily`: Tests for family parsing and polytope names.
    `TestPaintedTree`: Tests for the views and serializations of painted trees.
    `TestFamilyMaps`: Tests for family validation and fractional maps.
"""

# Standard library imports
import unittest

# Local application/library specific imports
from painted_trees.errors import InvalidLevelError, KindMismatchError, StructuralError
from painted_trees.painted.painted_tree import (
    MASTER_FAMILY,
    Attachment,
    BaseKind,
    PaintedFamily,
    PaintedTree,
    fractional_map,
    half_painted_corolla,
    unit_tree,
    validate_family,
)
from painted_trees.painted.splitting import enumerate_painted
from painted_trees.tree_core.forests import ForestKind
from painted_trees.tree_core.plane_trees import PlaneTree, corolla


class TestPaintedFamily(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for the `PaintedFamily` class.
    """

    def test_parse_aliases(self):
        self.assertEqual(PaintedFamily.parse("binary/binary"), PaintedFamily.parse("plane/plane"))
        self.assertEqual(PaintedFamily.parse("ordered/ordered"), MASTER_FAMILY)
        self.assertEqual(str(PaintedFamily.parse("Corolla/WO")), "corolla/wo")

    def test_parse_errors(self):
        for text in ["foo/wo", "plane", "plane/plane/plane", "wof/fwot"]:
            with self.assertRaises(KindMismatchError):
                PaintedFamily.parse(text)

    def test_all_families(self):
        """
        There are twelve families, eight of which have a known polytope.
        """
        families = PaintedFamily.all()
        self.assertEqual(len(families), 12)
        self.assertEqual(len(set(families)), 12)
        self.assertEqual(sum(family.is_proven for family in families), 8)

    def test_polytope_names(self):
        expected = {
            "corolla/corolla": "cube",
            "plane/corolla": "associahedron",
            "plane/plane": "multiplihedron",
            "corolla/plane": "composihedron",
            "wof/wo": "permutohedron",
            "corolla/wo": "stellohedron",
            "wof/corolla": "stellohedron",
            "plane/wo": "pterahedron",
        }
        for text, name in expected.items():
            self.assertEqual(PaintedFamily.parse(text).polytope_name, name)
        self.assertIsNone(PaintedFamily.parse("fwot/plane").polytope_name)
        self.assertFalse(PaintedFamily.parse("wof/plane").is_proven)

    def test_to_json(self):
        self.assertEqual(
            PaintedFamily.parse("fwot/corolla").to_json(), {"forest": "fwot", "base": "corolla"}
        )


class TestPaintedTree(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for the `PaintedTree` class.
    """

    def setUp(self):
        self.family = PaintedFamily.parse("plane/plane")
        self.tree = PaintedTree.from_master(self.family, (0, -1, 1))

    def test_views(self):
        """
        A tree with one painted gap followed by one unpainted gap has a one-node base, a bare
        leaf on the left and an unpainted node on the right.
        """
        self.assertEqual(self.tree.degree, 2)
        self.assertEqual(self.tree.leaf_count, 3)
        self.assertEqual(self.tree.statuses(), ["P", "U"])
        self.assertEqual(str(self.tree.shape()), "(.(..))")
        self.assertEqual(self.tree.base(), corolla(2))
        self.assertEqual(
            self.tree.attachments(), [Attachment((PlaneTree(),)), Attachment((corolla(2),))]
        )
        self.assertIsNone(self.tree.base_levels())
        self.assertEqual(self.tree.forest().trees, (PlaneTree(), corolla(2)))

    def test_string_form(self):
        self.assertEqual(str(self.tree), "(..)|.,(..)")
        self.assertEqual(self.tree.key, "(..)|.,(..)")
        self.assertEqual(PaintedTree.parse(self.family, "(..)|.,(..)"), self.tree)

    def test_canonical_heights(self):
        """
        Heights are shifted so the paint line is 0, and only their relative order matters.
        """
        self.assertEqual(PaintedTree.from_master(self.family, (3, 1, 7)), self.tree)
        self.assertEqual(PaintedTree.from_master(self.family, (3, 1, 7)).heights, (0, -1, 1))

    def test_degree_one_trees(self):
        """
        In every family the three degree 1 trees are painted, half-painted and unpainted.
        """
        for family in PaintedFamily.all():
            statuses = sorted(tree.statuses()[0] for tree in enumerate_painted(family, 1))
            self.assertEqual(statuses, ["H", "P", "U"])

    def test_fused_attachment(self):
        tree = PaintedTree.from_master(MASTER_FAMILY, (0, 0, 1))
        self.assertEqual(tree.attachments(), [Attachment((PlaneTree(), corolla(2)), True)])
        self.assertEqual(str(tree), ".|[.(..)]#{1}{0}")
        self.assertEqual(PaintedTree.parse(MASTER_FAMILY, str(tree)), tree)

    def test_weakly_ordered_base_string(self):
        tree = PaintedTree.from_master(MASTER_FAMILY, (0, -1))
        self.assertEqual(str(tree), "(..)|.,.@{0}")
        self.assertEqual(tree.base_levels().blocks, (1,))

    def test_string_round_trip(self):
        for family in PaintedFamily.all():
            for tree in enumerate_painted(family, 2):
                self.assertEqual(PaintedTree.parse(family, str(tree)), tree)

    def test_json_round_trip(self):
        """
        Serializing a tree to JSON and reading it back gives the same tree in every family.
        """
        for family in PaintedFamily.all():
            for tree in enumerate_painted(family, 2):
                payload = tree.to_json()
                self.assertEqual(payload["family"], family.to_json())
                self.assertEqual(PaintedTree.from_json(payload), tree)

    def test_json_fields(self):
        payload = self.tree.to_json()
        self.assertEqual(payload["base"], corolla(2).to_json())
        self.assertIsNone(payload["baseLevels"])
        self.assertIsNone(payload["forestLevels"])
        self.assertEqual(payload["attachments"][1], {"trunked": corolla(2).to_json()})

    def test_invalid_input(self):
        with self.assertRaises(StructuralError):
            PaintedTree.parse(self.family, "(..)")
        with self.assertRaises(StructuralError):
            PaintedTree.parse(self.family, "(..)|.")
        with self.assertRaises(StructuralError):
            PaintedTree.from_json({"family": {"forest": "plane", "base": "plane"}})
        with self.assertRaises(InvalidLevelError):
            PaintedTree.parse(MASTER_FAMILY, "(..)|.,.")
        with self.assertRaises(StructuralError):
            Attachment((PlaneTree(),), True)
        with self.assertRaises(StructuralError):
            Attachment((PlaneTree(), PlaneTree()))

    def test_unit_and_half_painted_corolla(self):
        self.assertEqual(unit_tree(self.family).degree, 0)
        self.assertEqual(half_painted_corolla(0, self.family), unit_tree(self.family))
        tree = half_painted_corolla(3, self.family)
        self.assertEqual(tree.degree, 3)
        self.assertEqual(tree.statuses(), ["H", "H", "H"])
        self.assertEqual(str(tree), ".|[....]")


class TestFamilyMaps(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for `validate_family` and `fractional_map`.
    """

    def test_half_painted_corolla_in_every_family(self):
        for family in PaintedFamily.all():
            self.assertTrue(validate_family(half_painted_corolla(3, family)))

    def test_validate_family_violations(self):
        """
        A corolla base may not carry two painted nodes, and a forest of corollas may not carry an
        unpainted tree with two levels.
        """
        cube = PaintedFamily.parse("corolla/corolla")
        self.assertFalse(validate_family(PaintedTree(cube, (0, 1, 2))))
        self.assertFalse(validate_family(PaintedTree(cube, (0, -1, -2))))
        self.assertTrue(validate_family(PaintedTree(cube, (0, 1, 1))))
        with self.assertRaises(StructuralError):
            validate_family(PaintedTree(cube, ()))

    def test_enumerated_trees_validate(self):
        for family in PaintedFamily.all():
            self.assertTrue(all(validate_family(tree) for tree in enumerate_painted(family, 3)))

    def test_identity_map(self):
        tree = PaintedTree.from_master(MASTER_FAMILY, (0, -2, -1, 1, 2))
        self.assertEqual(fractional_map("identity", "identity", tree), tree)

    def test_kappa_kappa(self):
        tree = PaintedTree.from_master(MASTER_FAMILY, (0, -2, -1, 1, 2))
        image = fractional_map("kappa", "kappa", tree)
        self.assertEqual(image.family, PaintedFamily.parse("corolla/corolla"))
        self.assertEqual(image.heights, (0, -1, -1, 1, 1))

    def test_tau_tau(self):
        tree = PaintedTree.from_master(MASTER_FAMILY, (0, -2, -1, 1, 2))
        image = fractional_map("tau", "tau", tree)
        self.assertEqual(image.family.forest_kind, ForestKind.FOREST_OF_PLANE_TREES)
        self.assertEqual(image.family.base_kind, BaseKind.PLANE)
        self.assertEqual(image.shape(), tree.shape())

    def test_maps_that_do_not_apply(self):
        tree = PaintedTree.from_master(PaintedFamily.parse("plane/plane"), (0, -1, 1))
        with self.assertRaises(KindMismatchError):
            fractional_map("beta", "identity", tree)
        with self.assertRaises(KindMismatchError):
            fractional_map("identity", "beta", tree)
        with self.assertRaises(KindMismatchError):
            fractional_map("kappa", "sideways", tree)
