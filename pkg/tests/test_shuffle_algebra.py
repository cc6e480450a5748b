#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module contains unit tests for the shuffle_algebra module, which multiplies maximal tubings
of star graphs written in the Tub_r(u_1, ..., u_n) notation.

The tests cover the permutation helpers (shuffles, concatenation, composition and the iterated
shuffle identity), the conversion between the notation and tubings, single terms of the product
for a given shuffle, the expansion over all shuffles and associativity on small degrees.

Classes:
    `TestShuffles`: Tests for the permutation helpers.
    `TestStelloVertexNotation`: Tests for parsing, printing and converting the notation.
    `TestStarProduct`: Tests for single terms, full products and associativity.
"""

# Standard library imports
import unittest
from math import comb

# Local application/library specific imports
from painted_trees.errors import InvalidArgumentError, InvalidShuffleError
from painted_trees.hopf.formal_sums import FormalSum
from painted_trees.shuffle_algebra.stello_shuffle import (
    StelloVertexNotation,
    associativity_failures,
    compose_permutations,
    concat_permutations,
    identity_permutation,
    is_shuffle,
    maximal_notations,
    multi_shuffles,
    shuffle_associativity_holds,
    shuffles,
    star_product,
    star_product_sums,
    star_term,
)
from painted_trees.tubings.graphs import star_graph
from painted_trees.tubings.tubings import Tubing, enumerate_tubings


class TestShuffles(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for the permutation helpers used by the product.
    """

    def test_shuffle_counts_are_binomial(self):
        """
        The number of (n, m)-shuffles is n+m choose n, and every listed permutation is a shuffle.
        """
        for first in range(5):
            for second in range(5):
                listed = shuffles(first, second)
                self.assertEqual(len(listed), comb(first + second, first))
                self.assertTrue(all(is_shuffle(sigma, first, second) for sigma in listed))

    def test_one_one_shuffles(self):
        self.assertEqual(shuffles(1, 1), ((1, 2), (2, 1)))

    def test_empty_side_gives_identity(self):
        self.assertEqual(shuffles(0, 3), ((1, 2, 3),))
        self.assertEqual(shuffles(3, 0), ((1, 2, 3),))

    def test_negative_size_rejected(self):
        with self.assertRaises(InvalidArgumentError):
            shuffles(-1, 2)

    def test_is_shuffle_rejects_wrong_shape(self):
        self.assertFalse(is_shuffle((2, 1, 3), 2, 1))
        self.assertFalse(is_shuffle((1, 2, 4), 2, 1))
        self.assertTrue(is_shuffle((1, 3, 2), 2, 1))

    def test_concat_with_empty_identity(self):
        """
        Concatenating with the identity of S_0 leaves a permutation unchanged, and (1) x (1) is
        the identity of S_2.
        """
        self.assertEqual(concat_permutations((2, 3, 1), identity_permutation(0)), (2, 3, 1))
        self.assertEqual(concat_permutations((1,), (1,)), (1, 2))

    def test_compose_permutations(self):
        self.assertEqual(compose_permutations((2, 3, 1), (1, 2, 3)), (2, 3, 1))
        self.assertEqual(compose_permutations((2, 3, 1), (3, 1, 2)), (1, 2, 3))
        with self.assertRaises(InvalidArgumentError):
            compose_permutations((1, 2), (1, 2, 3))

    def test_multi_shuffles_count(self):
        self.assertEqual(len(multi_shuffles(1, 1, 1)), 6)
        self.assertEqual(len(multi_shuffles(2, 1, 1)), 12)

    def test_iterated_shuffles_agree(self):
        """
        Shuffling n with m and then the result with r gives the same set of permutations as
        shuffling m with r first, and both equal the (n, m, r)-shuffles.
        """
        for total in range(6):
            for first in range(total + 1):
                for second in range(total + 1 - first):
                    third = total - first - second
                    self.assertTrue(shuffle_associativity_holds(first, second, third))


class TestStelloVertexNotation(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for the Tub_r(u) notation of maximal tubings of star graphs.
    """

    def test_parse_and_print(self):
        notation = StelloVertexNotation.parse("Tub_3(1,2,6,5,3,4)")
        self.assertEqual(notation.rank, 3)
        self.assertEqual(notation.word, (1, 2, 6, 5, 3, 4))
        self.assertEqual(notation.singletons, (1, 2, 6))
        self.assertEqual(notation.chain, (5, 3, 4))
        self.assertEqual(str(notation), "Tub_3(1,2,6,5,3,4)")

    def test_bare_rank_is_all_singletons(self):
        notation = StelloVertexNotation.parse("Tub_3")
        self.assertEqual(notation, StelloVertexNotation.full(3))
        self.assertTrue(notation.is_full)
        self.assertEqual(str(notation), "Tub_3(1,2,3)")

    def test_invalid_notations(self):
        """
        A non-permutation word, a rank larger than the word and a decreasing head are rejected,
        as is text that is not in the notation at all.
        """
        with self.assertRaises(InvalidArgumentError):
            StelloVertexNotation(1, (1, 1, 2))
        with self.assertRaises(InvalidArgumentError):
            StelloVertexNotation(4, (1, 2, 3))
        with self.assertRaises(InvalidArgumentError):
            StelloVertexNotation(2, (2, 1, 3))
        with self.assertRaises(InvalidArgumentError):
            StelloVertexNotation.parse("Tube(1,2)")

    def test_full_notation_is_singletons(self):
        tubing = StelloVertexNotation.full(3).to_tubing()
        self.assertEqual(tubing, Tubing.of(range(4), [{1}, {2}, {3}]))

    def test_chain_without_singletons(self):
        tubing = StelloVertexNotation(0, (2, 1)).to_tubing()
        self.assertEqual(tubing, Tubing.of(range(3), [{0}, {0, 2}]))

    def test_round_trip_over_all_maximal_tubings(self):
        """
        The notations of degree 3 are exactly the 16 maximal tubings of the star graph on three
        leaves, and converting to a tubing and back is the identity.
        """
        notations = maximal_notations(3)
        self.assertEqual(len(notations), 16)
        tubings = {notation.to_tubing() for notation in notations}
        self.assertEqual(tubings, set(enumerate_tubings(star_graph(3), maximal_only=True)))
        for notation in notations:
            self.assertEqual(StelloVertexNotation.from_tubing(notation.to_tubing()), notation)

    def test_maximal_notation_counts(self):
        self.assertEqual([len(maximal_notations(n)) for n in range(5)], [1, 2, 5, 16, 65])

    def test_from_non_maximal_tubing_rejected(self):
        with self.assertRaises(InvalidArgumentError):
            StelloVertexNotation.from_tubing(Tubing.of(range(4), [{1}]))

    def test_to_json(self):
        payload = StelloVertexNotation(1, (2, 1)).to_json()
        self.assertEqual(payload["r"], 1)
        self.assertEqual(payload["word"], [2, 1])
        self.assertEqual(payload["tubing"], {"tubes": [[2], [0, 2], [0, 1, 2]]})


class TestStarProduct(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for the product of maximal tubings of star graphs.
    """

    def test_single_term_example(self):
        """
        Multiplying Tub_3(1,2,6,5,3,4) by Tub_2(1,3,2,4) along the shuffle (1,3,5,2,4) gives
        Tub_5(1,2,6,7,9,5,8,3,10,4).
        """
        left = StelloVertexNotation.parse("Tub_3(1,2,6,5,3,4)")
        right = StelloVertexNotation.parse("Tub_2(1,3,2,4)")
        self.assertEqual(
            star_term(left, right, (1, 3, 5, 2, 4)),
            StelloVertexNotation.parse("Tub_5(1,2,6,7,9,5,8,3,10,4)"),
        )

    def test_wrong_shuffle_shape_rejected(self):
        left = StelloVertexNotation.parse("Tub_3(1,2,6,5,3,4)")
        right = StelloVertexNotation.parse("Tub_2(1,3,2,4)")
        with self.assertRaises(InvalidShuffleError):
            star_term(left, right, (1, 2, 3, 4))
        with self.assertRaises(InvalidShuffleError):
            star_term(left, right, (3, 1, 5, 2, 4))

    def test_two_chains_of_length_one(self):
        single = StelloVertexNotation(0, (1,))
        self.assertEqual(
            star_product(single, single),
            FormalSum.from_terms(
                [StelloVertexNotation(0, (1, 2)), StelloVertexNotation(0, (2, 1))]
            ),
        )

    def test_full_times_full(self):
        self.assertEqual(
            star_product(StelloVertexNotation.full(2), StelloVertexNotation.full(1)),
            FormalSum.basis(StelloVertexNotation.full(3)),
        )

    def test_full_on_the_left(self):
        """
        Tub_n times V is the single term Tub_(n+s)(1, ..., n, v_1 + n, ..., v_m + n).
        """
        self.assertEqual(
            star_product(StelloVertexNotation.full(1), StelloVertexNotation(0, (2, 1))),
            FormalSum.basis(StelloVertexNotation(1, (1, 3, 2))),
        )

    def test_full_on_the_right(self):
        """
        T times Tub_m is the single term Tub_(r+m)(u_1, ..., u_r, n+1, ..., n+m, u_(r+1), ...).
        """
        self.assertEqual(
            star_product(StelloVertexNotation(1, (2, 1)), StelloVertexNotation.full(2)),
            FormalSum.basis(StelloVertexNotation(3, (2, 3, 4, 1))),
        )

    def test_term_count_is_binomial(self):
        for left in maximal_notations(3):
            for right in maximal_notations(2):
                first, second = len(left.chain), len(right.chain)
                product = star_product(left, right)
                self.assertEqual(len(product), comb(first + second, first))
                self.assertTrue(all(coefficient == 1 for _, coefficient in product.items()))
                self.assertTrue(all(term.degree == 5 for term, _ in product.items()))

    def test_cube_of_single_chain(self):
        """
        Tub_0(1) cubed, in either grouping, is the sum of the six Tub_0 words of length three.
        """
        single = StelloVertexNotation(0, (1,))
        expected = FormalSum.from_terms(
            notation for notation in maximal_notations(3) if notation.rank == 0
        )
        self.assertEqual(len(expected), 6)
        self.assertEqual(star_product_sums(star_product(single, single), single), expected)
        self.assertEqual(star_product_sums(single, star_product(single, single)), expected)

    def test_associativity(self):
        self.assertEqual(associativity_failures(6), [])
