#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module defines the exception hierarchy shared by every part of the package. All errors
derive from `PaintedTreesError`, which itself is a `ValueError`, so callers that already guard
against invalid input with `except ValueError` keep working.

Classes:
- `PaintedTreesError`: Root of the hierarchy.
- `InvalidArgumentError`: A numeric or positional argument is out of range.
- `StructuralError`: A tree, painted tree or formal sum is malformed.
- `InvalidLevelError`: A level assignment is inconsistent with its tree.
- `KindMismatchError`: An operation was applied to a tree, forest or family of the wrong kind.
- `ArityError`: A grafting received the wrong number of pieces.
- `UnsupportedStructureError`: A family does not carry the requested algebraic structure.
- `RankError`: A rank-dependent query was made on an unranked poset.
- `InvalidTubingError`: A set of tubes is not a tubing of the given graph.
- `InvalidRepresentativeError`: A marked tubing is not the chosen representative of its class.
- `InvalidShuffleError`: A permutation is not a shuffle of the required shape.
- `GraphMismatchError`: Two tubings live on different graphs.
"""


class PaintedTreesError(ValueError):  # pylint: disable=unused-variable
    """Base class for all errors raised by the package."""


class InvalidArgumentError(PaintedTreesError):  # pylint: disable=unused-variable
    """Raised when a size, index or leaf number is outside its admissible range."""


class StructuralError(PaintedTreesError):  # pylint: disable=unused-variable
    """Raised when an input cannot be parsed into a well-formed structure."""


class InvalidLevelError(PaintedTreesError):  # pylint: disable=unused-variable
    """Raised when a level assignment does not respect root proximity."""


class KindMismatchError(PaintedTreesError):  # pylint: disable=unused-variable
    """Raised when a forgetful map, action or comparison receives the wrong kind."""


class ArityError(PaintedTreesError):  # pylint: disable=unused-variable
    """Raised when the number of grafted pieces differs from the number of target leaves."""


class UnsupportedStructureError(PaintedTreesError):  # pylint: disable=unused-variable
    """Raised when a product or antipode is requested on a side the family does not admit."""


class RankError(PaintedTreesError):  # pylint: disable=unused-variable
    """Raised when an f-vector is requested from a poset without rank data."""


class InvalidTubingError(PaintedTreesError):  # pylint: disable=unused-variable
    """Raised for tubes that are disconnected or tubings with incompatible tubes."""


class InvalidRepresentativeError(PaintedTreesError):  # pylint: disable=unused-variable
    """Raised when a marked tubing is not in the representative form a bijection expects."""


class InvalidShuffleError(PaintedTreesError):  # pylint: disable=unused-variable
    """Raised when a permutation does not have the required shuffle shape."""


class GraphMismatchError(PaintedTreesError):  # pylint: disable=unused-variable
    """Raised when two tubings are compared across different graphs."""
