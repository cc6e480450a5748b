#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module provides exact integer linear combinations of basis elements and of tensors of basis
elements. Basis elements are any hashable values with a canonical string (painted trees, plane
trees); zero coefficients are never stored, and iteration follows the canonical strings so that
output is deterministic.

Classes:
- `FormalSum`: Linear combination of basis elements.
- `TensorSum`: Linear combination of tuples of basis elements.
"""

# Standard library imports
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Mapping, Optional, Tuple

# Related third-party imports
import pandas as pd

# Local application/library specific imports
from painted_trees.errors import ArityError


class FormalSum:  # pylint: disable=unused-variable
    """
    A finite linear combination with integer coefficients.

    Attributes:
        terms (Dict[Hashable, int]): Nonzero coefficient of every basis element that occurs.
    """

    def __init__(self, terms: Optional[Mapping[Hashable, int]] = None):
        self.terms: Dict[Hashable, int] = {}
        for element, coefficient in (terms or {}).items():
            self._accumulate(element, coefficient)

    def _accumulate(self, element: Hashable, coefficient: int) -> None:
        total = self.terms.get(element, 0) + coefficient
        if total:
            self.terms[element] = total
        else:
            self.terms.pop(element, None)

    @classmethod
    def basis(cls, element: Hashable, coefficient: int = 1) -> "FormalSum":
        return cls({element: coefficient})

    @classmethod
    def from_terms(cls, elements: Iterable[Hashable]) -> "FormalSum":
        """Collects a stream of raw terms, each with coefficient 1."""
        result = cls()
        for element in elements:
            result._accumulate(element, 1)  # pylint: disable=protected-access
        return result

    @staticmethod
    def sort_key(element: Hashable) -> Tuple:
        if isinstance(element, tuple):
            return tuple((getattr(part, "degree", 0), str(part)) for part in element)
        return (getattr(element, "degree", 0), str(element))

    def items(self) -> List[Tuple[Hashable, int]]:
        """Terms in canonical order: by degree, then by canonical string."""
        return sorted(self.terms.items(), key=lambda item: self.sort_key(item[0]))

    def __iter__(self) -> Iterator[Tuple[Hashable, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, element: Hashable) -> int:
        return self.terms.get(element, 0)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        result = type(self)(self.terms)
        for element, coefficient in other.terms.items():
            result._accumulate(element, coefficient)
        return result

    def __neg__(self) -> "FormalSum":
        return type(self)({element: -value for element, value in self.terms.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __mul__(self, scalar: int) -> "FormalSum":
        if not isinstance(scalar, int):
            return NotImplemented
        return type(self)({element: scalar * value for element, value in self.terms.items()})

    __rmul__ = __mul__

    def map_linear(self, function: Callable[[Hashable], "FormalSum"]) -> "FormalSum":
        """Extends a map on basis elements linearly."""
        result = None
        for element, coefficient in self.terms.items():
            image = function(element) * coefficient
            result = image if result is None else result + image
        return result if result is not None else FormalSum()

    def bilinear(
        self, other: "FormalSum", function: Callable[[Hashable, Hashable], "FormalSum"]
    ) -> "FormalSum":
        """Extends a map on pairs of basis elements bilinearly."""
        result = FormalSum()
        for left, left_coefficient in self.terms.items():
            for right, right_coefficient in other.terms.items():
                result = result + function(left, right) * (left_coefficient * right_coefficient)
        return result

    def degrees(self) -> Dict[Hashable, int]:
        return {element: getattr(element, "degree", 0) for element in self.terms}

    def to_json(self) -> List[Dict]:
        return [
            {"coef": coefficient, "basis": _basis_json(element)}
            for element, coefficient in self.items()
        ]

    def to_dataframe(self) -> pd.DataFrame:
        """One row per term with its coefficient, degree and canonical string."""
        rows = [
            {
                "coef": coefficient,
                "degree": _degree(element),
                "basis": _basis_string(element),
            }
            for element, coefficient in self.items()
        ]
        return pd.DataFrame(rows, columns=["coef", "degree", "basis"])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{coefficient}*{_basis_string(element)}" for element, coefficient in self.items()
        ).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class TensorSum(FormalSum):  # pylint: disable=unused-variable
    """
    A linear combination of tensors, each tensor a tuple of basis elements of a common arity.
    """

    @property
    def arity(self) -> Optional[int]:
        for element in self.terms:
            return len(element)
        return None

    def _accumulate(self, element: Hashable, coefficient: int) -> None:
        if not isinstance(element, tuple):
            raise ArityError(f"Tensor terms must be tuples, received {element!r}.")
        arity = self.arity
        if arity is not None and len(element) != arity and element not in self.terms:
            raise ArityError(f"Expected tensors of arity {arity}, received {len(element)}.")
        super()._accumulate(element, coefficient)

    def map_linear(self, function):
        result = TensorSum()
        for element, coefficient in self.terms.items():
            result = result + function(element) * coefficient
        return result

    def apply_at(
        self, position: int, function: Callable[[Hashable], FormalSum]
    ) -> "TensorSum":
        """
        Applies a linear map to one tensor factor. When the map returns a `TensorSum` its
        factors are spliced in place, so applying a coproduct raises the arity by one.

        Raises:
            ArityError: If the position is out of range.
        """
        result = TensorSum()
        for element, coefficient in self.terms.items():
            if not 0 <= position < len(element):
                raise ArityError(f"Position {position} is out of range for arity {len(element)}.")
            for image, image_coefficient in function(element[position]).terms.items():
                inner = image if isinstance(image, tuple) else (image,)
                result._accumulate(  # pylint: disable=protected-access
                    element[:position] + inner + element[position + 1 :],
                    coefficient * image_coefficient,
                )
        return result

    def to_json(self) -> List[Dict]:
        return [
            {"coef": coefficient, "basis": [_basis_json(part) for part in element]}
            for element, coefficient in self.items()
        ]


def tensor(*sums: FormalSum) -> TensorSum:  # pylint: disable=unused-variable
    """The tensor product of formal sums, expanded over all factor combinations."""
    result = TensorSum({(): 1})
    for factor in sums:
        expanded = TensorSum()
        for element, coefficient in result.terms.items():
            for part, part_coefficient in factor.terms.items():
                parts = part if isinstance(part, tuple) else (part,)
                expanded = expanded + TensorSum({element + parts: coefficient * part_coefficient})
        result = expanded
    return result


def _basis_json(element: Hashable):
    if hasattr(element, "to_json"):
        return element.to_json()
    return str(element)


def _basis_string(element: Hashable) -> str:
    if isinstance(element, tuple):
        return " ⊗ ".join(str(part) for part in element)
    return str(element)


def _degree(element: Hashable):
    if isinstance(element, tuple):
        return tuple(getattr(part, "degree", 0) for part in element)
    return getattr(element, "degree", 0)
