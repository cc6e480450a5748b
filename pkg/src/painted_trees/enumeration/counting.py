#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module collects the counting formulas for painted trees and tubings, in exact integer
arithmetic, together with the brute-force counts they are checked against.

The number of vertices of the pterahedron of dimension n is

    v(n) = sum over k of k! * B(n, k),

where B(n, k) counts ordered forests of k+1 binary trees with n-k nodes in total, a ballot number
(the Catalan triangle). Equivalently v is the Catalan transform of the factorials.

Classes:
- `CountTable`: Rows of exact counts with their provenance.

Functions:
- `catalan`, `little_schroeder`, `ballot`, `catalan_triangle`, `catalan_transform`.
- `ptera_vertices`, `ptera_breakdown`, `stello_vertices`.
- `star_tube_count`, `bipartite_tube_count`, `fan_tube_count`, `brute_force_tube_count`.
- `count_table`: Formula values, optionally with brute-force rows.
"""

# Standard library imports
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, factorial, prod
from typing import Callable, Dict, List, Sequence, Tuple

# Related third-party imports
import networkx as nx
import numpy as np
import pandas as pd

# Local application/library specific imports
from painted_trees.bijections.painted_bijections import PTERA_FAMILY
from painted_trees.errors import InvalidArgumentError
from painted_trees.painted.splitting import EnumerationLevel, enumerate_painted
from painted_trees.tree_core.plane_trees import TreeKind, enumerate_trees
from painted_trees.tubings.graphs import (
    complete_bipartite_graph,
    fan_graph,
    star_graph,
)
from painted_trees.tubings.tubings import all_tubes, enumerate_tubings

DEFAULT_MAX_NODES = 12

DOUBLE_SUM = "double_sum"
CLOSED_FORM = "closed_form"

FORMULA = "formula"
BRUTE_FORCE = "brute force"


def _check_non_negative(*values: int) -> None:
    for value in values:
        if value < 0:
            raise InvalidArgumentError(f"Expected a non-negative integer, received {value}.")


def _check_positive(*values: int) -> None:
    for value in values:
        if value < 1:
            raise InvalidArgumentError(f"Expected a positive integer, received {value}.")


def catalan(n: int) -> int:  # pylint: disable=unused-variable
    _check_non_negative(n)
    return comb(2 * n, n) // (n + 1)


def little_schroeder(n: int) -> int:  # pylint: disable=unused-variable
    """Number of plane trees with n+1 leaves: 1, 1, 3, 11, 45, 197, ..."""
    _check_non_negative(n)
    if n == 0:
        return 1
    return sum(comb(n, k) * comb(n, k - 1) * 2 ** (k - 1) for k in range(1, n + 1)) // n


def ballot(row: int, col: int) -> int:  # pylint: disable=unused-variable
    """
    Entry (row, col) of the Catalan triangle, (col+1)/(row+1) * C(2 row - col, row); zero above
    the diagonal. Row 4 reads 14, 14, 9, 4, 1.
    """
    _check_non_negative(row, col)
    if col > row:
        return 0
    return (col + 1) * comb(2 * row - col, row) // (row + 1)


def catalan_triangle(size: int) -> np.ndarray:  # pylint: disable=unused-variable
    """The lower triangular matrix of ballot numbers with rows 0..size-1, as exact integers."""
    _check_non_negative(size)
    matrix = np.zeros((size, size), dtype=object)
    for row in range(size):
        for col in range(row + 1):
            matrix[row, col] = ballot(row, col)
    return matrix


def catalan_transform(sequence: Sequence[int]) -> List[int]:  # pylint: disable=unused-variable
    """Applies the Catalan triangle to a sequence a_0, a_1, ...: entry n is sum_k B(n, k) a_k."""
    values = np.array([int(value) for value in sequence], dtype=object)
    return [int(value) for value in catalan_triangle(len(values)).dot(values)]


def forest_count(total: int, trees: int) -> int:  # pylint: disable=unused-variable
    """
    Number of ordered forests of the given number of binary trees with total nodes, summed over
    weak compositions of total: the bracketed inner sum of the double-sum formula.
    """
    _check_non_negative(total)
    _check_positive(trees)
    count = 0
    for bars in combinations(range(total + trees - 1), trees - 1):
        bounds = (-1,) + bars + (total + trees - 1,)
        parts = [bounds[i + 1] - bounds[i] - 1 for i in range(trees)]
        count += prod(catalan(part) for part in parts)
    return count


def ptera_breakdown(n: int) -> List[int]:  # pylint: disable=unused-variable
    """The summands k! * B(n, k) of v(n); for n = 4 they are 14, 14, 18, 24, 24."""
    _check_non_negative(n)
    return [factorial(k) * forest_count(n - k, k + 1) for k in range(n + 1)]


def ptera_vertices(n: int, method: str = CLOSED_FORM) -> int:  # pylint: disable=unused-variable
    """
    Number of vertices of the pterahedron of dimension n.

    Parameters:
        n (int): The dimension.
        method (str): "double_sum" or "closed_form".

    Returns:
        int: v(n).

    Raises:
        InvalidArgumentError: If n is negative or the method is unknown.
    """
    _check_non_negative(n)
    if method == DOUBLE_SUM:
        return sum(ptera_breakdown(n))
    if method == CLOSED_FORM:
        return sum(
            factorial(k) * ((k + 1) * comb(2 * n - k, n) // (n + 1)) for k in range(n + 1)
        )
    raise InvalidArgumentError(f"Unknown method: {method}. Choose {DOUBLE_SUM} or {CLOSED_FORM}.")


def stello_vertices(n: int) -> int:  # pylint: disable=unused-variable
    """Number of vertices of the stellohedron of dimension n, sum of n!/k!."""
    _check_non_negative(n)
    return sum(factorial(n) // factorial(k) for k in range(n + 1))


def star_tube_count(nodes: int) -> int:  # pylint: disable=unused-variable
    """Non-universal tubes of the star graph on the given number of nodes."""
    _check_positive(nodes)
    return 2 ** (nodes - 1) + nodes - 2


def bipartite_tube_count(left: int, right: int) -> int:  # pylint: disable=unused-variable
    _check_positive(left, right)
    return 2 ** (left + right) + (left + right) - (2**left + 2**right)


def fan_tube_count(apexes: int, size: int) -> int:  # pylint: disable=unused-variable
    """Non-universal tubes of the fan graph F_{m,n}."""
    _check_positive(apexes, size)
    return size * (size + 1) // 2 + (2**apexes - 1) * (2**size - 1) + apexes - 1


def brute_force_tube_count(graph: nx.Graph) -> int:  # pylint: disable=unused-variable
    """Non-universal tubes found by enumeration."""
    return len(all_tubes(graph)) - 1


def _ptera_brute_force(n: int) -> int:
    return len(enumerate_painted(PTERA_FAMILY, n, EnumerationLevel.VERTEX_ONLY))


def _stello_brute_force(n: int) -> int:
    return len(enumerate_tubings(star_graph(n), maximal_only=True))


def _catalan_brute_force(n: int) -> int:
    return len(enumerate_trees(TreeKind.BINARY, n + 1))


def _little_schroeder_brute_force(n: int) -> int:
    return len(enumerate_trees(TreeKind.PLANE, n + 1))


COUNT_KINDS: Dict[str, Tuple[Callable[..., int], int, Callable[..., int]]] = {
    "ptera": (ptera_vertices, 1, _ptera_brute_force),
    "stello": (stello_vertices, 1, _stello_brute_force),
    "catalan": (catalan, 1, _catalan_brute_force),
    "little_schroeder": (little_schroeder, 1, _little_schroeder_brute_force),
    "star_tubes": (star_tube_count, 1, lambda n: brute_force_tube_count(star_graph(n - 1))),
    "fan_tubes": (fan_tube_count, 2, lambda m, n: brute_force_tube_count(fan_graph(m, n))),
    "bipartite_tubes": (
        bipartite_tube_count,
        2,
        lambda m, n: brute_force_tube_count(complete_bipartite_graph(m, n)),
    ),
}


@dataclass
class CountTable:  # pylint: disable=unused-variable
    """
    Exact counts keyed by their parameters.

    Attributes:
        name (str): The counted quantity.
        parameters (List[str]): Parameter names.
        rows (List[Tuple[Tuple[int, ...], int, str]]): Parameters, value and provenance.
    """

    name: str
    parameters: List[str]
    rows: List[Tuple[Tuple[int, ...], int, str]] = field(default_factory=list)

    def add(self, params: Sequence[int], value: int, provenance: str = FORMULA) -> None:
        self.rows.append((tuple(params), int(value), provenance))

    def values(self, provenance: str = FORMULA) -> List[int]:
        return [value for _, value, source in self.rows if source == provenance]

    def to_dataframe(self) -> pd.DataFrame:
        records = []
        for params, value, provenance in self.rows:
            record = dict(zip(self.parameters, params))
            record["value"] = value
            record["provenance"] = provenance
            records.append(record)
        columns = self.parameters + ["value", "provenance"]
        return pd.DataFrame(records, columns=columns).astype({"value": object})

    def __str__(self) -> str:
        return self.to_dataframe().to_string(index=False)


def count_table(  # pylint: disable=unused-variable
    kind: str, parameter_grid: Sequence[Sequence[int]], brute_force: bool = False
) -> CountTable:
    """
    Tabulates a counting formula over a parameter grid.

    Parameters:
        kind (str): One of the keys of `COUNT_KINDS`.
        parameter_grid (Sequence[Sequence[int]]): Parameter tuples, e.g. [(0,), (1,), (2,)].
        brute_force (bool): Whether to add enumerated counts where an enumeration exists.

    Returns:
        CountTable: Formula rows followed by brute-force rows.

    Raises:
        InvalidArgumentError: If the kind is unknown or a tuple has the wrong length.
    """
    if kind not in COUNT_KINDS:
        raise InvalidArgumentError(
            f"Unknown count: {kind}. Choose one of {', '.join(sorted(COUNT_KINDS))}."
        )
    formula, arity, enumerate_count = COUNT_KINDS[kind]
    names = ["n"] if arity == 1 else ["m", "n"]
    table = CountTable(kind, names)
    grid = [tuple(params) for params in parameter_grid]
    for params in grid:
        if len(params) != arity:
            raise InvalidArgumentError(f"Count {kind} takes {arity} parameter(s).")
        table.add(params, formula(*params))
    if brute_force:
        for params in grid:
            table.add(params, enumerate_count(*params), BRUTE_FORCE)
    return table
