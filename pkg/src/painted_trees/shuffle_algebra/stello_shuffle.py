#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module implements the shuffle product on the vertices of the stellohedra, the maximal
tubings of the star graphs St_n (center 0, outer nodes 1..n).

Every maximal tubing T of St_n is written Tub_r(u_1, ..., u_n): u is a permutation of 1..n with
u_1 < ... < u_r, the tubes are the singletons {u_1}, ..., {u_r}, the tube
t0 = {0, u_1, ..., u_r}, and the chain t0 + {u_(r+1)}, t0 + {u_(r+1), u_(r+2)}, ... up to the
universal tube. Tub_n(1, ..., n) is abbreviated Tub_n.

The product of Tub_r(u) over n with Tub_s(v) over m is the sum, over the (n-r, m-s)-shuffles
sigma, of the tubings Tub_(r+s)(u_1..u_r, v_1+n..v_s+n, w_sigma^-1(1), ...), where w lists the
chain nodes u_(r+1)..u_n followed by v_(s+1)+n..v_m+n.

Classes:
- `StelloVertexNotation`: A maximal tubing of a star graph in Tub_r notation.

Functions:
- `shuffles`, `multi_shuffles`, `is_shuffle`: Shuffle permutations in one-line notation.
- `concat_permutations`, `compose_permutations`, `identity_permutation`.
- `shuffle_associativity_holds`: Checks that iterated shuffles agree.
- `to_notation`, `from_notation`, `maximal_notations`.
- `star_term`, `star_product`, `star_product_sums`: The product.
- `associativity_failures`: Exhaustive associativity check.
"""

# Standard library imports
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, List, Sequence, Tuple, Union

# Local application/library specific imports
from painted_trees.errors import InvalidArgumentError, InvalidShuffleError
from painted_trees.hopf.formal_sums import FormalSum
from painted_trees.tubings.graphs import star_graph
from painted_trees.tubings.tubings import Tubing, is_tubing

Permutation = Tuple[int, ...]

NOTATION_PATTERN = re.compile(r"^\s*Tub_(\d+)\s*(?:\(([\d,\s]*)\))?\s*$")


def identity_permutation(size: int) -> Permutation:  # pylint: disable=unused-variable
    return tuple(range(1, size + 1))


def _check_sizes(*sizes: int) -> None:
    for size in sizes:
        if size < 0:
            raise InvalidArgumentError(f"Expected a non-negative size, received {size}.")


@lru_cache(maxsize=None)
def shuffles(first: int, second: int) -> Tuple[Permutation, ...]:  # pylint: disable=unused-variable
    """
    The (first, second)-shuffles: permutations sigma of 1..first+second in one-line notation with
    sigma(1) < ... < sigma(first) and sigma(first+1) < ... < sigma(first+second).

    Raises:
        InvalidArgumentError: If a size is negative.
    """
    _check_sizes(first, second)
    total = first + second
    result = []
    for chosen in combinations(range(1, total + 1), first):
        rest = tuple(value for value in range(1, total + 1) if value not in chosen)
        result.append(tuple(chosen) + rest)
    return tuple(sorted(result))


def multi_shuffles(*sizes: int) -> Tuple[Permutation, ...]:  # pylint: disable=unused-variable
    """Permutations increasing on each consecutive block of the given sizes."""
    _check_sizes(*sizes)
    total = sum(sizes)
    bounds = []
    start = 0
    for size in sizes:
        bounds.append((start, start + size))
        start += size
    result = []
    for candidate in permutations(range(1, total + 1)):
        if all(
            all(candidate[i] < candidate[i + 1] for i in range(low, high - 1))
            for low, high in bounds
        ):
            result.append(candidate)
    return tuple(result)


def is_shuffle(  # pylint: disable=unused-variable
    permutation: Sequence[int], first: int, second: int
) -> bool:
    permutation = tuple(permutation)
    total = first + second
    if first < 0 or second < 0 or sorted(permutation) != list(range(1, total + 1)):
        return False
    return all(permutation[i] < permutation[i + 1] for i in range(first - 1)) and all(
        permutation[i] < permutation[i + 1] for i in range(first, total - 1)
    )


def concat_permutations(  # pylint: disable=unused-variable
    first: Sequence[int], second: Sequence[int]
) -> Permutation:
    """sigma x tau: sigma on 1..n, then tau shifted by n on n+1..n+m."""
    shift = len(first)
    return tuple(first) + tuple(value + shift for value in second)


def compose_permutations(  # pylint: disable=unused-variable
    outer: Sequence[int], inner: Sequence[int]
) -> Permutation:
    """(outer . inner)(i) = outer(inner(i))."""
    if len(outer) != len(inner):
        raise InvalidArgumentError("Only permutations of the same size can be composed.")
    return tuple(outer[value - 1] for value in inner)


def _inverse(permutation: Sequence[int]) -> Permutation:
    inverse = [0] * len(permutation)
    for position, value in enumerate(permutation, start=1):
        inverse[value - 1] = position
    return tuple(inverse)


def shuffle_associativity_holds(  # pylint: disable=unused-variable
    first: int, second: int, third: int
) -> bool:
    """
    Checks Sh(n+m, r).(Sh(n, m) x 1_r) = Sh(n, m, r) = Sh(n, m+r).(1_n x Sh(m, r)) as sets.
    """
    left = {
        compose_permutations(outer, concat_permutations(inner, identity_permutation(third)))
        for outer in shuffles(first + second, third)
        for inner in shuffles(first, second)
    }
    right = {
        compose_permutations(outer, concat_permutations(identity_permutation(first), inner))
        for outer in shuffles(first, second + third)
        for inner in shuffles(second, third)
    }
    middle = set(multi_shuffles(first, second, third))
    return left == middle == right


@dataclass(frozen=True)
class StelloVertexNotation:  # pylint: disable=unused-variable
    """
    A maximal tubing of St_n written Tub_r(u_1, ..., u_n).

    Attributes:
        rank (int): r, the number of singleton tubes.
        word (Tuple[int, ...]): u_1, ..., u_n.
    """

    rank: int
    word: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(node) for node in self.word))
        size = len(self.word)
        if not 0 <= self.rank <= size:
            raise InvalidArgumentError(f"Tub_{self.rank} needs 0 <= r <= {size}.")
        if sorted(self.word) != list(range(1, size + 1)):
            raise InvalidArgumentError(f"{self.word} is not a permutation of 1..{size}.")
        head = self.word[: self.rank]
        if any(head[i] >= head[i + 1] for i in range(len(head) - 1)):
            raise InvalidArgumentError(
                f"The first {self.rank} entries of {self.word} must increase."
            )

    @classmethod
    def full(cls, size: int) -> "StelloVertexNotation":
        """Tub_n, the tubing of all singletons."""
        _check_sizes(size)
        return cls(size, identity_permutation(size))

    @property
    def degree(self) -> int:
        return len(self.word)

    @property
    def is_full(self) -> bool:
        return self.rank == self.degree

    @property
    def singletons(self) -> Tuple[int, ...]:
        return self.word[: self.rank]

    @property
    def chain(self) -> Tuple[int, ...]:
        """The nodes added one at a time to t0, the last one lying in no proper tube."""
        return self.word[self.rank :]

    def to_tubing(self) -> Tubing:
        core = frozenset({0, *self.singletons})
        tubes = [frozenset({node}) for node in self.singletons]
        for stop in range(len(self.chain) + 1):
            tubes.append(core | frozenset(self.chain[:stop]))
        return Tubing(frozenset(tubes))

    @classmethod
    def from_tubing(cls, tubing: Tubing) -> "StelloVertexNotation":
        """
        Reads the notation off a maximal tubing of a star graph.

        Raises:
            InvalidArgumentError: If the tubing is not a maximal tubing of St_n.
        """
        size = len(tubing.universal) - 1
        if not is_tubing(star_graph(size), tubing) or len(tubing) != size + 1:
            raise InvalidArgumentError(f"{tubing} is not a maximal tubing of St_{size}.")
        singletons = sorted(node for tube in tubing.tubes if 0 not in tube for node in tube)
        around = sorted((tube for tube in tubing.tubes if 0 in tube), key=len)
        chain = [next(iter(outer - inner)) for inner, outer in zip(around, around[1:])]
        return cls(len(singletons), tuple(singletons + chain))

    @classmethod
    def parse(cls, text: str) -> "StelloVertexNotation":
        """
        Parses "Tub_r(u1,...,un)", or "Tub_n" alone for the tubing of all singletons.

        Raises:
            InvalidArgumentError: If the text is malformed.
        """
        match = NOTATION_PATTERN.match(text)
        if match is None:
            raise InvalidArgumentError(f"Cannot parse {text!r} as Tub_r(u1,...,un).")
        rank = int(match.group(1))
        if match.group(2) is None:
            return cls.full(rank)
        entries = [entry for entry in match.group(2).replace(" ", "").split(",") if entry]
        return cls(rank, tuple(int(entry) for entry in entries))

    def __str__(self) -> str:
        return f"Tub_{self.rank}(" + ",".join(str(node) for node in self.word) + ")"

    def to_json(self) -> Dict:
        return {"r": self.rank, "word": list(self.word), "tubing": self.to_tubing().to_json()}


def to_notation(tubing: Tubing) -> StelloVertexNotation:  # pylint: disable=unused-variable
    return StelloVertexNotation.from_tubing(tubing)


def from_notation(notation: StelloVertexNotation) -> Tubing:  # pylint: disable=unused-variable
    return notation.to_tubing()


@lru_cache(maxsize=None)
def maximal_notations(  # pylint: disable=unused-variable
    size: int,
) -> Tuple[StelloVertexNotation, ...]:
    """Every maximal tubing of St_n, sum over k of n!/k! of them."""
    _check_sizes(size)
    result = []
    nodes = identity_permutation(size)
    for rank in range(size + 1):
        for head in combinations(nodes, rank):
            rest = [node for node in nodes if node not in head]
            for tail in permutations(rest):
                result.append(StelloVertexNotation(rank, head + tail))
    return tuple(sorted(result, key=lambda notation: (notation.rank, notation.word)))


def star_term(  # pylint: disable=unused-variable
    left: StelloVertexNotation, right: StelloVertexNotation, shuffle: Sequence[int]
) -> StelloVertexNotation:
    """
    The single term T *_sigma V.

    Parameters:
        left (StelloVertexNotation): T = Tub_r(u) over n.
        right (StelloVertexNotation): V = Tub_s(v) over m.
        shuffle (Sequence[int]): sigma, an (n-r, m-s)-shuffle in one-line notation.

    Returns:
        StelloVertexNotation: A maximal tubing of St_(n+m).

    Raises:
        InvalidShuffleError: If sigma is not an (n-r, m-s)-shuffle.
    """
    shift = left.degree
    first, second = len(left.chain), len(right.chain)
    if not is_shuffle(shuffle, first, second):
        raise InvalidShuffleError(
            f"{tuple(shuffle)} is not a ({first},{second})-shuffle for {left} and {right}."
        )
    chain = left.chain + tuple(node + shift for node in right.chain)
    inverse = _inverse(shuffle)
    word = (
        left.singletons
        + tuple(node + shift for node in right.singletons)
        + tuple(chain[index - 1] for index in inverse)
    )
    return StelloVertexNotation(left.rank + right.rank, word)


def star_product(  # pylint: disable=unused-variable
    left: StelloVertexNotation, right: StelloVertexNotation
) -> FormalSum:
    """
    T * V, the sum of T *_sigma V over every (n-r, m-s)-shuffle sigma. When T or V is Tub_n the
    only shuffle is the identity and the product is a single term; Tub_n * Tub_m = Tub_(n+m).
    """
    first, second = len(left.chain), len(right.chain)
    return FormalSum.from_terms(
        star_term(left, right, shuffle) for shuffle in shuffles(first, second)
    )


def star_product_sums(  # pylint: disable=unused-variable
    left: Union[FormalSum, StelloVertexNotation], right: Union[FormalSum, StelloVertexNotation]
) -> FormalSum:
    """The product extended bilinearly to formal sums."""
    if isinstance(left, StelloVertexNotation):
        left = FormalSum.basis(left)
    if isinstance(right, StelloVertexNotation):
        right = FormalSum.basis(right)
    return left.bilinear(right, star_product)


def associativity_failures(max_total: int = 6) -> List[str]:  # pylint: disable=unused-variable
    """
    Compares (T * V) * W with T * (V * W) for all maximal tubings with n + m + p <= max_total,
    each degree at least 1.

    Returns:
        List[str]: Descriptions of the triples where the two sides differ.
    """
    failures = []
    for total in range(3, max_total + 1):
        for first in range(1, total - 1):
            for second in range(1, total - first):
                third = total - first - second
                for left in maximal_notations(first):
                    for middle in maximal_notations(second):
                        for right in maximal_notations(third):
                            grouped_left = star_product_sums(star_product(left, middle), right)
                            grouped_right = star_product_sums(left, star_product(middle, right))
                            if grouped_left != grouped_right:
                                failures.append(f"({left}, {middle}, {right})")
    return failures
