#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module implements marked tubings, the faces of the graph multiplihedron, and its two
quotients: the graph composihedron and the graph cubeahedron.

Every tube of a marked tubing, the universal tube included, is thin, thick or broken. A tube
strictly inside a tube that is not thick must be thin. A marked tubing lies below another when it
is reached by a sequence of moves:

- a broken tube becomes thin or thick;
- a thin tube is added whose smallest enclosing tube is thin or broken;
- a thick tube is added whose smallest enclosing tube is thick;
- a broken tube becomes thick while a nonempty set of compatible broken tubes is added directly
  inside it.

The composihedron identifies marked tubings that differ by thin tubes inside thin tubes; the
cubeahedron identifies those that differ by thick tubes inside thick tubes. Each class is
represented by its maximal member, the marked tubing with those tubes deleted.

On complete graphs the cubeahedron has a second encoding, the design tubing: one square tube per
node lying in no thin or broken tube, and one round tube per thin tube.

Classes:
- `Mark`: The three markings.
- `MarkedTubing`: A tubing with one mark per tube.
- `DesignTubing`: Square and round tubes of a complete graph.

Functions:
- `enumerate_marked_tubings`, `marked_moves`, `marked_leq`, `marked_poset`: The multiplihedron.
- `composihedron_representative`, `cubeahedron_representative`: Class representatives.
- `composihedron_poset`, `cubeahedron_poset`: The quotient posets.
- `design_tubing`, `from_design_tubing`: The design encoding.
"""

# Standard library imports
import json
from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple, Union

# Related third-party imports
import networkx as nx

# Local application/library specific imports
from painted_trees.errors import (
    GraphMismatchError,
    InvalidArgumentError,
    InvalidRepresentativeError,
    InvalidTubingError,
    UnsupportedStructureError,
)
from painted_trees.posets.face_poset import FacePoset
from painted_trees.tubings.tubings import (
    Tube,
    Tubing,
    all_tubes,
    compatible,
    enumerate_tubings,
    graph_name,
    is_tubing,
    tube_key,
    tube_string,
)


class Mark(Enum):  # pylint: disable=unused-variable
    """
    Enumerates the markings of a tube.

    Members:
        THIN: Written "{...}".
        THICK: Written "[...]".
        BROKEN: Written "<...>".
    """

    THIN = "thin"
    THICK = "thick"
    BROKEN = "broken"


_BRACKETS = {Mark.THIN: "{}", Mark.THICK: "[]", Mark.BROKEN: "<>"}


@dataclass(frozen=True)
class MarkedTubing:  # pylint: disable=unused-variable
    """
    A tubing whose tubes carry marks.

    Attributes:
        marks (FrozenSet[Tuple[Tube, Mark]]): One (tube, mark) pair per tube, the universal tube
            included.
    """

    marks: FrozenSet[Tuple[Tube, Mark]]

    @classmethod
    def of(cls, pairs: Union[Dict, Iterable[Tuple[Iterable[int], Union[Mark, str]]]]):
        """Builds a marked tubing from (tube, mark) pairs; marks may be given by value."""
        if isinstance(pairs, dict):
            pairs = pairs.items()
        return cls(frozenset((frozenset(tube), Mark(mark)) for tube, mark in pairs))

    @property
    def tubing(self) -> Tubing:
        return Tubing(frozenset(tube for tube, _ in self.marks))

    @property
    def universal(self) -> Tube:
        return self.tubing.universal

    def mark(self, tube: Iterable[int]) -> Mark:
        tube = frozenset(tube)
        for candidate, mark in self.marks:
            if candidate == tube:
                return mark
        raise InvalidArgumentError(f"{tube_string(tube)} is not a tube of {self}.")

    def mark_map(self) -> Dict[Tube, Mark]:
        return dict(self.marks)

    def tubes_marked(self, mark: Mark) -> List[Tube]:
        return sorted((tube for tube, other in self.marks if other is mark), key=tube_key)

    def parent(self, nodes: Iterable[int]) -> Optional[Tube]:
        """The smallest tube strictly containing the node set."""
        nodes = frozenset(nodes)
        enclosing = [tube for tube, _ in self.marks if nodes < tube]
        return min(enclosing, key=len) if enclosing else None

    def replace(self, changes: Dict[Tube, Optional[Mark]]) -> "MarkedTubing":
        """Returns a copy with tubes re-marked, added, or removed (mark None)."""
        mapping = self.mark_map()
        for tube, mark in changes.items():
            if mark is None:
                mapping.pop(tube, None)
            else:
                mapping[tube] = mark
        return MarkedTubing(frozenset(mapping.items()))

    def __len__(self) -> int:
        return len(self.marks)

    def __str__(self) -> str:
        mapping = self.mark_map()
        parts = []
        for tube in sorted(mapping, key=tube_key):
            opening, closing = _BRACKETS[mapping[tube]]
            parts.append(opening + ",".join(str(node) for node in sorted(tube)) + closing)
        return "".join(parts)

    def to_json(self) -> Dict:
        mapping = self.mark_map()
        tubes = sorted(mapping, key=tube_key)
        return {
            "tubes": [sorted(tube) for tube in tubes],
            "marks": [mapping[tube].value for tube in tubes],
        }

    @classmethod
    def from_json(cls, data: Union[Dict, str]) -> "MarkedTubing":
        if isinstance(data, str):
            data = json.loads(data)
        if len(data["tubes"]) != len(data["marks"]):
            raise InvalidTubingError("Every tube needs exactly one mark.")
        return cls.of(zip(data["tubes"], data["marks"]))

    @classmethod
    def parse(cls, text: str) -> "MarkedTubing":
        """Parses the canonical string, e.g. "{1}<1,2>"."""
        closers = {opening: (closing, mark) for mark, (opening, closing) in _BRACKETS.items()}
        pairs = []
        position = 0
        text = text.replace(" ", "")
        while position < len(text):
            if text[position] not in closers:
                raise InvalidTubingError(f"Invalid marked tubing: {text!r}")
            closing, mark = closers[text[position]]
            end = text.find(closing, position)
            if end < 0:
                raise InvalidTubingError(f"Unclosed tube in {text!r}")
            try:
                nodes = [int(item) for item in text[position + 1 : end].split(",") if item]
            except ValueError as error:
                raise InvalidTubingError(f"Invalid marked tubing: {text!r}") from error
            pairs.append((nodes, mark))
            position = end + 1
        return cls.of(pairs)


def is_marked_tubing(  # pylint: disable=unused-variable
    graph: nx.Graph, marked: MarkedTubing
) -> bool:
    """Checks the tubing and the marking rule: inside a tube that is not thick, only thin tubes."""
    if not is_tubing(graph, marked.tubing):
        return False
    mapping = marked.mark_map()
    for inner, outer in product(mapping, repeat=2):
        if inner < outer and mapping[outer] is not Mark.THICK and mapping[inner] is not Mark.THIN:
            return False
    return True


def enumerate_marked_tubings(  # pylint: disable=unused-variable
    graph: nx.Graph,
) -> List[MarkedTubing]:
    """Every marked tubing of the graph, fewest tubes first."""
    result = []
    for tubing in enumerate_tubings(graph):
        tubes = list(tubing)
        for marks in product(Mark, repeat=len(tubes)):
            candidate = MarkedTubing(frozenset(zip(tubes, marks)))
            if is_marked_tubing(graph, candidate):
                result.append(candidate)
    return sorted(result, key=lambda marked: (len(marked), str(marked)))


def _addable_tubes(graph: nx.Graph, marked: MarkedTubing) -> List[Tube]:
    present = marked.mark_map()
    return [
        tube
        for tube in all_tubes(graph)
        if tube not in present and all(compatible(graph, tube, other) for other in present)
    ]


def marked_moves(  # pylint: disable=unused-variable
    graph: nx.Graph, marked: MarkedTubing
) -> List[MarkedTubing]:
    """
    Lists the marked tubings reached from a marked tubing by one move; all lie strictly below it.

    Parameters:
        graph (nx.Graph): The graph.
        marked (MarkedTubing): The starting marked tubing.

    Returns:
        List[MarkedTubing]: The results, without repetitions.
    """
    results: Set[MarkedTubing] = set()
    mapping = marked.mark_map()

    for tube, mark in mapping.items():
        if mark is Mark.BROKEN:
            results.add(marked.replace({tube: Mark.THIN}))
            results.add(marked.replace({tube: Mark.THICK}))

    addable = _addable_tubes(graph, marked)
    for tube in addable:
        parent_mark = mapping[marked.parent(tube)]
        if parent_mark in (Mark.THIN, Mark.BROKEN):
            results.add(marked.replace({tube: Mark.THIN}))
        else:
            results.add(marked.replace({tube: Mark.THICK}))

    for host in marked.tubes_marked(Mark.BROKEN):
        inside = [tube for tube in addable if marked.parent(tube) == host]
        for size in range(1, len(inside) + 1):
            for chosen in combinations(inside, size):
                if not all(compatible(graph, a, b) for a, b in combinations(chosen, 2)):
                    continue
                changes: Dict[Tube, Optional[Mark]] = {tube: Mark.BROKEN for tube in chosen}
                changes[host] = Mark.THICK
                results.add(marked.replace(changes))

    return sorted(
        (result for result in results if is_marked_tubing(graph, result)),
        key=lambda result: (len(result), str(result)),
    )


def _check_same_graph(lower: MarkedTubing, upper: MarkedTubing) -> None:
    if lower.universal != upper.universal:
        raise GraphMismatchError("Marked tubings of different graphs cannot be compared.")


def marked_leq(  # pylint: disable=unused-variable
    graph: nx.Graph, lower: MarkedTubing, upper: MarkedTubing
) -> bool:
    """
    Decides lower <= upper in the graph multiplihedron by searching the moves down from upper.
    Moves never remove tubes, so branches that lose a tube of lower are pruned.

    Raises:
        GraphMismatchError: If the marked tubings live on different graphs.
    """
    _check_same_graph(lower, upper)
    target_tubes = lower.tubing.tubes
    seen = {upper}
    queue = deque([upper])
    while queue:
        current = queue.popleft()
        if current == lower:
            return True
        for following in marked_moves(graph, current):
            if following not in seen and following.tubing.tubes <= target_tubes:
                seen.add(following)
                queue.append(following)
    return False


def _quotient_poset(
    graph: nx.Graph, representative: Callable[[MarkedTubing], MarkedTubing], name: str
) -> FacePoset:
    marked = enumerate_marked_tubings(graph)
    if not marked:
        raise InvalidTubingError("A graph without nodes has no marked tubings.")
    elements = sorted(
        {representative(element) for element in marked},
        key=lambda element: (len(element), str(element)),
    )
    relation = set()
    for upper in marked:
        upper_class = representative(upper)
        for lower in marked_moves(graph, upper):
            lower_class = representative(lower)
            if lower_class != upper_class:
                relation.add((lower_class, upper_class))
    return FacePoset.from_relation(elements, relation, name=name)


def marked_poset(graph: nx.Graph) -> FacePoset:  # pylint: disable=unused-variable
    """The face poset of the graph multiplihedron."""
    return _quotient_poset(graph, lambda element: element, f"multiplihedron of {graph_name(graph)}")


def _without_nested(marked: MarkedTubing, mark: Mark) -> MarkedTubing:
    same = marked.tubes_marked(mark)
    nested = {inner: None for inner in same if any(inner < outer for outer in same)}
    return marked.replace(nested) if nested else marked


def composihedron_representative(  # pylint: disable=unused-variable
    marked: MarkedTubing,
) -> MarkedTubing:
    """Deletes every thin tube lying inside another thin tube."""
    return _without_nested(marked, Mark.THIN)


def cubeahedron_representative(  # pylint: disable=unused-variable
    marked: MarkedTubing,
) -> MarkedTubing:
    """Deletes every thick tube lying inside another thick tube."""
    return _without_nested(marked, Mark.THICK)


def is_composihedron_representative(  # pylint: disable=unused-variable
    marked: MarkedTubing,
) -> bool:
    return composihedron_representative(marked) == marked


def is_cubeahedron_representative(  # pylint: disable=unused-variable
    marked: MarkedTubing,
) -> bool:
    return cubeahedron_representative(marked) == marked


def composihedron_poset(graph: nx.Graph) -> FacePoset:  # pylint: disable=unused-variable
    return _quotient_poset(
        graph, composihedron_representative, f"composihedron of {graph_name(graph)}"
    )


def cubeahedron_poset(graph: nx.Graph) -> FacePoset:  # pylint: disable=unused-variable
    return _quotient_poset(
        graph, cubeahedron_representative, f"cubeahedron of {graph_name(graph)}"
    )


@dataclass(frozen=True)
class DesignTubing:  # pylint: disable=unused-variable
    """
    Square and round tubes of a complete graph.

    Attributes:
        nodes (FrozenSet[int]): All nodes of the graph.
        squares (FrozenSet[int]): Nodes carrying a square tube.
        rounds (FrozenSet[Tube]): The round tubes.
    """

    nodes: FrozenSet[int]
    squares: FrozenSet[int]
    rounds: FrozenSet[Tube]

    def __str__(self) -> str:
        squares = "".join(f"[{node}]" for node in sorted(self.squares))
        rounds = "".join(tube_string(tube) for tube in sorted(self.rounds, key=tube_key))
        return squares + rounds

    def to_json(self) -> Dict:
        return {
            "nodes": sorted(self.nodes),
            "squares": sorted(self.squares),
            "rounds": [sorted(tube) for tube in sorted(self.rounds, key=tube_key)],
        }


def _check_complete(graph: nx.Graph) -> None:
    size = graph.number_of_nodes()
    if graph.number_of_edges() != size * (size - 1) // 2:
        raise UnsupportedStructureError("Design tubings are defined on complete graphs only.")


def design_tubing(  # pylint: disable=unused-variable
    graph: nx.Graph, marked: MarkedTubing
) -> DesignTubing:
    """
    Encodes a cubeahedron representative on a complete graph by square and round tubes.

    Raises:
        UnsupportedStructureError: If the graph is not complete.
        InvalidRepresentativeError: If the marked tubing is invalid or not a representative.
    """
    _check_complete(graph)
    if not is_marked_tubing(graph, marked) or not is_cubeahedron_representative(marked):
        raise InvalidRepresentativeError(f"{marked} is not a cubeahedron representative.")
    covered = set()
    for tube, mark in marked.marks:
        if mark is not Mark.THICK:
            covered |= tube
    nodes = frozenset(graph.nodes)
    return DesignTubing(
        nodes, frozenset(nodes - covered), frozenset(marked.tubes_marked(Mark.THIN))
    )


def from_design_tubing(design: DesignTubing) -> MarkedTubing:  # pylint: disable=unused-variable
    """
    Rebuilds the cubeahedron representative of a design tubing.

    Raises:
        InvalidTubingError: If squares and rounds overlap or the rounds are not nested.
    """
    rounds = sorted(design.rounds, key=len)
    if any(not inner < outer for inner, outer in zip(rounds, rounds[1:])):
        raise InvalidTubingError(f"Round tubes of {design} are not nested.")
    in_rounds = frozenset().union(*rounds) if rounds else frozenset()
    if design.squares & in_rounds:
        raise InvalidTubingError(f"Square and round tubes of {design} overlap.")
    universal = design.nodes
    remaining = universal - design.squares - in_rounds
    pairs: Dict[Tube, Mark] = {tube: Mark.THIN for tube in rounds}
    if not design.squares:
        if universal not in pairs:
            pairs[universal] = Mark.BROKEN if remaining else Mark.THIN
        elif remaining:
            raise InvalidTubingError(f"Design tubing {design} leaves nodes uncovered.")
    else:
        pairs[universal] = Mark.THICK
        if remaining:
            pairs[remaining | (rounds[-1] if rounds else frozenset())] = Mark.BROKEN
    return MarkedTubing(frozenset(pairs.items()))
