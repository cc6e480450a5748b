#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module implements the bijections between tubing posets and the painted-tree families whose
growth posets are graph associahedra or graph multiplihedron quotients.

Every map is written on gap heights. Node i of the graph (i >= 1) is gap i of the painted tree;
for the star and fan graphs node 0 carries the paint line. The tubes around node 0 become the
levels of a weakly ordered base, the tubes strictly inside the smallest of them become the forest,
and the nodes inside it but in no smaller tube become half-painted gaps. Marked tubings of complete
graphs follow the same pattern, with the broken tube in the role of the paint line.

Functions:
- `phi_perma` / `phi_perma_inverse`: weakly ordered trees and weakly ordered forests over weakly
  ordered trees; `perma_from_tubing` / `perma_to_tubing` go through complete-graph tubings.
- `phi_stella1` / `phi_stella1_inverse`: star-graph tubings and corolla forests over weakly
  ordered trees.
- `phi_prime_lift` / `phi_prime_lift_inverse`: composihedron representatives and corolla forests
  over weakly ordered trees.
- `phi_stella2` / `phi_stella2_inverse`: cubeahedron representatives and weakly ordered forests
  over corollas.
- `stella3_map` / `stella3_inverse`: cubeahedron representatives and star-graph tubings.
- `phi_ptera` / `phi_ptera_inverse`: fan-graph tubings and plane forests over weakly ordered
  trees.
"""

# Standard library imports
from typing import Dict, FrozenSet, List, Sequence, Tuple

# Local application/library specific imports
from painted_trees.bijections.classical import (
    complete_tubing_from_wot,
    interval_tubes,
    wot_from_complete_tubing,
)
from painted_trees.errors import (
    InvalidArgumentError,
    InvalidRepresentativeError,
    InvalidTubingError,
    KindMismatchError,
)
from painted_trees.painted.painted_tree import BaseKind, PaintedFamily, PaintedTree
from painted_trees.tree_core.forests import ForestKind
from painted_trees.tree_core.plane_trees import (
    LevelAssignment,
    PlaneTree,
    from_heights,
    levels_from_heights,
)
from painted_trees.tubings.graphs import complete_graph, fan_graph, star_graph
from painted_trees.tubings.marked_tubings import (
    DesignTubing,
    Mark,
    MarkedTubing,
    design_tubing,
    from_design_tubing,
    is_composihedron_representative,
    is_cubeahedron_representative,
    is_marked_tubing,
)
from painted_trees.tubings.tubings import Tube, Tubing, is_tubing

PERMA_FAMILY = PaintedFamily(ForestKind.WEAKLY_ORDERED_FOREST, BaseKind.WEAKLY_ORDERED)
STELLA1_FAMILY = PaintedFamily(ForestKind.FOREST_OF_COROLLAS, BaseKind.WEAKLY_ORDERED)
LIFT_FAMILY = STELLA1_FAMILY
STELLA2_FAMILY = PaintedFamily(ForestKind.WEAKLY_ORDERED_FOREST, BaseKind.COROLLA)
PTERA_FAMILY = PaintedFamily(ForestKind.FOREST_OF_PLANE_TREES, BaseKind.WEAKLY_ORDERED)


def _require_family(tree: PaintedTree, family: PaintedFamily) -> List[int]:
    if tree.family != family:
        raise KindMismatchError(f"Expected a tree of {family}, received one of {tree.family}.")
    return PaintedTree.from_master(family, tree.heights).gap_heights()


def _painted(family: PaintedFamily, gaps: Sequence[int]) -> PaintedTree:
    return PaintedTree.from_master(family, (0,) + tuple(gaps))


def _at_least(gaps: Sequence[int], bound: int) -> FrozenSet[int]:
    return frozenset(gap for gap, height in enumerate(gaps, start=1) if height >= bound)


def phi_perma(  # pylint: disable=unused-variable
    tree: PlaneTree, levels: LevelAssignment
) -> PaintedTree:
    """
    Turns the first gap of a weakly ordered tree into the paint line: the painted tree has one
    gap fewer, gaps below the first gap's level painted and gaps above it unpainted.

    Raises:
        InvalidArgumentError: If the tree has no gap.
        InvalidLevelError: If the levels do not fit the tree.
    """
    if tree.degree < 1:
        raise InvalidArgumentError("The weakly ordered tree needs at least one gap.")
    levels.validate(tree)
    heights = tree.gap_heights(levels.heights())
    return PaintedTree.from_master(PERMA_FAMILY, heights)


def phi_perma_inverse(  # pylint: disable=unused-variable
    painted: PaintedTree,
) -> Tuple[PlaneTree, LevelAssignment]:
    """Restores the paint line as the first gap of a weakly ordered tree."""
    gaps = _require_family(painted, PERMA_FAMILY)
    heights = [0] + gaps
    tree, _ = from_heights(heights)
    return tree, levels_from_heights(tree, heights)


def perma_from_tubing(tubing: Tubing) -> PaintedTree:  # pylint: disable=unused-variable
    """The painted tree of a tubing of the complete graph on 0..n, node 0 being the paint line."""
    return phi_perma(*wot_from_complete_tubing(tubing))


def perma_to_tubing(painted: PaintedTree) -> Tubing:  # pylint: disable=unused-variable
    tree, levels = phi_perma_inverse(painted)
    return complete_tubing_from_wot(tree, levels, range(painted.degree + 1))


def _center_heights(tubing: Tubing) -> List[int]:
    """
    Gap heights of a tubing around node 0: nodes outside the smallest tube t0 containing 0 sit at
    minus the index of the first tube around 0 that contains them; nodes of t0 sit at the number
    of tubes without node 0 that contain them.
    """
    size = len(tubing.universal) - 1
    around = sorted((tube for tube in tubing.tubes if 0 in tube), key=len)
    inner = [tube for tube in tubing.tubes if 0 not in tube]
    heights = []
    for node in range(1, size + 1):
        if node in around[0]:
            heights.append(sum(1 for tube in inner if node in tube))
        else:
            heights.append(-next(j for j, tube in enumerate(around) if node in tube))
    return heights


def _center_tubing(gaps: Sequence[int], inner: Sequence[Tube]) -> Tubing:
    core = frozenset({0}) | _at_least(gaps, 0)
    tubes = {core} | set(inner)
    for level in range(1, 1 - min(gaps, default=0)):
        tubes.add(frozenset({0}) | _at_least(gaps, -level))
    return Tubing(frozenset(tubes))


def _require_graph_tubing(graph, tubing: Tubing) -> None:
    if not is_tubing(graph, tubing):
        raise InvalidTubingError(f"{tubing} is not a tubing of the graph.")


def phi_stella1(tubing: Tubing) -> PaintedTree:  # pylint: disable=unused-variable
    """
    Maps a tubing of the star graph St_n to a corolla forest over a weakly ordered tree.

    Raises:
        InvalidTubingError: If the tubing is not a tubing of the star graph with center 0.
    """
    _require_graph_tubing(star_graph(len(tubing.universal) - 1), tubing)
    return _painted(STELLA1_FAMILY, _center_heights(tubing))


def phi_stella1_inverse(painted: PaintedTree) -> Tubing:  # pylint: disable=unused-variable
    gaps = _require_family(painted, STELLA1_FAMILY)
    singletons = [frozenset({gap}) for gap, height in enumerate(gaps, start=1) if height > 0]
    return _center_tubing(gaps, singletons)


def phi_ptera(tubing: Tubing) -> PaintedTree:  # pylint: disable=unused-variable
    """
    Maps a tubing of the fan graph F_{1,n} (apex 0 over the path 1..n) to a plane forest over a
    weakly ordered tree.

    Raises:
        InvalidTubingError: If the tubing is not a tubing of the fan graph.
    """
    _require_graph_tubing(fan_graph(1, len(tubing.universal) - 1), tubing)
    return _painted(PTERA_FAMILY, _center_heights(tubing))


def phi_ptera_inverse(painted: PaintedTree) -> Tubing:  # pylint: disable=unused-variable
    gaps = _require_family(painted, PTERA_FAMILY)
    labels = list(range(1, len(gaps) + 1))
    return _center_tubing(gaps, interval_tubes(gaps, labels))


def _require_representative(marked: MarkedTubing, composihedron: bool) -> Dict[Mark, List[Tube]]:
    graph = complete_graph(len(marked.universal))
    check = is_composihedron_representative if composihedron else is_cubeahedron_representative
    if not is_marked_tubing(graph, marked) or not check(marked):
        kind = "composihedron" if composihedron else "cubeahedron"
        raise InvalidRepresentativeError(f"{marked} is not a {kind} representative.")
    return {mark: marked.tubes_marked(mark) for mark in Mark}


def phi_prime_lift(marked: MarkedTubing) -> PaintedTree:  # pylint: disable=unused-variable
    """
    Maps a composihedron representative on the complete graph 1..n to a corolla forest over a
    weakly ordered tree: the thin tube gives the unpainted gaps, the broken tube the half-painted
    ones and the chain of thick tubes the painted levels.

    Raises:
        InvalidRepresentativeError: If the marked tubing is not a representative.
    """
    tubes = _require_representative(marked, composihedron=True)
    heights = []
    for node in sorted(marked.universal):
        if any(node in tube for tube in tubes[Mark.THIN]):
            heights.append(1)
        elif any(node in tube for tube in tubes[Mark.BROKEN]):
            heights.append(0)
        else:
            thick = tubes[Mark.THICK]
            heights.append(-1 - next(j for j, tube in enumerate(thick) if node in tube))
    return _painted(LIFT_FAMILY, heights)


def phi_prime_lift_inverse(painted: PaintedTree) -> MarkedTubing:  # pylint: disable=unused-variable
    gaps = _require_family(painted, LIFT_FAMILY)
    marks: Dict[Tube, Mark] = {}
    if any(height > 0 for height in gaps):
        marks[_at_least(gaps, 1)] = Mark.THIN
    if any(height == 0 for height in gaps):
        marks[_at_least(gaps, 0)] = Mark.BROKEN
    for level in range(1, 1 - min(gaps, default=0)):
        marks[_at_least(gaps, -level)] = Mark.THICK
    return MarkedTubing(frozenset(marks.items()))


def phi_stella2(marked: MarkedTubing) -> PaintedTree:  # pylint: disable=unused-variable
    """
    Maps a cubeahedron representative on the complete graph 1..n to a weakly ordered forest over
    a corolla: the chain of thin tubes gives the forest levels (innermost on top), the broken
    tube the half-painted gaps and the nodes outside both the painted corolla.

    Raises:
        InvalidRepresentativeError: If the marked tubing is not a representative.
    """
    tubes = _require_representative(marked, composihedron=False)
    thin = tubes[Mark.THIN]
    heights = []
    for node in sorted(marked.universal):
        inside = [j for j, tube in enumerate(thin) if node in tube]
        if inside:
            heights.append(len(thin) - inside[0])
        elif any(node in tube for tube in tubes[Mark.BROKEN]):
            heights.append(0)
        else:
            heights.append(-1)
    return _painted(STELLA2_FAMILY, heights)


def phi_stella2_inverse(painted: PaintedTree) -> MarkedTubing:  # pylint: disable=unused-variable
    gaps = _require_family(painted, STELLA2_FAMILY)
    marks: Dict[Tube, Mark] = {}
    for level in range(1, max(gaps, default=0) + 1):
        marks[_at_least(gaps, level)] = Mark.THIN
    if any(height == 0 for height in gaps):
        marks[_at_least(gaps, 0)] = Mark.BROKEN
    if any(height < 0 for height in gaps):
        marks[frozenset(range(1, len(gaps) + 1))] = Mark.THICK
    return MarkedTubing(frozenset(marks.items()))


def stella3_map(marked: MarkedTubing) -> Tubing:  # pylint: disable=unused-variable
    """
    Maps a cubeahedron representative on the complete graph 1..n to a tubing of the star graph
    St_n through its design tubing: a square tube {i} stays {i}, a round tube S becomes the
    complement of S together with node 0.

    Raises:
        InvalidRepresentativeError: If the marked tubing is not a representative.
    """
    _require_representative(marked, composihedron=False)
    design = design_tubing(complete_graph(len(marked.universal)), marked)
    center = frozenset({0})
    tubes = {frozenset({node}) for node in design.squares}
    tubes |= {(design.nodes - tube) | center for tube in design.rounds}
    return Tubing.of(design.nodes | center, tubes)


def stella3_inverse(tubing: Tubing) -> MarkedTubing:  # pylint: disable=unused-variable
    size = len(tubing.universal) - 1
    _require_graph_tubing(star_graph(size), tubing)
    nodes = frozenset(range(1, size + 1))
    squares = frozenset(node for tube in tubing.tubes if 0 not in tube for node in tube)
    rounds = frozenset(
        nodes - tube for tube in tubing.proper_tubes() if 0 in tube
    )
    return from_design_tubing(DesignTubing(nodes, squares, rounds))
