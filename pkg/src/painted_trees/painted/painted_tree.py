#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module implements painted trees in the twelve families obtained by grafting a forest of one
of four kinds onto a painted base tree of one of three kinds.

A painted tree of degree n has n+1 leaves and gaps 1..n. It is stored as a tuple of n+1 integer
heights: entry 0 is the height of the paint line and entry g the height of the node catching gap
g. Gaps below the paint line belong to painted nodes, gaps on it to half-painted nodes and gaps
above it to unpainted nodes. Heights increase away from the root, so the plane tree is recovered
by `from_heights`. Every height tuple is a face of the weakly ordered forest over weakly ordered
tree family (an ordered partition of {0, ..., n}); every other family is the image of that master
family under forgetful maps, and each of its trees is stored by its canonical lift, which makes
the height tuple a hashable canonical key.

The structural view (base tree, per-leaf attachments, level data) that users see in strings and
JSON is derived from the heights and can be converted back with `PaintedTree.from_structure`.

Classes:
- `BaseKind`: Enum of base tree kinds.
- `PaintedFamily`: One of the twelve (forest kind, base kind) combinations.
- `Attachment`: What sits above one leaf of the base: a trunked tree or a fused group of trees.
- `PaintedTree`: A basis element of every algebra in the package.

Functions:
- `canonical_heights`: Applies the forgetful maps of a family to a master height tuple.
- `validate_family`: Checks a tree against the kind constraints of its declared family.
- `fractional_map`: Applies a forest map and a base map to a painted tree.
- `half_painted_corolla`: The unique maximal face of every family.
- `unit_tree`: The single-leaf painted tree.
"""

# Standard library imports
import json
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

# Local application/library specific imports
from painted_trees.errors import InvalidLevelError, KindMismatchError, StructuralError
from painted_trees.tree_core.forests import Forest, ForestKind
from painted_trees.tree_core.plane_trees import (
    LevelAssignment,
    PlaneTree,
    from_heights,
    parse_partition,
    partition_string,
)

PAINTED = "P"
HALF_PAINTED = "H"
UNPAINTED = "U"

IDENTITY_MAP = "identity"
BETA_MAP = "beta"
TAU_MAP = "tau"
KAPPA_MAP = "kappa"


class BaseKind(Enum):  # pylint: disable=unused-variable
    """
    Enumerates the kinds of painted base tree.

    Attributes:
        WEAKLY_ORDERED: Weakly ordered tree (ordered tree at vertex level).
        PLANE: Plane tree (binary tree at vertex level).
        COROLLA: Corolla.
    """

    WEAKLY_ORDERED = "wo"
    PLANE = "plane"
    COROLLA = "corolla"


FOREST_ALIASES = {
    "wof": ForestKind.WEAKLY_ORDERED_FOREST,
    "ordered": ForestKind.WEAKLY_ORDERED_FOREST,
    "fwot": ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES,
    "plane": ForestKind.FOREST_OF_PLANE_TREES,
    "binary": ForestKind.FOREST_OF_PLANE_TREES,
    "corolla": ForestKind.FOREST_OF_COROLLAS,
}

BASE_ALIASES = {
    "wo": BaseKind.WEAKLY_ORDERED,
    "ordered": BaseKind.WEAKLY_ORDERED,
    "plane": BaseKind.PLANE,
    "binary": BaseKind.PLANE,
    "corolla": BaseKind.COROLLA,
}

POLYTOPE_NAMES = {
    ("corolla", "corolla"): "cube",
    ("plane", "corolla"): "associahedron",
    ("plane", "plane"): "multiplihedron",
    ("corolla", "plane"): "composihedron",
    ("wof", "wo"): "permutohedron",
    ("corolla", "wo"): "stellohedron",
    ("wof", "corolla"): "stellohedron",
    ("plane", "wo"): "pterahedron",
}


@dataclass(frozen=True)
class PaintedFamily:  # pylint: disable=unused-variable
    """
    A family of painted trees.

    Attributes:
        forest_kind (ForestKind): Kind of the unpainted forest.
        base_kind (BaseKind): Kind of the painted base tree.
    """

    forest_kind: ForestKind
    base_kind: BaseKind

    def __str__(self) -> str:
        return f"{self.forest_kind.value}/{self.base_kind.value}"

    @classmethod
    def parse(cls, text: str) -> "PaintedFamily":
        """
        Parses "forest/base", e.g. "plane/wo" or the vertex-level alias "binary/binary".

        Raises:
            KindMismatchError: If either half names no known kind.
        """
        parts = text.strip().lower().split("/")
        if len(parts) != 2 or parts[0] not in FOREST_ALIASES or parts[1] not in BASE_ALIASES:
            raise KindMismatchError(f"Unknown painted family: {text!r}")
        return cls(FOREST_ALIASES[parts[0]], BASE_ALIASES[parts[1]])

    @classmethod
    def all(cls) -> List["PaintedFamily"]:
        """The twelve families, forest kinds outermost."""
        return [cls(forest, base) for forest in ForestKind for base in BaseKind]

    @property
    def polytope_name(self) -> Optional[str]:
        return POLYTOPE_NAMES.get((self.forest_kind.value, self.base_kind.value))

    @property
    def is_proven(self) -> bool:
        """True for the eight families whose face posets are known polytopes."""
        return self.polytope_name is not None

    def to_json(self) -> Dict[str, str]:
        return {"forest": self.forest_kind.value, "base": self.base_kind.value}


MASTER_FAMILY = PaintedFamily(ForestKind.WEAKLY_ORDERED_FOREST, BaseKind.WEAKLY_ORDERED)


@dataclass(frozen=True)
class Attachment:  # pylint: disable=unused-variable
    """
    The unpainted part above one leaf of the base tree.

    Attributes:
        trees (Tuple[PlaneTree, ...]): A single tree when trunked; the inputs of the half-painted
            node (at least two) when fused.
        fused (bool): Whether the trees meet at a half-painted node on the paint line.
    """

    trees: Tuple[PlaneTree, ...]
    fused: bool = False

    def __post_init__(self):
        if self.fused and len(self.trees) < 2:
            raise StructuralError("A half-painted node needs at least two inputs.")
        if not self.fused and len(self.trees) != 1:
            raise StructuralError("A trunked attachment holds exactly one tree.")

    def __str__(self) -> str:
        if self.fused:
            return "[" + "".join(str(tree) for tree in self.trees) + "]"
        return str(self.trees[0])

    @property
    def tree(self) -> PlaneTree:
        """The attachment as one tree, rooted at the half-painted node when fused."""
        if self.fused:
            return PlaneTree(self.trees)
        return self.trees[0]

    def to_json(self) -> Dict:
        if self.fused:
            return {"fused": [tree.to_json() for tree in self.trees]}
        return {"trunked": self.trees[0].to_json()}

    @classmethod
    def from_json(cls, data: Dict) -> "Attachment":
        if "fused" in data:
            return cls(tuple(PlaneTree.from_json(tree) for tree in data["fused"]), True)
        if "trunked" in data:
            return cls((PlaneTree.from_json(data["trunked"]),))
        raise StructuralError(f"Invalid attachment JSON: {data!r}")

    @classmethod
    def parse(cls, text: str) -> "Attachment":
        text = text.strip()
        if text.startswith("["):
            if not text.endswith("]"):
                raise StructuralError(f"Unbalanced fused attachment: {text!r}")
            inner = PlaneTree.parse("(" + text[1:-1] + ")")
            return cls(inner.children, True)
        return cls((PlaneTree.parse(text),))


def _status(height: int) -> str:
    if height < 0:
        return PAINTED
    if height == 0:
        return HALF_PAINTED
    return UNPAINTED


def _runs(flags: Sequence[bool]) -> List[Tuple[int, int]]:
    """Maximal half-open intervals of consecutive True entries."""
    runs = []
    start = None
    for position, flag in enumerate(list(flags) + [False]):
        if flag and start is None:
            start = position
        elif not flag and start is not None:
            runs.append((start, position))
            start = None
    return runs


def _dense_ranks(values: Sequence[int]) -> Dict[int, int]:
    return {value: rank for rank, value in enumerate(sorted(set(values)))}


def canonical_heights(  # pylint: disable=unused-variable
    family: PaintedFamily, heights: Sequence[int]
) -> Tuple[int, ...]:
    """
    Projects a master height tuple into a family and returns the canonical lift of the image.
    The paint line is moved to height 0, painted gaps get negative heights and unpainted gaps
    positive ones. Painted heights come from the base levels, base depths or a single corolla
    level; unpainted heights come from forest-wide levels, per-attachment levels, depths inside
    each unpainted tree or a single corolla level.

    Parameters:
        family (PaintedFamily): The target family.
        heights (Sequence[int]): Paint line height followed by one height per gap.

    Returns:
        Tuple[int, ...]: The canonical height tuple of the image.

    Raises:
        StructuralError: If the tuple is empty.
    """
    if len(heights) == 0:
        raise StructuralError("A painted tree needs at least the paint line height.")
    gaps = [int(height) - int(heights[0]) for height in heights[1:]]
    result = [0] * len(gaps)
    painted = [gap for gap, height in enumerate(gaps) if height < 0]

    if painted:
        if family.base_kind is BaseKind.WEAKLY_ORDERED:
            ranks = _dense_ranks([gaps[gap] for gap in painted])
            for gap in painted:
                result[gap] = ranks[gaps[gap]] - len(ranks)
        elif family.base_kind is BaseKind.PLANE:
            tree, gap_nodes = from_heights(gaps)
            _, _, depths = tree.gap_structure()
            deepest = max(depths[gap_nodes[gap]] for gap in painted)
            for gap in painted:
                result[gap] = depths[gap_nodes[gap]] - deepest - 1
        else:
            for gap in painted:
                result[gap] = -1

    unpainted = [height > 0 for height in gaps]
    forest_kind = family.forest_kind
    if forest_kind is ForestKind.WEAKLY_ORDERED_FOREST:
        ranks = _dense_ranks([height for height in gaps if height > 0])
        for gap, flag in enumerate(unpainted):
            if flag:
                result[gap] = ranks[gaps[gap]] + 1
    elif forest_kind is ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES:
        for start, stop in _runs([height >= 0 for height in gaps]):
            ranks = _dense_ranks([height for height in gaps[start:stop] if height > 0])
            for gap in range(start, stop):
                if unpainted[gap]:
                    result[gap] = ranks[gaps[gap]] + 1
    elif forest_kind is ForestKind.FOREST_OF_PLANE_TREES:
        for start, stop in _runs(unpainted):
            tree, _ = from_heights(gaps[start:stop])
            for offset, height in enumerate(tree.depth_heights()):
                result[start + offset] = height
    else:
        for gap, flag in enumerate(unpainted):
            if flag:
                result[gap] = 1
    return (0,) + tuple(result)


def _node_heights(tree: PlaneTree, gap_nodes: Sequence[int], heights: Sequence[int]) -> List[int]:
    node_heights = [0] * tree.node_count
    for gap, node in enumerate(gap_nodes):
        node_heights[node] = heights[gap]
    return node_heights


def _levels_from_node_heights(node_heights: Sequence[int]) -> LevelAssignment:
    distinct = sorted(set(node_heights), reverse=True)
    ranks = {height: rank + 1 for rank, height in enumerate(distinct)}
    return LevelAssignment(tuple(ranks[height] for height in node_heights))


@dataclass(frozen=True)
class PaintedTree:  # pylint: disable=unused-variable
    """
    A painted tree of a given family, stored by its height tuple.

    Instances built with `from_master`, `from_structure`, `parse` or `from_json` carry canonical
    heights, so equality and hashing identify trees of the family. The raw constructor keeps the
    heights as given, which is how `validate_family` inspects declared structures.

    Attributes:
        family (PaintedFamily): The declared family.
        heights (Tuple[int, ...]): Paint line height followed by the height of every gap.
    """

    family: PaintedFamily
    heights: Tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.heights, tuple):
            object.__setattr__(self, "heights", tuple(self.heights))

    @classmethod
    def from_master(cls, family: PaintedFamily, heights: Sequence[int]) -> "PaintedTree":
        """Projects any master height tuple into the family."""
        return cls(family, canonical_heights(family, heights))

    @property
    def degree(self) -> int:
        return len(self.heights) - 1

    @property
    def leaf_count(self) -> int:
        return len(self.heights)

    @property
    def key(self) -> str:
        """Canonical string, unique within the family."""
        return str(self)

    def gap_heights(self) -> List[int]:
        """Gap heights relative to the paint line."""
        return [height - self.heights[0] for height in self.heights[1:]]

    def statuses(self) -> List[str]:
        """Paint status of every gap: "P", "H" or "U"."""
        return [_status(height) for height in self.gap_heights()]

    def shape(self) -> PlaneTree:
        """The underlying plane tree, paint and levels forgotten."""
        tree, _ = from_heights(self.gap_heights())
        return tree

    def decompose(self) -> Tuple[PlaneTree, List[int], List[Attachment]]:
        """
        Splits the tree at the paint line.

        Returns:
            Tuple[PlaneTree, List[int], List[Attachment]]: The painted base tree, the heights of
                its nodes in preorder and one attachment per base leaf.
        """
        gaps = self.gap_heights()
        base_heights: List[int] = []
        attachments: List[Attachment] = []

        def build(low: int, high: int) -> PlaneTree:
            lowest = min(gaps[low:high]) if low < high else 0
            if lowest >= 0:
                attachments.append(_attachment(gaps[low:high]))
                return PlaneTree()
            base_heights.append(lowest)
            cuts = [gap for gap in range(low, high) if gaps[gap] == lowest]
            bounds = [low - 1] + cuts + [high]
            return PlaneTree(
                tuple(build(bounds[i] + 1, bounds[i + 1]) for i in range(len(bounds) - 1))
            )

        base = build(0, len(gaps))
        return base, base_heights, attachments

    def base(self) -> PlaneTree:
        return self.decompose()[0]

    def attachments(self) -> List[Attachment]:
        return self.decompose()[2]

    def base_levels(self) -> Optional[LevelAssignment]:
        """Levels of the painted nodes for weakly ordered bases, otherwise None."""
        if self.family.base_kind is not BaseKind.WEAKLY_ORDERED:
            return None
        return _levels_from_node_heights(self.decompose()[1])

    def forest(self) -> Forest:
        """
        Lists the unpainted part as a forest of the family's forest kind. For weakly ordered kinds
        each fused attachment is one tree rooted at its half-painted node; for plane trees and
        corollas every unpainted tree is listed on its own.
        """
        kind = self.family.forest_kind
        attachments = self.attachments()
        if kind in (ForestKind.FOREST_OF_PLANE_TREES, ForestKind.FOREST_OF_COROLLAS):
            return Forest(kind, tuple(tree for item in attachments for tree in item.trees))

        gaps = self.gap_heights()
        per_tree: List[List[int]] = []
        position = 0
        for item in attachments:
            tree = item.tree
            size = tree.degree
            segment = gaps[position : position + size]
            _, gap_nodes = from_heights(segment)
            per_tree.append(_node_heights(tree, gap_nodes, segment))
            position += size + 1
        trees = tuple(item.tree for item in attachments)
        if kind is ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES:
            return Forest(kind, trees, tuple(_levels_from_node_heights(own) for own in per_tree))
        flat = [height for own in per_tree for height in own]
        return Forest(kind, trees, (), _levels_from_node_heights(flat))

    def __str__(self) -> str:
        base, _, attachments = self.decompose()
        text = f"{base}|" + ",".join(str(item) for item in attachments)
        if self.family.base_kind is BaseKind.WEAKLY_ORDERED and base.node_count:
            text += "@" + partition_string(self.base_levels().partition())
        forest = self.forest()
        if forest.kind is ForestKind.WEAKLY_ORDERED_FOREST and forest.levels.blocks:
            text += "#" + partition_string(forest.levels.partition())
        elif forest.kind is ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES and any(
            levels.blocks for levels in forest.tree_levels
        ):
            text += "#" + ";".join(
                partition_string(levels.partition()) for levels in forest.tree_levels
            )
        return text

    def to_json(self) -> Dict:
        """JSON form with family, base tree, attachments and level data."""
        base, _, attachments = self.decompose()
        forest = self.forest()
        base_levels = self.base_levels()
        if forest.kind is ForestKind.WEAKLY_ORDERED_FOREST:
            forest_levels = [list(block) for block in forest.levels.partition()]
        elif forest.kind is ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES:
            forest_levels = [
                [list(block) for block in levels.partition()] for levels in forest.tree_levels
            ]
        else:
            forest_levels = None
        return {
            "family": self.family.to_json(),
            "base": base.to_json(),
            "baseLevels": (
                None if base_levels is None else [list(block) for block in base_levels.partition()]
            ),
            "attachments": [item.to_json() for item in attachments],
            "forestLevels": forest_levels,
        }

    @classmethod
    def from_json(cls, data: Union[Dict, str]) -> "PaintedTree":
        """
        Rebuilds a painted tree from `to_json` output.

        Raises:
            StructuralError: If required fields are missing.
        """
        if isinstance(data, str):
            data = json.loads(data)
        try:
            family = PaintedFamily(
                ForestKind(data["family"]["forest"]), BaseKind(data["family"]["base"])
            )
            base = PlaneTree.from_json(data["base"])
            attachments = [Attachment.from_json(item) for item in data["attachments"]]
        except (KeyError, TypeError) as error:
            raise StructuralError(f"Invalid painted tree JSON: {data!r}") from error
        base_levels = data.get("baseLevels")
        forest_levels = data.get("forestLevels")
        if family.forest_kind is ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES and forest_levels:
            forest_levels = [LevelAssignment.from_partition(levels) for levels in forest_levels]
        elif forest_levels is not None and family.forest_kind is ForestKind.WEAKLY_ORDERED_FOREST:
            forest_levels = LevelAssignment.from_partition(forest_levels)
        return cls.from_structure(
            family,
            base,
            attachments,
            None if base_levels is None else LevelAssignment.from_partition(base_levels),
            forest_levels,
        )

    @classmethod
    def parse(cls, family: PaintedFamily, text: str) -> "PaintedTree":
        """
        Parses the canonical string "base|attachment,...@baseLevels#forestLevels".

        Raises:
            StructuralError: If the text is malformed.
        """
        if "|" not in text:
            raise StructuralError(f"Missing '|' between base and attachments: {text!r}")
        base_text, rest = text.strip().split("|", 1)
        forest_text = None
        if "#" in rest:
            rest, forest_text = rest.split("#", 1)
        base_level_text = None
        if "@" in rest:
            rest, base_level_text = rest.split("@", 1)
        base = PlaneTree.parse(base_text)
        attachments = [Attachment.parse(item) for item in rest.split(",")]
        base_levels = None
        if base_level_text is not None:
            base_levels = LevelAssignment.from_partition(parse_partition(base_level_text))
        forest_levels = None
        if forest_text is not None:
            if family.forest_kind is ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES:
                forest_levels = [
                    LevelAssignment.from_partition(parse_partition(chunk))
                    for chunk in forest_text.split(";")
                ]
            else:
                forest_levels = LevelAssignment.from_partition(parse_partition(forest_text))
        return cls.from_structure(family, base, attachments, base_levels, forest_levels)

    @classmethod
    def from_structure(
        cls,
        family: PaintedFamily,
        base: PlaneTree,
        attachments: Sequence[Attachment],
        base_levels: Optional[LevelAssignment] = None,
        forest_levels: Union[None, LevelAssignment, Sequence[LevelAssignment]] = None,
        canonical: bool = True,
    ) -> "PaintedTree":
        """
        Builds a painted tree from its structural description.

        Parameters:
            family (PaintedFamily): The family the tree is declared in.
            base (PlaneTree): The painted base tree.
            attachments (Sequence[Attachment]): One attachment per base leaf.
            base_levels (LevelAssignment, optional): Required for weakly ordered bases.
            forest_levels: A forest-wide assignment (weakly ordered forests) or one assignment per
                attachment (forests of weakly ordered trees), indexed as in `forest()`.
            canonical (bool): Whether to normalize the heights into the family.

        Returns:
            PaintedTree: The painted tree.

        Raises:
            StructuralError: If the attachments do not match the base leaves.
            InvalidLevelError: If level data is missing or inconsistent.
        """
        attachments = list(attachments)
        if len(attachments) != base.leaf_count:
            raise StructuralError(
                f"Base {base} has {base.leaf_count} leaves but {len(attachments)} attachments."
            )
        base_gap_heights = _base_gap_heights(family, base, base_levels)
        attachment_gaps = _attachment_gap_heights(family, attachments, forest_levels)
        gaps: List[int] = []
        for position, segment in enumerate(attachment_gaps):
            gaps.extend(segment)
            if position < len(base_gap_heights):
                gaps.append(base_gap_heights[position])
        heights = (0,) + tuple(gaps)
        if canonical:
            return cls.from_master(family, heights)
        return cls(family, heights)


def _attachment(segment: Sequence[int]) -> Attachment:
    if not segment:
        return Attachment((PlaneTree(),))
    if min(segment) > 0:
        return Attachment((from_heights(segment)[0],))
    cuts = [gap for gap, height in enumerate(segment) if height == 0]
    bounds = [-1] + cuts + [len(segment)]
    trees = tuple(
        from_heights(segment[bounds[i] + 1 : bounds[i + 1]])[0] for i in range(len(bounds) - 1)
    )
    return Attachment(trees, True)


def _base_gap_heights(
    family: PaintedFamily, base: PlaneTree, base_levels: Optional[LevelAssignment]
) -> List[int]:
    if base.is_leaf:
        return []
    if family.base_kind is BaseKind.WEAKLY_ORDERED:
        if base_levels is None:
            raise InvalidLevelError("A weakly ordered base needs level data.")
        base_levels.validate(base)
        return base.gap_heights([-block for block in base_levels.blocks])
    depths = base.depth_heights()
    deepest = max(depths)
    return [depth - deepest - 1 for depth in depths]


def _attachment_gap_heights(
    family: PaintedFamily,
    attachments: Sequence[Attachment],
    forest_levels: Union[None, LevelAssignment, Sequence[LevelAssignment]],
) -> List[List[int]]:
    kind = family.forest_kind
    trees = [item.tree for item in attachments]
    offsets = [0 if item.fused else 1 for item in attachments]
    if kind in (ForestKind.FOREST_OF_PLANE_TREES, ForestKind.FOREST_OF_COROLLAS):
        segments = []
        for tree, offset in zip(trees, offsets):
            _, _, depths = tree.gap_structure()
            segments.append(tree.gap_heights([depth + offset for depth in depths]))
        return segments

    if kind is ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES:
        per_tree = list(forest_levels) if forest_levels is not None else []
        if not per_tree and all(tree.node_count == 0 for tree in trees):
            per_tree = [LevelAssignment(()) for _ in trees]
        if len(per_tree) != len(trees):
            raise InvalidLevelError("A forest of weakly ordered trees needs levels per tree.")
        segments = []
        for tree, offset, levels in zip(trees, offsets, per_tree):
            levels.validate(tree)
            segments.append(tree.gap_heights([height - 1 + offset for height in levels.heights()]))
        return segments

    if forest_levels is None:
        if any(tree.node_count for tree in trees):
            raise InvalidLevelError("A weakly ordered forest needs forest-wide levels.")
        forest_levels = LevelAssignment(())
    forest = Forest(kind, tuple(trees), (), forest_levels)
    forest.validate()
    roots = [
        forest_levels.blocks[sum(tree.node_count for tree in trees[:position])]
        for position, item in enumerate(attachments)
        if item.fused
    ]
    shift = 1
    if roots:
        bottom = forest_levels.block_count
        unpainted_blocks = {
            block
            for position, own in enumerate(forest.restrictions())
            for node, block in enumerate(own)
            if not (attachments[position].fused and node == 0)
        }
        if set(roots) != {bottom} or bottom in unpainted_blocks:
            raise InvalidLevelError("Half-painted nodes must share the lowest forest level.")
        shift = 0
    heights = [height - 1 + shift for height in forest_levels.heights()]
    segments = []
    offset = 0
    for tree in trees:
        segments.append(tree.gap_heights(heights[offset : offset + tree.node_count]))
        offset += tree.node_count
    return segments


def validate_family(tree: PaintedTree) -> bool:  # pylint: disable=unused-variable
    """
    Checks that a painted tree satisfies the kind constraints of its declared family: a corolla
    base has at most one painted node and a forest of corollas has one node per unpainted tree.
    Level data always exists in the height representation, and the half-painted rules hold by
    construction.

    Raises:
        StructuralError: If the height tuple is malformed.
    """
    if len(tree.heights) == 0 or not all(isinstance(height, int) for height in tree.heights):
        raise StructuralError(f"Malformed painted tree heights: {tree.heights!r}")
    gaps = tree.gap_heights()
    if tree.family.base_kind is BaseKind.COROLLA:
        if tree.base().node_count > 1:
            return False
    if tree.family.forest_kind is ForestKind.FOREST_OF_COROLLAS:
        for start, stop in _runs([height > 0 for height in gaps]):
            if len(set(gaps[start:stop])) > 1:
                return False
    return True


FOREST_MAPS = {
    IDENTITY_MAP: {kind: kind for kind in ForestKind},
    BETA_MAP: {
        ForestKind.WEAKLY_ORDERED_FOREST: ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES,
    },
    TAU_MAP: {
        ForestKind.WEAKLY_ORDERED_FOREST: ForestKind.FOREST_OF_PLANE_TREES,
        ForestKind.FOREST_OF_WEAKLY_ORDERED_TREES: ForestKind.FOREST_OF_PLANE_TREES,
        ForestKind.FOREST_OF_PLANE_TREES: ForestKind.FOREST_OF_PLANE_TREES,
    },
    KAPPA_MAP: {kind: ForestKind.FOREST_OF_COROLLAS for kind in ForestKind},
}

BASE_MAPS = {
    IDENTITY_MAP: {kind: kind for kind in BaseKind},
    TAU_MAP: {
        BaseKind.WEAKLY_ORDERED: BaseKind.PLANE,
        BaseKind.PLANE: BaseKind.PLANE,
    },
    KAPPA_MAP: {kind: BaseKind.COROLLA for kind in BaseKind},
}


def fractional_map(  # pylint: disable=unused-variable
    forest_map: str, base_map: str, tree: PaintedTree
) -> PaintedTree:
    """
    Applies a forest map and a base map (each one of "identity", "beta", "tau", "kappa") to a
    painted tree. Half-painted nodes are handled by the projection: beta and tau keep the tree
    rooted at a half-painted node together, kappa turns every unpainted tree into its own corolla.

    Raises:
        KindMismatchError: If a map does not apply to the tree's kinds.
    """
    family = tree.family
    forest_target = FOREST_MAPS.get(forest_map, {}).get(family.forest_kind)
    base_target = BASE_MAPS.get(base_map, {}).get(family.base_kind)
    if forest_target is None:
        raise KindMismatchError(f"Map {forest_map!r} does not apply to {family.forest_kind}.")
    if base_target is None:
        raise KindMismatchError(f"Map {base_map!r} does not apply to {family.base_kind}.")
    return PaintedTree.from_master(PaintedFamily(forest_target, base_target), tree.heights)


def half_painted_corolla(  # pylint: disable=unused-variable
    degree: int, family: PaintedFamily = MASTER_FAMILY
) -> PaintedTree:
    """The corolla whose single node lies on the paint line; the unit tree when degree is 0."""
    return PaintedTree(family, (0,) * (degree + 1))


def unit_tree(  # pylint: disable=unused-variable
    family: PaintedFamily = MASTER_FAMILY,
) -> PaintedTree:
    """The single-leaf painted tree of a family."""
    return PaintedTree(family, (0,))
