#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module exports computed results to files: count tables and formal sums as CSV, face posets
as DOT or JSON, and Hasse diagrams and f-vector comparisons as images.

Every export function prints a confirmation line with the path it wrote to.

Functions:
- `export_count_table`: Saves a `CountTable` as CSV.
- `export_formal_sum`: Saves the terms of a formal sum as CSV.
- `export_poset_dot`, `export_poset_json`: Save a face poset.
- `plot_hasse_diagram`, `save_hasse_diagram`: Draw a poset with its elements placed by rank.
- `plot_f_vectors`, `save_f_vectors`: Grouped bars of the f-vectors of several families.
"""

# Standard library imports
from typing import Dict, List, Sequence, Tuple

# Related third-party imports
import matplotlib.pyplot as plt
import networkx as nx
import numpy as np

# Local application/library specific imports
from painted_trees.enumeration.counting import CountTable
from painted_trees.errors import InvalidArgumentError, RankError
from painted_trees.hopf.formal_sums import FormalSum
from painted_trees.painted.painted_tree import PaintedFamily
from painted_trees.posets.face_poset import FacePoset
from painted_trees.posets.growth import build_poset

DEFAULT_DPI_VALUE = 300
DEFAULT_FIGURE_SIZE = (10, 6)
DEFAULT_NODE_SIZE = 300
DEFAULT_FONT_SIZE = 6


def export_count_table(table: CountTable, filename: str):  # pylint: disable=unused-variable
    """
    Exports a count table to a CSV file, one row per parameter tuple and provenance.

    Parameters:
        table (CountTable): The table to export.
        filename (str): The filename or path where the CSV file will be saved.
    """
    table.to_dataframe().to_csv(filename, index=False)
    print(f"Count table saved successfully to: {filename}")


def export_formal_sum(formal_sum: FormalSum, filename: str):  # pylint: disable=unused-variable
    """Exports the coefficient, degree and canonical string of every term to a CSV file."""
    formal_sum.to_dataframe().to_csv(filename, index=False)
    print(f"Formal sum saved successfully to: {filename}")


def export_poset_dot(poset: FacePoset, filename: str):  # pylint: disable=unused-variable
    with open(filename, "w", encoding="utf-8") as file:
        file.write(poset.to_dot())
    print(f"Hasse diagram saved successfully to: {filename}")


def export_poset_json(poset: FacePoset, filename: str):  # pylint: disable=unused-variable
    with open(filename, "w", encoding="utf-8") as file:
        file.write(poset.to_json_string())
    print(f"Poset saved successfully to: {filename}")


def rank_layout(  # pylint: disable=unused-variable
    poset: FacePoset,
) -> Dict[int, Tuple[float, float]]:
    """
    Places the elements of each rank on one horizontal line, centred, rank 0 at the bottom.

    Raises:
        RankError: If the poset carries no rank function.
    """
    if poset.ranks is None:
        raise RankError(f"Poset {poset.name or '(unnamed)'} is not ranked and cannot be drawn.")
    layers: Dict[int, List[int]] = {}
    for position, rank in enumerate(poset.ranks):
        layers.setdefault(rank, []).append(position)
    layout = {}
    for rank, members in layers.items():
        offset = (len(members) - 1) / 2
        for column, position in enumerate(members):
            layout[position] = (column - offset, float(rank))
    return layout


def plot_hasse_diagram(poset: FacePoset) -> plt.Figure:  # pylint: disable=unused-variable
    """
    Draws the Hasse diagram of a ranked poset, each element labelled by its canonical string.

    Parameters:
        poset (FacePoset): The poset to draw.

    Returns:
        matplotlib.figure.Figure: The figure object of the diagram.

    Raises:
        RankError: If the poset carries no rank function.
    """
    graph = poset.to_networkx()
    layout = rank_layout(poset)
    fig, axes = plt.subplots(figsize=DEFAULT_FIGURE_SIZE, dpi=DEFAULT_DPI_VALUE)
    nx.draw_networkx(
        graph,
        pos=layout,
        ax=axes,
        labels=nx.get_node_attributes(graph, "label"),
        node_size=DEFAULT_NODE_SIZE,
        font_size=DEFAULT_FONT_SIZE,
        arrows=False,
    )
    axes.set_title(poset.name or "Hasse diagram")
    axes.set_axis_off()
    fig.tight_layout()
    return fig


def save_hasse_diagram(poset: FacePoset, filename: str):  # pylint: disable=unused-variable
    fig = plot_hasse_diagram(poset)
    fig.savefig(filename, dpi=DEFAULT_DPI_VALUE)
    print(f"Plot saved successfully to: {filename}")
    plt.close(fig)


def plot_f_vectors(  # pylint: disable=unused-variable
    families: Sequence[PaintedFamily], degree: int
) -> plt.Figure:
    """
    Compares the f-vectors of several painted families in one degree as grouped bars.

    Parameters:
        families (Sequence[PaintedFamily]): The families to compare.
        degree (int): The degree, which is also the top face dimension.

    Returns:
        matplotlib.figure.Figure: The figure object of the bar plot.

    Raises:
        InvalidArgumentError: If no family is given.
    """
    if not families:
        raise InvalidArgumentError("At least one family is needed for an f-vector plot.")
    vectors = [build_poset(family, degree).f_vector() for family in families]
    dimensions = np.arange(max(len(vector) for vector in vectors))
    width = 0.8 / len(families)

    fig, axes = plt.subplots(figsize=DEFAULT_FIGURE_SIZE, dpi=DEFAULT_DPI_VALUE)
    for position, (family, vector) in enumerate(zip(families, vectors)):
        padded = np.zeros(len(dimensions), dtype=int)
        padded[: len(vector)] = vector
        axes.bar(dimensions + position * width, padded, width, label=str(family))
    axes.set_xticks(dimensions + width * (len(families) - 1) / 2)
    axes.set_xticklabels([str(dimension) for dimension in dimensions])
    axes.set_xlabel("Face dimension")
    axes.set_ylabel("Number of faces")
    axes.set_title(f"f-vectors in degree {degree}")
    axes.legend()
    fig.tight_layout()
    return fig


def save_f_vectors(  # pylint: disable=unused-variable
    families: Sequence[PaintedFamily], degree: int, filename: str
):
    fig = plot_f_vectors(families, degree)
    fig.savefig(filename, dpi=DEFAULT_DPI_VALUE)
    print(f"Plot saved successfully to: {filename}")
    plt.close(fig)
