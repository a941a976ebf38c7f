"""Embedded fixtures: named small graphs and the 36-graph catalog.

The catalog lists every connected graph on 2..9 vertices whose edge ideal
has a Cohen-Macaulay second symbolic power in characteristic zero: 19
graphs with fewer than 9 vertices and 17 with exactly 9.  Edge lists were
transcribed from the printed generators of the source table; two printed
lists repeat a generator and are stored deduplicated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .clutters import Graph


def path_graph(n: int) -> Graph:
    return Graph.of(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    return Graph.of(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph.of(n, itertools.combinations(range(1, n + 1), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 1."""
    return Graph.of(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def empty_graph(n: int) -> Graph:
    return Graph.of(n, [])


@dataclass(frozen=True)
class CatalogFixture:
    label: str
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def graph(self) -> Graph:
        return Graph.of(self.vertex_count, self.edges)


def _k(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(itertools.combinations(range(1, n + 1), 2))


_CM36_EDGES: tuple[tuple[int, tuple[tuple[int, int], ...]], ...] = (
    (2, ((1, 2),)),
    (3, _k(3)),
    (4, _k(4)),
    (5, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 1))),
    (5, _k(5)),
    (6, ((1, 2), (1, 5), (1, 6), (2, 3), (2, 6), (3, 4), (4, 5), (5, 6))),
    (6, _k(6)),
    (7, ((1, 2), (1, 3), (1, 6), (1, 7), (2, 3), (2, 4), (3, 4), (4, 5),
         (5, 6), (5, 7), (6, 7))),
    (7, ((1, 2), (5, 3), (4, 6), (1, 7), (2, 3), (2, 4), (3, 4), (4, 5),
         (5, 6), (5, 7), (6, 7), (3, 6))),
    (7, ((1, 2), (1, 3), (1, 6), (1, 7), (2, 3), (2, 6), (3, 4), (4, 5),
         (5, 6), (3, 7), (6, 7), (2, 7))),
    (7, _k(7)),
    (8, ((1, 3), (1, 2), (1, 6), (1, 7), (2, 7), (2, 6), (2, 4), (3, 7),
         (3, 5), (3, 8), (4, 5), (4, 6), (4, 8), (5, 7), (5, 8), (6, 8))),
    (8, ((1, 2), (1, 3), (1, 4), (1, 7), (2, 3), (2, 4), (2, 8), (3, 4),
         (3, 8), (4, 8), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8))),
    (8, ((1, 2), (1, 5), (1, 6), (1, 7), (2, 3), (2, 4), (2, 7), (3, 4),
         (3, 8), (4, 8), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8))),
    (8, ((1, 2), (1, 5), (1, 6), (2, 3), (2, 4), (3, 4), (3, 7), (3, 8),
         (4, 7), (4, 8), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8))),
    (8, ((1, 2), (1, 6), (1, 7), (2, 3), (2, 4), (2, 7), (2, 8), (3, 4),
         (3, 5), (3, 7), (3, 8), (4, 5), (4, 7), (4, 8), (5, 6), (5, 8),
         (7, 8))),
    (8, ((1, 8), (1, 3), (1, 4), (8, 7), (1, 5), (1, 6), (2, 3), (7, 2),
         (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6),
         (5, 6))),
    (8, ((1, 2), (1, 8), (2, 3), (2, 6), (3, 4), (3, 7), (4, 5), (5, 6),
         (6, 7), (7, 8))),
    (8, _k(8)),
    (9, ((1, 2), (1, 3), (1, 7), (2, 3), (2, 7), (3, 5), (4, 3), (3, 9),
         (5, 4), (4, 6), (4, 8), (4, 9), (5, 8), (5, 9), (5, 6), (6, 7),
         (6, 8), (6, 9), (7, 8), (8, 9))),
    (9, ((1, 2), (1, 3), (1, 8), (1, 9), (2, 9), (2, 8), (2, 3), (3, 4),
         (3, 9), (4, 6), (4, 5), (7, 4), (6, 8), (5, 6), (5, 7), (5, 8),
         (7, 8), (8, 9), (6, 7))),
    (9, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 9), (7, 1),
         (1, 3), (1, 8), (7, 2), (2, 8), (5, 3), (9, 4), (4, 6), (5, 9),
         (6, 8), (6, 9), (7, 8), (8, 9))),
    (9, ((1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (5, 9), (2, 3), (2, 4),
         (2, 5), (2, 6), (3, 4), (4, 8), (3, 5), (3, 6), (4, 6), (5, 6),
         (8, 9), (7, 1), (7, 2), (7, 3), (7, 4), (7, 5), (7, 6))),
    (9, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (8, 9), (7, 1),
         (1, 6), (1, 8), (3, 5), (3, 9), (4, 6), (7, 4), (7, 9), (4, 8),
         (7, 5), (5, 8), (5, 9), (6, 9), (6, 8), (7, 8), (4, 9))),
    (9, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (4, 9), (7, 8),
         (1, 8), (7, 1), (1, 3), (2, 8), (2, 9), (2, 4), (3, 9), (3, 5),
         (4, 6), (7, 5), (5, 9), (6, 8), (6, 9))),
    (9, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 3), (1, 7),
         (1, 8), (2, 9), (2, 7), (2, 8), (9, 3), (3, 8), (4, 6), (4, 8),
         (4, 9), (9, 5), (5, 7), (7, 6), (8, 6), (7, 9))),
    (9, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (7, 8), (7, 1),
         (2, 9), (3, 5), (3, 9), (3, 8), (4, 6), (7, 4), (8, 9), (4, 8),
         (4, 9), (5, 9), (5, 8), (5, 7), (7, 6), (8, 6))),
    (9, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9),
         (1, 9), (7, 2), (3, 8), (5, 3), (6, 4))),
    (9, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9),
         (1, 9), (7, 1), (1, 8), (2, 9), (2, 8), (2, 4), (3, 6), (3, 5),
         (6, 4), (5, 7), (7, 9))),
    (9, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (8, 9), (7, 1),
         (1, 6), (2, 9), (2, 4), (3, 8), (3, 9), (3, 5), (4, 9), (4, 8),
         (5, 9), (5, 7), (5, 8), (8, 6), (7, 8))),
    (9, _k(9)),
    (9, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 8), (2, 9),
         (3, 7), (4, 8), (5, 9), (6, 7), (7, 8), (7, 9), (8, 9))),
    (9, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1),
         (1, 9), (2, 6), (2, 9), (3, 9), (3, 7), (6, 9))),
    (9, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9),
         (1, 9), (3, 5), (3, 8), (4, 9), (4, 8), (5, 9))),
    (9, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 9), (7, 8),
         (8, 9), (1, 9), (1, 3), (1, 7), (1, 8), (2, 7), (2, 8), (2, 9),
         (3, 5), (3, 8), (3, 9), (4, 6))),
    (9, ((1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (2, 6),
         (2, 7), (3, 4), (3, 5), (3, 6), (3, 7), (4, 5), (4, 6), (4, 7),
         (5, 6), (5, 7), (6, 1), (6, 8), (1, 8), (7, 9), (8, 9))),
)

CM36: tuple[CatalogFixture, ...] = tuple(
    CatalogFixture(f"cm36-{k:02d}", n, tuple(sorted(tuple(sorted(e)) for e in edges)))
    for k, (n, edges) in enumerate(_CM36_EDGES, start=1)
)


def cm36_vertex_split() -> tuple[int, int]:
    """(graphs with fewer than 9 vertices, graphs with exactly 9)."""
    small = sum(1 for f in CM36 if f.vertex_count < 9)
    nine = sum(1 for f in CM36 if f.vertex_count == 9)
    return small, nine


# The 11-vertex counterexample graph: v exceeds the regularity over the
# rationals, the graph is edge-critical and 1-well-covered, and its second
# symbolic power is not Cohen-Macaulay.
EXAMPLE_GRAPH3 = CatalogFixture(
    "example-graph3",
    11,
    (
        (1, 3), (1, 4), (1, 7), (1, 10), (1, 11),
        (2, 4), (2, 5), (2, 8), (2, 10), (2, 11),
        (3, 5), (3, 6), (3, 8), (3, 11),
        (4, 6), (4, 9), (4, 11),
        (5, 7), (5, 9), (5, 11),
        (6, 8), (6, 9),
        (7, 9), (7, 10),
        (8, 10),
    ),
)

# The 9-vertex member of the catalog whose symbolic square is
# Cohen-Macaulay (entry 32, fifth from the bottom).
EXAMPLE_GRAPH4 = CM36[31]


def fixture_by_label(label: str) -> CatalogFixture:
    for f in CM36 + (EXAMPLE_GRAPH3,):
        if f.label == label:
            return f
    raise KeyError(label)
