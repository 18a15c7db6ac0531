"""Two further characterizations of PDAs, used to cross-check the validator.

* Regular partial Latin square with the Blackburn property: symbols never
  repeat in a line, equal symbols at ``(a,b)`` and ``(c,d)`` leave
  ``(a,d)`` and ``(c,b)`` blank, and every column holds the same number of
  symbols.
* Strong edge colouring: the bipartite rows/columns graph with one edge per
  filled cell, coloured by its symbol, has every colour class an induced
  matching.

Neither routine shares code with :func:`pdacache.pda_core.validate`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Optional

from .pda_core import Pda


@dataclass(frozen=True)
class OracleWitness:
    prop: str
    cells: tuple[tuple[int, int], ...]
    symbol: Optional[int] = None


@dataclass(frozen=True)
class BipartiteColoredGraph:
    left: int
    right: int
    edges: frozenset  # of (j, k, color)

    def __post_init__(self):
        seen = set()
        for j, k, _ in self.edges:
            if (j, k) in seen:
                raise ValueError(f"two edges on pair ({j},{k})")
            seen.add((j, k))

    @classmethod
    def from_pda(cls, pda: Pda) -> "BipartiteColoredGraph":
        edges = frozenset((j + 1, k + 1, cell)
                          for j, row in enumerate(pda.grid)
                          for k, cell in enumerate(row) if cell is not None)
        return cls(len(pda.grid), len(pda.grid[0]), edges)

    @cached_property
    def _pairs(self) -> frozenset:
        return frozenset((j, k) for j, k, _ in self.edges)

    def adjacent(self, j: int, k: int) -> bool:
        return (j, k) in self._pairs

    def color_classes(self) -> dict[int, list[tuple[int, int]]]:
        classes = defaultdict(list)
        for j, k, c in sorted(self.edges):
            classes[c].append((j, k))
        return dict(classes)


def check_blackburn(pda: Pda) -> Optional[OracleWitness]:
    """Return a witness unless the array is a regular Blackburn partial Latin square."""
    grid = pda.grid
    f, k = len(grid), len(grid[0])
    coords = [(j, col) for j, col in product(range(f), range(k)) if grid[j][col] is not None]

    for r, c in combinations(coords, 2):
        x, y = grid[r[0]][r[1]], grid[c[0]][c[1]]
        if x != y:
            continue
        cells = ((r[0] + 1, r[1] + 1), (c[0] + 1, c[1] + 1))
        if r[0] == c[0] or r[1] == c[1]:
            return OracleWitness("latin", cells, x)
        if grid[r[0]][c[1]] is not None or grid[c[0]][r[1]] is not None:
            return OracleWitness("blackburn", cells, x)

    filled = [sum(grid[j][col] is not None for j in range(f)) for col in range(k)]
    for col in range(1, k):
        if filled[col] != filled[0]:
            return OracleWitness("regular", ((0, 1), (0, col + 1)))
    return None


def check_strong_coloring(pda: Pda) -> Optional[OracleWitness]:
    """Return a witness unless every colour class is an induced matching."""
    g = BipartiteColoredGraph.from_pda(pda)
    for color, edges in sorted(g.color_classes().items()):
        for (j1, k1), (j2, k2) in combinations(edges, 2):
            if j1 == j2 or k1 == k2:
                return OracleWitness("not_matching", ((j1, k1), (j2, k2)), color)
            if g.adjacent(j1, k2) or g.adjacent(j2, k1):
                return OracleWitness("not_induced", ((j1, k1), (j2, k2)), color)
    return None


def colors_used(pda: Pda) -> int:
    return len(BipartiteColoredGraph.from_pda(pda).color_classes())


def column_regular(pda: Pda) -> bool:
    g = BipartiteColoredGraph.from_pda(pda)
    degrees = [sum(1 for _, k, _ in g.edges if k == col) for col in range(1, g.right + 1)]
    return len(set(degrees)) == 1
