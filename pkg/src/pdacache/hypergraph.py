"""The 3-partite hypergraph view of a PDA and its (6,3) property checkers.

Cell ``(j, k)`` holding symbol ``s`` becomes the edge ``(j, k, s)``.  A grid
is a PDA exactly when this hypergraph is linear, (6,3)-free and every
column vertex has the same degree.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .pda_core import STAR, Pda, PdaError, validate

Edge = tuple[int, int, int]
PARTS = ("F", "K", "S")


class HypergraphError(PdaError):
    """Raised when a hypergraph cannot be read back as an array."""


@dataclass(frozen=True)
class TripartiteHypergraph:
    part_f: int
    part_k: int
    part_s: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple(sorted(tuple(e) for e in self.edges))
        object.__setattr__(self, "edges", edges)
        for a, b in zip(edges, edges[1:]):
            if a == b:
                raise HypergraphError(f"duplicate edge {a}")
        sizes = (self.part_f, self.part_k, self.part_s)
        if min(sizes) < 0:
            raise HypergraphError(f"part sizes must be non-negative, got {sizes}")
        for e in edges:
            if len(e) != 3 or any(not 1 <= v <= n for v, n in zip(e, sizes)):
                raise HypergraphError(f"edge {e} outside parts {sizes}")

    def to_edge_list(self) -> str:
        lines = [f"HG {self.part_f} {self.part_k} {self.part_s}"]
        lines += [f"{j} {k} {s}" for j, k, s in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str) -> "TripartiteHypergraph":
        lines = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0][0] != "HG" or len(lines[0]) != 4:
            raise HypergraphError("expected header 'HG F K S'")
        try:
            f, k, s = (int(x) for x in lines[0][1:])
            edges = [tuple(int(x) for x in ln) for ln in lines[1:]]
        except ValueError as exc:
            raise HypergraphError(f"non-integer token: {exc}") from None
        if any(len(e) != 3 for e in edges):
            raise HypergraphError("every edge line needs exactly three integers")
        return cls(f, k, s, tuple(edges))


@dataclass(frozen=True)
class PropertyWitness:
    kind: str  # "not_linear" or "not_63_free"
    edges: tuple[Edge, ...]
    span: tuple[tuple[str, int], ...]


def span_of(edges: Iterable[Edge]) -> tuple[tuple[str, int], ...]:
    """Vertices covered by the edges, tagged by part."""
    return tuple(sorted({(part, v) for e in edges for part, v in zip(PARTS, e)}))


def shared(e1: Edge, e2: Edge) -> int:
    return sum(1 for a, b in zip(e1, e2) if a == b)


def pda_to_hypergraph(pda: Pda) -> TripartiteHypergraph:
    edges = tuple((j, k, c) for j, k, c in pda.cells() if c is not STAR)
    return TripartiteHypergraph(pda.f, pda.k, pda.s, edges)


def hypergraph_to_pda(h: TripartiteHypergraph) -> Pda:
    """Inverse of :func:`pda_to_hypergraph`.

    Needs at most one edge per ``(j, k)`` and an edge on every symbol vertex.
    """
    if h.part_f < 1 or h.part_k < 1:
        raise HypergraphError(f"need F >= 1 and K >= 1, got F={h.part_f}, K={h.part_k}")
    grid = [[STAR] * h.part_k for _ in range(h.part_f)]
    for j, k, s in h.edges:
        if grid[j - 1][k - 1] is not STAR:
            raise HypergraphError(
                f"pair ({j},{k}) lies in two edges: {(j, k, grid[j - 1][k - 1])} and {(j, k, s)}")
        grid[j - 1][k - 1] = s
    unused = sorted(set(range(1, h.part_s + 1)) - {s for _, _, s in h.edges})
    if unused:
        raise HypergraphError(f"symbol vertices without edges: {unused}")
    return Pda.from_rows(grid, s=h.part_s)


def check_linear(h: TripartiteHypergraph) -> Optional[PropertyWitness]:
    """Return the lexicographically first pair of edges sharing two vertices, if any."""
    groups = defaultdict(list)
    for e in h.edges:
        j, k, s = e
        groups["jk", j, k].append(e)
        groups["js", j, s].append(e)
        groups["ks", k, s].append(e)
    # edges are sorted, so each group's first two members are its smallest pair
    pairs = [tuple(g[:2]) for g in groups.values() if len(g) > 1]
    if not pairs:
        return None
    best = min(pairs)
    return PropertyWitness("not_linear", best, span_of(best))


def check_63_free_bruteforce(h: TripartiteHypergraph) -> Optional[PropertyWitness]:
    """Scan every triple of edges; return the first one spanning at most six vertices."""
    for triple in combinations(h.edges, 3):
        span = span_of(triple)
        if len(span) <= 6:
            if len(span) <= 5:
                # fewer than six vertices forces a pair sharing two of them
                assert any(shared(a, b) >= 2 for a, b in combinations(triple, 2)), triple
            return PropertyWitness("not_63_free", triple, span)
    return None


def check_63_free_linear(h: TripartiteHypergraph) -> Optional[PropertyWitness]:
    """(6,3) check for linear hypergraphs, looking only at 2/2/2 configurations.

    In a linear hypergraph three edges on six vertices must pair up through one
    shared vertex in each part: two edges ``(j1,k1,s)``, ``(j2,k2,s)`` plus a
    third edge on ``(j1,k2)`` or ``(j2,k1)``.
    """
    by_cell = {e[:2]: e for e in h.edges}
    by_symbol = defaultdict(list)
    for e in h.edges:
        by_symbol[e[2]].append(e)
    found = []
    for group in by_symbol.values():
        for e1, e2 in combinations(group, 2):
            (j1, k1, _), (j2, k2, _) = e1, e2
            for corner in ((j1, k2), (j2, k1)):
                third = by_cell.get(corner)
                if third is not None and third not in (e1, e2):
                    found.append(tuple(sorted((e1, e2, third))))
    if not found:
        return None
    best = min(found)
    return PropertyWitness("not_63_free", best, span_of(best))


def check_63_free(h: TripartiteHypergraph, method: str = "auto") -> Optional[PropertyWitness]:
    """Find three edges spanned by at most six vertices.

    ``method`` is ``"brute"`` (triple scan), ``"linear"`` (2/2/2 scan, only
    sound on linear input) or ``"auto"`` (linear scan when the input is
    linear, brute force otherwise).  Both scans return the lexicographically
    smallest offending triple.
    """
    if method == "brute":
        return check_63_free_bruteforce(h)
    if method == "linear":
        if check_linear(h) is not None:
            raise HypergraphError("the 2/2/2 scan requires a linear hypergraph")
        return check_63_free_linear(h)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if check_linear(h) is None:
        return check_63_free_linear(h)
    return check_63_free_bruteforce(h)


def column_degrees(h: TripartiteHypergraph) -> dict[int, int]:
    counts = Counter(k for _, k, _ in h.edges)
    return {k: counts.get(k, 0) for k in range(1, h.part_k + 1)}


def hypergraph_side_valid(h: TripartiteHypergraph, method: str = "auto") -> bool:
    """Linear, (6,3)-free and column-regular."""
    return (check_linear(h) is None
            and check_63_free(h, method) is None
            and len(set(column_degrees(h).values())) <= 1)


def equivalence_check(pda: Pda) -> bool:
    """True when the array validator and the hypergraph characterization agree."""
    h = pda_to_hypergraph(pda)
    return validate(pda).overall_valid == hypergraph_side_valid(h)
