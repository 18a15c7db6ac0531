"""PDA generators: disjoint-subset unions, extended q-ary sequences, and F/S duality.

Both schemes are built as 3-partite hypergraphs and read off as arrays with
rows = first part, columns = second part and symbols = third part.  Vertex
indices are fixed bijections so outputs are stable across runs:

* subsets of ``[n]`` are ranked colexicographically (combinatorial number
  system), rank 0 -> index 1;
* q-ary vectors are read as base-q numbers, first coordinate most significant;
* scheme 2 columns are ordered by colex rank of the position set, then by the
  base-q value of the values placed there;
* scheme 2 symbols use mixed radix ``(q,...,q, q-1,...,q-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Sequence

from .pda_core import STAR, Pda, PdaError, validate


@dataclass(frozen=True)
class Scheme1Params:
    n: int
    a: int
    b: int

    def __post_init__(self):
        if min(self.n, self.a, self.b) < 1:
            raise PdaError(f"n, a, b must be positive, got {self}")
        if self.a + self.b > self.n:
            raise PdaError(f"need a + b <= n, got a={self.a}, b={self.b}, n={self.n}")


@dataclass(frozen=True)
class Scheme2Params:
    q: int
    m: int
    t: int

    def __post_init__(self):
        if min(self.m, self.t) < 1:
            raise PdaError(f"m and t must be positive, got {self}")
        if self.t > self.m:
            raise PdaError(f"need t <= m, got t={self.t}, m={self.m}")
        if self.q < 2:
            raise PdaError(f"need q >= 2 (q=1 leaves no symbols), got q={self.q}")


def colex_rank(subset: Sequence[int]) -> int:
    """0-based colex rank of a subset of ``{1, 2, ...}``."""
    return sum(comb(x - 1, i) for i, x in enumerate(sorted(subset), 1))


def colex_unrank(rank: int, size: int) -> tuple[int, ...]:
    """Inverse of :func:`colex_rank` for subsets of the given size."""
    out = []
    for i in range(size, 0, -1):
        x = i - 1
        while comb(x + 1, i) <= rank:
            x += 1
        out.append(x + 1)
        rank -= comb(x, i)
    return tuple(reversed(out))


def subsets_colex(n: int, size: int) -> list[tuple[int, ...]]:
    return [colex_unrank(r, size) for r in range(comb(n, size))]


def to_base(value: int, base: int, length: int) -> tuple[int, ...]:
    digits = []
    for _ in range(length):
        value, d = divmod(value, base)
        digits.append(d)
    return tuple(reversed(digits))


def from_radix(digits: Sequence[int], radices: Sequence[int]) -> int:
    value = 0
    for d, r in zip(digits, radices):
        value = value * r + d
    return value


def _from_edges(f: int, k: int, s: int, edges) -> Pda:
    grid = [[STAR] * k for _ in range(f)]
    used = set()
    for j, kk, sym in edges:
        if grid[j - 1][kk - 1] is not STAR:
            raise AssertionError(f"cell ({j},{kk}) assigned twice")
        grid[j - 1][kk - 1] = sym
        used.add(sym)
    # every symbol vertex carries an edge, so no compaction is needed
    assert len(used) == s, f"{s - len(used)} symbol vertices without edges"
    return Pda.from_rows(grid, s=s)


def scheme1_edges(p: Scheme1Params):
    """Yield ``(row, column, symbol)`` for every ``A | B = C`` with A, B disjoint."""
    rows = subsets_colex(p.n, p.a)
    cols = subsets_colex(p.n, p.b)
    for j, a_set in enumerate(rows, 1):
        a = set(a_set)
        for k, b_set in enumerate(cols, 1):
            if a.isdisjoint(b_set):
                yield j, k, colex_rank(a.union(b_set)) + 1


def scheme1(p: Scheme1Params) -> Pda:
    """``C(a+b,a)``-regular ``(C(n,b), C(n,a), C(n,a)-C(n-b,a), C(n,a+b))``-PDA."""
    return _from_edges(comb(p.n, p.a), comb(p.n, p.b), comb(p.n, p.a + p.b),
                       scheme1_edges(p))


def scheme2_edges(p: Scheme2Params):
    """Yield ``(row, column, symbol)`` for the extended q-ary sequence hypergraph.

    For a column ``B = (delta, b)`` every symbol ``C`` with ``c[delta] = b`` is
    hit once, and the row is forced: ``a_i = c_i`` off ``delta`` and
    ``a_{delta_j} = c_{delta_j} + c_{m+j} + 1 (mod q)`` on it.
    """
    q, m, t = p.q, p.m, p.t
    radices = (q,) * m + (q - 1,) * t
    for rank in range(comb(m, t)):
        delta = [d - 1 for d in colex_unrank(rank, t)]
        free = [i for i in range(m) if i not in delta]
        for b_value in range(q ** t):
            b = to_base(b_value, q, t)
            col = rank * q ** t + b_value + 1
            for rest in product(range(q), repeat=m - t):
                for shift in product(range(q - 1), repeat=t):
                    c = [0] * m
                    for i, v in zip(free, rest):
                        c[i] = v
                    for i, v in zip(delta, b):
                        c[i] = v
                    a = list(c)
                    for d, v, e in zip(delta, b, shift):
                        a[d] = (v + e + 1) % q
                    row = from_radix(a, (q,) * m) + 1
                    sym = from_radix(c + list(shift), radices) + 1
                    yield row, col, sym


def scheme2(p: Scheme2Params) -> Pda:
    """``C(m,t)``-regular ``(C(m,t)q^t, q^m, q^m - q^(m-t)(q-1)^t, q^m(q-1)^t)``-PDA."""
    q, m, t = p.q, p.m, p.t
    return _from_edges(q ** m, comb(m, t) * q ** t, q ** m * (q - 1) ** t,
                       scheme2_edges(p))


def ali_niesen(k_users: int, t: int) -> Pda:
    """The ``(K, C(K,t), C(K-1,t-1), C(K,t+1))``-PDA, i.e. scheme 1 with b = 1."""
    if not 1 <= t <= k_users - 1:
        raise PdaError(f"need 1 <= t <= K-1, got K={k_users}, t={t}")
    return scheme1(Scheme1Params(k_users, t, 1))


def dualize(pda: Pda) -> Pda:
    """Swap the roles of rows and symbols.

    ``Q[s, k] = j`` whenever ``pda[j, k] = s``.  The result is an
    ``(K, S, S - (F - Z), F)``-PDA, and dualizing twice returns the input.
    """
    report = validate(pda)
    if not report.overall_valid:
        raise PdaError(f"cannot dualize an invalid PDA: {report.first_witness().describe()}")
    empty = [j for j, row in enumerate(pda.grid, 1) if all(c is STAR for c in row)]
    if empty:
        raise PdaError(f"rows {empty} are all '*' and would be unused symbols in the dual")
    grid = [[STAR] * pda.k for _ in range(pda.s)]
    for j, k, cell in pda.cells():
        if cell is not STAR:
            grid[cell - 1][k - 1] = j
    return Pda.from_rows(grid, s=pda.f)
