"""Placement delivery arrays: the grid type, derived parameters and the validator.

A PDA is an ``F x K`` array whose cells hold either a star (the packet is
cached by that user) or an integer symbol ``1..S`` (the packet is delivered
in broadcast slot ``s``).  Stars are represented by ``None`` and symbols by
plain ``int``; rows and columns are 1-based in every public API.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

STAR = None

Cell = Optional[int]
Coord = tuple[int, int]


class PdaError(ValueError):
    """Raised for malformed arrays and for operations whose preconditions fail."""


def parse_cell(token: object) -> Cell:
    """Map ``'*'``/``None`` to a star and anything else to an integer symbol."""
    if token is None or token == "*":
        return STAR
    if isinstance(token, bool):
        raise PdaError(f"not a cell value: {token!r}")
    return int(token)


def compact_rows(rows: Iterable[Iterable[object]]) -> tuple[tuple[Cell, ...], ...]:
    """Relabel symbols to ``1..S`` in first-occurrence row-major order."""
    labels: dict[int, int] = {}
    out = []
    for row in rows:
        new_row = []
        for token in row:
            cell = parse_cell(token)
            if cell is not STAR:
                cell = labels.setdefault(cell, len(labels) + 1)
            new_row.append(cell)
        out.append(tuple(new_row))
    return tuple(out)


@dataclass(frozen=True)
class Pda:
    """An immutable ``F x K`` array over ``{*} | {1..S}``.

    Construction checks only the structural invariants (rectangular, symbols
    in range, every symbol used).  Whether C1-C3 hold is :func:`validate`'s job.
    """

    grid: tuple[tuple[Cell, ...], ...]
    s: int

    def __post_init__(self):
        grid = tuple(tuple(row) for row in self.grid)
        object.__setattr__(self, "grid", grid)
        if not grid:
            raise PdaError("F >= 1 violated: array has no rows")
        width = len(grid[0])
        if width == 0:
            raise PdaError("K >= 1 violated: array has no columns")
        for j, row in enumerate(grid, 1):
            if len(row) != width:
                raise PdaError(f"row {j} has {len(row)} cells, expected {width}")
        if self.s < 0:
            raise PdaError(f"S must be non-negative, got {self.s}")
        seen = set()
        for j, row in enumerate(grid, 1):
            for k, cell in enumerate(row, 1):
                if cell is STAR:
                    continue
                if not isinstance(cell, int) or isinstance(cell, bool):
                    raise PdaError(f"cell ({j},{k}) holds {cell!r}, expected '*' or an int")
                if not 1 <= cell <= self.s:
                    raise PdaError(f"cell ({j},{k}) symbol {cell} outside 1..{self.s}")
                seen.add(cell)
        missing = sorted(set(range(1, self.s + 1)) - seen)
        if missing:
            raise PdaError(f"symbols never used: {missing}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[object]], s: Optional[int] = None,
                  compact: bool = False) -> "Pda":
        """Build from nested rows of ``'*'``/``None``/ints.

        ``s`` defaults to the largest symbol present.  With ``compact=True``
        symbols are first relabelled to ``1..S`` (row-major first occurrence).
        """
        if compact:
            grid = compact_rows(rows)
        else:
            grid = tuple(tuple(parse_cell(c) for c in row) for row in rows)
        if s is None:
            s = max((c for row in grid for c in row if c is not STAR), default=0)
        return cls(grid, s)

    @property
    def f(self) -> int:
        return len(self.grid)

    @property
    def k(self) -> int:
        return len(self.grid[0])

    def __getitem__(self, jk: Coord) -> Cell:
        j, k = jk
        if not (1 <= j <= self.f and 1 <= k <= self.k):
            raise IndexError(f"cell ({j},{k}) outside {self.f}x{self.k} array")
        return self.grid[j - 1][k - 1]

    def cells(self):
        """Yield ``(j, k, cell)`` in row-major order."""
        for j, row in enumerate(self.grid, 1):
            for k, cell in enumerate(row, 1):
                yield j, k, cell

    def symbol_cells(self) -> dict[int, list[Coord]]:
        """Map each symbol to its cells, row-major."""
        out: dict[int, list[Coord]] = defaultdict(list)
        for j, k, cell in self.cells():
            if cell is not STAR:
                out[cell].append((j, k))
        return dict(out)

    def column_stars(self) -> list[int]:
        return [sum(1 for row in self.grid if row[k] is STAR) for k in range(self.k)]

    def with_cell(self, j: int, k: int, value: object, compact: bool = True) -> "Pda":
        """Return a copy with cell ``(j, k)`` replaced."""
        rows = [list(row) for row in self.grid]
        rows[j - 1][k - 1] = parse_cell(value)
        if compact:
            return Pda.from_rows(rows, compact=True)
        return Pda.from_rows(rows)

    def canonical(self) -> "Pda":
        """Same array with symbols relabelled in first-occurrence order."""
        return Pda.from_rows(self.grid, compact=True)

    def rows_text(self) -> list[str]:
        return [" ".join("*" if c is STAR else str(c) for c in row) for row in self.grid]

    def __str__(self) -> str:
        return "\n".join(self.rows_text())


@dataclass(frozen=True)
class PdaParams:
    k_users: int
    f_div: int
    z_stars: int
    s_symbols: int
    rate: Fraction
    mem_ratio: Fraction
    regularity: Optional[int] = None

    @property
    def kfzs(self) -> tuple[int, int, int, int]:
        return (self.k_users, self.f_div, self.z_stars, self.s_symbols)


@dataclass(frozen=True)
class Violation:
    """One concrete breach of C1, C2 or C3.

    * C1: ``column`` has ``stars`` stars where column 1 has ``expected``.
    * C2: ``cells`` is a pair sharing ``symbol`` in one row or one column.
    * C3: ``cells`` is a pair sharing ``symbol`` in distinct rows and columns;
      ``corners`` lists the opposite corners that are not stars.
    """

    constraint: str
    cells: tuple[Coord, ...] = ()
    symbol: Optional[int] = None
    corners: tuple[Coord, ...] = ()
    column: Optional[int] = None
    stars: Optional[int] = None
    expected: Optional[int] = None

    def describe(self) -> str:
        if self.constraint == "C1":
            return (f"C1: column {self.column} has {self.stars} stars, "
                    f"column 1 has {self.expected}")
        pair = " and ".join(f"({j},{k})" for j, k in self.cells)
        if self.constraint == "C2":
            return f"C2: symbol {self.symbol} repeated at {pair}"
        corners = ", ".join(f"({j},{k})" for j, k in self.corners)
        return f"C3: symbol {self.symbol} at {pair} but corner {corners} is not '*'"


@dataclass(frozen=True)
class ValidationReport:
    c1_ok: bool
    c2_ok: bool
    c3_ok: bool
    witnesses: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def overall_valid(self) -> bool:
        return self.c1_ok and self.c2_ok and self.c3_ok

    def first_witness(self) -> Optional[Violation]:
        return self.witnesses[0] if self.witnesses else None


def _c1_violations(pda: Pda) -> list[Violation]:
    stars = pda.column_stars()
    z = stars[0]
    return [Violation("C1", column=k, stars=n, expected=z)
            for k, n in enumerate(stars, 1) if n != z]


def _c2_c3_violations(pda: Pda) -> tuple[list[Violation], list[Violation]]:
    c2, c3 = [], []
    for s, cells in sorted(pda.symbol_cells().items()):
        for i, (j1, k1) in enumerate(cells):
            for j2, k2 in cells[i + 1:]:
                if j1 == j2 or k1 == k2:
                    c2.append(Violation("C2", ((j1, k1), (j2, k2)), s))
                    continue
                corners = tuple(c for c in ((j1, k2), (j2, k1)) if pda[c] is not STAR)
                if corners:
                    c3.append(Violation("C3", ((j1, k1), (j2, k2)), s, corners))
    return c2, c3


def _order(v: Violation):
    return (v.constraint, v.column or 0, v.cells, v.symbol or 0)


def validate(pda: Pda) -> ValidationReport:
    """Check C1-C3 and enumerate every violation.

    Witnesses are grouped by constraint; within C2/C3 they are ordered by the
    row-major position of the pair's first cell, then second cell, then symbol.
    """
    c1 = _c1_violations(pda)
    c2, c3 = _c2_c3_violations(pda)
    witnesses = tuple(sorted(c1 + c2 + c3, key=_order))
    return ValidationReport(not c1, not c2, not c3, witnesses)


def witness_is_genuine(pda: Pda, v: Violation) -> bool:
    """Re-check a single witness directly against the grid."""
    if v.constraint == "C1":
        stars = pda.column_stars()
        return stars[v.column - 1] == v.stars and stars[0] == v.expected != v.stars
    if len(v.cells) != 2 or v.cells[0] == v.cells[1]:
        return False
    (j1, k1), (j2, k2) = v.cells
    if not (pda[j1, k1] == pda[j2, k2] == v.symbol) or v.symbol is None:
        return False
    if v.constraint == "C2":
        return j1 == j2 or k1 == k2
    if v.constraint == "C3":
        if j1 == j2 or k1 == k2 or not v.corners:
            return False
        return all(c in ((j1, k2), (j2, k1)) and pda[c] is not STAR for c in v.corners)
    return False


def symbol_counts(pda: Pda) -> Counter:
    return Counter(c for _, _, c in pda.cells() if c is not STAR)


def params(pda: Pda) -> PdaParams:
    """Derived ``(K, F, Z, S)``, exact rate ``S/F`` and memory ratio ``Z/F``.

    Raises PdaError when columns disagree on their star count.
    """
    stars = pda.column_stars()
    if len(set(stars)) != 1:
        bad = next(k for k, n in enumerate(stars, 1) if n != stars[0])
        raise PdaError(f"C1 fails (column {bad} has {stars[bad - 1]} stars, "
                       f"column 1 has {stars[0]}); Z is undefined")
    z = stars[0]
    counts = set(symbol_counts(pda).values())
    regularity = counts.pop() if len(counts) == 1 else None
    return PdaParams(
        k_users=pda.k,
        f_div=pda.f,
        z_stars=z,
        s_symbols=pda.s,
        rate=Fraction(pda.s, pda.f),
        mem_ratio=Fraction(z, pda.f),
        regularity=regularity,
    )


def concat_rows(*pdas: Pda) -> Pda:
    """Stack arrays vertically with disjoint symbol alphabets."""
    if len({p.k for p in pdas}) != 1:
        raise PdaError("all arrays must have the same number of columns")
    rows, offset = [], 0
    for p in pdas:
        rows.extend([c if c is STAR else c + offset for c in row] for row in p.grid)
        offset += p.s
    return Pda.from_rows(rows, s=offset)


def concat_columns(*pdas: Pda) -> Pda:
    """Place arrays side by side with disjoint symbol alphabets."""
    if len({p.f for p in pdas}) != 1:
        raise PdaError("all arrays must have the same number of rows")
    rows = [[] for _ in range(pdas[0].f)]
    offset = 0
    for p in pdas:
        for out, row in zip(rows, p.grid):
            out.extend(c if c is STAR else c + offset for c in row)
        offset += p.s
    return Pda.from_rows(rows, s=offset)


def permute(pda: Pda, row_order: Sequence[int], col_order: Sequence[int]) -> Pda:
    """Reorder rows and columns; orders are 1-based permutations."""
    rows = [[pda.grid[j - 1][k - 1] for k in col_order] for j in row_order]
    return Pda.from_rows(rows, s=pda.s)


def relabel(pda: Pda, mapping: dict[int, int]) -> Pda:
    """Apply a symbol bijection ``old -> new`` on ``1..S``."""
    if sorted(mapping) != list(range(1, pda.s + 1)) or sorted(mapping.values()) != sorted(mapping):
        raise PdaError("relabelling must be a bijection on 1..S")
    rows = [[c if c is STAR else mapping[c] for c in row] for row in pda.grid]
    return Pda.from_rows(rows, s=pda.s)
