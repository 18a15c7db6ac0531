"""Plain-text PDA files.

::

    PDA v1 K=2 F=4 Z=2 S=2
    * 1
    1 *
    * 2
    2 *

``Z`` is the star count of column 1.  When the columns disagree (C1 fails)
the header cannot be confirmed and parsing only warns.
"""

from __future__ import annotations

import re
import warnings

from .pda_core import STAR, Pda, PdaError

HEADER = re.compile(r"^PDA v1 K=(\d+) F=(\d+) Z=(\d+) S=(\d+)$")


class PdaFormatError(PdaError):
    pass


def serialize_pda(pda: Pda) -> str:
    z = pda.column_stars()[0]
    lines = [f"PDA v1 K={pda.k} F={pda.f} Z={z} S={pda.s}"] + pda.rows_text()
    return "\n".join(lines) + "\n"


def _token(tok: str, j: int, k: int, s: int):
    if tok == "*":
        return STAR
    if not tok.isdigit():
        raise PdaFormatError(f"row {j}, column {k}: bad token {tok!r}")
    value = int(tok)
    if not 1 <= value <= s:
        raise PdaFormatError(f"row {j}, column {k}: symbol {value} outside 1..{s}")
    return value


def parse_pda(text: str) -> Pda:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise PdaFormatError("empty input")
    m = HEADER.match(lines[0].strip())
    if not m:
        raise PdaFormatError(f"malformed header: {lines[0]!r}")
    k, f, z, s = (int(g) for g in m.groups())
    if f < 1:
        raise PdaFormatError("F >= 1 violated")
    if k < 1:
        raise PdaFormatError("K >= 1 violated")
    body = lines[1:]
    if len(body) != f:
        raise PdaFormatError(f"header says F={f} but body has {len(body)} rows")
    rows = []
    for j, line in enumerate(body, 1):
        toks = line.split()
        if len(toks) != k:
            raise PdaFormatError(f"row {j} has {len(toks)} tokens, header says K={k}")
        rows.append([_token(t, j, col, s) for col, t in enumerate(toks, 1)])
    try:
        pda = Pda.from_rows(rows, s=s)
    except PdaFormatError:
        raise
    except PdaError as exc:
        raise PdaFormatError(str(exc)) from None

    stars = pda.column_stars()
    if len(set(stars)) == 1:
        if stars[0] != z:
            raise PdaFormatError(f"header says Z={z} but every column has {stars[0]} stars")
    else:
        warnings.warn(f"columns have unequal star counts {stars}; header Z={z} not checked",
                      stacklevel=2)
    return pda
