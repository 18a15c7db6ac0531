"""Closed-form scheme parameters, evaluated exactly.

Each row gives ``K``, ``M/N``, ``F`` and ``R`` for one family at one
parameter point.  Families:

======== ========== ==================================================
name     params     array
======== ========== ==================================================
an       K, t       Ali-Niesen (t = K/q or t = K - K/q gives rows 1-2)
yan      q, m       Yan et al. first array, M/N = 1/q (formula only)
yan-dual q, m       Yan et al. symmetric array, M/N = (q-1)/q (formula only)
s1       n, a, b    disjoint-subset scheme
s2       q, m, t    extended q-ary sequence scheme
s2dual   q, m, t    s2 with the roles of rows and symbols swapped
======== ========== ==================================================

The ``yan`` rows use the native ``K = q(m+1)`` parametrisation; no array is
built for them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterable, Iterator

from .pda_core import PdaError


@dataclass(frozen=True)
class ParamRow:
    scheme: str
    params: tuple[tuple[str, int], ...]
    k_users: int
    mem_ratio: Fraction
    f_div: int
    rate: Fraction


def _an(k: int, t: int):
    if not 1 <= t <= k - 1:
        raise PdaError("need 1 <= t <= K-1")
    f = comb(k, t)
    return k, Fraction(t, k), f, Fraction(comb(k, t + 1), f)


def _yan(q: int, m: int):
    if q < 2 or m < 1:
        raise PdaError("need q >= 2, m >= 1")
    return q * (m + 1), Fraction(1, q), q ** m, Fraction(q ** (m + 1) - q ** m, q ** m)


def _yan_dual(q: int, m: int):
    if q < 2 or m < 1:
        raise PdaError("need q >= 2, m >= 1")
    f = q ** (m + 1) - q ** m
    return q * (m + 1), Fraction((q - 1) ** 2 * q ** (m - 1), f), f, Fraction(q ** m, f)


def _s1(n: int, a: int, b: int):
    if min(n, a, b) < 1 or a + b > n:
        raise PdaError("need positive n, a, b with a + b <= n")
    f = comb(n, a)
    return comb(n, b), 1 - Fraction(comb(n - b, a), f), f, Fraction(comb(n, a + b), f)


def _s2(q: int, m: int, t: int):
    if q < 2 or not 1 <= t <= m:
        raise PdaError("need q >= 2 and 1 <= t <= m")
    return comb(m, t) * q ** t, 1 - Fraction(q - 1, q) ** t, q ** m, Fraction((q - 1) ** t)


def _s2dual(q: int, m: int, t: int):
    if q < 2 or not 1 <= t <= m:
        raise PdaError("need q >= 2 and 1 <= t <= m")
    return (comb(m, t) * q ** t, 1 - Fraction(1, q ** t), q ** m * (q - 1) ** t,
            Fraction(1, (q - 1) ** t))


SCHEMES = {
    "an": (("K", "t"), _an),
    "yan": (("q", "m"), _yan),
    "yan-dual": (("q", "m"), _yan_dual),
    "s1": (("n", "a", "b"), _s1),
    "s2": (("q", "m", "t"), _s2),
    "s2dual": (("q", "m", "t"), _s2dual),
}


def row(scheme: str, **params: int) -> ParamRow:
    names, fn = SCHEMES[scheme]
    missing = [n for n in names if n not in params]
    if missing:
        raise PdaError(f"scheme {scheme} needs parameters {', '.join(missing)}")
    values = tuple(params[n] for n in names)
    k, mem, f, r = fn(*values)
    return ParamRow(scheme, tuple(zip(names, values)), k, mem, f, r)


def rows(scheme: str, ranges: dict[str, Iterable[int]]) -> Iterator[ParamRow]:
    """All in-range rows over the Cartesian product of parameter ranges."""
    names, _ = SCHEMES[scheme]
    unknown = set(ranges) - set(names)
    if unknown:
        raise PdaError(f"scheme {scheme} takes {', '.join(names)}; got {', '.join(sorted(unknown))}")
    missing = [n for n in names if n not in ranges]
    if missing:
        raise PdaError(f"scheme {scheme} needs parameters {', '.join(missing)}")
    for values in product(*(list(ranges[n]) for n in names)):
        try:
            yield row(scheme, **dict(zip(names, values)))
        except PdaError:
            continue


def parse_range(text: str) -> list[int]:
    """``"3"``, ``"2..10"`` or ``"1,2,5"``."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",")]


def format_fraction(x: Fraction, decimal: bool = False) -> str:
    if decimal:
        return f"{float(x):.6g}"
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
