"""Grid generators and brute-force oracles shared by the test modules."""

import random
from itertools import combinations, product

from hypothesis import strategies as st

from pdacache import Pda, Scheme1Params, Scheme2Params, scheme1, scheme2
from pdacache.pda_core import STAR, concat_columns, concat_rows, permute, relabel

P42_ROWS = [["*", 1], [1, "*"], ["*", 2], [2, "*"]]


def p42():
    return Pda.from_rows(P42_ROWS)


def random_grid(rng, f, k, n_symbols, star_prob=0.4):
    rows = [[STAR if rng.random() < star_prob else rng.randint(1, n_symbols)
             for _ in range(k)] for _ in range(f)]
    return Pda.from_rows(rows, compact=True)


def random_grids(seed, count, max_side=6, max_symbols=5):
    rng = random.Random(seed)
    for _ in range(count):
        f, k = rng.randint(1, max_side), rng.randint(1, max_side)
        yield random_grid(rng, f, k, rng.randint(1, max_symbols), rng.choice([0.2, 0.4, 0.6]))


def all_3x3_grids():
    for cells in product([STAR, 1, 2], repeat=9):
        yield Pda.from_rows([cells[0:3], cells[3:6], cells[6:9]], compact=True)


def scheme1_params(max_n=8):
    for n in range(2, max_n + 1):
        for a in range(1, n):
            for b in range(1, n - a + 1):
                yield Scheme1Params(n, a, b)


def scheme2_params():
    for q in (2, 3):
        for m in range(1, 5):
            for t in range(1, min(m, 2) + 1):
                yield Scheme2Params(q, m, t)


# Independent enumerations of the two schemes, straight from the edge rules.

def colex_subsets(n, size):
    return sorted(combinations(range(1, n + 1), size), key=lambda s: tuple(reversed(s)))


def scheme1_oracle(n, a, b):
    rows, cols, syms = colex_subsets(n, a), colex_subsets(n, b), colex_subsets(n, a + b)
    grid = [[STAR] * len(cols) for _ in rows]
    for (j, A), (k, B), (s, C) in product(enumerate(rows), enumerate(cols), enumerate(syms)):
        if set(A) | set(B) == set(C):
            assert grid[j][k] is STAR
            grid[j][k] = s + 1
    return grid


def scheme2_oracle(q, m, t):
    w1 = list(product(range(q), repeat=m))
    w2 = [(delta, b) for delta in colex_subsets(m, t) for b in product(range(q), repeat=t)]
    w3 = list(product(*([range(q)] * m + [range(q - 1)] * t)))
    grid = [[STAR] * len(w2) for _ in w1]
    for (j, A), (k, (delta, b)), (s, C) in product(enumerate(w1), enumerate(w2), enumerate(w3)):
        cond1 = all(A[i - 1] == C[i - 1] for i in range(1, m + 1) if i not in delta)
        cond2 = all(A[d - 1] == (C[d - 1] + C[m + idx] + 1) % q for idx, d in enumerate(delta))
        cond3 = all(b[idx] == C[d - 1] for idx, d in enumerate(delta))
        if cond1 and cond2 and cond3:
            assert grid[j][k] is STAR
            grid[j][k] = s + 1
    return grid


def brute_valid(rows):
    """C1-C3 straight from the definitions over all cell pairs."""
    f, k = len(rows), len(rows[0])
    stars = {sum(rows[j][c] is STAR for j in range(f)) for c in range(k)}
    if len(stars) != 1:
        return False
    cells = [(j, c) for j in range(f) for c in range(k)]
    for (j1, k1), (j2, k2) in combinations(cells, 2):
        x = rows[j1][k1]
        if x is STAR or x != rows[j2][k2]:
            continue
        if j1 == j2 or k1 == k2:
            return False
        if rows[j1][k2] is not STAR or rows[j2][k1] is not STAR:
            return False
    return True


SMALL_BASES = [
    p42(),
    Pda.from_rows([["*", 1], [1, "*"]]),
    scheme1(Scheme1Params(4, 1, 1)),
    scheme1(Scheme1Params(4, 2, 1)),
    scheme1(Scheme1Params(3, 1, 1)),
    scheme2(Scheme2Params(2, 2, 1)),
    scheme2(Scheme2Params(2, 1, 1)),
    Pda.from_rows([["*", "*"], ["*", "*"]]),
]


@st.composite
def valid_pdas(draw, max_k=4, max_f=8):
    """Valid PDAs built from small known ones by stacking, permuting and relabelling."""
    bases = [p for p in SMALL_BASES if p.k <= max_k and p.f <= max_f]
    base = draw(st.sampled_from(bases))
    partners = [p for p in bases if p.k == base.k and p.f + base.f <= max_f]
    if partners and draw(st.booleans()):
        base = concat_rows(base, draw(st.sampled_from(partners)))
    side = [p for p in bases if p.f == base.f and p.k + base.k <= max_k
            and p.column_stars()[0] == base.column_stars()[0]]
    if side and draw(st.booleans()):
        base = concat_columns(base, draw(st.sampled_from(side)))
    rows = draw(st.permutations(range(1, base.f + 1)))
    cols = draw(st.permutations(range(1, base.k + 1)))
    syms = draw(st.permutations(range(1, base.s + 1)))
    return relabel(permute(base, rows, cols), dict(zip(range(1, base.s + 1), syms)))


@st.composite
def grids(draw, max_side=5, max_symbols=4):
    f = draw(st.integers(1, max_side))
    k = draw(st.integers(1, max_side))
    cell = st.one_of(st.none(), st.integers(1, max_symbols))
    rows = draw(st.lists(st.lists(cell, min_size=k, max_size=k), min_size=f, max_size=f))
    return Pda.from_rows(rows, compact=True)
