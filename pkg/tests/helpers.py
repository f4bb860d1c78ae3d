"""Shared fixtures, strategies and independent oracles for the test suite."""

import json
import random
from importlib import resources
from itertools import product

from hypothesis import strategies as st

from markovcoe.cylfn import CylFn
from markovcoe.io import load_spec
from markovcoe.shift import (
    FULL_2SHIFT,
    GOLDEN_MEAN,
    admissible_words,
    evps_up_to,
    least_rotation,
    normalize_evp,
    primitive_root,
    validate_matrix,
)

FULL2 = validate_matrix(FULL_2SHIFT)
GOLDEN = validate_matrix(GOLDEN_MEAN)


def fixture_data(name):
    return json.loads(resources.files("markovcoe").joinpath("fixtures", name).read_text())


def fixture_path(name):
    return str(resources.files("markovcoe").joinpath("fixtures", name))


FIXTURE = load_spec(fixture_data("fixture_coe.json"))
IDENTITY = load_spec(fixture_data("identity_golden.json"))


def pt(S, u, v):
    """Point from digit strings, e.g. ``pt(A, "2", "1")`` is ``2 1^inf``."""
    return normalize_evp(S, [int(c) for c in u], [int(c) for c in v])


def irreducible_rows(n, extra, cycle):
    """A strongly connected, non-permutation 0-1 matrix: a Hamiltonian cycle plus extra edges."""
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[cycle[i]][cycle[(i + 1) % n]] = 1
    for (i, j), on in zip(product(range(n), repeat=2), extra):
        if on:
            rows[i][j] = 1
    if all(sum(r) == 1 for r in rows):
        rows[cycle[0]][cycle[0]] = 1
    return rows


@st.composite
def shift_spaces(draw, max_n=4):
    n = draw(st.integers(2, max_n))
    cycle = draw(st.permutations(range(n)))
    extra = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    return validate_matrix(irreducible_rows(n, extra, cycle))


def random_space(rng: random.Random, max_n=5):
    n = rng.randint(2, max_n)
    cycle = list(range(n))
    rng.shuffle(cycle)
    extra = [rng.random() < 0.35 for _ in range(n * n)]
    return validate_matrix(irreducible_rows(n, extra, cycle))


@st.composite
def cylfns(draw, space, max_depth=3, lo=-3, hi=3):
    d = draw(st.integers(0, max_depth))
    words = admissible_words(space, d)
    vals = draw(st.lists(st.integers(lo, hi), min_size=len(words), max_size=len(words)))
    return CylFn(space, d, dict(zip(words, vals)))


def random_cylfn(rng, space, max_depth=3, lo=-2, hi=4):
    d = rng.randint(1, max_depth)
    return CylFn(space, d, {w: rng.randint(lo, hi) for w in admissible_words(space, d)})


@st.composite
def points(draw, space, bound=7):
    pts = evps_up_to(space, bound)
    return pts[draw(st.integers(0, len(pts) - 1))]


# independent oracles -------------------------------------------------------


def brute_orbits(S, P):
    """Canonical primitive necklaces by exhaustive word generation."""
    found = set()
    for p in range(1, P + 1):
        for w in product(S.symbols, repeat=p):
            closed = all(S.allowed(a, b) for a, b in zip(w, w[1:] + w[:1]))
            if closed and primitive_root(w) == w:
                found.add(least_rotation(w))
    return sorted(found, key=lambda w: (len(w), w))


def brute_per(S, p):
    """|Per_p| by counting closed words of length p."""
    return sum(1 for w in product(S.symbols, repeat=p) if all(S.allowed(a, b) for a, b in zip(w, w[1:] + w[:1])))


def brute_weighted_zeta(S, weight_of_word, L, P):
    """Coefficients of prod (1 - t^beta)^(-1) over brute-force orbits, via plain polynomial products."""
    coeffs = [1] + [0] * L
    for w in brute_orbits(S, P):
        beta = weight_of_word(w)
        if beta > L:
            continue
        geo = [1 if (n % beta == 0) else 0 for n in range(L + 1)]
        coeffs = [sum(coeffs[i] * geo[n - i] for i in range(n + 1)) for n in range(L + 1)]
    return coeffs


def cyclic_sum(f, w):
    """Orbit sum of ``f`` over the closed word ``w`` read cyclically."""
    k = f.depth
    ww = w * (k // len(w) + 2)
    return sum(f.table[tuple(ww[i : i + k])] for i in range(len(w)))
