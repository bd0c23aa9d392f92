"""Shared fixtures: reference data for Sigma(3,16,113) and small helpers.

Reference node order for Sigma(3,16,113): center, the [-3] branch, the
[-3,-6,-4,-2] branch, then the [-4,-2,-2,-2,-2] branch (0-based ids).
The two matrices are cross-validated against each other in the tests via
the exact identity Q = -(C_inv)^t C_inv, so a transcription error in
either would be caught.
"""

import math
import random

import pytest

from brieskorn.matrices import freeze

REFERENCE_QX = freeze([
    [-1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0],
    [1, -3, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, -3, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, -6, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, -4, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, -2, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, -4, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2],
])

REFERENCE_CINV = freeze([
    [1, -1, -1, 0, 0, 0, -1, 0, 0, 0, 0],
    [0, -1, 1, 0, -1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, -1, 0, -1, 0, 0, 0, 0],
    [0, 0, 1, -1, 1, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 1, -1, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 1, -1, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 1, -1, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 0, 1, -1],
])

# canonical_resolution orders the branches by ascending a_i (so the
# [-4,-2,-2,-2,-2] branch of a_2 = 16 before the [-3,-6,-4,-2] branch of
# a_3 = 113); PERM_3_16_113[our_index] = reference index.
PERM_3_16_113 = (0, 1, 6, 7, 8, 9, 10, 2, 3, 4, 5)


def permute_symmetric(matrix, perm):
    """P^t M P with perm[i] = new index of old row/column i."""
    n = len(matrix)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = matrix[i][j]
    return freeze(out)


def permute_columns(matrix, perm):
    """Column i of the result is column j of the input where perm[j] = i."""
    n = len(matrix[0])
    inverse = [0] * n
    for j, target in enumerate(perm):
        inverse[target] = j
    return freeze([[row[inverse[k]] for k in range(n)] for row in matrix])


def rho_float_oracle(p, r, s, ell):
    """Floating-point cotangent sum for the lens-space rho invariant."""
    return (2.0 / p) * sum(
        (math.cos(math.pi * k * r / p) / math.sin(math.pi * k * r / p))
        * (math.cos(math.pi * k * s / p) / math.sin(math.pi * k * s / p))
        * math.sin(math.pi * k * ell / p) ** 2
        for k in range(1, p))


def random_triples(count, seed=20240817, max_entry=45):
    """Deterministic sample of valid pairwise-coprime triples."""
    rng = random.Random(seed)
    triples = []
    while len(triples) < count:
        a = rng.randint(2, 7)
        b = rng.randint(a + 1, 25)
        c = rng.randint(b + 1, max_entry)
        if math.gcd(a, b) == 1 and math.gcd(a, c) == 1 and math.gcd(b, c) == 1:
            triples.append((a, b, c))
    return triples


@pytest.fixture
def tmp_cache(monkeypatch, tmp_path):
    cache = tmp_path / "cache"
    monkeypatch.setenv("BRIESKORN_CACHE_DIR", str(cache))
    return cache
