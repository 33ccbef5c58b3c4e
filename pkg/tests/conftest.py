import random
from fractions import Fraction

import pytest

from bruhatkit.colmat import ColMatrix, is_invertible
from bruhatkit.scalar import PrimeField


def random_scalar(rng, ring, nonzero=False):
    while True:
        if isinstance(ring, PrimeField):
            x = rng.randrange(ring.p)
        else:
            x = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        if x or not nonzero:
            return ring.coerce(x)


def random_triangular(rng, n, ring):
    block = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        block[i][i] = random_scalar(rng, ring, nonzero=True)
        for j in range(i + 1, n):
            block[i][j] = random_scalar(rng, ring)
    return ColMatrix(block, ring)


def random_invertible(rng, n, ring):
    while True:
        g = ColMatrix([[random_scalar(rng, ring) for _ in range(n)] for _ in range(n)], ring)
        if is_invertible(g):
            return g


def random_perm_values(rng, n):
    vals = list(range(1, n + 1))
    rng.shuffle(vals)
    return vals


@pytest.fixture
def rng():
    return random.Random(20240611)
