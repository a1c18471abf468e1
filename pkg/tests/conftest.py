import pathlib
import random

import pytest

from base import reticle

CATALEG = pathlib.Path(__file__).resolve().parent.parent / "cataleg"


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def cataleg():
    return CATALEG


@pytest.fixture
def unimodular(rng):
    """Genera matrius de GL(n, Z) com a producte d'operacions elementals de files."""

    def genera(n: int, passos: int = 12):
        m = [[int(i == j) for j in range(n)] for i in range(n)]
        for _ in range(passos):
            i, j = rng.sample(range(n), 2)
            if rng.random() < 0.2:
                m[i], m[j] = m[j], m[i]
            else:
                k = rng.randint(-3, 3)
                m[i] = [x + k * y for x, y in zip(m[i], m[j])]
        return reticle.matriu(m)

    return genera
