import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_matrix(rng, rows, cols, lo=-9, hi=9):
    from flagloop.exactmat import IntMatrix
    return IntMatrix.from_rows([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)],
                               cols=cols)


def random_unimodular(rng, n, steps=12):
    """Product of elementary integer row operations."""
    from flagloop.exactmat import IntMatrix
    a = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if kind == 0 and n > 1:
            k = rng.randint(-3, 3)
            a[i] = [x + k * y for x, y in zip(a[i], a[j])]
        elif kind == 1 and n > 1:
            a[i], a[j] = a[j], a[i]
        else:
            a[i] = [-x for x in a[i]]
    return IntMatrix.from_rows(a, cols=n)
