import random
from fractions import Fraction

import pytest

from cdroots.algebra import EXACT, FLOAT, Algebra


@pytest.fixture
def quaternions():
    return Algebra([-1, -1])


@pytest.fixture
def octonions():
    return Algebra([-1, -1, -1])


@pytest.fixture
def sedenions():
    return Algebra([-1, -1, -1, -1])


def random_element(rng: random.Random, algebra: Algebra, span: int = 9, fractions: bool = False):
    """Seeded random element; small ints, optionally sprinkled with fractions."""
    coeffs = []
    for _ in range(algebra.dim):
        if algebra.mode == FLOAT:
            coeffs.append(rng.uniform(-1.0, 1.0))
        elif fractions and rng.random() < 0.125:
            coeffs.append(Fraction(rng.randint(-span, span), rng.randint(1, 4)))
        else:
            coeffs.append(rng.randint(-span, span))
    return algebra.element(coeffs)


def random_nonzero_element(rng: random.Random, algebra: Algebra, span: int = 9):
    while True:
        el = random_element(rng, algebra, span)
        if not el.is_zero():
            return el


def mixed_sign_gammas(n: int):
    return tuple(-1 if k % 2 == 0 else 1 for k in range(n))


def norm_diagonal_oracle(el):
    """Independent norm: sum of c_i**2 times the product of -gamma over set bits."""
    total = 0 if el.algebra.mode == EXACT else 0.0
    for i, c in enumerate(el.coeffs):
        weight = 1 if el.algebra.mode == EXACT else 1.0
        for k, g in enumerate(el.algebra.gammas):
            if i >> k & 1:
                weight = weight * -g
        total = total + c * c * weight
    return total
