import random
from fractions import Fraction

import pytest

from cdroots.errors import InvalidParameterError, ZeroPolynomialError
from cdroots.polynomials import ScalarPolynomial
from cdroots.realroots import (
    RootInterval,
    isolate_nonnegative_roots,
    refine_root,
    simplest_rational_between,
    square_free_part,
)


def expand_roots(roots):
    """Independent oracle: product of (N - r) by direct convolution."""
    cs = [Fraction(1)]
    for r in roots:
        new = [Fraction(0)] * (len(cs) + 1)
        for i, c in enumerate(cs):
            new[i + 1] += c
            new[i] -= Fraction(r) * c
        cs = new
    return ScalarPolynomial(cs)


def test_square_free_part_already_square_free():
    p = ScalarPolynomial([2, -3, 1])
    q, factors = square_free_part(p)
    assert q == ScalarPolynomial([2, -3, 1])
    assert [(f.degree, m) for f, m in factors] == [(2, 1)]


def test_square_free_part_double_root():
    p = ScalarPolynomial([1, 2, 1])  # (N + 1)**2
    q, factors = square_free_part(p)
    assert q == ScalarPolynomial([1, 1])
    assert [(list(f.coeffs), m) for f, m in factors] == [([1, 1], 2)]


def test_square_free_part_linear_and_errors():
    q, _ = square_free_part(ScalarPolynomial([0, 1]))
    assert q == ScalarPolynomial([0, 1])
    with pytest.raises(ZeroPolynomialError):
        square_free_part(ScalarPolynomial([]))


def test_isolate_worked_example():
    roots = isolate_nonnegative_roots(ScalarPolynomial([2, -3, 1]))
    assert [iv.exact_value for iv in roots] == [1, 2]
    assert all(iv.multiplicity == 1 for iv in roots)


def test_isolate_negative_root_excluded():
    assert isolate_nonnegative_roots(ScalarPolynomial([1, 2, 1])) == []


def test_isolate_irrational_root():
    roots = isolate_nonnegative_roots(ScalarPolynomial([-2, 0, 1]))
    assert len(roots) == 1
    iv = roots[0]
    assert iv.exact_value is None
    assert iv.lo < iv.hi
    assert iv.lo**2 < 2 < iv.hi**2


def test_isolate_zero_root():
    roots = isolate_nonnegative_roots(expand_roots([0, 2]))
    assert [iv.exact_value for iv in roots] == [0, 2]


def test_isolate_constant_polynomials():
    assert isolate_nonnegative_roots(ScalarPolynomial([5])) == []
    with pytest.raises(ZeroPolynomialError):
        isolate_nonnegative_roots(ScalarPolynomial([]))


def test_isolate_dyadic_and_fractional_roots():
    roots = isolate_nonnegative_roots(expand_roots([Fraction(1, 2), Fraction(3, 4), 5]))
    assert [iv.exact_value for iv in roots] == [Fraction(1, 2), Fraction(3, 4), 5]


def test_multiplicity_reporting():
    p = expand_roots([1, 1, 2])  # (N-1)**2 (N-2)
    roots = isolate_nonnegative_roots(p)
    assert [(iv.exact_value, iv.multiplicity) for iv in roots] == [(1, 2), (2, 1)]


def test_mixed_exact_and_irrational():
    # (N - 1)(N**2 - 2): rational 1 sits right next to sqrt(2)
    p = ScalarPolynomial([2, -2, -1, 1])
    roots = isolate_nonnegative_roots(p)
    assert len(roots) == 2
    assert roots[0].exact_value == 1
    assert roots[1].exact_value is None
    assert roots[0].hi < roots[1].lo


def test_intervals_show_sign_change():
    p = expand_roots([Fraction(1, 3), 2, -1])
    for iv in isolate_nonnegative_roots(p):
        if iv.exact_value is None:
            assert p(iv.lo) * p(iv.hi) < 0
        else:
            assert p(iv.exact_value) == 0


def test_refine_sqrt_two():
    iv = isolate_nonnegative_roots(ScalarPolynomial([-2, 0, 1]))[0]
    target = Fraction(1, 2**40)
    refined = refine_root(iv, target)
    assert refined.hi - refined.lo <= target
    assert refined.lo**2 < 2 < refined.hi**2
    mid = (refined.lo + refined.hi) / 2
    assert abs(mid * mid - 2) < Fraction(1, 2**37)


def test_refine_exact_and_degenerate_unchanged():
    iv = RootInterval(Fraction(2), Fraction(2), 1, Fraction(2))
    assert refine_root(iv, Fraction(1, 1024)) is iv
    with pytest.raises(InvalidParameterError):
        refine_root(iv, 0)


def test_determinism():
    p = expand_roots([Fraction(1, 3), Fraction(7, 2), -4, 0])
    first = isolate_nonnegative_roots(p)
    second = isolate_nonnegative_roots(p)
    assert [(iv.lo, iv.hi, iv.multiplicity, iv.exact_value) for iv in first] == [
        (iv.lo, iv.hi, iv.multiplicity, iv.exact_value) for iv in second
    ]


def test_agreement_with_random_constructions():
    rng = random.Random(61)
    for _ in range(40):
        count = rng.randint(1, 6)
        roots = set()
        while len(roots) < count:
            roots.add(Fraction(rng.randint(-20, 20), rng.randint(1, 8)))
        p = expand_roots(sorted(roots))
        expected = sorted(r for r in roots if r >= 0)
        got = isolate_nonnegative_roots(p)
        assert [iv.exact_value for iv in got] == expected


def test_float_coefficients_are_rationalized():
    p = ScalarPolynomial([-2.0, 0.0, 1.0])
    iv = isolate_nonnegative_roots(p)[0]
    assert iv.exact_value is None
    assert iv.lo**2 < 2 < iv.hi**2


def test_simplest_rational_between():
    assert simplest_rational_between(Fraction(3, 10), Fraction(2, 5)) == Fraction(1, 3)
    assert simplest_rational_between(Fraction(-1, 2), Fraction(1, 3)) == 0
    assert simplest_rational_between(Fraction(5, 4), Fraction(7, 2)) == 2
    assert simplest_rational_between(Fraction(2), Fraction(2)) == 2
    assert simplest_rational_between(Fraction(-7, 3), Fraction(-9, 4)) == Fraction(-7, 3)
    with pytest.raises(InvalidParameterError):
        simplest_rational_between(Fraction(1), Fraction(0))


def test_large_denominator_rational_root():
    # rational root with a big denominator still comes out exact
    r = Fraction(355, 113)
    p = expand_roots([r, Fraction(-1, 7)])
    got = isolate_nonnegative_roots(p)
    assert [iv.exact_value for iv in got] == [r]
