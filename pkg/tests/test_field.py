"""Kernel tests: minimal polynomials, field arithmetic, certified signs."""

import random
from fractions import Fraction
from math import cos, gcd, pi

import mpmath
import pytest

from coxgates.field import RealCyclotomicField, chebyshev_c, minimal_polynomial


def conjugate_product_oracle(n):
    """Independent numeric construction of the minimal polynomial of 2cos(pi/N)."""
    ks = [k for k in range(1, n + 1) if gcd(k, 2 * n) == 1]
    with mpmath.workdps(60 + 15 * len(ks)):
        poly = [mpmath.mpf(1)]
        for k in ks:
            c = 2 * mpmath.cos(mpmath.pi * k / n)
            poly = [mpmath.mpf(0)] + poly
            for i in range(len(poly) - 1):
                poly[i] -= c * poly[i + 1]
        out = []
        for c in poly:
            r = int(mpmath.nint(c))
            assert abs(c - r) < mpmath.mpf("1e-20")
            out.append(r)
    return out


@pytest.mark.parametrize(
    "n,expected",
    [
        (2, [0, 1]),        # 2cos(pi/2) = 0
        (3, [-1, 1]),       # 2cos(pi/3) = 1
        (5, [-1, -1, 1]),   # x^2 - x - 1, frozen from the conjugate-product oracle
        (4, [-2, 0, 1]),    # x^2 - 2
    ],
)
def test_minimal_polynomial_examples(n, expected):
    assert minimal_polynomial(n) == expected


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 10, 12, 20, 21, 42])
def test_minimal_polynomial_matches_oracle(n):
    got = minimal_polynomial(n)
    assert got == conjugate_product_oracle(n)
    assert got[-1] == 1
    # every coprime conjugate is a numeric root
    with mpmath.workdps(50):
        for k in range(1, 2 * n):
            if gcd(k, 2 * n) == 1:
                v = mpmath.polyval(list(reversed(got)), 2 * mpmath.cos(mpmath.pi * k / n))
                assert abs(v) < mpmath.mpf("1e-30")


def test_chebyshev_identity():
    # C_k(2cos t) = 2cos(kt) numerically for a spread of arguments
    for k in range(8):
        coeffs = chebyshev_c(k)
        for t in (0.3, 1.0, 2.2):
            val = sum(c * (2 * cos(t)) ** i for i, c in enumerate(coeffs))
            assert abs(val - 2 * cos(k * t)) < 1e-9


def test_embed_cos_trivial_values():
    f = RealCyclotomicField(12)
    assert f.embed_cos(2).is_zero()
    assert f.embed_cos(3) == Fraction(-1, 2)
    assert f.embed_cos(float("inf")) == -1


def test_embed_cos_double_angle():
    # (2cos(pi/m))^2 = 2cos(2pi/m) + 2 for every finite label dividing N
    for n, labels in [(12, [2, 3, 4, 6, 12]), (10, [2, 5, 10]), (42, [2, 3, 6, 7, 14, 21])]:
        f = RealCyclotomicField(n)
        for m in labels:
            k = n // m
            assert f.two_cos(m) * f.two_cos(m) == f.two_cos_k(2 * k) + f.from_rational(2)


def test_arithmetic_examples():
    f5 = RealCyclotomicField(5)
    theta = f5.theta
    assert theta * theta == theta + f5.one  # x^2 = x + 1 mod x^2-x-1
    x = f5.element([Fraction(3, 7), Fraction(-2, 5)])
    assert (x + (-x)).is_zero()
    assert f5.one / f5.one == f5.one


def test_inverse_random():
    rng = random.Random(7)
    for n in (5, 7, 12):
        f = RealCyclotomicField(n)
        for _ in range(25):
            x = f.element([Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(f.degree)])
            if x.is_zero():
                continue
            assert x * f.inv(x) == f.one
    with pytest.raises(ZeroDivisionError):
        RealCyclotomicField(5).inv(RealCyclotomicField(5).zero)


def test_sign_examples():
    f5 = RealCyclotomicField(5)
    assert f5.zero.sign() == 0
    assert (f5.theta - f5.one).sign() == 1       # 2cos(pi/5) = 1.618...
    assert f5.from_rational(Fraction(-1, 2)).sign() == -1


def test_sign_properties_random():
    rng = random.Random(13)
    for n in (4, 5, 12, 21):
        f = RealCyclotomicField(n)
        for _ in range(40):
            x = f.element([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(f.degree)])
            assert x.sign() + (-x).sign() == 0
            assert (x * x).sign() in (0, 1)
            # agreement with a float evaluation well away from zero
            fx = float(x)
            if abs(fx) > 1e-6:
                assert x.sign() == (1 if fx > 0 else -1)


def test_sign_needs_refinement():
    # theta minus a 100-bit rational truncation of theta: tiny but nonzero
    f = RealCyclotomicField(7)
    lo, hi = f.theta_enclosure(128)
    approx = Fraction((lo.numerator * 2**100) // lo.denominator, 2**100)
    x = f.theta - f.from_rational(approx)
    assert x.sign() == 1
    assert (-x).sign() == -1


def test_structural_equality():
    f = RealCyclotomicField(5)
    a = f.element([1, 2])
    b = f.element([1, 2])
    assert a == b and hash(a) == hash(b)
    assert a != f.element([1, 1])
    # equality iff difference has all-zero coefficients
    assert (a - b).is_zero()


def test_field_mixing_rejected():
    f5, f7 = RealCyclotomicField(5), RealCyclotomicField(7)
    with pytest.raises(ValueError):
        f5.one + f7.one
