# file: tests/test_poly.py

import pytest

from app.algebra.poly import (
    Poly,
    poly_divides,
    poly_divrem,
    poly_gcd,
    poly_lcm,
    poly_lcm_many,
    poly_mul,
    poly_powmod,
)
from app.core.errors import DivisionByZeroPoly, MixedBase, NotPrime


def test_canonical_form_drops_trailing_zeros():
    p = Poly(2, (1, 1, 0, 0))
    assert p.coeffs == (1, 1)
    assert p.degree == 1
    assert Poly(3, (0, 0)).is_zero
    assert Poly(3, (4, 5)).coeffs == (1, 2)


def test_from_exponents_and_str():
    p = Poly.from_exponents(2, [3, 1, 0])
    assert p.coeffs == (1, 1, 0, 1)
    assert str(p) == "x^3+x+1"
    assert str(Poly(3, (2, 1))) == "x+2"
    assert str(Poly(2, ())) == "0"


def test_divrem_reconstructs_dividend():
    a = Poly(3, (1, 2, 0, 1, 2, 1))
    b = Poly(3, (2, 0, 1))
    q, r = poly_divrem(a, b)
    assert r.degree < b.degree
    assert poly_mul(q, b) + r == a


def test_x7_minus_1_factors_over_gf2():
    f1 = Poly.from_exponents(2, [1, 0])
    f3 = Poly.from_exponents(2, [3, 1, 0])
    f3b = Poly.from_exponents(2, [3, 2, 0])
    x7 = Poly.x_n_minus_1(2, 7)
    assert poly_mul(poly_mul(f1, f3), f3b) == x7
    for f in (f1, f3, f3b):
        assert poly_divides(f, x7)


def test_gcd_and_lcm():
    a = Poly.from_exponents(2, [3, 1, 0])
    b = Poly.from_exponents(2, [1, 0])
    assert poly_gcd(poly_mul(a, b), a) == a
    assert poly_lcm(a, a) == a
    assert poly_lcm_many([a, b, a]) == poly_mul(a, b)


def test_powmod_matches_repeated_multiplication():
    mod = Poly.from_exponents(2, [4, 1, 0])
    x = Poly(2, (0, 1))
    # x ha ordine 15 modulo x^4+x+1
    assert poly_powmod(x, 15, mod) == Poly.one(2)
    assert poly_powmod(x, 5, mod) != Poly.one(2)


def test_errors():
    with pytest.raises(NotPrime):
        Poly(4, (1,))
    with pytest.raises(MixedBase):
        Poly(2, (1,)) + Poly(3, (1,))
    with pytest.raises(DivisionByZeroPoly):
        poly_divrem(Poly(2, (1, 1)), Poly(2, ()))
