# file: tests/test_field.py

import numpy as np
import pytest

from app.algebra.field import (
    cyclotomic_coset,
    cyclotomic_cosets,
    default_modulus,
    field_inv,
    is_primitive_polynomial,
    make_field,
    minimal_polynomial,
    minimal_polynomial_of_power,
    trace,
    trace_table,
)
from app.algebra.poly import Poly
from app.core.errors import (
    DivisionByZero,
    MixedFields,
    NotASubfield,
    NotPrime,
    NotPrimitivePolynomial,
    UnsupportedSize,
)


@pytest.mark.parametrize("p,e", [(2, 1), (2, 4), (2, 8), (3, 1), (3, 3), (5, 2), (7, 2)])
def test_multiplicative_group_is_cyclic(p, e):
    f = make_field(p, e)
    assert f.order == p ** e
    # alfa genera tutti gli elementi non nulli
    assert sorted(f.alpha_pow(i) for i in range(f.n)) == list(range(1, f.order))
    for a in range(1, f.order):
        assert f.mul(a, f.inv(a)) == 1


def test_addition_is_a_group():
    f = make_field(3, 2)
    for a in range(f.order):
        assert f.add(a, f.neg(a)) == 0
        assert f.sub(a, a) == 0
    xs = f.elements()
    assert np.array_equal(f.add_array(xs, xs), np.array([f.add(int(a), int(a)) for a in xs]))


def test_element_operators():
    f = make_field(2, 4)
    a, b = f.elem(6), f.elem(11)
    assert (a * b) * field_inv(b) == a
    assert a + a == f.zero
    assert a ** 15 == f.one
    with pytest.raises(MixedFields):
        a + make_field(2, 3).elem(1)


def test_field_errors():
    with pytest.raises(NotPrime):
        make_field(4, 1)
    with pytest.raises(UnsupportedSize):
        make_field(2, 21)
    with pytest.raises(NotPrimitivePolynomial):
        # irriducibile ma x ha ordine 5
        make_field(2, 4, Poly.from_exponents(2, [4, 3, 2, 1, 0]))
    f = make_field(2, 3)
    with pytest.raises(DivisionByZero):
        f.inv(0)


def test_primitivity():
    assert is_primitive_polynomial(Poly.from_exponents(2, [4, 1, 0]))
    assert not is_primitive_polynomial(Poly.from_exponents(2, [4, 3, 2, 1, 0]))
    # x^2+1 = (x+1)^2 su GF(2)
    assert not is_primitive_polynomial(Poly.from_exponents(2, [2, 0]))
    # fuori tabella: ricerca deterministica
    m = default_modulus(5, 3)
    assert m.degree == 3 and is_primitive_polynomial(m)
    assert default_modulus(5, 3) == m


def test_cyclotomic_cosets():
    assert cyclotomic_coset(1, 2, 15) == [1, 2, 4, 8]
    assert cyclotomic_coset(5, 2, 15) == [5, 10]
    cosets = cyclotomic_cosets(2, 15)
    assert len(cosets) == 5
    assert sorted(x for c in cosets for x in c) == list(range(15))
    assert cyclotomic_coset(25, 3, 26) == [25, 23, 17]


def test_trace_is_balanced():
    f = make_field(2, 3)
    tr = trace_table(f, 2)
    assert set(tr.tolist()) == {0, 1}
    assert int(tr.sum()) == 4
    assert trace(f.elem(5), 2).rep == int(tr[5])
    f9 = make_field(3, 2)
    counts = np.bincount(trace_table(f9, 3), minlength=3)
    assert counts.tolist() == [3, 3, 3]
    with pytest.raises(NotASubfield):
        trace(f.elem(1), 4)


def test_minimal_polynomials_gf16():
    f = make_field(2, 4)
    assert minimal_polynomial_of_power(f, 1) == f.modulus
    assert minimal_polynomial_of_power(f, 3) == Poly.from_exponents(2, [4, 3, 2, 1, 0])
    assert minimal_polynomial_of_power(f, 5) == Poly.from_exponents(2, [2, 1, 0])
    assert minimal_polynomial(f.zero, 2) == Poly(2, (0, 1))


# ----------------------------------------------------------------------
#  Oracolo indipendente: galois
# ----------------------------------------------------------------------


@pytest.mark.parametrize("p,e,modulus", [(2, 4, "x^4 + x + 1"), (2, 5, "x^5 + x^2 + 1"),
                                         (3, 3, "x^3 + 2x + 1")])
def test_against_galois(p, e, modulus):
    galois = pytest.importorskip("galois")
    gf = galois.GF(p ** e, irreducible_poly=modulus)
    f = make_field(p, e)
    rng = np.random.default_rng(7)
    pairs = rng.integers(0, f.order, size=(200, 2))
    for a, b in pairs:
        a, b = int(a), int(b)
        assert f.mul(a, b) == int(gf(a) * gf(b))
        assert f.add(a, b) == int(gf(a) + gf(b))
    for i in (1, 2, 3, 5):
        x = f.alpha_pow(i)
        expected = [int(c) for c in gf(x).minimal_poly().coeffs[::-1]]
        assert list(minimal_polynomial_of_power(f, i).coeffs) == expected
