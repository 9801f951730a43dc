# file: app/constructions/cyclic_families.py

from __future__ import annotations

import logging

from app.algebra.field import FieldSpec, cyclotomic_coset, make_field, minimal_polynomial_of_power
from app.algebra.poly import Poly, poly_divrem, poly_lcm_many, poly_mul
from app.codes.families import cyclic_code
from app.codes.linear import LinearCode
from app.core.errors import DegenerateExponent, InconsistencyError, OutOfDomain

log = logging.getLogger(__name__)


def _require_odd_m(m: int, low: int = 3) -> None:
    if m < low or m % 2 == 0:
        raise OutOfDomain(f"Serve m dispari >= {low}, m={m}")


# ----------------------------------------------------------------------
#  Binari: g_s = M_1 M_s, lunghezza 2^m - 1
# ----------------------------------------------------------------------


def binary_two_zero_code(m: int, s: int) -> LinearCode:
    """Codice ciclico con zeri alfa e alfa^s. Per le famiglie APN il duale ha lo spettro a tre pesi."""
    field = make_field(2, m)
    n = field.n
    if s % n in cyclotomic_coset(1, 2, n):
        raise DegenerateExponent(f"s={s} sta nella classe ciclotomica di 1 modulo {n}")
    g = poly_mul(minimal_polynomial_of_power(field, 1), minimal_polynomial_of_power(field, s))
    return cyclic_code(2, n, g, name=f"C2(m={m},s={s})")


# ----------------------------------------------------------------------
#  Ternari: g_s = M_{n-1} M_{n-s}, n = 3^m - 1
# ----------------------------------------------------------------------


def ternary_negacyclic_style_code(m: int, s: int) -> LinearCode:
    field = make_field(3, m)
    n = field.n
    i, j = (n - 1) % n, (n - s) % n
    if j in cyclotomic_coset(i, 3, n):
        raise DegenerateExponent(f"n-s={j} sta nella classe ciclotomica di n-1={i} modulo {n}")
    g = poly_mul(minimal_polynomial_of_power(field, i), minimal_polynomial_of_power(field, j))
    return cyclic_code(3, n, g, name=f"C3(m={m},s={s})")


# ----------------------------------------------------------------------
#  Proiettivi ternari: lunghezza v = (3^m - 1)/2, beta = alfa^2
# ----------------------------------------------------------------------


def projective_designed_distance(m: int) -> int:
    """delta = 3^(m-1) - 1 - (3^((m+1)/2) - 1)/2."""
    _require_odd_m(m)
    return 3 ** (m - 1) - 1 - (3 ** ((m + 1) // 2) - 1) // 2


def _beta_min_poly(field: FieldSpec, i: int) -> Poly:
    # polinomio minimo di beta^i = alfa^(2i)
    return minimal_polynomial_of_power(field, 2 * i)


def _check_projective_dimension(code: LinearCode, m: int) -> LinearCode:
    expected = code.v - 2 * m
    if code.k_dim != expected:
        raise InconsistencyError(
            f"{code.name}: dimensione {code.k_dim}, attesa (3^m-1)/2 - 2m = {expected}"
        )
    return code


def projective_ternary_bch(m: int) -> LinearCode:
    """g = (x^v - 1)/h con h = (x - 1) lcm(M_1, ..., M_{delta-1}) su beta."""
    delta = projective_designed_distance(m)
    field = make_field(3, m)
    v = field.n // 2
    lcm = poly_lcm_many([_beta_min_poly(field, i) for i in range(1, delta)])
    h = poly_mul(Poly(3, (2, 1)), lcm)  # x - 1 = x + 2
    g, rem = poly_divrem(Poly.x_n_minus_1(3, v), h)
    if not rem.is_zero:
        raise InconsistencyError(f"h non divide x^{v} - 1")
    log.debug("BCH proiettivo m=%d: delta=%d, deg h=%d", m, delta, h.degree)
    code = cyclic_code(3, v, g, name=f"BCH3(m={m})")
    return _check_projective_dimension(code, m)


def projective_ternary_two_zero(m: int) -> LinearCode:
    """g = M_{n-1} M_{n-2} su beta, con n = v (vedi header del report)."""
    _require_odd_m(m)
    field = make_field(3, m)
    v = field.n // 2
    i, j = v - 1, v - 2
    if j in cyclotomic_coset(i, 3, v):
        raise DegenerateExponent(f"{j} e {i} nella stessa classe ciclotomica modulo {v}")
    g = poly_mul(_beta_min_poly(field, i), _beta_min_poly(field, j))
    code = cyclic_code(3, v, g, name=f"TZ3(m={m})")
    return _check_projective_dimension(code, m)
