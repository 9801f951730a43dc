# file: app/codes/families.py

from __future__ import annotations

import itertools
import logging
import math

import numpy as np
from sympy import isprime

from app.algebra.field import make_field, minimal_polynomial, trace_table
from app.algebra.poly import Poly, poly_divrem
from app.core.errors import (
    BadOrder,
    GeneratorDoesNotDivide,
    MixedBase,
    NonCoprimeLength,
    OutOfDomain,
    UnsupportedField,
)

from .linear import CyclicMeta, LinearCode

log = logging.getLogger(__name__)


def cyclic_code(q: int, v: int, g: Poly, name: str = "") -> LinearCode:
    """
    Codice ciclico di lunghezza v con polinomio generatore g: righe x^i g(x),
    coordinata i = coefficiente di x^i.
    """
    if not isprime(q):
        raise UnsupportedField(f"Codici ciclici solo su campi primi, q={q}")
    if g.base != q:
        raise MixedBase(f"Generatore su GF({g.base}) per un codice su GF({q})")
    if math.gcd(v, q) != 1:
        raise NonCoprimeLength(f"gcd(v={v}, q={q}) != 1")
    if g.is_zero:
        raise GeneratorDoesNotDivide("Il generatore nullo non divide x^v - 1")
    _, rem = poly_divrem(Poly.x_n_minus_1(q, v), g)
    if not rem.is_zero:
        raise GeneratorDoesNotDivide(f"{g} non divide x^{v} - 1 su GF({q})")

    g = g.monic()
    k = v - g.degree
    rows = np.zeros((k, v), dtype=np.int64)
    for i in range(k):
        rows[i, i: i + g.degree + 1] = g.coeffs
    log.debug("Codice ciclico [%d, %d] su GF(%d), g=%s", v, k, q, g)
    return LinearCode.from_generator(q, rows, v=v, cyclic_meta=CyclicMeta(g), name=name)


def reed_muller(r: int, m: int) -> LinearCode:
    """
    RM(r, m) binario. Punti di GF(2)^m = interi 0..2^m-1, il bit j del
    punto è il valore di x_j; righe = monomi di grado <= r.
    """
    if m < 1 or not 0 <= r <= m:
        raise BadOrder(f"Ordine non valido: RM({r}, {m})")
    points = np.arange(2 ** m)
    bits = (points[:, None] >> np.arange(m)) & 1
    rows = []
    for deg in range(r + 1):
        for mono in itertools.combinations(range(m), deg):
            rows.append(np.prod(bits[:, list(mono)], axis=1) if mono else np.ones(2 ** m, dtype=np.int64))
    return LinearCode.from_generator(2, np.array(rows), v=2 ** m, name=f"RM({r},{m})")


def hamming_like_code(q: int, m: int) -> LinearCode:
    """
    C_(q,m): ciclico di lunghezza (q^m-1)/(q-1) generato dal polinomio
    minimo di beta = alfa^(q-1).
    """
    if not isprime(q):
        raise UnsupportedField(f"Solo q primo è supportato, q={q}")
    if m < 2:
        raise OutOfDomain(f"Serve m >= 2, m={m}")
    field = make_field(q, m)
    beta = field.elem(field.alpha_pow(q - 1))
    g = minimal_polynomial(beta, q)
    v = (q ** m - 1) // (q - 1)
    return cyclic_code(q, v, g, name=f"Hamming({q},{m})")


def trace_code(q: int, m: int, exponent: int, v: int, name: str = "") -> LinearCode:
    """
    {(Tr(u), Tr(u b), ..., Tr(u b^(v-1))) : u in GF(q^m)} con b = alfa^exponent.
    Per la base polinomiale basta u = alfa^0..alfa^(m-1).
    """
    field = make_field(q, m)
    tr = trace_table(field, q)
    rows = np.zeros((m, v), dtype=np.int64)
    for j in range(m):
        for i in range(v):
            rows[j, i] = tr[field.alpha_pow(j + exponent * i)]
    return LinearCode.from_generator(q, rows, v=v, name=name or f"trace({q},{m},{exponent})")
