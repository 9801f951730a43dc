# file: app/algebra/field.py

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np
from sympy import factorint, isprime

from app.core.errors import (
    DivisionByZero,
    MixedFields,
    NotASubfield,
    NotPrime,
    NotPrimitivePolynomial,
    UnsupportedField,
    UnsupportedSize,
)

from .poly import Poly, poly_powmod

log = logging.getLogger(__name__)

MAX_FIELD_ORDER = 2 ** 20

# Polinomi primitivi fissi: l'elemento alfa (radice del modulo) e quindi
# l'ordinamento delle coordinate dei codici ciclici sono riproducibili.
# Formato: esponenti dei monomi presenti.
PRIMITIVE_TABLE: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (2, 1): (1, 0),
    (2, 2): (2, 1, 0),
    (2, 3): (3, 1, 0),
    (2, 4): (4, 1, 0),
    (2, 5): (5, 2, 0),
    (2, 6): (6, 1, 0),
    (2, 7): (7, 1, 0),
    (2, 8): (8, 4, 3, 2, 0),
    (2, 9): (9, 4, 0),
    (2, 10): (10, 3, 0),
    (2, 11): (11, 2, 0),
    (2, 12): (12, 6, 4, 1, 0),
    (2, 13): (13, 4, 3, 1, 0),
    (2, 14): (14, 10, 6, 1, 0),
    (2, 15): (15, 1, 0),
    (2, 16): (16, 12, 3, 1, 0),
    (2, 17): (17, 3, 0),
    (2, 18): (18, 7, 0),
    (2, 19): (19, 5, 2, 1, 0),
    (2, 20): (20, 3, 0),
}

# Ternari: coefficienti dal grado basso (x^2+2x+2 -> (2, 2, 1)).
PRIMITIVE_TABLE_COEFFS: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
}


@dataclass(frozen=True)
class FieldSpec:
    """
    GF(p^e) in base polinomiale: un elemento è l'intero sum c_i p^i.
    alfa = radice del modulo, generatore del gruppo moltiplicativo.
    Le tabelle exp/log rendono mul/inv O(1); l'oggetto è immutabile.
    """

    p: int
    e: int
    modulus: Poly
    order: int
    exp_table: np.ndarray = field(repr=False, compare=False, hash=False)
    log_table: np.ndarray = field(repr=False, compare=False, hash=False)

    # --- elementi --------------------------------------------------------

    @property
    def n(self) -> int:
        """Ordine del gruppo moltiplicativo."""
        return self.order - 1

    def elem(self, rep: int) -> "FieldElement":
        return FieldElement(self, int(rep) % self.order)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def alpha(self) -> "FieldElement":
        return FieldElement(self, int(self.exp_table[1 % self.n]))

    def alpha_pow(self, i: int) -> int:
        return int(self.exp_table[i % self.n])

    def log(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("log di zero non definito")
        return int(self.log_table[x])

    # --- aritmetica sugli interi rep ------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        out, scale = 0, 1
        for _ in range(self.e):
            out += ((a % self.p + b % self.p) % self.p) * scale
            a //= self.p
            b //= self.p
            scale *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.e == 1:
            return (-a) % self.p
        out, scale = 0, 1
        for _ in range(self.e):
            out += ((-(a % self.p)) % self.p) * scale
            a //= self.p
            scale *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp_table[(int(self.log_table[a]) + int(self.log_table[b])) % self.n])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("Inverso di zero")
        return int(self.exp_table[(-int(self.log_table[a])) % self.n])

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise DivisionByZero("Potenza negativa di zero")
            return 1 if k == 0 else 0
        return int(self.exp_table[(int(self.log_table[a]) * k) % self.n])

    def scale(self, a: int, c: int) -> int:
        """Prodotto per una costante del sottocampo primo (0 <= c < p)."""
        return self.mul(a, c % self.p)

    # --- versioni vettoriali (numpy) ------------------------------------

    def digits(self, xs: np.ndarray) -> np.ndarray:
        """Coordinate base p: shape (..., e)."""
        xs = np.asarray(xs, dtype=np.int64)
        powers = self.p ** np.arange(self.e, dtype=np.int64)
        return (xs[..., None] // powers) % self.p

    def from_digits(self, ds: np.ndarray) -> np.ndarray:
        powers = self.p ** np.arange(self.e, dtype=np.int64)
        return (np.asarray(ds, dtype=np.int64) * powers).sum(axis=-1)

    def add_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.e == 1:
            return (a + b) % self.p
        return self.from_digits((self.digits(a) + self.digits(b)) % self.p)

    def sub_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.e == 1:
            return (a - b) % self.p
        return self.from_digits((self.digits(a) - self.digits(b)) % self.p)

    def pow_array(self, xs: np.ndarray, k: int) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        out = np.zeros_like(xs)
        nz = xs != 0
        out[nz] = self.exp_table[(self.log_table[xs[nz]] * k) % self.n]
        if k == 0:
            out[~nz] = 1
        return out

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def describe(self) -> Dict[str, object]:
        return {"p": self.p, "e": self.e, "modulus": self.modulus.to_json()}

    def __str__(self) -> str:
        return f"GF({self.p}^{self.e}) mod {self.modulus}"


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    rep: int

    def __post_init__(self) -> None:
        if not 0 <= self.rep < self.spec.order:
            raise ValueError(f"rep {self.rep} fuori da [0, {self.spec.order})")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return field_add(self, other)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return field_add(self, field_neg(other))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return field_mul(self, other)

    def __neg__(self) -> "FieldElement":
        return field_neg(self)

    def __pow__(self, k: int) -> "FieldElement":
        return field_pow(self, k)

    def to_json(self) -> Dict[str, object]:
        return {"rep": self.rep, "field": self.spec.describe()}


# -------------------------
#  Costruzione del campo
# -------------------------


def _build_tables(p: int, e: int, modulus: Poly) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    """
    Potenze successive di x modulo il modulo monico. Ritorna None se x non
    ha ordine esattamente p^e - 1 (modulo non primitivo).
    """
    order = p ** e
    n = order - 1
    top = p ** (e - 1)
    # x^e = -(c_0 + ... + c_{e-1} x^{e-1})
    low = [(-c) % p for c in modulus.coeffs[:e]]
    low_int = sum(c * p ** i for i, c in enumerate(low))

    exp_table = np.zeros(n, dtype=np.int64)
    log_table = np.full(order, -1, dtype=np.int64)
    x = 1
    for i in range(n):
        if x == 0 or log_table[x] != -1:
            return None
        exp_table[i] = x
        log_table[x] = i
        # moltiplicazione per alfa
        if p == 2:
            x <<= 1
            if x & order:
                x ^= order | low_int
        else:
            lead = x // top
            shifted = (x % top) * p
            if lead:
                add = 0
                scale = 1
                for c in low:
                    add += ((c * lead) % p) * scale
                    scale *= p
                # somma cifra per cifra
                out, s, a, b = 0, 1, shifted, add
                for _ in range(e):
                    out += ((a % p + b % p) % p) * s
                    a //= p
                    b //= p
                    s *= p
                shifted = out
            x = shifted
    if x != 1:
        return None
    log_table[0] = 0  # mai usato per lo zero; i chiamanti lo escludono
    return exp_table, log_table


def is_primitive_polynomial(modulus: Poly) -> bool:
    """Test rapido: x ha ordine p^e - 1 modulo `modulus` (implica irriducibilità)."""
    p, e = modulus.base, modulus.degree
    if e < 1 or modulus.lead != 1 or modulus.coeffs[0] == 0:
        return False
    n = p ** e - 1
    x = Poly(p, (0, 1))
    if poly_powmod(x, n, modulus) != Poly.one(p):
        return False
    for r in factorint(n):
        if poly_powmod(x, n // r, modulus) == Poly.one(p):
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, e: int) -> Poly:
    """
    Polinomio primitivo di default: tabella fissa per p=2 (e<=20) e p=3 (e<=3),
    altrimenti il primo primitivo monico in ordine crescente di sum c_i p^i.
    """
    if (p, e) in PRIMITIVE_TABLE:
        return Poly.from_exponents(p, PRIMITIVE_TABLE[(p, e)])
    if (p, e) in PRIMITIVE_TABLE_COEFFS:
        return Poly(p, PRIMITIVE_TABLE_COEFFS[(p, e)])
    for low in range(1, p ** e):
        coeffs = [(low // p ** i) % p for i in range(e)] + [1]
        cand = Poly(p, tuple(coeffs))
        if is_primitive_polynomial(cand):
            log.debug("Modulo primitivo trovato per GF(%d^%d): %s", p, e, cand)
            return cand
    raise NotPrimitivePolynomial(f"Nessun polinomio primitivo trovato per GF({p}^{e})")


@lru_cache(maxsize=64)
def _make_field_cached(p: int, e: int, modulus: Poly) -> FieldSpec:
    tables = _build_tables(p, e, modulus)
    if tables is None:
        raise NotPrimitivePolynomial(f"{modulus} non è primitivo su GF({p})")
    exp_table, log_table = tables
    exp_table.setflags(write=False)
    log_table.setflags(write=False)
    log.debug("Campo GF(%d^%d) costruito con modulo %s", p, e, modulus)
    return FieldSpec(p=p, e=e, modulus=modulus, order=p ** e,
                     exp_table=exp_table, log_table=log_table)


def make_field(p: int, e: int = 1, modulus: Optional[Poly] = None) -> FieldSpec:
    if p < 2 or not isprime(p):
        raise NotPrime(f"La caratteristica {p} non è un primo")
    if e < 1:
        raise UnsupportedSize(f"Grado di estensione non valido: {e}")
    if p ** e > MAX_FIELD_ORDER:
        raise UnsupportedSize(f"GF({p}^{e}) supera il limite di {MAX_FIELD_ORDER} elementi")
    if modulus is None:
        modulus = default_modulus(p, e)
    else:
        if modulus.base != p or modulus.degree != e:
            raise NotPrimitivePolynomial(
                f"Il modulo {modulus} non ha grado {e} su GF({p})"
            )
        if modulus.lead != 1:
            raise NotPrimitivePolynomial(f"Il modulo {modulus} non è monico")
    return _make_field_cached(p, e, modulus)


# -------------------------
#  Operazioni sugli elementi
# -------------------------


def _same(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.spec != b.spec:
        raise MixedFields(f"Elementi di campi diversi: {a.spec} e {b.spec}")
    return a.spec


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    spec = _same(a, b)
    return FieldElement(spec, spec.add(a.rep, b.rep))


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    spec = _same(a, b)
    return FieldElement(spec, spec.mul(a.rep, b.rep))


def field_neg(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec, a.spec.neg(a.rep))


def field_inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec, a.spec.inv(a.rep))


def field_pow(a: FieldElement, k: int) -> FieldElement:
    return FieldElement(a.spec, a.spec.pow(a.rep, k))


# -------------------------
#  Traccia e polinomi minimi
# -------------------------


def _subfield_degree(spec: FieldSpec, q: int) -> int:
    """Ritorna f con q = p^f, f | e; altrimenti NotASubfield."""
    f, acc = 0, 1
    while acc < q:
        acc *= spec.p
        f += 1
    if acc != q or f == 0 or spec.e % f:
        raise NotASubfield(f"GF({q}) non è un sottocampo di GF({spec.p}^{spec.e})")
    return f


def trace(x: FieldElement, q: int) -> FieldElement:
    """
    Tr(x) = sum_{i<m} x^{q^i}, m = [GF(p^e):GF(q)]. Il risultato è un
    elemento dello stesso FieldSpec che giace nel sottocampo GF(q);
    per q = p il suo rep coincide col valore in GF(p).
    """
    spec = x.spec
    f = _subfield_degree(spec, q)
    m = spec.e // f
    acc, y = 0, x.rep
    for _ in range(m):
        acc = spec.add(acc, y)
        y = spec.pow(y, q)
    return FieldElement(spec, acc)


def trace_table(spec: FieldSpec, q: int) -> np.ndarray:
    """Tr(x) per ogni x del campo, vettoriale."""
    f = _subfield_degree(spec, q)
    m = spec.e // f
    xs = spec.elements()
    acc = np.zeros_like(xs)
    y = xs
    for _ in range(m):
        acc = spec.add_array(acc, y)
        y = spec.pow_array(y, q)
    return acc


def cyclotomic_coset(i: int, q: int, n: int) -> List[int]:
    """Classe q-ciclotomica di i modulo n, nell'ordine i, iq, iq^2, ..."""
    i %= n
    coset = [i]
    j = (i * q) % n
    while j != i:
        coset.append(j)
        j = (j * q) % n
    return coset


def cyclotomic_cosets(q: int, n: int) -> List[List[int]]:
    seen = set()
    out = []
    for i in range(n):
        if i not in seen:
            c = cyclotomic_coset(i, q, n)
            seen.update(c)
            out.append(c)
    return out


def _poly_from_roots(spec: FieldSpec, roots: List[int]) -> List[int]:
    """prod (X - r) con coefficienti in GF(p^e), dal grado basso."""
    coeffs = [1]
    for r in roots:
        nr = spec.neg(r)
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] = spec.add(nxt[j + 1], c)
            nxt[j] = spec.add(nxt[j], spec.mul(c, nr))
        coeffs = nxt
    return coeffs


def minimal_polynomial(x: FieldElement, q: int) -> Poly:
    """
    Polinomio minimo di x su GF(q) come prodotto sulla classe ciclotomica
    del logaritmo di x. Supportato il sottocampo primo (q = p).
    """
    spec = x.spec
    f = _subfield_degree(spec, q)
    if f != 1:
        raise UnsupportedField(
            f"Polinomi minimi solo sul sottocampo primo GF({spec.p}), richiesto GF({q})"
        )
    if x.rep == 0:
        return Poly(spec.p, (0, 1))
    i = spec.log(x.rep)
    roots = [spec.alpha_pow(j) for j in cyclotomic_coset(i, q, spec.n)]
    coeffs = _poly_from_roots(spec, roots)
    if any(c >= spec.p for c in coeffs):
        raise NotASubfield(f"Coefficienti fuori da GF({q}) per il polinomio minimo di {x.rep}")
    return Poly(spec.p, tuple(coeffs))


def minimal_polynomial_of_power(spec: FieldSpec, i: int) -> Poly:
    """M_i(x): polinomio minimo di alfa^i sul sottocampo primo."""
    return minimal_polynomial(spec.elem(spec.alpha_pow(i)), spec.p)
