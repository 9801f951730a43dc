# file: app/algebra/poly.py

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from sympy import isprime

from app.core.errors import DivisionByZeroPoly, MixedBase, NotPrime


@dataclass(frozen=True)
class Poly:
    """
    Polinomio denso su GF(p), coefficienti dal grado più basso.
    Forma canonica: nessuno zero finale; il polinomio nullo ha coeffs = ().
    """

    base: int
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.base < 2 or not isprime(self.base):
            raise NotPrime(f"La base {self.base} non è un primo")
        cs = [int(c) % self.base for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # --- costruttori -----------------------------------------------------

    @classmethod
    def from_exponents(cls, base: int, exponents: Iterable[int]) -> "Poly":
        """x^3+x+1 -> from_exponents(2, [3, 1, 0])."""
        exps = list(exponents)
        cs = [0] * (max(exps) + 1 if exps else 0)
        for e in exps:
            cs[e] = (cs[e] + 1) % base
        return cls(base, tuple(cs))

    @classmethod
    def constant(cls, base: int, c: int) -> "Poly":
        return cls(base, (c,))

    @classmethod
    def one(cls, base: int) -> "Poly":
        return cls(base, (1,))

    @classmethod
    def monomial(cls, base: int, n: int, c: int = 1) -> "Poly":
        return cls(base, (0,) * n + (c,))

    @classmethod
    def x_n_minus_1(cls, base: int, n: int) -> "Poly":
        return cls(base, (base - 1,) + (0,) * (n - 1) + (1,))

    # --- proprietà -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        inv = pow(self.lead, -1, self.base)
        return Poly(self.base, tuple(c * inv for c in self.coeffs))

    def to_json(self) -> List[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            coef = "" if (c == 1 and i > 0) else str(c)
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{coef}x")
            else:
                terms.append(f"{coef}x^{i}")
        return "+".join(terms)

    # operatori di comodo
    def __add__(self, other: "Poly") -> "Poly":
        return poly_add(self, other)

    def __sub__(self, other: "Poly") -> "Poly":
        return poly_sub(self, other)

    def __mul__(self, other: "Poly") -> "Poly":
        return poly_mul(self, other)


def _check_base(a: Poly, b: Poly) -> int:
    if a.base != b.base:
        raise MixedBase(f"Polinomi su basi diverse: {a.base} e {b.base}")
    return a.base


def poly_add(a: Poly, b: Poly) -> Poly:
    p = _check_base(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    ca = list(a.coeffs) + [0] * (n - len(a.coeffs))
    cb = list(b.coeffs) + [0] * (n - len(b.coeffs))
    return Poly(p, tuple(x + y for x, y in zip(ca, cb)))


def poly_sub(a: Poly, b: Poly) -> Poly:
    p = _check_base(a, b)
    return poly_add(a, Poly(p, tuple(-c for c in b.coeffs)))


def poly_mul(a: Poly, b: Poly) -> Poly:
    p = _check_base(a, b)
    if a.is_zero or b.is_zero:
        return Poly(p, ())
    prod = np.convolve(
        np.array(a.coeffs, dtype=object), np.array(b.coeffs, dtype=object)
    )
    return Poly(p, tuple(int(c) % p for c in prod))


def poly_divrem(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """Divisione euclidea: (quoziente, resto) con deg(resto) < deg(b)."""
    p = _check_base(a, b)
    if b.is_zero:
        raise DivisionByZeroPoly("Divisione per il polinomio nullo")
    rem = list(a.coeffs)
    db = b.degree
    inv_lead = pow(b.lead, -1, p)
    if len(rem) - 1 < db:
        return Poly(p, ()), a
    quot = [0] * (len(rem) - db)
    for shift in range(len(rem) - 1 - db, -1, -1):
        c = (rem[shift + db] * inv_lead) % p
        quot[shift] = c
        if c:
            for j, bc in enumerate(b.coeffs):
                rem[shift + j] = (rem[shift + j] - c * bc) % p
    return Poly(p, tuple(quot)), Poly(p, tuple(rem[:db]))


def poly_mod(a: Poly, b: Poly) -> Poly:
    return poly_divrem(a, b)[1]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    p = _check_base(a, b)
    x, y = a, b
    while not y.is_zero:
        x, y = y, poly_mod(x, y)
    return x.monic() if not x.is_zero else Poly(p, ())


def poly_lcm(a: Poly, b: Poly) -> Poly:
    p = _check_base(a, b)
    if a.is_zero or b.is_zero:
        return Poly(p, ())
    g = poly_gcd(a, b)
    q, _ = poly_divrem(poly_mul(a, b), g)
    return q.monic()


def poly_lcm_many(polys: Sequence[Poly]) -> Poly:
    return reduce(poly_lcm, polys)


def poly_prod(polys: Sequence[Poly], base: int) -> Poly:
    return reduce(poly_mul, polys, Poly.one(base))


def poly_powmod(a: Poly, n: int, mod: Poly) -> Poly:
    """a^n mod `mod` per quadrati successivi."""
    p = _check_base(a, mod)
    result = poly_mod(Poly.one(p), mod)
    square = poly_mod(a, mod)
    while n:
        if n & 1:
            result = poly_mod(poly_mul(result, square), mod)
        square = poly_mod(poly_mul(square, square), mod)
        n >>= 1
    return result


def poly_divides(d: Poly, a: Poly) -> bool:
    return poly_mod(a, d).is_zero
