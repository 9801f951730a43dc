# file: app/constructions/power_functions.py

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Dict, Optional, Tuple

import numpy as np

from app.algebra.field import make_field
from app.core.errors import BudgetExceeded, OutOfDomain
from app.core.settings import default_budget

log = logging.getLogger(__name__)


class FamilyTag(str, Enum):
    GOLD = "gold"
    KASAMI = "kasami"
    WELCH = "welch"
    NIHO_1MOD4 = "niho1"
    NIHO_3MOD4 = "niho3"
    PLANAR_3H1 = "planar"
    PLANAR_HALF = "planar-half"
    INVERSE = "inverse"
    RAW = "raw"


_TERNARY = {FamilyTag.PLANAR_3H1, FamilyTag.PLANAR_HALF}

# h di default quando la CLI non lo specifica
_DEFAULT_H = {
    FamilyTag.GOLD: 1,
    FamilyTag.KASAMI: 1,
    FamilyTag.PLANAR_3H1: 0,
    FamilyTag.PLANAR_HALF: 1,
}


@dataclass(frozen=True)
class ExponentFamily:
    """Esponente s di x^s scelto per famiglia (o grezzo con RAW)."""

    family: FamilyTag
    m: int
    h: Optional[int] = None
    raw: Optional[int] = None
    ternary: bool = False

    @classmethod
    def of(cls, family: str, m: int, h: Optional[int] = None, s: Optional[int] = None,
           q: Optional[int] = None) -> "ExponentFamily":
        tag = FamilyTag(family)
        ternary = tag in _TERNARY or q == 3
        if s is not None:
            # esponente esplicito: prevale sulla formula della famiglia
            return cls(tag, m, h, raw=s, ternary=ternary)
        return cls(tag, m, h if h is not None else _DEFAULT_H.get(tag), ternary=ternary)

    @property
    def q(self) -> int:
        return 3 if self.ternary or self.family in _TERNARY else 2

    def s(self) -> int:
        m, h, f = self.m, self.h, self.family
        if self.raw is not None or f is FamilyTag.RAW:
            if self.raw is None or self.raw < 1:
                raise OutOfDomain("Esponente grezzo mancante o non positivo")
            return self.raw
        if f is FamilyTag.INVERSE:
            return 2 ** m - 2
        if f is FamilyTag.WELCH:
            if m % 2 == 0:
                raise OutOfDomain(f"Welch richiede m dispari, m={m}")
            return 2 ** ((m - 1) // 2) + 3
        if f is FamilyTag.NIHO_1MOD4:
            if m % 4 != 1:
                raise OutOfDomain(f"Niho (1 mod 4) richiede m = 1 mod 4, m={m}")
            return 2 ** ((m - 1) // 2) + 2 ** ((m - 1) // 4) - 1
        if f is FamilyTag.NIHO_3MOD4:
            if m % 4 != 3:
                raise OutOfDomain(f"Niho (3 mod 4) richiede m = 3 mod 4, m={m}")
            return 2 ** ((m - 1) // 2) + 2 ** ((3 * m - 1) // 4) - 1
        if h is None:
            raise OutOfDomain(f"La famiglia {f.value} richiede h")
        if f is FamilyTag.GOLD:
            if h < 1 or gcd(h, m) != 1:
                raise OutOfDomain(f"Gold richiede gcd(h, m) = 1, h={h}, m={m}")
            return 2 ** h + 1
        if f is FamilyTag.KASAMI:
            if h < 1 or gcd(h, m) != 1:
                raise OutOfDomain(f"Kasami richiede gcd(h, m) = 1, h={h}, m={m}")
            return 2 ** (2 * h) - 2 ** h + 1
        if f is FamilyTag.PLANAR_3H1:
            if h < 0:
                raise OutOfDomain(f"h deve essere >= 0, h={h}")
            return 3 ** h + 1
        if h < 1 or gcd(m, h) != 1:
            raise OutOfDomain(f"(3^h+1)/2 richiede h >= 1 e gcd(m, h) = 1, h={h}, m={m}")
        return (3 ** h + 1) // 2

    def label(self) -> str:
        if self.raw is not None:
            return f"{self.family.value}(s={self.raw})"
        return f"{self.family.value}(h={self.h})" if self.h is not None else self.family.value

    def to_json(self) -> Dict[str, object]:
        return {"family": self.family.value, "m": self.m, "h": self.h, "q": self.q, "s": self.s()}


@dataclass(frozen=True)
class DifferentialProfile:
    """
    max_{a != 0, b} #{x : f(x+a) - f(x) = b} per f(x) = x^s, e numero di
    coppie (a, b) che lo raggiungono.
    """

    q: int
    m: int
    s: int
    max_count: int
    attained: int

    def to_json(self) -> Dict[str, int]:
        return {"q": self.q, "m": self.m, "s": self.s, "max": self.max_count,
                "attained": self.attained}


_BATCH_ELEMENTS = 1 << 20


def differential_profile(q: int, m: int, s: int, budget: Optional[int] = None) -> DifferentialProfile:
    field = make_field(q, m)
    order = field.order
    cost = (order - 1) * order
    budget = budget if budget is not None else default_budget()
    if cost > budget:
        raise BudgetExceeded(cost, budget, "Conteggio differenziale esaustivo oltre il budget")

    xs = field.elements()
    fx = field.pow_array(xs, s)
    best, attained = 0, 0
    batch = max(1, _BATCH_ELEMENTS // order)
    for start in range(1, order, batch):
        a = np.arange(start, min(order, start + batch), dtype=np.int64)[:, None]
        shifted = fx[field.add_array(xs[None, :], a)]
        diffs = field.sub_array(shifted, fx[None, :])
        # conteggio per (a, b) con b = f(x+a) - f(x)
        keys = (np.arange(a.shape[0])[:, None] * order + diffs).ravel()
        counts = np.bincount(keys, minlength=a.shape[0] * order)
        top = int(counts.max())
        if top > best:
            best, attained = top, int((counts == top).sum())
        elif top == best:
            attained += int((counts == top).sum())
    log.debug("Profilo differenziale x^%d su GF(%d^%d): max=%d (%d coppie)", s, q, m, best, attained)
    return DifferentialProfile(q=q, m=m, s=s, max_count=best, attained=attained)


def apn_check(s: int, m: int, q: int = 2, budget: Optional[int] = None) -> Tuple[bool, int]:
    """(APN?, massimo conteggio differenziale esatto)."""
    top = differential_profile(q, m, s, budget).max_count
    return top == 2, top


def planar_check(s: int, m: int, q: int = 3, budget: Optional[int] = None) -> Tuple[bool, int]:
    """(planare?, massimo conteggio differenziale esatto)."""
    top = differential_profile(q, m, s, budget).max_count
    return top == 1, top


def is_apn(s: int, m: int, q: int = 2, budget: Optional[int] = None) -> bool:
    return apn_check(s, m, q, budget)[0]


def is_planar(s: int, m: int, q: int = 3, budget: Optional[int] = None) -> bool:
    return planar_check(s, m, q, budget)[0]


def inverse_exponent(m: int) -> ExponentFamily:
    """x^(2^m - 2): APN per m dispari, ma il duale ha molti pesi (solo spettro)."""
    return ExponentFamily(FamilyTag.INVERSE, m)
