# file: app/engine/selector.py

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd
from typing import Any, Dict, FrozenSet, Optional, Tuple

from app.codes.families import hamming_like_code, reed_muller
from app.codes.linear import LinearCode, extend
from app.constructions.cyclic_families import (
    binary_two_zero_code,
    projective_ternary_bch,
    projective_ternary_two_zero,
    ternary_negacyclic_style_code,
)
from app.constructions.power_functions import ExponentFamily, FamilyTag, apn_check, planar_check
from app.core.errors import BudgetExceeded, OutOfDomain
from app.spectra import catalog
from app.spectra.catalog import FormulaTag, SpectrumFormulaId


class CodeKind(str, Enum):
    FAMILY = "family"
    RM = "rm"
    RM_DUAL = "rm-dual"
    HAMMING = "hamming"
    PROJECTIVE_BCH = "projective-bch"
    PROJECTIVE_TWO_ZERO = "projective-two-zero"


# famiglie binarie con duale a tre pesi (Tabella 1)
_THREE_WEIGHT = {
    FamilyTag.GOLD, FamilyTag.KASAMI, FamilyTag.WELCH,
    FamilyTag.NIHO_1MOD4, FamilyTag.NIHO_3MOD4,
}

_PLANAR = {FamilyTag.PLANAR_3H1, FamilyTag.PLANAR_HALF}


@lru_cache(maxsize=None)
def _family_exponents(family: FamilyTag, m: int, q: int) -> FrozenSet[int]:
    """
    Esponenti della famiglia per ogni h valido, chiusi per s -> q s mod (q^m - 1);
    nel caso binario anche per l'inverso modulo q^m - 1 (stesso spettro di Walsh).
    """
    n = q ** m - 1
    out = set()
    for h in range(m):
        try:
            s = ExponentFamily(family, m, h, ternary=q == 3).s()
        except OutOfDomain:
            continue
        coset = {(s * q ** i) % n for i in range(m)}
        out |= coset
        if q == 2 and gcd(s, n) == 1:
            out |= {pow(c, -1, n) for c in coset}
    return frozenset(out)


@lru_cache(maxsize=None)
def _differential_ok(s: int, m: int, q: int) -> Optional[bool]:
    """APN (q = 2) o planare (q = 3); None se il profilo supera il budget."""
    try:
        ok, _ = apn_check(s, m) if q == 2 else planar_check(s, m)
    except BudgetExceeded:
        return None
    return ok


@dataclass(frozen=True)
class CodeSelector:
    """
    Quale codice costruire, a partire dalle opzioni della CLI:
    - FAMILY: codici a due zeri (binari o ternari) per esponente
    - RM / RM_DUAL: Reed-Muller RM(r, m) / RM(m-2, m)
    - HAMMING: C_(q,m)
    - PROJECTIVE_*: le due costruzioni ternarie di lunghezza (3^m-1)/2
    """

    kind: CodeKind
    m: int
    q: int = 2
    r: Optional[int] = None
    exponent: Optional[ExponentFamily] = None
    extended: bool = False

    # --- costruzione -----------------------------------------------------

    def build(self) -> LinearCode:
        if self.kind is CodeKind.FAMILY:
            if self.exponent is None:
                raise OutOfDomain("Serve una famiglia di esponenti")
            s = self.exponent.s()
            if self.exponent.q == 3:
                code = ternary_negacyclic_style_code(self.m, s)
            else:
                code = binary_two_zero_code(self.m, s)
        elif self.kind is CodeKind.RM:
            code = reed_muller(self.r if self.r is not None else 1, self.m)
        elif self.kind is CodeKind.RM_DUAL:
            if self.m < 2:
                raise OutOfDomain(f"RM(m-2, m) richiede m >= 2, m={self.m}")
            code = reed_muller(self.m - 2, self.m)
        elif self.kind is CodeKind.HAMMING:
            code = hamming_like_code(self.q, self.m)
        elif self.kind is CodeKind.PROJECTIVE_BCH:
            code = projective_ternary_bch(self.m)
        else:
            code = projective_ternary_two_zero(self.m)
        return extend(code) if self.extended else code

    @property
    def field_order(self) -> int:
        if self.kind is CodeKind.FAMILY and self.exponent is not None:
            return self.exponent.q
        if self.kind in (CodeKind.PROJECTIVE_BCH, CodeKind.PROJECTIVE_TWO_ZERO):
            return 3
        return self.q if self.kind is CodeKind.HAMMING else 2

    def label(self) -> str:
        base = self.kind.value
        if self.exponent is not None:
            base = f"{base}:{self.exponent.label()}"
        if self.kind is CodeKind.RM:
            base = f"rm(r={self.r})"
        return f"ext({base})" if self.extended else base

    def params(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"kind": self.kind.value, "m": self.m, "q": self.field_order,
                               "extended": self.extended}
        if self.r is not None:
            out["r"] = self.r
        if self.exponent is not None:
            out["family"] = self.exponent.family.value
            out["s"] = self.exponent.s()
        return out

    # --- forme chiuse ----------------------------------------------------

    def _exponent_verified(self) -> bool:
        """Le tabelle valgono solo se x^s ha la proprietà differenziale attesa."""
        exp = self.exponent
        if exp is None:
            return False
        q, m = exp.q, self.m
        if q == 2 and (exp.family not in _THREE_WEIGHT or m % 2 == 0):
            return False
        if q == 3 and exp.family not in _PLANAR:
            return False
        s = exp.s()
        if exp.raw is not None and s % (q ** m - 1) not in _family_exponents(exp.family, m, q):
            return False
        ok = _differential_ok(s, m, q)
        if ok is None:
            # profilo oltre il budget: ci si fida solo della formula della famiglia
            return exp.raw is None
        return ok

    def closed_form(self, side: str) -> Optional[SpectrumFormulaId]:
        """Formula del catalogo per il lato richiesto, se esiste."""
        primal, dual = self._formula_pair()
        return primal if side == "primal" else dual

    def _formula_pair(self) -> Tuple[Optional[SpectrumFormulaId], Optional[SpectrumFormulaId]]:
        m, k = self.m, self.kind
        if k is CodeKind.HAMMING and not self.extended:
            return (SpectrumFormulaId(FormulaTag.HAMMING, m, self.q),
                    SpectrumFormulaId(FormulaTag.SIMPLEX, m, self.q))
        if k is CodeKind.RM_DUAL and not self.extended:
            return SpectrumFormulaId(FormulaTag.RM_DUAL, m), SpectrumFormulaId(FormulaTag.RM_FIRST_ORDER, m)
        if k is CodeKind.RM and self.r == 1 and not self.extended:
            return SpectrumFormulaId(FormulaTag.RM_FIRST_ORDER, m), SpectrumFormulaId(FormulaTag.RM_DUAL, m)
        if k in (CodeKind.PROJECTIVE_BCH, CodeKind.PROJECTIVE_TWO_ZERO) and not self.extended:
            return (SpectrumFormulaId(FormulaTag.PROJECTIVE_TERNARY_PRIMAL, m),
                    SpectrumFormulaId(FormulaTag.TABLE_GG2_DUAL, m))
        if k is CodeKind.FAMILY and self._exponent_verified():
            if self.exponent.q == 3:
                if self.extended:
                    return (SpectrumFormulaId(FormulaTag.TERNARY_EXTENDED, m),
                            SpectrumFormulaId(FormulaTag.TABLE3_EXT_DUAL, m))
                return None, SpectrumFormulaId(FormulaTag.TABLE2_DUAL, m)
            if self.exponent.q == 2:
                if self.extended:
                    return (SpectrumFormulaId(FormulaTag.GOLDLIKE_EXTENDED, m),
                            SpectrumFormulaId(FormulaTag.GOLDLIKE_EXTENDED_DUAL, m))
                return (SpectrumFormulaId(FormulaTag.GOLDLIKE_PRIMAL, m),
                        SpectrumFormulaId(FormulaTag.TABLE1_DUAL, m))
        return None, None

    def expected_lambda(self, side: str, weight: int, t: int) -> Optional[int]:
        """lambda previsto dalle forme chiuse puntuali, se il caso è coperto."""
        m, k = self.m, self.kind
        if k is CodeKind.HAMMING and not self.extended and t == 2:
            if side == "dual":
                return catalog.hamming_dual_design_lambda(self.q, m)
            if self.q == 2:
                return catalog.hamming_example_lambda(m, weight)
            return self.q - 1 if weight == 3 else None
        if k is CodeKind.RM_DUAL and not self.extended and t == 3 and side == "primal":
            if weight % 2 == 0 and 4 <= weight <= 2 ** m - 4:
                return catalog.rm_design_lambda(m, weight)
            return None
        if k is not CodeKind.FAMILY or not self._exponent_verified():
            return None
        if self.exponent.q == 2:
            if not self.extended and t == 2:
                fn = catalog.goldlike_example_lambda if side == "primal" else catalog.goldlike_dual_example_lambda
                return fn(m, weight)
            if self.extended and t == 3:
                fn = (catalog.goldlike_extended_example_lambda if side == "primal"
                      else catalog.goldlike_extended_dual_example_lambda)
                return fn(m, weight)
        if self.exponent.q == 3 and self.extended and t == 2:
            fn = (catalog.ternary_extended_example_lambda if side == "primal"
                  else catalog.ternary_extended_dual_example_lambda)
            return fn(m, weight)
        return None
