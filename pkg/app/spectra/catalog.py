# file: app/spectra/catalog.py

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from math import comb, gcd
from typing import Callable, Dict, List, Optional, Tuple

from app.core.errors import NonIntegralResult, OutOfDomain
from app.core.models import WeightDistribution

log = logging.getLogger(__name__)


class FormulaTag(str, Enum):
    RM_DUAL = "RM_DUAL"
    HAMMING = "HAMMING"
    TABLE1_DUAL = "TABLE1_DUAL"
    GOLDLIKE_PRIMAL = "GOLDLIKE_PRIMAL"
    GOLDLIKE_EXTENDED = "GOLDLIKE_EXTENDED"
    TABLE2_DUAL = "TABLE2_DUAL"
    TABLE3_EXT_DUAL = "TABLE3_EXT_DUAL"
    TERNARY_EXTENDED = "TERNARY_EXTENDED"
    TABLE_GG2_DUAL = "TABLE_GG2_DUAL"
    PROJECTIVE_TERNARY_PRIMAL = "PROJECTIVE_TERNARY_PRIMAL"
    # enumeratori "di servizio"
    RM_FIRST_ORDER = "RM_FIRST_ORDER"
    SIMPLEX = "SIMPLEX"
    GOLDLIKE_EXTENDED_DUAL = "GOLDLIKE_EXTENDED_DUAL"


@dataclass(frozen=True)
class SpectrumFormulaId:
    """Formula chiusa + parametri. q conta solo per HAMMING e SIMPLEX."""

    tag: FormulaTag
    m: int
    q: int = 2

    def constants(self) -> Dict[str, int]:
        """Costanti a, b, c, u, v delle tabelle (per i report)."""
        return _CONSTANTS.get(self.tag, lambda m: {})(self.m)

    def to_json(self) -> Dict[str, object]:
        return {"formula": self.tag.value, "params": {"q": self.q, "m": self.m, **self.constants()}}


# ----------------------------------------------------------------------
#  Aritmetica di supporto
# ----------------------------------------------------------------------


def _exact_div(num: int, den: int, what: str) -> int:
    val, rem = divmod(num, den)
    if rem:
        raise NonIntegralResult(f"{what}: {num} non è divisibile per {den}")
    return val


def _signed_sum(k: int, top_i: int, top_j: int, j_base: int = 1) -> int:
    """sum_{i+j=k} (-1)^i C(top_i, i) j_base^j C(top_j, j)."""
    total = 0
    for i in range(max(0, k - top_j), min(k, top_i) + 1):
        j = k - i
        term = comb(top_i, i) * comb(top_j, j) * j_base ** j
        total += -term if i % 2 else term
    return total


def _require_odd(m: int, low: int, tag: FormulaTag) -> None:
    if m < low or m % 2 == 0:
        raise OutOfDomain(f"{tag.value} richiede m dispari >= {low}, m={m}")


def _gold_weights(m: int) -> Tuple[int, int, int]:
    r = 2 ** ((m - 1) // 2)
    return 2 ** (m - 1) - r, 2 ** (m - 1), 2 ** (m - 1) + r


def _ternary_weights(m: int) -> Tuple[int, int, int]:
    r = 3 ** ((m - 1) // 2)
    return 2 * 3 ** (m - 1) - r, 2 * 3 ** (m - 1), 2 * 3 ** (m - 1) + r


def _gg2_weights(m: int) -> Tuple[int, int, int]:
    r = 3 ** ((m - 1) // 2)
    return 3 ** (m - 1) - r, 3 ** (m - 1), 3 ** (m - 1) + r


def _table1_abc(m: int) -> Tuple[int, int, int]:
    r = 2 ** ((m - 1) // 2)
    n = 2 ** m - 1
    a = n * (r + 1) * 2 ** ((m - 3) // 2)
    b = n * (2 ** (m - 1) + 1)
    c = n * (r - 1) * 2 ** ((m - 3) // 2)
    return a, b, c


def _gg2_abc(m: int) -> Tuple[int, int, int]:
    r = 3 ** ((m - 1) // 2)
    n = 3 ** m - 1
    a = (3 ** (m - 1) + r) * n // 2
    b = (3 ** m - 3 ** (m - 1) + 1) * n
    c = (3 ** (m - 1) - r) * n // 2
    return a, b, c


_CONSTANTS: Dict[FormulaTag, Callable[[int], Dict[str, int]]] = {
    FormulaTag.TABLE1_DUAL: lambda m: dict(zip("abc", _table1_abc(m))),
    FormulaTag.GOLDLIKE_PRIMAL: lambda m: dict(zip("abc", _table1_abc(m))),
    FormulaTag.GOLDLIKE_EXTENDED: lambda m: {
        "u": 2 ** (2 * m - 1) - 2 ** (m - 1), "v": 2 ** (2 * m) + 2 ** m - 2},
    FormulaTag.GOLDLIKE_EXTENDED_DUAL: lambda m: {
        "u": 2 ** (2 * m - 1) - 2 ** (m - 1), "v": 2 ** (2 * m) + 2 ** m - 2},
    FormulaTag.TABLE3_EXT_DUAL: lambda m: {
        "u": 3 ** (2 * m) - 3 ** m, "v": (3 ** m + 3) * (3 ** m - 1)},
    FormulaTag.TERNARY_EXTENDED: lambda m: {
        "u": 3 ** (2 * m) - 3 ** m, "v": (3 ** m + 3) * (3 ** m - 1)},
    FormulaTag.TABLE_GG2_DUAL: lambda m: dict(zip("abc", _gg2_abc(m))),
    FormulaTag.PROJECTIVE_TERNARY_PRIMAL: lambda m: dict(zip("abc", _gg2_abc(m))),
}


def _sparse(v: int, entries: Dict[int, int]) -> List[int]:
    counts = [0] * (v + 1)
    for w, c in entries.items():
        counts[w] += c
    return counts


# ----------------------------------------------------------------------
#  Formule, una per tag: (v, q, kappa, conteggi)
# ----------------------------------------------------------------------


def _rm_dual(f: SpectrumFormulaId) -> Tuple[int, int, int, List[int]]:
    m = f.m
    if m < 3:
        raise OutOfDomain(f"RM_DUAL richiede m >= 3, m={m}")
    v = 2 ** m
    den = 2 ** (m + 1)
    coef = 2 ** (m + 1) - 2
    counts = [0] * (v + 1)
    for k in range(0, v + 1, 2):
        half = k // 2
        if k % 4 == 0:
            num = 2 * comb(v, k) + coef * comb(2 ** (m - 1), half)
        else:
            num = 2 * comb(v, k) - coef * comb(2 ** (m - 1), half)
        counts[k] = _exact_div(num, den, f"RM_DUAL A_{k}")
    return v, 2, 2 ** m - m - 1, counts


def _hamming(f: SpectrumFormulaId) -> Tuple[int, int, int, List[int]]:
    q, m = f.q, f.m
    if q < 2 or m < 2:
        raise OutOfDomain(f"HAMMING richiede q >= 2 e m >= 2, (q, m)=({q}, {m})")
    if gcd(q - 1, m) != 1:
        raise OutOfDomain(f"HAMMING richiede gcd(q-1, m) = 1, (q, m)=({q}, {m})")
    v = (q ** m - 1) // (q - 1)
    top_i = (q ** (m - 1) - 1) // (q - 1)
    top_j = q ** (m - 1)
    den = q ** m
    counts = []
    for k in range(v + 1):
        num = 0
        for i in range(max(0, k - top_j), min(k, top_i) + 1):
            j = k - i
            sign = -1 if j % 2 else 1
            num += comb(top_i, i) * comb(top_j, j) * (
                (q - 1) ** k + sign * (q - 1) ** i * (q ** m - 1)
            )
        counts.append(_exact_div(num, den, f"HAMMING A_{k}"))
    return v, q, v - m, counts


def _table1(f: SpectrumFormulaId) -> Tuple[int, int, int, List[int]]:
    _require_odd(f.m, 3, f.tag)
    m = f.m
    v = 2 ** m - 1
    w1, w2, w3 = _gold_weights(m)
    a, b, c = _table1_abc(m)
    return v, 2, 2 * m, _sparse(v, {0: 1, w1: a, w2: b, w3: c})


def _goldlike_primal(f: SpectrumFormulaId) -> Tuple[int, int, int, List[int]]:
    _require_odd(f.m, 5, f.tag)
    m = f.m
    v = 2 ** m - 1
    a, b, c = _table1_abc(m)
    den = 2 ** (2 * m)
    counts = []
    for k in range(v + 1):
        num = comb(v, k)
        for coef, w in zip((a, b, c), _gold_weights(m)):
            num += coef * _signed_sum(k, w, v - w)
        counts.append(_exact_div(num, den, f"GOLDLIKE_PRIMAL A_{k}"))
    return v, 2, v - 2 * m, counts


def _goldlike_extended(f: SpectrumFormulaId) -> Tuple[int, int, int, List[int]]:
    _require_odd(f.m, 5, f.tag)
    m = f.m
    v = 2 ** m
    consts = f.constants()
    u, vbar = consts["u"], consts["v"]
    w1, half, w3 = _gold_weights(m)
    den = 2 ** (2 * m + 1)
    counts = []
    for k in range(v + 1):
        even = 1 + (-1) ** k
        num = even * comb(v, k)
        if k % 2 == 0:
            num += (-1) ** (k // 2) * comb(half, k // 2) * vbar
        num += u * _signed_sum(k, w1, v - w1)
        num += u * _signed_sum(k, w3, v - w3)
        counts.append(_exact_div(num, den, f"GOLDLIKE_EXTENDED A_{k}"))
    return v, 2, 2 ** m - 1 - 2 * m, counts


def _goldlike_extended_dual(f: SpectrumFormulaId) -> Tuple[int, int, int, List[int]]:
    _require_odd(f.m, 5, f.tag)
    m = f.m
    v = 2 ** m
    consts = f.constants()
    w1, half, w3 = _gold_weights(m)
    entries = {0: 1, w1: consts["u"], half: consts["v"], w3: consts["u"], v: 1}
    return v, 2, 2 * m + 1, _sparse(v, entries)


def _table2(f: SpectrumFormulaId) -> Tuple[int, int, int, List[int]]:
    _require_odd(f.m, 3, f.tag)
    m = f.m
    v = 3 ** m - 1
    r = 3 ** ((m - 1) // 2)
    w1, w2, w3 = _ternary_weights(m)
    entries = {
        0: 1,
        w1: v * (3 ** (m - 1) + r),
        w2: v * (3 ** (m - 1) + 1),
        w3: v * (3 ** (m - 1) - r),
    }
    return v, 3, 2 * m, _sparse(v, entries)


def _table3(f: SpectrumFormulaId) -> Tuple[int, int, int, List[int]]:
    _require_odd(f.m, 3, f.tag)
    m = f.m
    v = 3 ** m
    consts = f.constants()
    w1, w2, w3 = _ternary_weights(m)
    entries = {0: 1, w1: consts["u"], w2: consts["v"], w3: consts["u"], v: 2}
    return v, 3, 2 * m + 1, _sparse(v, entries)


def _ternary_extended(f: SpectrumFormulaId) -> Tuple[int, int, int, List[int]]:
    _require_odd(f.m, 3, f.tag)
    m = f.m
    v = 3 ** m
    consts = f.constants()
    u, vbar = consts["u"], consts["v"]
    w1, w2, w3 = _ternary_weights(m)
    den = 3 ** (2 * m + 1)
    counts = []
    for k in range(v + 1):
        num = (2 ** k + (-1) ** k * 2) * comb(v, k)
        num += vbar * _signed_sum(k, w2, v - w2, j_base=2)
        num += u * _signed_sum(k, w1, v - w1, j_base=2)
        num += u * _signed_sum(k, w3, v - w3, j_base=2)
        counts.append(_exact_div(num, den, f"TERNARY_EXTENDED A_{k}"))
    return v, 3, 3 ** m - 1 - 2 * m, counts


def _gg2(f: SpectrumFormulaId) -> Tuple[int, int, int, List[int]]:
    _require_odd(f.m, 3, f.tag)
    m = f.m
    v = (3 ** m - 1) // 2
    w1, w2, w3 = _gg2_weights(m)
    a, b, c = _gg2_abc(m)
    return v, 3, 2 * m, _sparse(v, {0: 1, w1: a, w2: b, w3: c})


def _projective_primal(f: SpectrumFormulaId) -> Tuple[int, int, int, List[int]]:
    _require_odd(f.m, 3, f.tag)
    m = f.m
    v = (3 ** m - 1) // 2
    a, b, c = _gg2_abc(m)
    den = 3 ** (2 * m)
    counts = []
    for k in range(v + 1):
        num = comb(v, k) * 2 ** k
        for coef, w in zip((a, b, c), _gg2_weights(m)):
            num += coef * _signed_sum(k, w, v - w, j_base=2)
        counts.append(_exact_div(num, den, f"PROJECTIVE_TERNARY_PRIMAL A_{k}"))
    return v, 3, v - 2 * m, counts


def _rm_first_order(f: SpectrumFormulaId) -> Tuple[int, int, int, List[int]]:
    m = f.m
    if m < 1:
        raise OutOfDomain(f"RM_FIRST_ORDER richiede m >= 1, m={m}")
    v = 2 ** m
    return v, 2, m + 1, _sparse(v, {0: 1, 2 ** (m - 1): 2 ** (m + 1) - 2, v: 1})


def _simplex(f: SpectrumFormulaId) -> Tuple[int, int, int, List[int]]:
    q, m = f.q, f.m
    if q < 2 or m < 2:
        raise OutOfDomain(f"SIMPLEX richiede q >= 2 e m >= 2, (q, m)=({q}, {m})")
    v = (q ** m - 1) // (q - 1)
    return v, q, m, _sparse(v, {0: 1, q ** (m - 1): q ** m - 1})


_EVALUATORS: Dict[FormulaTag, Callable[[SpectrumFormulaId], Tuple[int, int, int, List[int]]]] = {
    FormulaTag.RM_DUAL: _rm_dual,
    FormulaTag.HAMMING: _hamming,
    FormulaTag.TABLE1_DUAL: _table1,
    FormulaTag.GOLDLIKE_PRIMAL: _goldlike_primal,
    FormulaTag.GOLDLIKE_EXTENDED: _goldlike_extended,
    FormulaTag.TABLE2_DUAL: _table2,
    FormulaTag.TABLE3_EXT_DUAL: _table3,
    FormulaTag.TERNARY_EXTENDED: _ternary_extended,
    FormulaTag.TABLE_GG2_DUAL: _gg2,
    FormulaTag.PROJECTIVE_TERNARY_PRIMAL: _projective_primal,
    FormulaTag.RM_FIRST_ORDER: _rm_first_order,
    FormulaTag.SIMPLEX: _simplex,
    FormulaTag.GOLDLIKE_EXTENDED_DUAL: _goldlike_extended_dual,
}


def eval_closed_form(formula: SpectrumFormulaId) -> WeightDistribution:
    """
    Valuta la formula chiusa in aritmetica intera esatta. Le divisioni sono
    verificate esatte e la somma dei conteggi deve valere q^kappa.
    """
    v, q, kappa, counts = _EVALUATORS[formula.tag](formula)
    wd = WeightDistribution(v=v, q=q, kappa=kappa, counts=tuple(counts))
    wd.check_consistent()
    log.debug("Formula %s(m=%d, q=%d): %d pesi non nulli", formula.tag.value, formula.m,
              formula.q, len(wd.weights))
    return wd


# ----------------------------------------------------------------------
#  Forme chiuse puntuali (A_k e lambda degli esempi)
# ----------------------------------------------------------------------


def goldlike_a5(m: int) -> int:
    """A_5 del codice Gold-like di lunghezza 2^m - 1."""
    _require_odd(m, 5, FormulaTag.GOLDLIKE_PRIMAL)
    num = 4 * 2 ** (3 * m - 5) - 22 * 2 ** (2 * m - 4) + 26 * 2 ** (m - 3) - 2
    return _exact_div(num, 15, "A_5 Gold-like")


def rm_design_lambda(m: int, kappa: int) -> int:
    """lambda del 3-disegno dei supporti di peso kappa in RM(m-2, m)."""
    if m < 3:
        raise OutOfDomain(f"Serve m >= 3, m={m}")
    wd = eval_closed_form(SpectrumFormulaId(FormulaTag.RM_DUAL, m))
    if not 4 <= kappa <= 2 ** m - 4 or kappa % 2:
        raise OutOfDomain(f"Peso {kappa} fuori da 4..2^m-4 pari")
    return _exact_div(wd[kappa] * comb(kappa, 3), comb(2 ** m, 3), f"lambda RM peso {kappa}")


def hamming_example_lambda(m: int, k: int) -> Optional[int]:
    """lambda dei 2-disegni del codice di Hamming binario [2^m-1, 2^m-1-m, 3]."""
    h = 2 ** (m - 1)
    if k == 3:
        return 1
    if k == 4:
        return h - 2
    if k == 5:
        return _exact_div(2 * (h - 2) * (h - 4), 3, "lambda Hamming k=5")
    if k == 6:
        return _exact_div((h - 2) * (h - 3) * (h - 4), 3, "lambda Hamming k=6")
    if k == 7:
        return _exact_div((h - 2) * (h - 3) * (4 * h * h - 30 * h + 71), 30, "lambda Hamming k=7")
    return None


def hamming_design_lambda(q: int, m: int, k: int) -> Optional[int]:
    """lambda(k) = k(k-1)A_k / (v(v-1)) per i 2-disegni di C_(q,m), solo q = 2."""
    if q != 2:
        return None
    wd = eval_closed_form(SpectrumFormulaId(FormulaTag.HAMMING, m, q))
    v = wd.v
    if k >= len(wd.counts) or not wd[k]:
        return None
    return _exact_div(k * (k - 1) * wd[k], v * (v - 1), f"lambda Hamming peso {k}")


def goldlike_example_lambda(m: int, k: int) -> Optional[int]:
    """2-disegni del codice Gold-like, pesi 5..8."""
    h = 2 ** (m - 1)
    poly7 = 2 * h ** 3 - 25 * h ** 2 + 123 * h - 190
    if k == 5:
        return _exact_div(h - 4, 3, "lambda Gold k=5")
    if k == 6:
        return _exact_div((2 ** (m - 2) - 2) * (h - 3), 3, "lambda Gold k=6")
    if k == 7:
        return _exact_div(poly7, 30, "lambda Gold k=7")
    if k == 8:
        return _exact_div((2 ** (m - 2) - 2) * poly7, 45, "lambda Gold k=8")
    return None


def goldlike_dual_example_lambda(m: int, k: int) -> Optional[int]:
    """2-disegni del duale (Tabella 1): lambda = k(k-1)A_k / (v(v-1))."""
    w1, w2, w3 = _gold_weights(m)
    r = 2 ** ((m - 1) // 2)
    if k == w1:
        return 2 ** (m - 3) * (2 ** (m - 1) - r - 1)
    if k == w3:
        return 2 ** (m - 3) * (2 ** (m - 1) + r - 1)
    if k == w2:
        v = 2 ** m - 1
        b = _table1_abc(m)[1]
        return _exact_div(k * (k - 1) * b, v * (v - 1), "lambda duale Gold peso 2^(m-1)")
    return None


def goldlike_extended_example_lambda(m: int, k: int) -> Optional[int]:
    """3-disegni del codice Gold-like esteso."""
    h = 2 ** (m - 1)
    if k == 6:
        return _exact_div(h - 4, 3, "lambda esteso k=6")
    if k == 8:
        return _exact_div(2 * h ** 3 - 25 * h ** 2 + 123 * h - 190, 30, "lambda esteso k=8")
    if k == 10:
        poly = 2 * h ** 4 - 34 * h ** 3 + 235 * h ** 2 - 931 * h + 1358
        return _exact_div((h - 4) * poly, 315, "lambda esteso k=10")
    return None


def goldlike_extended_dual_example_lambda(m: int, k: int) -> Optional[int]:
    w1, half, w3 = _gold_weights(m)
    r3 = 2 ** ((m - 3) // 2)
    r1 = 2 ** ((m - 1) // 2)
    if k == w1:
        return (2 ** (m - 3) - r3) * (2 ** (m - 1) - r1 - 1)
    if k == w3:
        return (2 ** (m - 3) + r3) * (2 ** (m - 1) + r1 - 1)
    if k == half:
        return (2 ** (m - 1) + 1) * (2 ** (m - 2) - 1)
    return None


def ternary_extended_a5(m: int) -> int:
    _require_odd(m, 3, FormulaTag.TERNARY_EXTENDED)
    return _exact_div(3 ** (3 * m - 1) - 4 * 3 ** (2 * m - 1) + 3 ** m, 4, "A_5 ternario esteso")


def ternary_extended_example_lambda(m: int, k: int) -> Optional[int]:
    """Peso 5 del codice esteso: 5(3^(m-1)-1)/2. I pesi 6..10 restano empirici."""
    if k == 5:
        return _exact_div(5 * (3 ** (m - 1) - 1), 2, "lambda ternario k=5")
    return None


def ternary_extended_dual_example_lambda(m: int, k: int) -> Optional[int]:
    """Peso minimo del duale esteso: lambda = k(k-1)/2."""
    w1 = _ternary_weights(m)[0]
    if k == w1:
        return w1 * (w1 - 1) // 2
    return None


def hamming_dual_design_lambda(q: int, m: int) -> int:
    """Il duale (simplex) ha un solo peso q^(m-1): 2-disegno con lambda = (q-1)q^(m-2)."""
    return (q - 1) * q ** (m - 2)
