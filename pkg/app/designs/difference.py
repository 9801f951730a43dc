# file: app/designs/difference.py

from __future__ import annotations

import logging
from math import comb
from typing import Iterable, Sequence

import numpy as np

from app.core.errors import MixedBlockSizes, NonIntegralDelta, StrengthBelowTwo
from app.core.models import DifferenceFamilyEquivalence, DifferenceFamilyReport

from .blocks import verify_t_design

log = logging.getLogger(__name__)


def difference_multiset(v: int, blocks: Sequence[Iterable[int]]) -> DifferenceFamilyReport:
    """
    Istogramma delle differenze x - y (mod v), x != y nello stesso blocco,
    su tutti gli elementi non nulli di Z_v.
    """
    rows = [tuple(int(x) % v for x in b) for b in blocks]
    sizes = {len(r) for r in rows}
    if len(sizes) > 1:
        raise MixedBlockSizes(f"Blocchi di dimensioni diverse: {sorted(sizes)}")
    k = sizes.pop() if sizes else 0
    hist = np.zeros(v, dtype=np.int64)
    if rows and k > 1:
        arr = np.array(rows, dtype=np.int64)
        diffs = (arr[:, :, None] - arr[:, None, :]) % v
        off_diag = ~np.eye(k, dtype=bool)
        hist = np.bincount(diffs[:, off_diag].ravel(), minlength=v)
    histogram = {g: int(hist[g]) for g in range(1, v)}
    values = set(histogram.values())
    delta = values.pop() if len(values) == 1 else None
    return DifferenceFamilyReport(v=v, k=k, block_count=len(rows), delta=delta, histogram=histogram)


def design_family_delta(t: int, v: int, k: int, lam: int) -> int:
    """delta = v * lambda * C(v-2, t-2) / C(k-2, t-2)."""
    if t < 2:
        raise StrengthBelowTwo(f"Serve t >= 2, t={t}")
    num, den = v * lam * comb(v - 2, t - 2), comb(k - 2, t - 2)
    delta, rem = divmod(num, den)
    if rem:
        raise NonIntegralDelta(f"delta = {num}/{den} non intero")
    return delta


def difference_family_equivalence(v: int, blocks: Sequence[Iterable[int]]) -> DifferenceFamilyEquivalence:
    """
    Controlla entrambe le direzioni: 2-disegno => famiglia (v, k, lambda v)
    e famiglia => 2-disegno (senza sviluppo). Il secondo verso può fallire.
    """
    report = difference_multiset(v, blocks)
    verdict = verify_t_design(v, blocks, 2)
    lam = verdict.lambda_
    if lam is not None:
        agrees = report.delta == lam * v
        note = "" if agrees else f"2-disegno con lambda={lam} ma delta={report.delta}"
    elif report.delta is not None:
        agrees = False
        note = (f"Famiglia di differenze con delta={report.delta} che non è un 2-disegno: "
                "il verso inverso non vale senza sviluppo dei blocchi")
    else:
        agrees = True
        note = ""
    if not agrees:
        log.info("Controesempio disegno/famiglia su Z_%d: %s", v, note)
    return DifferenceFamilyEquivalence(
        v=v, k=report.k, is_design=lam is not None, lambda_=lam, delta=report.delta,
        agrees=agrees, note=note,
    )
