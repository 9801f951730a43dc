# file: app/designs/am_checker.py

from __future__ import annotations

import logging
from math import comb
from typing import Optional, Tuple

from app.core.errors import InconsistentPair, StrengthTooLarge
from app.core.models import AMReport, WeightDistribution
from app.spectra.macwilliams import macwilliams_transform

log = logging.getLogger(__name__)


def nonbinary_cutoff(v: int, q: int, d: int) -> int:
    """Il più grande w <= v con w - floor((w+q-2)/(q-1)) < d. Per q = 2 vale v."""
    if q == 2:
        return v
    best = 0
    for w in range(v + 1):
        if w - (w + q - 2) // (q - 1) < d:
            best = w
    return best


def _check_pair(primal: WeightDistribution, dual: WeightDistribution) -> None:
    if primal.v != dual.v or primal.q != dual.q or primal.kappa + dual.kappa != primal.v:
        raise InconsistentPair(
            f"Parametri incompatibili: [{primal.v}, {primal.kappa}] vs [{dual.v}, {dual.kappa}]"
        )
    if macwilliams_transform(primal).counts != dual.counts:
        raise InconsistentPair("La distribuzione duale non è la trasformata di MacWilliams del primale")


def am_check(primal: WeightDistribution, dual: WeightDistribution, t: int) -> AMReport:
    """
    Assmus-Mattson: con s = #{0 < i <= v-t : A^perp_i != 0} e s <= d - t,
    i supporti di peso i formano t-disegni per d <= i <= w (primale) e
    d^perp <= i <= min(v-t, w^perp) (duale). Pesi banali (i >= v) esclusi.
    """
    _check_pair(primal, dual)
    v, q = primal.v, primal.q
    d = primal.minimum_distance
    if d is None:
        raise StrengthTooLarge("Il codice nullo non ha distanza minima")
    if t >= d:
        raise StrengthTooLarge(f"t={t} deve essere minore di d={d}")
    d_perp = dual.minimum_distance

    s = sum(1 for i in range(1, v - t + 1) if dual[i])
    holds = s <= d - t
    w = nonbinary_cutoff(v, q, d)
    w_perp = nonbinary_cutoff(v, q, d_perp) if d_perp is not None else None

    primal_weights = []
    dual_weights = []
    if holds:
        primal_weights = [i for i in range(d, min(w, v - 1) + 1) if primal[i] and i > t]
        if d_perp is not None:
            top = v - t if q == 2 else min(v - t, w_perp)
            dual_weights = [i for i in range(d_perp, min(top, v - 1) + 1) if dual[i] and i > t]

    log.debug("AM: t=%d d=%d s=%d holds=%s", t, d, s, holds)
    return AMReport(
        t=t, d=d, d_perp=d_perp, s=s, w=w, w_perp=w_perp, holds=holds,
        primal_design_weights=primal_weights, dual_design_weights=dual_weights,
    )


def divisibility_check(t: int, v: int, k: int, lam: int) -> Tuple[bool, Optional[int]]:
    """C(k-i, t-i) | lam*C(v-i, t-i) per 0 <= i <= t. Ritorna (esito, primo i che fallisce)."""
    for i in range(t + 1):
        if (lam * comb(v - i, t - i)) % comb(k - i, t - i):
            return False, i
    return True, None
