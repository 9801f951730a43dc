# file: app/spectra/macwilliams.py

from __future__ import annotations

import csv
import io
import logging
from typing import List

import sympy

from app.core.errors import NonIntegralResult
from app.core.models import WeightDistribution

log = logging.getLogger(__name__)


def krawtchouk_row(x: int, v: int, q: int) -> List[int]:
    """
    K_0(x)..K_v(x) con la ricorrenza a tre termini:
      K_0 = 1, K_1 = v(q-1) - q x
      (k+1) K_{k+1} = [(v-k)(q-1) + k - q x] K_k - (q-1)(v-k+1) K_{k-1}
    K_k(x) è il coefficiente di z^k in (1-z)^x (1+(q-1)z)^(v-x).
    """
    row = [1]
    if v == 0:
        return row
    row.append(v * (q - 1) - q * x)
    for k in range(1, v):
        num = ((v - k) * (q - 1) + k - q * x) * row[k] - (q - 1) * (v - k + 1) * row[k - 1]
        val, rem = divmod(num, k + 1)
        if rem:
            raise NonIntegralResult(f"Krawtchouk non intero: K_{k + 1}({x}), v={v}, q={q}")
        row.append(val)
    return row


def krawtchouk(k: int, x: int, v: int, q: int) -> int:
    return krawtchouk_row(x, v, q)[k]


def macwilliams_transform(wd: WeightDistribution) -> WeightDistribution:
    """
    A^perp_k = q^(-kappa) sum_i A_i K_k(i). Ogni conteggio viene verificato
    intero e non negativo prima di restituire la distribuzione del duale.
    """
    wd.check_consistent()
    v, q = wd.v, wd.q
    acc = [0] * (v + 1)
    for i, a in enumerate(wd.counts):
        if not a:
            continue
        for k, kv in enumerate(krawtchouk_row(i, v, q)):
            acc[k] += a * kv
    scale = q ** wd.kappa
    counts = []
    for k, s in enumerate(acc):
        val, rem = divmod(s, scale)
        if rem or val < 0:
            raise NonIntegralResult(
                f"A^perp_{k} = {s}/{scale} non è un intero non negativo: distribuzione corrotta"
            )
        counts.append(val)
    return WeightDistribution(v=v, q=q, kappa=v - wd.kappa, counts=tuple(counts))


def macwilliams_transform_symbolic(wd: WeightDistribution) -> WeightDistribution:
    """
    Sostituzione polinomiale diretta con sympy:
    q^kappa A^perp(z) = sum_i A_i (1-z)^i (1+(q-1)z)^(v-i).
    Percorso lento, usato come oracolo indipendente.
    """
    wd.check_consistent()
    z = sympy.symbols("z")
    v, q = wd.v, wd.q
    expr = sum(
        (a * (1 - z) ** i * (1 + (q - 1) * z) ** (v - i) for i, a in enumerate(wd.counts) if a),
        sympy.Integer(0),
    )
    poly = sympy.Poly(sympy.expand(expr), z)
    scale = q ** wd.kappa
    counts = []
    for k in range(v + 1):
        c = int(poly.coeff_monomial(z ** k))
        val, rem = divmod(c, scale)
        if rem or val < 0:
            raise NonIntegralResult(f"Coefficiente di z^{k} non divisibile per {scale}")
        counts.append(val)
    return WeightDistribution(v=v, q=q, kappa=v - wd.kappa, counts=tuple(counts))


def weight_enumerator_string(wd: WeightDistribution) -> str:
    """Es. RM(1,4) -> '1 + 30z^8 + z^16'."""
    terms = []
    for i, c in enumerate(wd.counts):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = "z" if i == 1 else f"z^{i}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


def distribution_to_csv(wd: WeightDistribution) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["weight", "count"])
    for i, c in enumerate(wd.counts):
        if c:
            writer.writerow([i, c])
    return buf.getvalue()
