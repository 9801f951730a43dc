# file: app/cli/render.py

from __future__ import annotations

import csv
import io
import json
from typing import Any, Dict, List, Sequence, Union

from pydantic import BaseModel

from app.core.models import (
    DesignRunReport,
    HarnessReport,
    SpectrumReport,
    TableReproduction,
    WeightDistribution,
)
from app.spectra.macwilliams import distribution_to_csv, weight_enumerator_string

Payload = Union[BaseModel, Dict[str, Any]]


def to_json(payload: Payload) -> str:
    """JSON deterministico: chiavi nell'ordine dei modelli, conteggi come stringhe."""
    if isinstance(payload, BaseModel):
        data = payload.model_dump(mode="json", by_alias=True)
    else:
        data = payload
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _csv(header: Sequence[str], rows: List[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def to_csv(payload: Payload) -> str:
    if isinstance(payload, SpectrumReport):
        rows = [
            (r.method, w, c)
            for r in payload.results if r.distribution is not None
            for w, c in r.distribution.nonzero().items()
        ]
        return _csv(["method", "weight", "count"], rows)
    if isinstance(payload, DesignRunReport):
        rows = [(r.side, r.weight, r.status, r.lambda_ if r.lambda_ is not None else "", r.block_count)
                for r in payload.results]
        return _csv(["side", "weight", "status", "lambda", "blocks"], rows)
    if isinstance(payload, HarnessReport):
        rows = [(e.construction, e.conjecture, e.side, e.weight, e.status,
                 e.lambda_ if e.lambda_ is not None else "", e.block_count) for e in payload.entries]
        return _csv(["construction", "conjecture", "side", "weight", "status", "lambda", "blocks"], rows)
    if isinstance(payload, TableReproduction):
        return distribution_to_csv(payload.closed_form)
    if isinstance(payload, WeightDistribution):
        return distribution_to_csv(payload)
    flat = payload.model_dump(mode="json") if isinstance(payload, BaseModel) else payload
    return _csv(["key", "value"], [(k, json.dumps(v) if isinstance(v, (dict, list)) else v)
                                   for k, v in flat.items()])


# ----------------------------------------------------------------------
#  Testo leggibile
# ----------------------------------------------------------------------


def _spectrum_text(r: SpectrumReport) -> List[str]:
    lines = [f"{r.construction} ({r.side})  verdetto: {r.verdict}"]
    for res in r.results:
        if res.distribution is not None:
            lines.append(f"  {res.method:<12} {weight_enumerator_string(res.distribution)}")
        else:
            lines.append(f"  {res.method:<12} {res.status} {res.note}")
    return lines


def _designs_text(r: DesignRunReport) -> List[str]:
    lines = [f"{r.construction}  t={r.t}"]
    if r.am is not None:
        am = r.am
        lines.append(f"  AM: d={am.d} d_perp={am.d_perp} s={am.s} w={am.w} w_perp={am.w_perp} "
                     f"-> {'vale' if am.holds else 'non si applica'}")
        lines.append(f"      pesi certificati primale {am.primal_design_weights} "
                     f"duale {am.dual_design_weights}")
    lines.append(f"  {'lato':<7}{'peso':>5}  {'stato':<13}{'lambda':>10}{'atteso':>10}{'blocchi':>9}")
    for x in r.results:
        lam = "" if x.lambda_ is None else str(x.lambda_)
        exp = "" if x.expected_lambda is None else str(x.expected_lambda)
        mark = " S" if x.steiner else ""
        lines.append(f"  {x.side:<7}{x.weight:>5}  {x.status:<13}{lam:>10}{exp:>10}{x.block_count:>9}{mark}")
        if x.note:
            lines.append(f"         {x.note}")
    return lines


def _harness_text(r: HarnessReport) -> List[str]:
    lines = [f"Congetture, m={r.m}"] + [f"  # {h}" for h in r.header]
    for e in r.entries:
        lam = "" if e.lambda_ is None else f"lambda={e.lambda_}"
        lines.append(f"  [{e.construction}] C{e.conjecture} {e.side:<6} k={e.weight:<3} "
                     f"{e.status:<7} blocchi={e.block_count:<6} {lam} {e.note}".rstrip())
    return lines


def _table_text(r: TableReproduction) -> List[str]:
    lines = [f"Tabella {r.table}, m={r.m}: {r.status}",
             f"  forma chiusa: {weight_enumerator_string(r.closed_form)}"]
    if r.brute_force is not None:
        lines.append(f"  enumerazione: {weight_enumerator_string(r.brute_force)}")
    if r.note:
        lines.append(f"  {r.note}")
    return lines


def to_text(payload: Payload) -> str:
    if isinstance(payload, SpectrumReport):
        lines = _spectrum_text(payload)
    elif isinstance(payload, DesignRunReport):
        lines = _designs_text(payload)
    elif isinstance(payload, HarnessReport):
        lines = _harness_text(payload)
    elif isinstance(payload, TableReproduction):
        lines = _table_text(payload)
    else:
        flat = payload.model_dump(mode="json") if isinstance(payload, BaseModel) else payload
        lines = [f"{k}: {v}" for k, v in flat.items() if k != "code"]
    return "\n".join(lines) + "\n"


def render(payload: Payload, fmt: str) -> str:
    if fmt == "csv":
        return to_csv(payload)
    if fmt == "text":
        return to_text(payload)
    return to_json(payload)
