# file: app/engine/runner.py

from __future__ import annotations

import logging
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from app.codes.enumeration import minimum_distance, weight_distribution, weight_distribution_bruteforce
from app.codes.linear import LinearCode, dual, extend
from app.constructions.conjectures import conjecture_harness
from app.constructions.cyclic_families import (
    binary_two_zero_code,
    projective_ternary_bch,
    ternary_negacyclic_style_code,
)
from app.constructions.power_functions import ExponentFamily, differential_profile
from app.core.errors import BudgetExceeded, InconsistencyError, OutOfDomain
from app.core.models import (
    DesignRunReport,
    HarnessReport,
    MethodResult,
    RunConfig,
    SpectrumReport,
    TableReproduction,
    WeightDesignResult,
    WeightDistribution,
)
from app.core.settings import default_budget, default_workers, load_app_config
from app.designs.am_checker import am_check, divisibility_check
from app.designs.blocks import lambda_from_block_count, supports_with_count, verify_t_design
from app.designs.difference import design_family_delta
from app.spectra.catalog import FormulaTag, SpectrumFormulaId, eval_closed_form
from app.spectra.macwilliams import macwilliams_transform

from .selector import CodeSelector

WeightRequest = Union[str, Sequence[int]]


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


# tabella -> (formula, costruttore del codice il cui duale la realizza)
_TABLES = {
    "1": (FormulaTag.TABLE1_DUAL, lambda m: binary_two_zero_code(m, 3)),
    "2": (FormulaTag.TABLE2_DUAL, lambda m: ternary_negacyclic_style_code(m, 2)),
    "3": (FormulaTag.TABLE3_EXT_DUAL, lambda m: extend(ternary_negacyclic_style_code(m, 2))),
    "gg2": (FormulaTag.TABLE_GG2_DUAL, projective_ternary_bch),
}


class DesignEngine:
    """
    Orchestratore dei comandi:
    - spectrum: distribuzione dei pesi per uno o più metodi indipendenti
    - designs: previsione Assmus-Mattson + verifica esaustiva dei disegni
    - conjectures / reproduce: harness sperimentale e tabelle
    """

    def __init__(self, budget: int, workers: int) -> None:
        self.log = logging.getLogger(self.__class__.__name__)
        self.budget = budget
        self.workers = workers

    @classmethod
    def from_defaults(cls, run: Optional[RunConfig] = None) -> "DesignEngine":
        """Budget e worker da RunConfig se presente, altrimenti da config/app_config.json."""
        if run is not None:
            return cls(budget=run.enumeration_budget, workers=run.worker_count)
        return cls(budget=default_budget(), workers=default_workers())

    @staticmethod
    def long_budget() -> int:
        return load_app_config().enumeration.long_budget

    # ------------------------------------------------------------------
    #  Spettri
    # ------------------------------------------------------------------

    def _side_code(self, code: LinearCode, side: str) -> LinearCode:
        return code if side == "primal" else dual(code)

    def _method(self, method: str, selector: CodeSelector, code: LinearCode,
                side: str) -> MethodResult:
        if method == "closed-form":
            formula = selector.closed_form(side)
            if formula is None:
                return MethodResult(method=method, status="N/A", note="Nessuna forma chiusa per questo codice")
            return MethodResult(method=method, status="OK", distribution=eval_closed_form(formula),
                                note=formula.tag.value)
        if method == "brute":
            wd = weight_distribution_bruteforce(self._side_code(code, side), self.budget, self.workers)
            return MethodResult(method=method, status="OK", distribution=wd)
        other = "dual" if side == "primal" else "primal"
        wd = weight_distribution_bruteforce(self._side_code(code, other), self.budget, self.workers)
        return MethodResult(method=method, status="OK", distribution=macwilliams_transform(wd),
                            note=f"trasformata del lato {other}")

    def spectrum(self, selector: CodeSelector, method: str = "all",
                 side: str = "primal") -> SpectrumReport:
        code = selector.build()
        methods = ["brute", "macwilliams", "closed-form"] if method == "all" else [method]
        results: List[MethodResult] = []
        for name in methods:
            try:
                results.append(self._method(name, selector, code, side))
            except BudgetExceeded as e:
                if method != "all":
                    raise
                self.log.info("Metodo %s saltato: %s", name, e)
                results.append(MethodResult(method=name, status="SKIPPED", note=str(e)))

        done = [r.distribution.counts for r in results if r.status == "OK" and r.distribution]
        if len(done) < 2:
            verdict = "SINGLE"
        else:
            verdict = "MATCH" if all(c == done[0] for c in done) else "MISMATCH"
        if verdict == "MISMATCH":
            self.log.error("Distribuzioni discordanti per %s (%s)", selector.label(), side)
        return SpectrumReport(construction=selector.label(), params=selector.params(), side=side,
                              results=results, verdict=verdict, generated_at=_now())

    # ------------------------------------------------------------------
    #  Disegni
    # ------------------------------------------------------------------

    def _distributions(self, selector: CodeSelector,
                       code: LinearCode) -> Tuple[WeightDistribution, WeightDistribution]:
        """(primale, duale): enumerazione se possibile, altrimenti forme chiuse."""
        try:
            primal = weight_distribution(code, self.budget, self.workers)
        except BudgetExceeded:
            formula = selector.closed_form("primal") or selector.closed_form("dual")
            if formula is None:
                raise
            self.log.info("Enumerazione oltre il budget: uso la forma chiusa %s", formula.tag.value)
            wd = eval_closed_form(formula)
            primal = wd if formula == selector.closed_form("primal") else macwilliams_transform(wd)
        return primal, macwilliams_transform(primal)

    @staticmethod
    def _requested(request: WeightRequest, primal: WeightDistribution,
                   dual_wd: WeightDistribution, t: int) -> List[Tuple[str, int]]:
        v = primal.v

        def nontrivial(wd: WeightDistribution) -> List[int]:
            return [w for w in wd.weights if t < w < v]

        if isinstance(request, str):
            if request == "dual":
                return [("dual", w) for w in nontrivial(dual_wd)]
            if request == "primal":
                return [("primal", w) for w in nontrivial(primal)]
            if request == "all":
                return [("primal", w) for w in nontrivial(primal)] + [("dual", w) for w in nontrivial(dual_wd)]
            raise OutOfDomain(f"Selezione pesi non valida: {request!r}")
        return [("primal", int(w)) for w in request]

    def _verify_weight(self, selector: CodeSelector, side_code: LinearCode, side: str, w: int,
                       t: int, count: int, predicted: bool) -> WeightDesignResult:
        expected = selector.expected_lambda(side, w, t)
        base: Dict[str, Any] = dict(side=side, weight=w, predicted=predicted, expected_lambda=expected,
                                    codeword_count=count)
        if count == 0:
            return WeightDesignResult(**base, status="EMPTY", note="A_w = 0")
        if w <= t:
            return WeightDesignResult(**base, status="SKIPPED", note=f"peso {w} <= t={t}")
        try:
            supports, _ = supports_with_count(side_code, w, self.budget, self.workers)
        except BudgetExceeded as e:
            return WeightDesignResult(**base, status="SKIPPED", note=str(e))

        verdict = verify_t_design(side_code.v, supports, t, self.workers)
        if not verdict.is_design:
            return WeightDesignResult(**base, status="NOT_A_DESIGN", block_count=len(supports),
                                      note=f"testimoni: {[(c.subset, c.count) for c in verdict.witness]}")
        lam = verdict.lambda_
        v = side_code.v
        # identità di conteggio b C(k,t) = lambda C(v,t)
        if lambda_from_block_count(v, w, t, len(supports)) != lam:
            raise InconsistencyError(f"lambda da conteggio diverso da lambda verificato ({lam})")
        divisible, _ = divisibility_check(t, v, w, lam)
        notes = []
        if expected is not None and expected != lam:
            notes.append(f"lambda atteso {expected}, verificato {lam}")
        return WeightDesignResult(
            **base, status="VERIFIED", lambda_=lam, block_count=len(supports),
            steiner=t >= 2 and lam == 1, divisibility_ok=divisible,
            delta=design_family_delta(t, v, w, lam) if t >= 2 else None,
            note="; ".join(notes),
        )

    def designs(self, selector: CodeSelector, t: int, weights: WeightRequest = "all") -> DesignRunReport:
        code = selector.build()
        # 1) distribuzioni e previsione
        primal, dual_wd = self._distributions(selector, code)
        am = am_check(primal, dual_wd, t)
        self.log.info("AM per %s, t=%d: s=%d, d=%d, vale=%s", selector.label(), t, am.s, am.d, am.holds)

        # 2) verifica esaustiva peso per peso
        dual_code: Optional[LinearCode] = None
        results: List[WeightDesignResult] = []
        for side, w in self._requested(weights, primal, dual_wd, t):
            if side == "dual" and dual_code is None:
                dual_code = dual(code)
            side_code = code if side == "primal" else dual_code
            wd = primal if side == "primal" else dual_wd
            predicted = w in (am.primal_design_weights if side == "primal" else am.dual_design_weights)
            count = wd[w] if 0 <= w <= wd.v else 0
            results.append(self._verify_weight(selector, side_code, side, w, t, count, predicted))

        return DesignRunReport(construction=selector.label(), params=selector.params(), t=t, am=am,
                               results=results, generated_at=_now())

    # ------------------------------------------------------------------
    #  Harness e tabelle
    # ------------------------------------------------------------------

    def conjectures(self, m: int) -> HarnessReport:
        return conjecture_harness(m, self.budget, self.workers)

    def reproduce(self, table: str, m: int) -> TableReproduction:
        if table not in _TABLES:
            raise OutOfDomain(f"Tabella sconosciuta: {table!r} (valori: {', '.join(_TABLES)})")
        tag, build = _TABLES[table]
        closed = eval_closed_form(SpectrumFormulaId(tag, m))
        try:
            brute = weight_distribution_bruteforce(dual(build(m)), self.budget, self.workers)
        except BudgetExceeded as e:
            return TableReproduction(table=table, m=m, closed_form=closed, status="SKIPPED",
                                     note=str(e), generated_at=_now())
        status = "CONFIRMED" if brute.counts == closed.counts else "MISMATCH"
        return TableReproduction(table=table, m=m, closed_form=closed, brute_force=brute,
                                 status=status, generated_at=_now())

    # ------------------------------------------------------------------
    #  Funzioni potenza e parametri dei codici
    # ------------------------------------------------------------------

    def power(self, exponent: ExponentFamily) -> Dict[str, Any]:
        s = exponent.s()
        profile = differential_profile(exponent.q, exponent.m, s, self.budget)
        out: Dict[str, Any] = {"exponent": exponent.to_json(), "profile": profile.to_json()}
        if exponent.q == 2:
            out["apn"] = profile.max_count == 2
        else:
            out["planar"] = profile.max_count == 1
        return out

    def code_info(self, selector: CodeSelector) -> Dict[str, Any]:
        code = selector.build()
        try:
            d = minimum_distance(code, self.budget, self.workers)
        except BudgetExceeded as e:
            self.log.info("Distanza minima non calcolata: %s", e)
            d = None
        return {"construction": selector.label(), "params": selector.params(),
                "v": code.v, "dim": code.k_dim, "d": d, "code": code.to_json()}
