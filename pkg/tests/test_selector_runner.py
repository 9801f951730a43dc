# file: tests/test_selector_runner.py

import pytest

from app.constructions.power_functions import ExponentFamily
from app.core.errors import BudgetExceeded, OutOfDomain
from app.engine.runner import DesignEngine
from app.engine.selector import CodeKind, CodeSelector
from app.spectra.catalog import FormulaTag


@pytest.fixture
def engine(budget):
    return DesignEngine(budget=budget, workers=1)


def gold(m=5, extended=False):
    return CodeSelector(CodeKind.FAMILY, m, exponent=ExponentFamily.of("gold", m), extended=extended)


# ----------------------------------------------------------------------
#  Selettore
# ----------------------------------------------------------------------


def test_selector_builds_codes():
    assert CodeSelector(CodeKind.HAMMING, 4).build().params == (15, 11)
    assert CodeSelector(CodeKind.HAMMING, 3, q=3).build().params == (13, 10)
    assert CodeSelector(CodeKind.RM_DUAL, 4).build().params == (16, 11)
    assert CodeSelector(CodeKind.RM, 4, r=1).build().params == (16, 5)
    assert gold().build().params == (31, 21)
    assert gold(extended=True).build().params == (32, 21)
    assert CodeSelector(CodeKind.PROJECTIVE_BCH, 3).build().params == (13, 7)
    planar = CodeSelector(CodeKind.FAMILY, 3, exponent=ExponentFamily.of("planar", 3), extended=True)
    assert planar.build().params == (27, 20)
    assert planar.field_order == 3


def test_selector_closed_forms():
    ham = CodeSelector(CodeKind.HAMMING, 4)
    assert ham.closed_form("primal").tag is FormulaTag.HAMMING
    assert ham.closed_form("dual").tag is FormulaTag.SIMPLEX
    assert gold().closed_form("dual").tag is FormulaTag.TABLE1_DUAL
    assert gold(extended=True).closed_form("primal").tag is FormulaTag.GOLDLIKE_EXTENDED
    assert CodeSelector(CodeKind.RM, 4, r=2).closed_form("primal") is None


def test_selector_expected_lambda():
    assert CodeSelector(CodeKind.HAMMING, 4).expected_lambda("primal", 5, 2) == 16
    assert CodeSelector(CodeKind.HAMMING, 4).expected_lambda("dual", 8, 2) == 4
    assert CodeSelector(CodeKind.RM_DUAL, 4).expected_lambda("primal", 4, 3) == 1
    assert gold().expected_lambda("dual", 12, 2) == 44
    assert gold().expected_lambda("primal", 9, 2) is None


def test_selector_labels_and_params():
    assert gold().label() == "family:gold(h=1)"
    assert gold(extended=True).label() == "ext(family:gold(h=1))"
    assert gold().params() == {"kind": "family", "m": 5, "q": 2, "extended": False,
                               "family": "gold", "s": 3}


# ----------------------------------------------------------------------
#  Motore
# ----------------------------------------------------------------------


def test_spectrum_all_methods_agree(engine):
    report = engine.spectrum(CodeSelector(CodeKind.RM_DUAL, 4))
    assert report.verdict == "MATCH"
    assert [r.method for r in report.results] == ["brute", "macwilliams", "closed-form"]
    assert all(r.status == "OK" for r in report.results)
    assert report.results[0].distribution[4] == 140


def test_spectrum_without_closed_form(engine):
    report = engine.spectrum(CodeSelector(CodeKind.RM, 4, r=2), side="dual")
    statuses = {r.method: r.status for r in report.results}
    assert statuses == {"brute": "OK", "macwilliams": "OK", "closed-form": "N/A"}
    assert report.verdict == "MATCH"


def test_spectrum_budget(engine):
    sel = CodeSelector(CodeKind.FAMILY, 7, exponent=ExponentFamily.of("gold", 7))
    with pytest.raises(BudgetExceeded):
        engine.spectrum(sel, method="brute")
    report = engine.spectrum(sel, method="all")
    statuses = {r.method: r.status for r in report.results}
    assert statuses["brute"] == "SKIPPED"
    assert statuses["macwilliams"] == "OK"
    assert report.verdict == "MATCH"


def test_designs_hamming(engine):
    report = engine.designs(CodeSelector(CodeKind.HAMMING, 4), 2, [3, 4])
    assert report.am.holds
    lam = {r.weight: r.lambda_ for r in report.results}
    assert lam == {3: 1, 4: 6}
    first = report.results[0]
    assert first.status == "VERIFIED" and first.predicted and first.steiner
    assert first.divisibility_ok
    assert first.delta == 15
    assert first.expected_lambda == 1
    assert first.note == ""


def test_designs_reports_empty_and_trivial_weights(engine):
    report = engine.designs(CodeSelector(CodeKind.HAMMING, 3), 2, [2, 5])
    status = {r.weight: r.status for r in report.results}
    assert status == {2: "EMPTY", 5: "EMPTY"}
    report = engine.designs(CodeSelector(CodeKind.HAMMING, 4), 2, "dual")
    assert [(r.weight, r.lambda_) for r in report.results] == [(8, 4)]


def test_designs_rm_dual_steiner(engine):
    report = engine.designs(CodeSelector(CodeKind.RM_DUAL, 4), 3, [4])
    (res,) = report.results
    assert res.status == "VERIFIED"
    assert res.lambda_ == 1 and res.steiner
    assert res.block_count == 140


def test_designs_not_a_design(engine):
    # i pesi 8 di RM(1,4) formano un 3-disegno, non un 4-disegno
    report = engine.designs(CodeSelector(CodeKind.RM, 4, r=1), 4, [8])
    (res,) = report.results
    assert not report.am.holds
    assert res.status == "NOT_A_DESIGN"
    assert "testimoni" in res.note


def test_reproduce(engine):
    rep = engine.reproduce("1", 5)
    assert rep.status == "CONFIRMED"
    assert rep.closed_form.nonzero() == {0: 1, 12: 310, 16: 527, 20: 186}
    assert engine.reproduce("gg2", 3).status == "CONFIRMED"
    with pytest.raises(OutOfDomain):
        engine.reproduce("1", 4)
    with pytest.raises(OutOfDomain):
        engine.reproduce("9", 3)


def test_reproduce_skips_over_budget():
    small = DesignEngine(budget=2 ** 10, workers=1)
    rep = small.reproduce("2", 5)
    assert rep.status == "SKIPPED"
    assert rep.brute_force is None


def test_power_and_code_info(engine):
    out = engine.power(ExponentFamily.of("gold", 5))
    assert out["apn"] is True
    assert out["profile"]["max"] == 2
    out = engine.power(ExponentFamily.of("planar-half", 3, h=2))
    assert out["planar"] is False
    info = engine.code_info(CodeSelector(CodeKind.HAMMING, 4))
    assert (info["v"], info["dim"], info["d"]) == (15, 11, 3)


def test_from_defaults_reads_config():
    engine = DesignEngine.from_defaults()
    assert engine.budget >= 2 ** 10
    assert engine.workers >= 1
    assert DesignEngine.long_budget() >= engine.budget


# ----------------------------------------------------------------------
#  Validazione degli esponenti
# ----------------------------------------------------------------------


@pytest.mark.parametrize("exponent", [
    ExponentFamily.of("gold", 5, s=1),    # lineare, non APN
    ExponentFamily.of("gold", 5, s=30),   # inverso: APN ma fuori dalla classe di Gold
    ExponentFamily.of("gold", 4),         # m pari
    ExponentFamily.of("inverse", 5),
])
def test_no_table_for_unverified_binary_exponents(exponent):
    sel = CodeSelector(CodeKind.FAMILY, exponent.m, exponent=exponent)
    assert sel.closed_form("primal") is None
    assert sel.closed_form("dual") is None
    assert sel.expected_lambda("primal", 5, 2) is None


def test_raw_exponent_in_family_class_keeps_table():
    # 6 = 2 * 3: stessa classe ciclotomica di Gold h = 1
    sel = CodeSelector(CodeKind.FAMILY, 5, exponent=ExponentFamily.of("gold", 5, s=6))
    assert sel.closed_form("dual").tag is FormulaTag.TABLE1_DUAL
    assert sel.expected_lambda("primal", 5, 2) == 4


def test_no_table_for_non_planar_ternary_exponent():
    # (3^2+1)/2 = 5 non è planare su GF(27)
    sel = CodeSelector(CodeKind.FAMILY, 3, exponent=ExponentFamily.of("planar-half", 3, h=2), extended=True)
    assert sel.closed_form("primal") is None and sel.closed_form("dual") is None
    assert sel.expected_lambda("primal", 5, 2) is None
    planar = CodeSelector(CodeKind.FAMILY, 3, exponent=ExponentFamily.of("planar", 3), extended=True)
    assert planar.closed_form("dual").tag is FormulaTag.TABLE3_EXT_DUAL
    assert planar.expected_lambda("primal", 5, 2) == 20
