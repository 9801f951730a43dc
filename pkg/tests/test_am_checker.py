# file: tests/test_am_checker.py

import pytest

from app.codes.enumeration import weight_distribution_bruteforce
from app.codes.families import hamming_like_code, reed_muller
from app.core.errors import InconsistentPair, StrengthTooLarge
from app.designs.am_checker import am_check, divisibility_check, nonbinary_cutoff
from app.spectra.catalog import FormulaTag, SpectrumFormulaId, eval_closed_form
from app.spectra.macwilliams import macwilliams_transform


def _pair(code):
    wd = weight_distribution_bruteforce(code)
    return wd, macwilliams_transform(wd)


def test_hamming_7_4():
    primal, dual = _pair(hamming_like_code(2, 3))
    rep = am_check(primal, dual, 2)
    assert (rep.d, rep.d_perp, rep.s) == (3, 4, 1)
    assert rep.holds
    assert rep.primal_design_weights == [3, 4]
    assert rep.dual_design_weights == [4]


def test_rm24_gives_3_designs():
    primal, dual = _pair(reed_muller(2, 4))
    rep = am_check(primal, dual, 3)
    assert rep.holds
    assert rep.primal_design_weights == [4, 6, 8, 10, 12]
    assert rep.dual_design_weights == [8]


def test_gold_dual_three_weights():
    dual = eval_closed_form(SpectrumFormulaId(FormulaTag.TABLE1_DUAL, 5))
    primal = macwilliams_transform(dual)
    rep = am_check(primal, dual, 2)
    assert rep.s == 3 and rep.d == 5
    assert rep.holds
    assert rep.dual_design_weights == [12, 16, 20]
    assert rep.primal_design_weights[:4] == [5, 6, 7, 8]


def test_condition_can_fail():
    # RM(1,4) come primale: d = 8 ma il duale ha troppi pesi per t = 7
    primal, dual = _pair(reed_muller(1, 4))
    rep = am_check(primal, dual, 7)
    assert not rep.holds
    assert rep.primal_design_weights == [] and rep.dual_design_weights == []


def test_nonbinary_cutoff():
    assert nonbinary_cutoff(13, 2, 3) == 13
    assert nonbinary_cutoff(13, 3, 3) == 5
    # [13, 3, 9] simplex ternario
    assert nonbinary_cutoff(13, 3, 9) == 13


def test_ternary_hamming():
    primal, dual = _pair(hamming_like_code(3, 3))
    rep = am_check(primal, dual, 2)
    assert rep.holds
    assert rep.w == 5
    assert rep.primal_design_weights == [3, 4, 5]
    assert rep.dual_design_weights == [9]


def test_errors():
    primal, dual = _pair(hamming_like_code(2, 3))
    with pytest.raises(StrengthTooLarge):
        am_check(primal, dual, 3)
    with pytest.raises(InconsistentPair):
        am_check(primal, primal, 1)
    other = weight_distribution_bruteforce(reed_muller(1, 3))
    with pytest.raises(InconsistentPair):
        am_check(primal, other, 1)


def test_divisibility_check():
    assert divisibility_check(2, 7, 3, 1) == (True, None)
    assert divisibility_check(3, 16, 4, 1) == (True, None)
    assert divisibility_check(2, 8, 3, 1) == (False, 0)
    assert divisibility_check(2, 13, 4, 1) == (True, None)
    assert divisibility_check(2, 14, 4, 1) == (False, 0)
