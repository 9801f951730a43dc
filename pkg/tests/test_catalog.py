# file: tests/test_catalog.py

from math import comb

import pytest

from app.codes.enumeration import weight_distribution_bruteforce
from app.codes.families import hamming_like_code, reed_muller
from app.codes.linear import dual, extend
from app.constructions.cyclic_families import binary_two_zero_code, ternary_negacyclic_style_code
from app.constructions.power_functions import ExponentFamily
from app.core.errors import OutOfDomain
from app.spectra import catalog
from app.spectra.catalog import FormulaTag, SpectrumFormulaId, eval_closed_form
from app.spectra.macwilliams import macwilliams_transform


def F(tag, m, q=2):
    return eval_closed_form(SpectrumFormulaId(tag, m, q))


# ----------------------------------------------------------------------
#  Coerenza: ogni formula somma a q^kappa (le divisioni sono esatte)
# ----------------------------------------------------------------------


@pytest.mark.parametrize("tag,ms", [
    (FormulaTag.RM_DUAL, [3, 4, 5, 6, 7, 8]),
    (FormulaTag.TABLE1_DUAL, [3, 5, 7, 9, 11]),
    (FormulaTag.GOLDLIKE_PRIMAL, [5, 7, 9]),
    (FormulaTag.GOLDLIKE_EXTENDED, [5, 7]),
    (FormulaTag.GOLDLIKE_EXTENDED_DUAL, [5, 7, 9]),
    (FormulaTag.TABLE2_DUAL, [3, 5, 7]),
    (FormulaTag.TABLE3_EXT_DUAL, [3, 5, 7]),
    (FormulaTag.TERNARY_EXTENDED, [3, 5]),
    (FormulaTag.TABLE_GG2_DUAL, [3, 5, 7]),
    (FormulaTag.PROJECTIVE_TERNARY_PRIMAL, [3, 5]),
    (FormulaTag.RM_FIRST_ORDER, [1, 2, 5, 8]),
])
def test_formulas_are_consistent(tag, ms):
    for m in ms:
        wd = F(tag, m)
        assert wd.is_consistent()


@pytest.mark.parametrize("q,m", [(2, 2), (2, 5), (2, 9), (3, 3), (3, 5), (4, 2), (5, 3)])
def test_hamming_and_simplex_are_consistent(q, m):
    ham = F(FormulaTag.HAMMING, m, q)
    assert ham.is_consistent()
    assert ham.minimum_distance == 3
    if q != 4:
        assert macwilliams_transform(ham) == F(FormulaTag.SIMPLEX, m, q)


def test_table_constants_sum_for_large_m():
    for m in range(3, 26, 2):
        c1 = SpectrumFormulaId(FormulaTag.TABLE1_DUAL, m).constants()
        assert 1 + c1["a"] + c1["b"] + c1["c"] == 2 ** (2 * m)
        gg = SpectrumFormulaId(FormulaTag.TABLE_GG2_DUAL, m).constants()
        assert 1 + gg["a"] + gg["b"] + gg["c"] == 3 ** (2 * m)
        t3 = SpectrumFormulaId(FormulaTag.TABLE3_EXT_DUAL, m).constants()
        assert 3 + 2 * t3["u"] + t3["v"] == 3 ** (2 * m + 1)
        if m >= 5:
            ge = SpectrumFormulaId(FormulaTag.GOLDLIKE_EXTENDED_DUAL, m).constants()
            assert 2 + 2 * ge["u"] + ge["v"] == 2 ** (2 * m + 1)


def test_domains():
    with pytest.raises(OutOfDomain):
        F(FormulaTag.TABLE1_DUAL, 4)
    with pytest.raises(OutOfDomain):
        F(FormulaTag.GOLDLIKE_PRIMAL, 3)
    with pytest.raises(OutOfDomain):
        F(FormulaTag.RM_DUAL, 2)
    with pytest.raises(OutOfDomain):
        F(FormulaTag.HAMMING, 2, 3)  # gcd(2, 2) != 1


# ----------------------------------------------------------------------
#  Valori puntuali
# ----------------------------------------------------------------------


def test_rm_dual_values():
    wd = F(FormulaTag.RM_DUAL, 4)
    assert wd.nonzero() == {0: 1, 4: 140, 6: 448, 8: 870, 10: 448, 12: 140, 16: 1}
    assert wd == weight_distribution_bruteforce(reed_muller(2, 4))


def test_hamming_matches_enumeration():
    assert F(FormulaTag.HAMMING, 4) == weight_distribution_bruteforce(hamming_like_code(2, 4))
    assert F(FormulaTag.HAMMING, 3, 3) == weight_distribution_bruteforce(hamming_like_code(3, 3))


def test_table1_at_m5():
    assert F(FormulaTag.TABLE1_DUAL, 5).nonzero() == {0: 1, 12: 310, 16: 527, 20: 186}
    primal = F(FormulaTag.GOLDLIKE_PRIMAL, 5)
    assert primal[5] == 186 == catalog.goldlike_a5(5)
    assert macwilliams_transform(primal) == F(FormulaTag.TABLE1_DUAL, 5)


def test_goldlike_extended_dual_at_m5():
    ext_dual = F(FormulaTag.GOLDLIKE_EXTENDED_DUAL, 5)
    assert ext_dual.nonzero() == {0: 1, 12: 496, 16: 1054, 20: 496, 32: 1}
    assert macwilliams_transform(F(FormulaTag.GOLDLIKE_EXTENDED, 5)) == ext_dual


def test_ternary_tables_at_m3():
    assert F(FormulaTag.TABLE2_DUAL, 3).nonzero() == {0: 1, 15: 312, 18: 260, 21: 156}
    assert F(FormulaTag.TABLE3_EXT_DUAL, 3).nonzero() == {0: 1, 15: 702, 18: 780, 21: 702, 27: 2}
    ext = F(FormulaTag.TERNARY_EXTENDED, 3)
    assert ext.minimum_distance == 5
    assert ext[5] == 1404 == catalog.ternary_extended_a5(3)
    assert macwilliams_transform(ext) == F(FormulaTag.TABLE3_EXT_DUAL, 3)


def test_projective_table_at_m3():
    assert F(FormulaTag.TABLE_GG2_DUAL, 3).nonzero() == {0: 1, 6: 156, 9: 494, 12: 78}
    primal = F(FormulaTag.PROJECTIVE_TERNARY_PRIMAL, 3)
    assert primal.minimum_distance == 4
    assert primal[4] == 26


def test_design_lambdas():
    assert catalog.rm_design_lambda(4, 4) == 1
    for k in range(4, 2 ** 6 - 3, 2):
        a = F(FormulaTag.RM_DUAL, 6)[k]
        assert catalog.rm_design_lambda(6, k) * comb(64, 3) == a * comb(k, 3)
    with pytest.raises(OutOfDomain):
        catalog.rm_design_lambda(4, 5)

    assert [catalog.hamming_example_lambda(4, k) for k in range(3, 8)] == [1, 6, 16, 40, 87]
    assert [catalog.hamming_design_lambda(2, 4, k) for k in range(3, 8)] == [1, 6, 16, 40, 87]
    assert catalog.hamming_dual_design_lambda(3, 3) == 6

    assert [catalog.goldlike_example_lambda(5, k) for k in range(5, 9)] == [4, 26, 119, 476]
    assert [catalog.goldlike_dual_example_lambda(5, k) for k in (12, 16, 20)] == [44, 136, 76]
    assert [catalog.goldlike_extended_example_lambda(5, k) for k in (6, 8, 10)] == [4, 119, 1464]
    assert [catalog.goldlike_extended_dual_example_lambda(5, k) for k in (12, 16, 20)] == [22, 119, 114]
    assert catalog.ternary_extended_example_lambda(3, 5) == 20
    assert catalog.ternary_extended_example_lambda(3, 6) is None
    assert catalog.ternary_extended_dual_example_lambda(3, 15) == 105


def test_formula_json():
    data = SpectrumFormulaId(FormulaTag.TABLE1_DUAL, 5).to_json()
    assert data == {"formula": "TABLE1_DUAL", "params": {"q": 2, "m": 5, "a": 310, "b": 527, "c": 186}}


# ----------------------------------------------------------------------
#  Forme chiuse contro enumerazione, famiglia per famiglia
# ----------------------------------------------------------------------


@pytest.mark.parametrize("family,m,h,s", [
    ("gold", 5, 1, 3),
    ("gold", 5, 2, 5),
    ("kasami", 5, 2, 13),
    ("welch", 5, None, 7),
    ("niho1", 5, None, 5),
    ("gold", 7, 1, 3),
    ("gold", 7, 2, 5),
    ("gold", 7, 3, 9),
    ("kasami", 7, 2, 13),
    ("kasami", 7, 3, 57),
    ("welch", 7, None, 11),
    ("niho3", 7, None, 39),
])
def test_three_weight_families_match_closed_forms(family, m, h, s):
    exponent = ExponentFamily.of(family, m, h=h)
    assert exponent.s() == s
    code = binary_two_zero_code(m, s)
    assert weight_distribution_bruteforce(dual(code)).counts == F(FormulaTag.TABLE1_DUAL, m).counts
    ext_dual = weight_distribution_bruteforce(dual(extend(code)))
    assert ext_dual.counts == F(FormulaTag.GOLDLIKE_EXTENDED_DUAL, m).counts
    # il primale segue per MacWilliams
    assert macwilliams_transform(ext_dual).counts == F(FormulaTag.GOLDLIKE_EXTENDED, m).counts


@pytest.mark.parametrize("family,h,s", [("planar", 0, 2), ("planar", 1, 4), ("planar", 2, 10)])
def test_planar_exponents_match_tables_two_and_three(family, h, s):
    assert ExponentFamily.of(family, 3, h=h).s() == s
    code = ternary_negacyclic_style_code(3, s)
    assert weight_distribution_bruteforce(dual(code)).counts == F(FormulaTag.TABLE2_DUAL, 3).counts
    ext_dual = weight_distribution_bruteforce(dual(extend(code)))
    assert ext_dual.counts == F(FormulaTag.TABLE3_EXT_DUAL, 3).counts
