# file: tests/test_cyclic_families.py

import pytest

from app.codes.enumeration import minimum_distance, weight_distribution_bruteforce
from app.codes.linear import dual, extend
from app.constructions.cyclic_families import (
    binary_two_zero_code,
    projective_designed_distance,
    projective_ternary_bch,
    projective_ternary_two_zero,
    ternary_negacyclic_style_code,
)
from app.core.errors import DegenerateExponent, OutOfDomain


def test_binary_two_zero_parameters():
    code = binary_two_zero_code(5, 3)
    assert code.params == (31, 21)
    assert code.cyclic_meta.generator.degree == 10
    assert code.name == "C2(m=5,s=3)"


def test_binary_dual_three_weights():
    wd = weight_distribution_bruteforce(dual(binary_two_zero_code(5, 3)))
    assert wd.nonzero() == {0: 1, 12: 310, 16: 527, 20: 186}
    # stesso spettro per un'altra famiglia APN (Welch)
    assert weight_distribution_bruteforce(dual(binary_two_zero_code(5, 7))) == wd


def test_binary_degenerate_exponent():
    with pytest.raises(DegenerateExponent):
        binary_two_zero_code(5, 2)
    with pytest.raises(DegenerateExponent):
        binary_two_zero_code(5, 16)


def test_ternary_code_at_m3():
    code = ternary_negacyclic_style_code(3, 2)
    assert code.params == (26, 20)
    assert extend(code).params == (27, 20)
    # s = 10 sta nella stessa classe di s = 4
    assert ternary_negacyclic_style_code(3, 10).same_row_space(ternary_negacyclic_style_code(3, 4))
    with pytest.raises(DegenerateExponent):
        ternary_negacyclic_style_code(3, 3)


def test_ternary_dual_is_table_two():
    wd = weight_distribution_bruteforce(dual(ternary_negacyclic_style_code(3, 2)))
    assert wd.nonzero() == {0: 1, 15: 312, 18: 260, 21: 156}


def test_designed_distance():
    assert projective_designed_distance(3) == 4
    assert projective_designed_distance(5) == 67
    with pytest.raises(OutOfDomain):
        projective_designed_distance(4)


@pytest.mark.parametrize("build", [projective_ternary_bch, projective_ternary_two_zero])
def test_projective_codes_at_m3(build):
    code = build(3)
    assert code.params == (13, 7)
    assert minimum_distance(code) == 4
    assert weight_distribution_bruteforce(dual(code)).nonzero() == {0: 1, 6: 156, 9: 494, 12: 78}


def test_projective_needs_odd_m():
    with pytest.raises(OutOfDomain):
        projective_ternary_two_zero(4)
