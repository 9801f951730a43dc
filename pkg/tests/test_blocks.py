# file: tests/test_blocks.py

import itertools

import numpy as np
import pytest

from app.codes.families import hamming_like_code, reed_muller
from app.codes.linear import LinearCode
from app.core.errors import (
    InvalidBlock,
    MixedBlockSizes,
    NonIntegralLambda,
    StrengthNotBelowBlockSize,
)
from app.designs.blocks import (
    blocks_from_text,
    blocks_to_text,
    coverage_counts,
    design_from_json,
    design_to_json,
    induced_lambda,
    is_steiner,
    lambda_from_block_count,
    load_blocks,
    make_design,
    perfect_code_design_parameters,
    save_blocks,
    subset_rank,
    subset_unrank,
    supports_of_weight,
    supports_with_count,
    verify_t_design,
)

FANO = [tuple(sorted(((0 + i) % 7, (1 + i) % 7, (3 + i) % 7))) for i in range(7)]


def test_fano_plane():
    verdict = verify_t_design(7, FANO, 2)
    assert verdict.is_design
    assert verdict.lambda_ == 1
    assert verdict.block_count == 7
    # un 2-disegno è anche un 1-disegno
    assert verify_t_design(7, FANO, 1).lambda_ == 3


def test_missing_block_gives_witnesses():
    verdict = verify_t_design(7, FANO[:-1], 2)
    assert not verdict.is_design
    hi, lo = verdict.witness
    assert hi.count == 1 and lo.count == 0
    assert not any(set(lo.subset) <= set(b) for b in FANO[:-1])


def test_workers_give_same_counts():
    blocks = supports_of_weight(reed_muller(2, 4), 6)
    a = coverage_counts(16, blocks, 3, workers=1)
    b = coverage_counts(16, blocks, 3, workers=4)
    assert np.array_equal(a, b)


def test_colex_rank_roundtrip():
    subsets = sorted(itertools.combinations(range(8), 3), key=lambda s: subset_rank(s))
    assert [subset_rank(s) for s in subsets] == list(range(56))
    assert all(subset_unrank(subset_rank(s), 3) == s for s in subsets)


def test_block_validation():
    with pytest.raises(InvalidBlock):
        verify_t_design(7, [], 2)
    with pytest.raises(InvalidBlock):
        verify_t_design(7, [(0, 0, 1)], 1)
    with pytest.raises(InvalidBlock):
        verify_t_design(7, [(0, 1, 7)], 1)
    with pytest.raises(InvalidBlock):
        verify_t_design(7, [(0, 1, 3), (3, 1, 0)], 1)
    with pytest.raises(MixedBlockSizes):
        verify_t_design(7, [(0, 1, 3), (0, 1)], 1)
    with pytest.raises(StrengthNotBelowBlockSize):
        verify_t_design(7, FANO, 3)


def test_lambda_identities():
    assert lambda_from_block_count(7, 3, 2, 7) == 1
    assert lambda_from_block_count(16, 4, 3, 140) == 1
    with pytest.raises(NonIntegralLambda):
        lambda_from_block_count(7, 3, 2, 5)
    assert induced_lambda(3, 16, 4, 1, 2) == 7
    assert induced_lambda(3, 16, 4, 1, 0) == 140
    assert induced_lambda(2, 7, 3, 1, 1) == 3


def test_make_design_and_steiner():
    design = make_design(7, FANO, 2)
    assert design is not None and is_steiner(design)
    assert design.b == 7
    assert make_design(7, FANO[:-1], 2) is None


def test_supports():
    supports, count = supports_with_count(hamming_like_code(2, 3), 3)
    assert count == 7 and len(supports) == 7
    assert verify_t_design(7, supports, 2).lambda_ == 1
    # su GF(3) ogni supporto viene da q-1 = 2 parole
    supports, count = supports_with_count(hamming_like_code(3, 3), 3)
    assert count == 104 and len(supports) == 52
    assert supports == sorted(supports)


def test_perfect_code_designs():
    assert perfect_code_design_parameters(hamming_like_code(2, 3)) == (2, 7, 3, 1)
    assert perfect_code_design_parameters(hamming_like_code(3, 3)) == (2, 13, 3, 2)
    not_perfect = LinearCode.from_generator(2, [[1, 1, 1, 0, 0], [0, 0, 1, 1, 1]])
    assert perfect_code_design_parameters(not_perfect) is None
    # verifica esaustiva del teorema sul [13, 10, 3] ternario
    t, v, k, lam = perfect_code_design_parameters(hamming_like_code(3, 3))
    supports = supports_of_weight(hamming_like_code(3, 3), k)
    assert verify_t_design(v, supports, t).lambda_ == lam


def test_text_and_json_io(tmp_path):
    text = "# piano di Fano\n" + blocks_to_text(FANO) + "\n"
    assert blocks_from_text(text) == FANO
    with pytest.raises(InvalidBlock):
        blocks_from_text("0 1 x\n")

    path = tmp_path / "fano.txt"
    save_blocks(path, FANO)
    assert load_blocks(path) == FANO

    design = make_design(7, FANO, 2)
    assert design_from_json(design_to_json(design)) == design
    tampered = design_to_json(design).replace('"lambda": 1', '"lambda": 2')
    with pytest.raises(InvalidBlock):
        design_from_json(tampered)
