# file: app/designs/blocks.py

from __future__ import annotations

import itertools
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from math import comb
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from app.codes.enumeration import codewords_of_weight, is_perfect
from app.codes.linear import LinearCode
from app.core.errors import (
    InvalidBlock,
    MixedBlockSizes,
    NonIntegralLambda,
    StrengthNotBelowBlockSize,
)
from app.core.models import CoverageWitness, Design, TDesignVerdict

log = logging.getLogger(__name__)

Block = Tuple[int, ...]

# blocchi per passata nel conteggio dei t-sottoinsiemi
_CHUNK_INCIDENCES = 1 << 22


# ----------------------------------------------------------------------
#  Supporti
# ----------------------------------------------------------------------


def supports_with_count(
    code: LinearCode, w: int, budget: Optional[int] = None, workers: Optional[int] = None
) -> Tuple[List[Block], int]:
    """(supporti distinti di peso w ordinati, numero di parole di peso w)."""
    words = codewords_of_weight(code, w, budget, workers)
    if words.shape[0] == 0:
        return [], 0
    masks = np.unique(np.packbits(words != 0, axis=1), axis=0)
    bits = np.unpackbits(masks, axis=1, count=code.v).astype(bool)
    supports = sorted(tuple(int(i) for i in np.flatnonzero(row)) for row in bits)

    if code.q > 2 and w > 0 and len(supports) * (code.q - 1) != words.shape[0]:
        log.warning(
            "Peso %d: %d supporti distinti per %d parole (q-1=%d): supporti non solo multipli scalari",
            w, len(supports), words.shape[0], code.q - 1,
        )
    return supports, int(words.shape[0])


def supports_of_weight(
    code: LinearCode, w: int, budget: Optional[int] = None, workers: Optional[int] = None
) -> List[Block]:
    return supports_with_count(code, w, budget, workers)[0]


# ----------------------------------------------------------------------
#  Verifica dei t-disegni
# ----------------------------------------------------------------------


def _validate_blocks(v: int, blocks: Sequence[Iterable[int]]) -> np.ndarray:
    if not blocks:
        raise InvalidBlock("Insieme di blocchi vuoto")
    rows = [tuple(sorted(int(x) for x in b)) for b in blocks]
    sizes = {len(r) for r in rows}
    if len(sizes) != 1:
        raise MixedBlockSizes(f"Blocchi di dimensioni diverse: {sorted(sizes)}")
    for r in rows:
        if len(set(r)) != len(r):
            raise InvalidBlock(f"Punto ripetuto nel blocco {r}")
        if r and (r[0] < 0 or r[-1] >= v):
            raise InvalidBlock(f"Blocco {r} fuori da [0, {v})")
    if len(set(rows)) != len(rows):
        raise InvalidBlock("Blocchi ripetuti: solo disegni semplici")
    return np.array(rows, dtype=np.int64).reshape(len(rows), -1)


def _binom_table(v: int, t: int) -> np.ndarray:
    table = np.zeros((v + 1, t + 1), dtype=np.int64)
    for x in range(v + 1):
        for j in range(t + 1):
            table[x, j] = comb(x, j)
    return table


def subset_rank(subset: Sequence[int]) -> int:
    """Rango colex di un sottoinsieme ordinato: sum C(x_i, i+1)."""
    return sum(comb(x, i + 1) for i, x in enumerate(sorted(subset)))


def subset_unrank(rank: int, t: int) -> Block:
    out = []
    for i in range(t, 0, -1):
        x = i - 1
        while comb(x + 1, i) <= rank:
            x += 1
        out.append(x)
        rank -= comb(x, i)
    return tuple(sorted(out))


def _count_chunk(arr: np.ndarray, combos: np.ndarray, binom: np.ndarray, size: int) -> np.ndarray:
    ranks = np.zeros((arr.shape[0], combos.shape[0]), dtype=np.int64)
    for i in range(combos.shape[1]):
        ranks += binom[arr[:, combos[:, i]], i + 1]
    return np.bincount(ranks.ravel(), minlength=size)


def coverage_counts(v: int, blocks: Sequence[Iterable[int]], t: int,
                    workers: int = 1) -> np.ndarray:
    """Occorrenze di ogni t-sottoinsieme di [0, v) nei blocchi, per rango colex."""
    arr = _validate_blocks(v, blocks)
    k = arr.shape[1]
    if t >= k:
        raise StrengthNotBelowBlockSize(f"t={t} deve essere minore di k={k}")
    size = comb(v, t)
    combos = np.array(list(itertools.combinations(range(k), t)), dtype=np.int64).reshape(-1, t)
    binom = _binom_table(v, t)
    step = max(1, _CHUNK_INCIDENCES // max(1, combos.shape[0]))
    chunks = [arr[i: i + step] for i in range(0, arr.shape[0], step)]
    if workers <= 1 or len(chunks) == 1:
        parts = [_count_chunk(c, combos, binom, size) for c in chunks]
    else:
        # ogni worker ha il suo contatore, poi somma
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda c: _count_chunk(c, combos, binom, size), chunks))
    return np.sum(parts, axis=0)


def verify_t_design(v: int, blocks: Sequence[Iterable[int]], t: int,
                    workers: int = 1) -> TDesignVerdict:
    """
    lambda se ogni t-sottoinsieme è coperto lo stesso numero di volte,
    altrimenti due testimoni (il più coperto e il meno coperto).
    """
    counts = coverage_counts(v, blocks, t, workers)
    k = len(next(iter(blocks)))
    hi, lo = int(counts.argmax()), int(counts.argmin())
    if counts[hi] == counts[lo]:
        return TDesignVerdict(v=v, k=k, t=t, block_count=len(blocks), lambda_=int(counts[hi]))
    witness = (
        CoverageWitness(subset=subset_unrank(hi, t), count=int(counts[hi])),
        CoverageWitness(subset=subset_unrank(lo, t), count=int(counts[lo])),
    )
    log.debug("Non è un %d-disegno: %s", t, witness)
    return TDesignVerdict(v=v, k=k, t=t, block_count=len(blocks), witness=witness)


def lambda_from_block_count(v: int, k: int, t: int, b: int) -> int:
    num, den = b * comb(k, t), comb(v, t)
    lam, rem = divmod(num, den)
    if rem:
        raise NonIntegralLambda(f"lambda = {b}*C({k},{t})/C({v},{t}) = {num}/{den} non intero")
    return lam


def induced_lambda(t: int, v: int, k: int, lam: int, s: int) -> int:
    """Indice del s-disegno indotto da un t-(v,k,lambda) disegno, 0 <= s <= t."""
    num, den = lam * comb(v - s, t - s), comb(k - s, t - s)
    val, rem = divmod(num, den)
    if rem:
        raise NonIntegralLambda(f"lambda_{s} = {num}/{den} non intero")
    return val


def make_design(v: int, blocks: Sequence[Iterable[int]], t: int) -> Optional[Design]:
    verdict = verify_t_design(v, blocks, t)
    if not verdict.is_design:
        return None
    rows = sorted(tuple(sorted(int(x) for x in b)) for b in blocks)
    return Design(v=v, k=verdict.k, t=t, lambda_=verdict.lambda_, blocks=tuple(rows))


def is_steiner(design: Design) -> bool:
    return design.t >= 2 and design.lambda_ == 1


def perfect_code_design_parameters(code: LinearCode, d: Optional[int] = None,
                                   budget: Optional[int] = None) -> Optional[Tuple[int, int, int, int]]:
    """
    Codice perfetto con d = 2e+1: i supporti di peso minimo formano un
    (e+1)-(v, 2e+1, (q-1)^e) disegno. None se il codice non è perfetto.
    """
    perfect, e = is_perfect(code, d, budget)
    if not perfect or e is None or e == 0:
        return None
    return e + 1, code.v, 2 * e + 1, (code.q - 1) ** e


# ----------------------------------------------------------------------
#  Import / export
# ----------------------------------------------------------------------


def blocks_to_text(blocks: Iterable[Iterable[int]]) -> str:
    """Un blocco per riga, punti separati da spazi."""
    return "".join(" ".join(str(x) for x in b) + "\n" for b in blocks)


def blocks_from_text(text: str) -> List[Block]:
    out: List[Block] = []
    for n, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(tuple(int(x) for x in line.split()))
        except ValueError as e:
            raise InvalidBlock(f"Riga {n} non valida: {line!r}") from e
    return out


def design_to_json(design: Design) -> str:
    return json.dumps(design.model_dump(by_alias=True), ensure_ascii=False)


def design_from_json(text: str) -> Design:
    """Ricarica un disegno e ne riverifica lambda."""
    data = json.loads(text)
    design = Design.model_validate(data)
    verdict = verify_t_design(design.v, design.blocks, design.t)
    if verdict.lambda_ != design.lambda_ or verdict.k != design.k:
        raise InvalidBlock(
            f"Il file dichiara un {design.t}-({design.v},{design.k},{design.lambda_}) disegno "
            f"ma la verifica dà lambda={verdict.lambda_}"
        )
    return design


def save_blocks(path: Path, blocks: Iterable[Iterable[int]]) -> None:
    path.write_text(blocks_to_text(blocks), encoding="utf-8")


def load_blocks(path: Path) -> List[Block]:
    return blocks_from_text(path.read_text(encoding="utf-8"))
