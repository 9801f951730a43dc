# file: app/codes/enumeration.py

from __future__ import annotations

import itertools
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np

from app.core.errors import BudgetExceeded, EvenMinimumDistance
from app.core.models import WeightDistribution
from app.core.settings import default_budget, default_workers, load_app_config

from .linear import LinearCode, dual

log = logging.getLogger(__name__)

DUAL_ADVICE = "Enumerare il duale e applicare la trasformata di MacWilliams"

# Popcount su blocchi da 16 bit (fallback se numpy non ha bitwise_count)
_LUT16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)


def popcount_rows(words: np.ndarray) -> np.ndarray:
    """Numero di bit a 1 per riga di un array (N, W) di uint64."""
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(words).sum(axis=-1, dtype=np.int64)
    halves = np.ascontiguousarray(words).view(np.uint16)
    return _LUT16[halves].reshape(words.shape[0], -1).sum(axis=-1, dtype=np.int64)


# ----------------------------------------------------------------------
#  Kernel di rappresentazione delle parole
# ----------------------------------------------------------------------


class _BinaryKernel:
    """Una parola = W parole macchina uint64, bit j%64 della parola j//64."""

    def __init__(self, v: int) -> None:
        self.v = v
        self.words = max(1, -(-v // 64))
        self._shifts = np.arange(64, dtype=np.uint64)

    def pack(self, vecs: np.ndarray) -> np.ndarray:
        vecs = np.asarray(vecs, dtype=np.uint64)
        out = np.zeros((vecs.shape[0], self.words), dtype=np.uint64)
        for w in range(self.words):
            chunk = vecs[:, 64 * w: 64 * (w + 1)]
            if chunk.shape[1]:
                out[:, w] = np.bitwise_or.reduce(chunk << self._shifts[: chunk.shape[1]], axis=1)
        return out

    def unpack(self, state: np.ndarray) -> np.ndarray:
        bits = (state[:, :, None] >> self._shifts) & np.uint64(1)
        return bits.reshape(state.shape[0], -1)[:, : self.v].astype(np.uint8)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return a ^ b

    def scale(self, a: np.ndarray, c: int) -> np.ndarray:
        return a if c % 2 else np.zeros_like(a)

    def weights(self, a: np.ndarray) -> np.ndarray:
        return popcount_rows(a)

    def take(self, a: np.ndarray, mask: np.ndarray) -> np.ndarray:
        return a[mask]

    def concat(self, parts: List[np.ndarray]) -> np.ndarray:
        return np.concatenate(parts, axis=0)


class _TernaryKernel(_BinaryKernel):
    """
    Due piani di bit: piano 0 marca i simboli 1, piano 1 i simboli 2.
    Stato shape (2, N, W).
    """

    def pack(self, vecs: np.ndarray) -> np.ndarray:
        vecs = np.asarray(vecs)
        return np.stack([super().pack(vecs == 1), super().pack(vecs == 2)])

    def unpack(self, state: np.ndarray) -> np.ndarray:
        ones = super().unpack(state[0])
        twos = super().unpack(state[1])
        return (ones + 2 * twos).astype(np.uint8)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a1, a2 = a[0], a[1]
        b1, b2 = b[0], b[1]
        az = ~(a1 | a2)
        bz = ~(b1 | b2)
        r1 = (a1 & bz) | (b1 & az) | (a2 & b2)
        r2 = (a2 & bz) | (b2 & az) | (a1 & b1)
        return np.stack([r1, r2])

    def scale(self, a: np.ndarray, c: int) -> np.ndarray:
        c %= 3
        if c == 0:
            return np.zeros_like(a)
        return a if c == 1 else a[::-1]

    def weights(self, a: np.ndarray) -> np.ndarray:
        return popcount_rows(a[0] | a[1])

    def take(self, a: np.ndarray, mask: np.ndarray) -> np.ndarray:
        return a[:, mask]

    def concat(self, parts: List[np.ndarray]) -> np.ndarray:
        return np.concatenate(parts, axis=1)


class _DenseKernel:
    """Simboli in chiaro (uint8), aritmetica mod q. Per q >= 5."""

    def __init__(self, q: int, v: int) -> None:
        self.q = q
        self.v = v

    def pack(self, vecs: np.ndarray) -> np.ndarray:
        return (np.asarray(vecs, dtype=np.int64) % self.q).astype(np.uint8)

    def unpack(self, state: np.ndarray) -> np.ndarray:
        return state.astype(np.uint8)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return ((a.astype(np.int16) + b) % self.q).astype(np.uint8)

    def scale(self, a: np.ndarray, c: int) -> np.ndarray:
        return ((a.astype(np.int16) * (c % self.q)) % self.q).astype(np.uint8)

    def weights(self, a: np.ndarray) -> np.ndarray:
        return np.count_nonzero(a, axis=1).astype(np.int64)

    def take(self, a: np.ndarray, mask: np.ndarray) -> np.ndarray:
        return a[mask]

    def concat(self, parts: List[np.ndarray]) -> np.ndarray:
        return np.concatenate(parts, axis=0)


def kernel_for(q: int, v: int) -> Any:
    if q == 2:
        return _BinaryKernel(v)
    if q == 3:
        return _TernaryKernel(v)
    return _DenseKernel(q, v)


# ----------------------------------------------------------------------
#  Enumerazione completa (meet-in-the-middle)
# ----------------------------------------------------------------------


def span_table(kernel: Any, q: int, rows: np.ndarray) -> Any:
    """
    Tutte le combinazioni delle righe, per raddoppio: l'indice di
    sum u_i r_i è sum u_i q^i.
    """
    v = rows.shape[1] if rows.ndim == 2 else kernel.v
    table = kernel.pack(np.zeros((1, v), dtype=np.uint8))
    for row in rows:
        r = kernel.pack(row[None, :])
        parts = [table] + [kernel.add(table, kernel.scale(r, c)) for c in range(1, q)]
        table = kernel.concat(parts)
    return table


def _enumerate_range(task: Tuple[Any, ...]) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    q, v, g_low, g_high, h_start, h_end, target = task
    kernel = kernel_for(q, v)
    low = span_table(kernel, q, g_low)
    hist = np.zeros(v + 1, dtype=np.int64)
    found: List[np.ndarray] = []
    powers = np.array([q ** i for i in range(g_high.shape[0])], dtype=np.int64)
    for h in range(h_start, h_end):
        digits = (h // powers) % q if powers.size else np.zeros(0, dtype=np.int64)
        offset = (digits @ g_high) % q if powers.size else np.zeros(v, dtype=np.int64)
        combined = kernel.add(low, kernel.pack(offset[None, :]))
        wts = kernel.weights(combined)
        hist += np.bincount(wts, minlength=v + 1)
        if target is not None:
            mask = wts == target
            if mask.any():
                found.append(kernel.unpack(kernel.take(combined, mask)))
    if target is None:
        return hist, None
    words = np.concatenate(found) if found else np.zeros((0, v), dtype=np.uint8)
    return hist, words


def _split_rows(code: LinearCode) -> Tuple[np.ndarray, np.ndarray]:
    bits = load_app_config().enumeration.low_table_bits
    k_low = min(code.k_dim, int(bits // math.log2(code.q)))
    g = code.gen_basis
    return g[:k_low], g[k_low:]


def _run_full(
    code: LinearCode, target: Optional[int], workers: int
) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    g_low, g_high = _split_rows(code)
    high_count = code.q ** g_high.shape[0]
    n_chunks = 1 if workers <= 1 else min(high_count, workers * 4)
    bounds = [high_count * i // n_chunks for i in range(n_chunks + 1)]
    tasks = [
        (code.q, code.v, g_low, g_high, bounds[i], bounds[i + 1], target)
        for i in range(n_chunks)
        if bounds[i + 1] > bounds[i]
    ]
    if len(tasks) == 1:
        results = [_enumerate_range(tasks[0])]
    else:
        # map conserva l'ordine dei blocchi: risultato indipendente dai worker
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_enumerate_range, tasks))
    hist = np.sum([r[0] for r in results], axis=0)
    if target is None:
        return hist, None
    return hist, np.concatenate([r[1] for r in results])


def full_cost(code: LinearCode) -> int:
    return code.q ** code.k_dim


def _check_budget(required: int, budget: int, advice: str = DUAL_ADVICE) -> None:
    if required > budget:
        raise BudgetExceeded(required, budget, advice)


def weight_distribution_bruteforce(
    code: LinearCode, budget: Optional[int] = None, workers: Optional[int] = None
) -> WeightDistribution:
    """Conteggio esatto enumerando tutte le q^k parole del codice."""
    budget = budget if budget is not None else default_budget()
    workers = workers if workers is not None else default_workers()
    _check_budget(full_cost(code), budget)

    t0 = time.perf_counter()
    log.info(
        "Enumerazione completa %s [%d, %d] su GF(%d): %d parole, worker=%d",
        code.name or "codice", code.v, code.k_dim, code.q, full_cost(code), workers,
    )
    hist, _ = _run_full(code, None, workers)
    counts = tuple(int(c) for c in hist)
    log.info("Enumerazione completata in %.2fs", time.perf_counter() - t0)
    return WeightDistribution(v=code.v, q=code.q, kappa=code.k_dim, counts=counts)


# ----------------------------------------------------------------------
#  Ricerca a peso limitato (sindromi)
# ----------------------------------------------------------------------


def low_weight_cost(code: LinearCode, w: int) -> Optional[int]:
    """
    Vettori parziali da esaminare per trovare le parole di peso w:
    C(v, w-1)(q-1)^(w-1). None se le sindromi non entrano in un int64.
    """
    if w <= 0:
        return 1
    r = code.v - code.k_dim
    if r * math.log2(code.q) >= 62:
        return None
    if w - 1 > code.v:
        return 0
    return math.comb(code.v, w - 1) * (code.q - 1) ** (w - 1)


def _subset_chunks(v: int, size: int, chunk: int) -> Iterator[np.ndarray]:
    if size == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    combos = itertools.combinations(range(v), size)
    while True:
        flat = np.fromiter(
            itertools.chain.from_iterable(itertools.islice(combos, chunk)), dtype=np.int64
        )
        if flat.size == 0:
            return
        yield flat.reshape(-1, size)


def sort_by_information(code: LinearCode, words: np.ndarray) -> np.ndarray:
    """Ordina come l'enumerazione completa: indice sum u_i q^i crescente."""
    if words.shape[0] < 2 or code.k_dim == 0:
        return words
    keys = [words[:, p] for p in code.pivots]
    return words[np.lexsort(keys)]


def _low_weight_search(code: LinearCode, w: int, first_only: bool = False) -> np.ndarray:
    q, v = code.q, code.v
    h = code.parity_check_matrix()
    r = h.shape[0]
    powers = np.array([q ** i for i in range(r)], dtype=np.int64)
    ht = h.T  # (v, r)

    # chiavi di c*H_j per ogni colonna j e scalare c != 0
    cs = np.arange(1, q, dtype=np.int64)
    scaled = (cs[:, None, None] * ht[None, :, :]) % q
    col_keys = (scaled * powers).sum(axis=2).ravel()
    col_j = np.tile(np.arange(v, dtype=np.int64), q - 1)
    col_c = np.repeat(cs, v)
    order = np.lexsort((col_c, col_j, col_keys))
    keys_sorted, j_sorted, c_sorted = col_keys[order], col_j[order], col_c[order]

    size = w - 1
    assignments = list(itertools.product(range(1, q), repeat=size))
    n_vals = len(assignments)
    vals = np.array(assignments, dtype=np.int64).reshape(n_vals, size)
    chunk = max(1, (1 << 18) // n_vals)

    found: List[np.ndarray] = []
    for subsets in _subset_chunks(v, size, chunk):
        n_sub = subsets.shape[0]
        syn = np.einsum("as,bsr->bar", vals, ht[subsets]) % q
        target = (((-syn) % q) * powers).sum(axis=2).ravel()
        left = np.searchsorted(keys_sorted, target, side="left")
        right = np.searchsorted(keys_sorted, target, side="right")
        cnt = right - left
        total = int(cnt.sum())
        if total == 0:
            continue
        cand = np.repeat(np.arange(n_sub * n_vals), cnt)
        offs = np.arange(total) - np.repeat(np.cumsum(cnt) - cnt, cnt)
        pos = np.repeat(left, cnt) + offs
        jj, cc = j_sorted[pos], c_sorted[pos]
        b_idx, a_idx = cand // n_vals, cand % n_vals
        last = subsets[b_idx, -1] if size else np.full(total, -1)
        keep = jj > last
        n = int(keep.sum())
        if n == 0:
            continue
        words = np.zeros((n, v), dtype=np.uint8)
        rows = np.arange(n)
        if size:
            words[rows[:, None], subsets[b_idx[keep]]] = vals[a_idx[keep]]
        words[rows, jj[keep]] = cc[keep]
        found.append(words)
        if first_only:
            break
    words = np.concatenate(found) if found else np.zeros((0, v), dtype=np.uint8)
    return sort_by_information(code, words)


# ----------------------------------------------------------------------
#  API pubblica
# ----------------------------------------------------------------------


def enumeration_plan(code: LinearCode, w: int, budget: Optional[int] = None) -> Dict[str, Any]:
    """Strategia più economica per le parole di peso w e il suo costo."""
    budget = budget if budget is not None else default_budget()
    options = [("full", full_cost(code))]
    low = low_weight_cost(code, w)
    if low is not None:
        options.append(("low-weight", low))
    strategy, cost = min(options, key=lambda o: o[1])
    return {"strategy": strategy, "cost": cost, "fits": cost <= budget, "budget": budget}


def codewords_of_weight(
    code: LinearCode,
    w: int,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> np.ndarray:
    """
    Tutte le parole di peso esatto w, una per riga (uint8), ordinate per
    vettore di informazione (indice sum u_i q^i crescente).
    """
    budget = budget if budget is not None else default_budget()
    workers = workers if workers is not None else default_workers()
    if w == 0:
        return np.zeros((1, code.v), dtype=np.uint8)
    if w < 0 or w > code.v or code.k_dim == 0:
        return np.zeros((0, code.v), dtype=np.uint8)

    plan = enumeration_plan(code, w, budget)
    _check_budget(plan["cost"], budget)
    t0 = time.perf_counter()
    if plan["strategy"] == "full":
        _, words = _run_full(code, w, workers)
    else:
        words = _low_weight_search(code, w)
    log.info(
        "Parole di peso %d in %s: %d (strategia %s, costo %d, %.2fs)",
        w, code.name or "codice", words.shape[0], plan["strategy"], plan["cost"],
        time.perf_counter() - t0,
    )
    return words


def count_of_weight(code: LinearCode, w: int, budget: Optional[int] = None,
                    workers: Optional[int] = None) -> int:
    return int(codewords_of_weight(code, w, budget, workers).shape[0])


def minimum_distance(
    code: LinearCode, budget: Optional[int] = None, workers: Optional[int] = None
) -> Optional[int]:
    """
    Peso minimo non nullo. None per il codice nullo (nessuna parola non nulla).
    Se l'enumerazione completa non rientra nel budget si cerca per pesi
    crescenti con le sindromi.
    """
    budget = budget if budget is not None else default_budget()
    if code.k_dim == 0:
        return None
    if full_cost(code) <= budget:
        return weight_distribution_bruteforce(code, budget, workers).minimum_distance
    for w in range(1, code.v + 1):
        cost = low_weight_cost(code, w)
        if cost is None:
            break
        _check_budget(cost, budget, "Distanza minima oltre il budget anche con la ricerca a peso limitato")
        if _low_weight_search(code, w, first_only=True).shape[0]:
            log.debug("Distanza minima %d trovata con la ricerca a peso limitato", w)
            return w
    raise BudgetExceeded(full_cost(code), budget, DUAL_ADVICE)


def sphere_volume(v: int, q: int, radius: int) -> int:
    return sum(math.comb(v, i) * (q - 1) ** i for i in range(radius + 1))


def is_perfect(
    code: LinearCode, d: Optional[int] = None, budget: Optional[int] = None
) -> Tuple[bool, Optional[int]]:
    """
    (perfetto, raggio e) con d = 2e+1: q^k * V(v, e) == q^v.
    Il codice nullo non ha distanza minima: (False, None).
    """
    if d is None:
        d = minimum_distance(code, budget)
    if d is None:
        return False, None
    if d % 2 == 0:
        raise EvenMinimumDistance(f"Distanza minima pari ({d}): raggio di impacchettamento non definito")
    e = (d - 1) // 2
    perfect = code.q ** code.k_dim * sphere_volume(code.v, code.q, e) == code.q ** code.v
    return perfect, e


def weight_distribution(
    code: LinearCode, budget: Optional[int] = None, workers: Optional[int] = None
) -> WeightDistribution:
    """
    Strategia automatica: enumerazione del codice se rientra nel budget,
    altrimenti del duale seguita da MacWilliams.
    """
    from app.spectra.macwilliams import macwilliams_transform

    budget = budget if budget is not None else default_budget()
    if full_cost(code) <= budget:
        return weight_distribution_bruteforce(code, budget, workers)
    if code.q ** (code.v - code.k_dim) <= budget:
        log.info("Primale oltre il budget: enumero il duale e applico MacWilliams")
        return macwilliams_transform(weight_distribution_bruteforce(dual(code), budget, workers))
    raise BudgetExceeded(min(full_cost(code), code.q ** (code.v - code.k_dim)), budget,
                         "Né il codice né il duale rientrano nel budget")
