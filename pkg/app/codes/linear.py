# file: app/codes/linear.py

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import isprime

from app.algebra.poly import Poly
from app.core.errors import UnsupportedField

log = logging.getLogger(__name__)


def rref_mod(matrix: np.ndarray, q: int) -> Tuple[np.ndarray, List[int]]:
    """
    Forma ridotta a scala per righe su GF(q), q primo.
    Ritorna (righe non nulle, colonne pivot).
    """
    a = np.array(matrix, dtype=np.int64) % q
    if a.ndim != 2:
        raise ValueError("Serve una matrice 2D")
    rows, cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, q)
        a[r] = (a[r] * inv) % q
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r])) % q
        pivots.append(c)
        r += 1
    return a[:r].astype(np.int64), pivots


@dataclass(frozen=True)
class CyclicMeta:
    generator: Poly
    convention: str = "coordinata i <-> coefficiente di x^i"


@dataclass(frozen=True, eq=False)
class LinearCode:
    """
    Codice lineare [v, k_dim] su GF(q), q primo. gen_basis è sempre in forma
    ridotta a scala: la restrizione di una parola alle colonne pivot è il
    suo vettore di informazione.

    == confronta i codici come spazi delle righe (la forma ridotta è unica);
    name e cyclic_meta non contano.
    """

    q: int
    v: int
    k_dim: int
    gen_basis: np.ndarray = field(repr=False)
    pivots: Tuple[int, ...] = field(repr=False, default=())
    cyclic_meta: Optional[CyclicMeta] = None
    name: str = ""

    # --- costruttori -----------------------------------------------------

    @classmethod
    def from_generator(
        cls,
        q: int,
        rows: Any,
        v: Optional[int] = None,
        cyclic_meta: Optional[CyclicMeta] = None,
        name: str = "",
    ) -> "LinearCode":
        if not isprime(q):
            raise UnsupportedField(f"Solo alfabeti primi sono supportati, q={q}")
        arr = np.asarray(rows, dtype=np.int64)
        if arr.size == 0:
            if v is None and arr.ndim == 2:
                v = arr.shape[1]
            if v is None:
                raise ValueError("Lunghezza necessaria per il codice nullo")
            arr = np.zeros((0, v), dtype=np.int64)
        if v is not None and arr.shape[1] != v:
            raise ValueError(f"Righe di lunghezza {arr.shape[1]}, attesa {v}")
        basis, pivots = rref_mod(arr, q)
        basis.setflags(write=False)
        return cls(
            q=q,
            v=arr.shape[1],
            k_dim=basis.shape[0],
            gen_basis=basis,
            pivots=tuple(pivots),
            cyclic_meta=cyclic_meta,
            name=name,
        )

    @classmethod
    def zero_code(cls, q: int, v: int) -> "LinearCode":
        return cls.from_generator(q, np.zeros((0, v), dtype=np.int64), v=v, name="zero")

    @classmethod
    def full_space(cls, q: int, v: int) -> "LinearCode":
        return cls.from_generator(q, np.eye(v, dtype=np.int64), name="full")

    # --- operazioni ------------------------------------------------------

    def encode(self, info: Sequence[int]) -> np.ndarray:
        u = np.asarray(info, dtype=np.int64)
        return (u @ self.gen_basis) % self.q

    def parity_check_matrix(self) -> np.ndarray:
        """H con G H^T = 0; righe indicizzate dalle colonne non pivot."""
        pivot_set = set(self.pivots)
        non_pivots = [j for j in range(self.v) if j not in pivot_set]
        h = np.zeros((len(non_pivots), self.v), dtype=np.int64)
        for r, j in enumerate(non_pivots):
            h[r, j] = 1
            for i, pc in enumerate(self.pivots):
                h[r, pc] = (-self.gen_basis[i, j]) % self.q
        return h

    def same_row_space(self, other: "LinearCode") -> bool:
        return (
            self.q == other.q
            and self.v == other.v
            and self.k_dim == other.k_dim
            and np.array_equal(self.gen_basis, other.gen_basis)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.same_row_space(other)

    def __hash__(self) -> int:
        return hash((self.q, self.v, self.k_dim, self.gen_basis.tobytes()))

    @property
    def params(self) -> Tuple[int, int]:
        return self.v, self.k_dim

    def with_name(self, name: str) -> "LinearCode":
        return LinearCode(self.q, self.v, self.k_dim, self.gen_basis, self.pivots,
                          self.cyclic_meta, name)

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "q": self.q,
            "v": self.v,
            "dim": self.k_dim,
            "generator_rows": self.gen_basis.tolist(),
        }
        if self.cyclic_meta is not None:
            out["cyclic_generator"] = self.cyclic_meta.generator.to_json()
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "LinearCode":
        meta = None
        if data.get("cyclic_generator") is not None:
            meta = CyclicMeta(Poly(int(data["q"]), tuple(data["cyclic_generator"])))
        return cls.from_generator(
            int(data["q"]), data["generator_rows"], v=int(data["v"]),
            cyclic_meta=meta, name=data.get("name", ""),
        )


def dual(code: LinearCode) -> LinearCode:
    h = code.parity_check_matrix()
    name = f"dual({code.name})" if code.name else ""
    return LinearCode.from_generator(code.q, h, v=code.v, name=name)


def extend(code: LinearCode) -> LinearCode:
    """Aggiunge a ogni parola l'opposto della somma delle coordinate."""
    g = code.gen_basis
    extra = (-g.sum(axis=1)) % code.q
    rows = np.concatenate([g, extra.reshape(-1, 1)], axis=1)
    name = f"ext({code.name})" if code.name else ""
    return LinearCode.from_generator(code.q, rows, v=code.v + 1, name=name)
