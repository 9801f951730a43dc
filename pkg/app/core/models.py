# file: app/core/models.py

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

from .errors import InconsistentInput
from .settings import MIN_BUDGET


# -------------------------
#  Distribuzioni dei pesi
# -------------------------


class WeightDistribution(BaseModel):
    """
    Conteggi esatti A_0..A_v di un codice [v, kappa] su GF(q).
    I conteggi sono int Python (precisione arbitraria) e in JSON diventano
    stringhe decimali, {peso: conteggio} solo per i pesi presenti.
    """

    model_config = ConfigDict(frozen=True)

    v: int = Field(ge=0)
    q: int = Field(ge=2)
    kappa: int = Field(ge=0)
    counts: Tuple[int, ...]

    @field_validator("counts", mode="before")
    @classmethod
    def _coerce_counts(cls, value: Any) -> Any:
        # Accetta anche la forma serializzata {"peso": "conteggio"}
        if isinstance(value, dict):
            items = {int(k): int(c) for k, c in value.items()}
            size = max(items) + 1 if items else 1
            return tuple(items.get(i, 0) for i in range(size))
        return tuple(int(c) for c in value)

    def model_post_init(self, __context: Any) -> None:
        if len(self.counts) < self.v + 1:
            object.__setattr__(self, "counts", self.counts + (0,) * (self.v + 1 - len(self.counts)))
        if len(self.counts) != self.v + 1:
            raise InconsistentInput(
                f"Distribuzione con {len(self.counts)} conteggi per lunghezza {self.v}"
            )

    @field_serializer("counts")
    def _dump_counts(self, counts: Tuple[int, ...]) -> Dict[str, str]:
        return {str(i): str(c) for i, c in enumerate(counts) if c}

    # --- helpers ---------------------------------------------------------

    def __getitem__(self, weight: int) -> int:
        return self.counts[weight]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def weights(self) -> List[int]:
        """Pesi non nulli presenti (A_i != 0, i > 0)."""
        return [i for i, c in enumerate(self.counts) if c and i > 0]

    @property
    def minimum_distance(self) -> Optional[int]:
        ws = self.weights
        return ws[0] if ws else None

    def is_consistent(self) -> bool:
        return (
            self.counts[0] == 1
            and all(c >= 0 for c in self.counts)
            and self.total == self.q ** self.kappa
        )

    def check_consistent(self) -> "WeightDistribution":
        if not self.is_consistent():
            raise InconsistentInput(
                f"Distribuzione incoerente: A_0={self.counts[0]}, somma={self.total}, "
                f"atteso q^kappa={self.q ** self.kappa}"
            )
        return self

    def nonzero(self) -> Dict[int, int]:
        return {i: c for i, c in enumerate(self.counts) if c}


# -------------------------
#  Disegni e famiglie di differenze
# -------------------------


class Design(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    v: int
    k: int
    t: int
    lambda_: int = Field(alias="lambda", ge=0)
    blocks: Tuple[Tuple[int, ...], ...]

    @property
    def b(self) -> int:
        return len(self.blocks)


class CoverageWitness(BaseModel):
    subset: Tuple[int, ...]
    count: int


class TDesignVerdict(BaseModel):
    """Esito di verify_t_design: lambda se costante, altrimenti due testimoni."""

    v: int
    k: int
    t: int
    block_count: int
    lambda_: Optional[int] = Field(default=None, alias="lambda")
    witness: Optional[Tuple[CoverageWitness, CoverageWitness]] = None

    model_config = ConfigDict(populate_by_name=True)

    @property
    def is_design(self) -> bool:
        return self.lambda_ is not None


class DifferenceFamilyReport(BaseModel):
    v: int
    k: int
    block_count: int
    delta: Optional[int] = None
    histogram: Dict[int, int]


class DifferenceFamilyEquivalence(BaseModel):
    """Confronto tra le due direzioni: 2-disegno <-> famiglia (v, k, lambda*v)."""

    v: int
    k: int
    is_design: bool
    lambda_: Optional[int] = Field(default=None, alias="lambda")
    delta: Optional[int] = None
    agrees: bool
    note: str = ""

    model_config = ConfigDict(populate_by_name=True)


class AMReport(BaseModel):
    t: int
    d: int
    d_perp: Optional[int]
    s: int
    w: int
    w_perp: Optional[int]
    holds: bool
    primal_design_weights: List[int] = Field(default_factory=list)
    dual_design_weights: List[int] = Field(default_factory=list)


# -------------------------
#  Report per la CLI
# -------------------------


class MethodResult(BaseModel):
    method: Literal["brute", "macwilliams", "closed-form"]
    status: Literal["OK", "SKIPPED", "N/A"]
    distribution: Optional[WeightDistribution] = None
    note: str = ""


class SpectrumReport(BaseModel):
    construction: str
    params: Dict[str, Any]
    side: Literal["primal", "dual"] = "primal"
    results: List[MethodResult]
    verdict: Literal["MATCH", "MISMATCH", "SINGLE"]
    generated_at: Optional[str] = None


class WeightDesignResult(BaseModel):
    side: Literal["primal", "dual"]
    weight: int
    predicted: bool
    status: Literal["VERIFIED", "NOT_A_DESIGN", "SKIPPED", "EMPTY"]
    lambda_: Optional[int] = Field(default=None, alias="lambda")
    expected_lambda: Optional[int] = None
    block_count: int = 0
    codeword_count: Optional[int] = None
    steiner: bool = False
    divisibility_ok: Optional[bool] = None
    delta: Optional[int] = None
    note: str = ""

    model_config = ConfigDict(populate_by_name=True)


class DesignRunReport(BaseModel):
    construction: str
    params: Dict[str, Any]
    t: int
    am: Optional[AMReport] = None
    results: List[WeightDesignResult]
    generated_at: Optional[str] = None


class HarnessEntry(BaseModel):
    construction: str
    m: int
    conjecture: int
    side: Literal["primal", "dual"]
    weight: int
    t: int = 2
    status: Literal["PASS", "FAIL", "SKIPPED"]
    lambda_: Optional[int] = Field(default=None, alias="lambda")
    block_count: int = 0
    witness: Optional[Tuple[CoverageWitness, CoverageWitness]] = None
    note: str = ""

    model_config = ConfigDict(populate_by_name=True)


class HarnessReport(BaseModel):
    m: int
    header: List[str]
    entries: List[HarnessEntry]
    generated_at: Optional[str] = None


class TableReproduction(BaseModel):
    table: str
    m: int
    closed_form: WeightDistribution
    brute_force: Optional[WeightDistribution] = None
    status: Literal["CONFIRMED", "MISMATCH", "SKIPPED"]
    note: str = ""
    generated_at: Optional[str] = None


class RunConfig(BaseModel):
    command: str
    params: Dict[str, Any] = Field(default_factory=dict)
    enumeration_budget: int = Field(ge=MIN_BUDGET)
    worker_count: int = Field(default=1, ge=1)
    output_format: Literal["json", "csv", "text"] = "json"
    output_path: Optional[Path] = None
    long_mode: bool = False
