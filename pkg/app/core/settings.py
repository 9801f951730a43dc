# file: app/core/settings.py

from __future__ import annotations

import json
import os
from functools import lru_cache
from pathlib import Path
from typing import Literal, Union

from dotenv import load_dotenv
from pydantic import BaseModel, Field


MIN_BUDGET = 2 ** 10


class EnumerationConfig(BaseModel):
    budget: int = Field(default=2 ** 26, ge=MIN_BUDGET)       # vettori candidati per run
    long_budget: int = Field(default=2 ** 36, ge=MIN_BUDGET)  # usato con --long
    workers: Union[int, Literal["auto"]] = 1
    low_table_bits: int = Field(default=16, ge=4, le=24)      # taglia della metà precalcolata
    budget_env: str = "AMDESIGNS_BUDGET"

    def resolved_workers(self) -> int:
        if self.workers == "auto":
            return max(1, os.cpu_count() or 1)
        return max(1, int(self.workers))


class PathsConfig(BaseModel):
    storage_dir: Path
    reports_dir: Path
    logs_dir: Path


class LoggingConfig(BaseModel):
    level: str = "INFO"


class AppConfig(BaseModel):
    enumeration: EnumerationConfig = EnumerationConfig()
    paths: PathsConfig
    logging: LoggingConfig = LoggingConfig()


def _project_root() -> Path:
    """
    Restituisce la root del progetto (cartella dove sta main.py).
    """
    # app/core/settings.py -> app/core -> app -> root
    return Path(__file__).resolve().parents[2]


@lru_cache()
def load_app_config() -> AppConfig:
    """
    Carica config/app_config.json, applica l'override del budget da
    ambiente (.env compreso) e crea le cartelle necessarie.
    """
    root = _project_root()
    config_path = root / "config" / "app_config.json"

    if not config_path.exists():
        raise FileNotFoundError(f"Config non trovata: {config_path}")

    with config_path.open("r", encoding="utf-8") as f:
        data = json.load(f)

    load_dotenv(root / ".env")

    # La variabile d'ambiente vince sul file; la validazione pydantic
    # rifiuta valori non interi o sotto 2^10.
    budget_env = data.get("enumeration", {}).get("budget_env", EnumerationConfig().budget_env)
    env_budget = os.environ.get(budget_env)
    if env_budget:
        data.setdefault("enumeration", {})["budget"] = env_budget.strip()

    cfg = AppConfig.model_validate(data)

    # Normalizza i percorsi (li rende assoluti)
    storage_dir = (root / cfg.paths.storage_dir).resolve()
    reports_dir = (root / cfg.paths.reports_dir).resolve()
    logs_dir = (root / cfg.paths.logs_dir).resolve()

    storage_dir.mkdir(parents=True, exist_ok=True)
    reports_dir.mkdir(parents=True, exist_ok=True)
    logs_dir.mkdir(parents=True, exist_ok=True)

    cfg.paths.storage_dir = storage_dir
    cfg.paths.reports_dir = reports_dir
    cfg.paths.logs_dir = logs_dir

    return cfg


def default_budget() -> int:
    return load_app_config().enumeration.budget


def default_workers() -> int:
    return load_app_config().enumeration.resolved_workers()
