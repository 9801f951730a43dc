# file: tests/conftest.py

from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

# budget dei test: quello di default del progetto
TEST_BUDGET = 2 ** 26


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption("--long", action="store_true", default=False,
                     help="esegue anche i test marcati 'long' (enumerazioni da minuti)")


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "long: enumerazioni lunghe, solo con --long")


def pytest_collection_modifyitems(config: pytest.Config, items: list) -> None:
    if config.getoption("--long"):
        return
    skip = pytest.mark.skip(reason="serve --long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def budget() -> int:
    return TEST_BUDGET
