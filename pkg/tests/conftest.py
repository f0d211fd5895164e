import json
from pathlib import Path

import pytest

import typesemigroup as ts

MODELS = Path(__file__).resolve().parent.parent / "models"


@pytest.fixture(scope="session")
def models_dir() -> Path:
    return MODELS


def load_model(name: str) -> dict:
    with open(MODELS / name, "r", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def two_loops() -> ts.KGraphModel:
    return ts.validate_kgraph(["v"], [[[2]]])


@pytest.fixture(scope="session")
def one_loop() -> ts.KGraphModel:
    return ts.validate_kgraph(["v"], [[[1]]])


@pytest.fixture(scope="session")
def cross_double() -> ts.KGraphModel:
    return ts.validate_kgraph(["u", "w"], [[[0, 2], [2, 0]]])


@pytest.fixture(scope="session")
def triangular() -> ts.KGraphModel:
    return ts.validate_kgraph(["u", "w"], [[[1, 1], [0, 1]]])


@pytest.fixture(scope="session")
def rank2_single_vertex() -> ts.KGraphModel:
    return ts.validate_kgraph(["v"], [[[2]], [[3]]])
