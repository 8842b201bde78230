from pathlib import Path

import numpy as np
import pytest

from advshare import validate_stabilizer

REPO = Path(__file__).resolve().parent.parent

FOUR_QUBIT_ROWS = [
    [1, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 1],
]

FIVE_QUBIT_ROWS = [
    [1, 0, 0, 1, 0, 0, 1, 1, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 1, 1, 0],
    [1, 0, 1, 0, 0, 0, 0, 0, 1, 1],
    [0, 1, 0, 1, 0, 1, 0, 0, 0, 1],
]

QUTRIT_ROWS = [
    [1, 1, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 1],
]


@pytest.fixture(scope="session")
def four_qubit():
    return validate_stabilizer(FOUR_QUBIT_ROWS, 2, 4)


@pytest.fixture(scope="session")
def five_qubit():
    return validate_stabilizer(FIVE_QUBIT_ROWS, 2, 5)


@pytest.fixture(scope="session")
def qutrit():
    return validate_stabilizer(QUTRIT_ROWS, 3, 3)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def code_dir():
    return REPO / "codes"
