import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from stopred.cli import load_asset
from stopred.field import make_field
from stopred.linalg import LinearCode, Matrix


@pytest.fixture(scope="session")
def gf2():
    return make_field(2)


@pytest.fixture(scope="session")
def golay24():
    return LinearCode.from_parity_check(load_asset("h24"))


@pytest.fixture(scope="session")
def golay12():
    return LinearCode.from_parity_check(load_asset("h12"))


@pytest.fixture(scope="session")
def hexacode():
    return LinearCode.from_parity_check(load_asset("hexacode"))


@pytest.fixture(scope="session")
def hamming74(gf2):
    # columns are 1..7 in binary
    h = Matrix(gf2, [[0, 0, 0, 1, 1, 1, 1],
                     [0, 1, 1, 0, 0, 1, 1],
                     [1, 0, 1, 0, 1, 0, 1]])
    return LinearCode.from_parity_check(h)


def random_parity_check(rng, q, n, m):
    f = make_field(q)
    data = rng.integers(0, q, size=(m, n), dtype=np.int64).astype(np.uint8)
    return Matrix(f, data)
