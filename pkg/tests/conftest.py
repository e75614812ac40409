import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from deltamut import SkewMatrix, fixtures  # noqa: E402


@pytest.fixture(scope="session")
def pair5():
    """The 5x5 congruent pair (B, B', X)."""
    return (
        SkewMatrix.from_matrix(fixtures.load("b_31")),
        SkewMatrix.from_matrix(fixtures.load("bp_31")),
        fixtures.load("x_31"),
    )


@pytest.fixture(scope="session")
def arf_pair():
    return (
        SkewMatrix.from_matrix(fixtures.load("arf_b")),
        SkewMatrix.from_matrix(fixtures.load("arf_bp")),
    )


@pytest.fixture
def rng():
    return random.Random(20231015)


def random_skew(rng, n, bound=10):
    return SkewMatrix.from_upper(
        n, {(i, j): rng.randint(-bound, bound) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    )
