from pathlib import Path

import numpy as np
import pytest

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


def seeded_rng(*tags: int) -> np.random.Generator:
    """Deterministic generator for test-local fuzzing."""
    return np.random.default_rng([424242, *tags])
