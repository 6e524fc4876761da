import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.filter_too_much],
)
settings.load_profile("suite")


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_direction(rng, min_l1: float = 0.0) -> np.ndarray:
    """Uniform unit vector, optionally rejected until ||n||_1 >= min_l1."""
    while True:
        n = rng.standard_normal(3)
        norm = np.linalg.norm(n)
        if norm < 1e-8:
            continue
        n = n / norm
        if np.abs(n).sum() >= min_l1:
            return n
