import numpy as np
import pytest
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp


@pytest.fixture
def rng():
    return np.random.default_rng(20240531)


def random_complex(rng, n, scale=1.0):
    return rng.uniform(-scale, scale, (n, n)) + 1j * rng.uniform(-scale, scale, (n, n))


def random_vector(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


_component = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False, width=64)


@st.composite
def complex_matrices(draw, min_dim=1, max_dim=4):
    n = draw(st.integers(min_dim, max_dim))
    re = draw(hnp.arrays(np.float64, (n, n), elements=_component))
    im = draw(hnp.arrays(np.float64, (n, n), elements=_component))
    return re + 1j * im


@st.composite
def complex_vectors(draw, n):
    re = draw(hnp.arrays(np.float64, (n,), elements=_component))
    im = draw(hnp.arrays(np.float64, (n,), elements=_component))
    return re + 1j * im
