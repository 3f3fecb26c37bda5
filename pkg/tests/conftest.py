import numpy as np
import pytest
from hypothesis import strategies as st

from quatzeros.polynomial import QPolynomial, Side
from quatzeros.quaternion import Quaternion

# components are 0 or between 1e-6 and 10 in magnitude: the numerical domain
# the algorithms are specified for (no subnormals, bounded dynamic range)
_magnitude = st.floats(min_value=1e-6, max_value=10.0, allow_nan=False, allow_infinity=False)
finite = st.one_of(st.just(0.0), _magnitude, _magnitude.map(lambda x: -x))
small_int = st.integers(min_value=-4, max_value=4)

quaternions = st.builds(Quaternion, finite, finite, finite, finite)
int_quaternions = st.builds(Quaternion, small_int, small_int, small_int, small_int)
nonzero_quaternions = quaternions.filter(lambda q: q.norm() > 1e-3)
sides = st.sampled_from([Side.LEFT, Side.RIGHT])


@st.composite
def monic_polynomials(draw, min_degree=1, max_degree=6):
    n = draw(st.integers(min_degree, max_degree))
    coeffs = [draw(quaternions) for _ in range(n)] + [Quaternion(1.0)]
    return QPolynomial(coeffs, draw(sides))


def to_complex_matrix(q: Quaternion) -> np.ndarray:
    """Independent product oracle: ``H`` embedded in 2x2 complex matrices."""
    a = complex(q.w, q.x)
    b = complex(q.y, q.z)
    return np.array([[a, b], [-b.conjugate(), a.conjugate()]])


def from_complex_matrix(m: np.ndarray) -> Quaternion:
    a, b = m[0, 0], m[0, 1]
    return Quaternion(a.real, a.imag, b.real, b.imag)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
