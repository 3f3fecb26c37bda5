import math

import numpy as np
import pytest
from hypothesis import given

from conftest import from_complex_matrix, int_quaternions, nonzero_quaternions, quaternions, to_complex_matrix
from quatzeros.quaternion import (
    I, J, K, ONE, ZERO, Quaternion, SimilarityClass, conjugate, distance, format_quaternion, inverse,
    left_matrix, multiply, norm, norm_squared, parse_quaternion, right_matrix, similarity_invariants,
)


class TestMultiply:
    def test_unit_table(self):
        assert multiply(I, J) == K
        assert multiply(J, I) == -K
        assert multiply(J, K) == I
        assert multiply(K, I) == J
        for u in (I, J, K):
            assert u * u == -ONE
        assert I * J * K == -ONE

    def test_identity(self):
        q = Quaternion(1.5, -2, 3, 0.25)
        assert ONE * q == q == q * ONE

    def test_one_plus_i_times_one_plus_j(self):
        assert Quaternion(1, 1) * Quaternion(1, 0, 1) == Quaternion(1, 1, 1, 1)

    @given(int_quaternions, int_quaternions)
    def test_matches_complex_matrix_oracle_exactly(self, p, q):
        expected = from_complex_matrix(to_complex_matrix(p) @ to_complex_matrix(q))
        assert p * q == expected

    @given(quaternions, quaternions, quaternions)
    def test_associative(self, p, q, r):
        assert ((p * q) * r).close_to(p * (q * r), 1e-9 * (1 + norm(p) * norm(q) * norm(r)))

    @given(quaternions, quaternions)
    def test_norm_is_multiplicative(self, p, q):
        assert math.isclose(norm(p * q), norm(p) * norm(q), rel_tol=1e-12, abs_tol=1e-12)

    @given(quaternions, quaternions)
    def test_multiplication_matrices(self, p, q):
        h = np.array(q.as_tuple())
        assert np.allclose(left_matrix(p) @ h, (p * q).as_tuple(), atol=1e-9)
        assert np.allclose(right_matrix(p) @ h, (q * p).as_tuple(), atol=1e-9)

    def test_real_scalars(self):
        q = Quaternion(1, 2, 3, 4)
        assert 2 * q == q * 2 == Quaternion(2, 4, 6, 8)
        assert q / 2 == Quaternion(0.5, 1, 1.5, 2)
        assert 1 - q == Quaternion(0, -2, -3, -4)


class TestConjugateNorm:
    def test_conjugate(self):
        assert conjugate(Quaternion(1, 1, 1, 1)) == Quaternion(1, -1, -1, -1)

    @given(quaternions)
    def test_involution(self, q):
        assert conjugate(conjugate(q)) == q

    def test_reverses_products(self):
        assert conjugate(I * J) == -K == conjugate(J) * conjugate(I)

    @given(quaternions, quaternions)
    def test_reverses_products_generally(self, p, q):
        assert conjugate(p * q).close_to(conjugate(q) * conjugate(p), 1e-12 * (1 + norm(p) * norm(q)))

    def test_norm_examples(self):
        assert norm(ZERO) == 0
        assert norm(I + J) == pytest.approx(math.sqrt(2), abs=1e-15)
        assert norm(Quaternion(1, 1, 1, 1)) == 2.0

    @given(quaternions)
    def test_norm_squared_is_q_times_conjugate(self, q):
        prod = q * conjugate(q)
        assert prod.vector == pytest.approx((0, 0, 0), abs=1e-9)
        assert prod.w == pytest.approx(norm_squared(q), rel=1e-12)

    def test_norm_does_not_overflow(self):
        assert norm(Quaternion(1e200, 1e200)) == pytest.approx(math.sqrt(2) * 1e200)


class TestInverse:
    def test_examples(self):
        assert inverse(I) == -I
        assert inverse(Quaternion(2)) == Quaternion(0.5)
        assert inverse(I + J) == Quaternion(0, -0.5, -0.5, 0)

    def test_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            inverse(ZERO)

    @given(nonzero_quaternions)
    def test_two_sided(self, q):
        assert (q * inverse(q)).close_to(ONE, 1e-12)
        assert (inverse(q) * q).close_to(ONE, 1e-12)

    def test_tiny_and_huge(self):
        for s in (1e-300, 1e300):
            q = Quaternion(s, s, 0, 0)
            assert (q * inverse(q)).close_to(ONE, 1e-12)


class TestSimilarity:
    def test_examples(self):
        assert similarity_invariants(I) == SimilarityClass(0, 1)
        assert similarity_invariants(J) == SimilarityClass(0, 1)
        assert similarity_invariants(Quaternion(3, 4)) == SimilarityClass(3, 4)

    @given(quaternions, nonzero_quaternions)
    def test_invariant_under_conjugation(self, q, p):
        c = similarity_invariants(inverse(p) * q * p)
        ref = similarity_invariants(q)
        assert c.real_part == pytest.approx(ref.real_part, abs=1e-9)
        assert c.imag_norm == pytest.approx(ref.imag_norm, abs=1e-9)

    def test_member_and_modulus(self):
        c = SimilarityClass(3, 4)
        assert c.modulus == 5
        assert c.member(J) == Quaternion(3, 0, 4, 0)

    def test_negative_imag_norm_rejected(self):
        with pytest.raises(ValueError):
            SimilarityClass(0, -1)


class TestConstruction:
    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            Quaternion(math.nan)
        with pytest.raises(ValueError):
            Quaternion(0, math.inf)

    def test_components_are_float(self):
        q = Quaternion(1, 2, 3, 4)
        assert all(type(v) is float for v in q.as_tuple())

    def test_distance(self):
        assert distance(I, J) == pytest.approx(math.sqrt(2))


class TestText:
    def test_format(self):
        assert format_quaternion(Quaternion(1, -2, 0.5, 0)) == "1-2i+0.5j+0k"
        assert format_quaternion(Quaternion(-0.0, 0, 1, 0)) == "0+0i+1j+0k"

    def test_parse(self):
        assert parse_quaternion("1+2i-3j+4k") == Quaternion(1, 2, -3, 4)
        assert parse_quaternion(" -i - j ") == Quaternion(0, -1, -1, 0)
        assert parse_quaternion("k") == K
        assert parse_quaternion("2.5e-1j+3") == Quaternion(3, 0, 0.25, 0)

    @pytest.mark.parametrize("bad", ["", "1+", "2i3j", "i+i", "x", "1..2"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_quaternion(bad)

    @given(quaternions)
    def test_round_trip(self, q):
        assert parse_quaternion(format_quaternion(q, digits=17)) == q
