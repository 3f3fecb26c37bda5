import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import monic_polynomials, quaternions, sides
from quatzeros.bounds import (
    BoundMethod, BoundPresets, all_bounds, cauchy_bound, dyadic_weights, fujiwara_bound, lacunary_max_bound,
    lacunary_sum_bound, ratio_bound, results_to_csv, weighted_bound,
)
from quatzeros.companion import Preset, build_companion, diagonal_similarity, preset_transform
from quatzeros.gershgorin import enclosing_radius, gershgorin_balls
from quatzeros.polynomial import QPolynomial, Side, mirror_convention, monomial
from quatzeros.quaternion import I, J, K, ONE, ZERO, Quaternion, norm
from quatzeros.roots import find_zeros

SQRT2 = math.sqrt(2)
EXAMPLE = QPolynomial([K, -(I + J), ONE], Side.LEFT)
EXAMPLE_RIGHT = QPolynomial([K, -(I + J), ONE], Side.RIGHT)
positive = st.floats(min_value=0.05, max_value=20.0)


class TestCauchy:
    def test_example(self):
        assert cauchy_bound(EXAMPLE).radius == pytest.approx(1 + SQRT2, abs=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_monomial(self, n):
        assert cauchy_bound(monomial(n)).radius == 1.0

    def test_linear(self):
        assert cauchy_bound(QPolynomial([5, 1])).radius == 6.0

    def test_mirrored_note(self):
        assert "mirrored" in cauchy_bound(EXAMPLE).note
        assert cauchy_bound(EXAMPLE_RIGHT).note == ""

    def test_rejects_non_monic_and_constant(self):
        with pytest.raises(ValueError):
            cauchy_bound(QPolynomial([ONE, I]))
        with pytest.raises(ValueError):
            cauchy_bound(QPolynomial([ONE]))


class TestWeighted:
    def test_ones_on_example(self):
        assert weighted_bound(EXAMPLE_RIGHT, [1.0]).radius == pytest.approx(1 + SQRT2, abs=1e-12)

    def test_abs_a0_weight(self):
        assert weighted_bound(EXAMPLE_RIGHT, [norm(K)]).radius == pytest.approx(1 + SQRT2, abs=1e-12)

    @given(positive)
    def test_monomial_gives_alpha(self, alpha):
        assert weighted_bound(monomial(2, Side.RIGHT), [alpha]).radius == alpha

    def test_validation(self):
        with pytest.raises(ValueError):
            weighted_bound(EXAMPLE_RIGHT, [1.0, 2.0])
        with pytest.raises(ValueError):
            weighted_bound(EXAMPLE_RIGHT, [0.0])

    @given(st.integers(1, 6).flatmap(
        lambda n: st.tuples(st.lists(quaternions, min_size=n, max_size=n),
                            st.lists(positive, min_size=n - 1, max_size=n - 1))))
    def test_equals_enclosing_radius_of_scaled_companion(self, data):
        coeffs, alpha = data
        g = QPolynomial(coeffs + [ONE], Side.RIGHT)
        c = diagonal_similarity(build_companion(g), preset_transform(Preset.WEIGHTED, g.degree, alpha))
        expected = enclosing_radius(gershgorin_balls(c))
        assert weighted_bound(g, alpha).radius == pytest.approx(expected, rel=1e-12)

    @given(monic_polynomials())
    def test_unit_weights_versus_cauchy(self, p):
        # with unit weights the constant term is not shifted by 1, so the two
        # agree exactly when |a_0| does not dominate the other coefficients
        a = [norm(c) for c in p.coeffs[:-1]]
        w = weighted_bound(p, [1.0] * (p.degree - 1)).radius
        c = cauchy_bound(p).radius
        assert w <= c
        rest = max(a[1:], default=-math.inf)
        assert (w == c) == (a[0] <= rest)


class TestRatio:
    def test_example(self):
        assert ratio_bound(EXAMPLE_RIGHT).radius == pytest.approx(2 * SQRT2, abs=1e-12)

    def test_zero_interior_is_inapplicable(self):
        res = ratio_bound(QPolynomial([K, ZERO, ONE], Side.RIGHT))
        assert not res.applicable and math.isnan(res.radius)

    def test_degree_one(self):
        res = ratio_bound(QPolynomial([Quaternion(3, 4), ONE], Side.RIGHT))
        assert res.radius == 10.0 and "degree 1" in res.note

    @given(monic_polynomials(min_degree=2))
    def test_is_weighted_with_coefficient_norms(self, p):
        a = [norm(c) for c in p.coeffs[1:-1]]
        assume(all(x > 0 for x in a))
        assert ratio_bound(p).radius == pytest.approx(weighted_bound(p, a).radius, rel=1e-12)


class TestFujiwara:
    def test_example_half_half(self):
        assert fujiwara_bound(EXAMPLE, [0.5, 0.5]).radius == pytest.approx(2 * SQRT2, abs=1e-12)

    def test_linear_is_tight(self):
        a0 = Quaternion(1, -2, 2, 0)
        assert fujiwara_bound(QPolynomial([a0, ONE]), [1.0]).radius == 3.0

    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_monomial(self, n):
        assert fujiwara_bound(monomial(n)).radius == 0.0

    def test_dyadic_weights_sum_to_one(self):
        for n in range(1, 20):
            w = dyadic_weights(n)
            assert len(w) == n and math.fsum(w) == 1.0

    def test_validation(self):
        with pytest.raises(ValueError):
            fujiwara_bound(EXAMPLE, [0.5, 0.6])
        with pytest.raises(ValueError):
            fujiwara_bound(EXAMPLE, [1.0])
        with pytest.raises(ValueError):
            fujiwara_bound(EXAMPLE, [1.5, -0.5])


class TestLacunary:
    def test_sum_examples(self):
        assert lacunary_sum_bound(QPolynomial([J, I, ZERO, ONE])).radius == pytest.approx(2.0, abs=1e-12)
        assert lacunary_sum_bound(QPolynomial([8, 8, 0, 1])).radius == pytest.approx(6.0, abs=1e-12)
        assert lacunary_sum_bound(monomial(4)).radius == 0.0

    def test_max_examples(self):
        h = lambda cs: QPolynomial(cs, Side.RIGHT)
        assert lacunary_max_bound(h([J, I, ZERO, ONE])).radius == pytest.approx(2.0, abs=1e-12)
        assert lacunary_max_bound(h([8, 8, 0, 1])).radius == pytest.approx(6.0, abs=1e-12)
        assert lacunary_max_bound(h([32, 32, 0, 0, 0, 1])).radius == pytest.approx(6.0, abs=1e-12)
        assert lacunary_max_bound(h([0, 0, 32, 0, 0, 1])).radius == pytest.approx(10.0, abs=1e-12)
        assert lacunary_sum_bound(h([0, 0, 32, 0, 0, 1])).radius == pytest.approx(14.0, abs=1e-12)

    def test_r_zero(self):
        p = QPolynomial([Quaternion(0, 0, 8), ZERO, ZERO, ONE])
        for fn in (lacunary_sum_bound, lacunary_max_bound):
            res = fn(p)
            assert res.params == "r=0" and "r=0" in res.note
        assert lacunary_sum_bound(p).radius == pytest.approx(2.0)
        assert lacunary_max_bound(p).radius == pytest.approx(6.0)

    def test_full_polynomial_note(self):
        assert "r=n-1" in lacunary_sum_bound(EXAMPLE).note

    @given(st.integers(4, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 2))),
           st.lists(quaternions, min_size=9, max_size=9), sides)
    def test_max_never_exceeds_sum(self, nr, pool, side):
        n, r = nr
        coeffs = pool[:r + 1]
        assume(norm(coeffs[r]) > 0)
        p = QPolynomial(coeffs + [ZERO] * (n - 1 - r) + [ONE], side)
        s, m = lacunary_sum_bound(p).radius, lacunary_max_bound(p).radius
        assert m <= s
        if r >= 2 and s > 0:
            assert m < s


class TestSoundness:
    @settings(max_examples=150, deadline=None)
    @given(monic_polynomials(max_degree=6))
    def test_every_zero_inside_every_bound(self, p):
        zeros = find_zeros(p)
        top = max(z.modulus for z in zeros)
        for res in all_bounds(p):
            if res.applicable:
                assert top <= res.radius + 1e-9 * (1 + res.radius), res.label

    @given(monic_polynomials())
    def test_mirror_invariant(self, p):
        for a, b in zip(all_bounds(p), all_bounds(mirror_convention(p))):
            assert a.label == b.label
            assert a.radius == b.radius or (math.isnan(a.radius) and math.isnan(b.radius))


class TestAllBounds:
    def test_example_rows(self):
        methods = {r.method for r in all_bounds(EXAMPLE)}
        assert {BoundMethod.CAUCHY, BoundMethod.FUJIWARA, BoundMethod.LACUNARY_SUM} <= methods

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_monomial_radii(self, n):
        for res in all_bounds(monomial(n)):
            if res.applicable:
                assert res.radius in (0.0, 1.0), res.label

    def test_zero_a1_marks_ratio_inapplicable(self):
        rows = all_bounds(QPolynomial([K, ZERO, ONE]), BoundPresets(methods=frozenset({BoundMethod.RATIO})))
        assert len(rows) == 1 and not rows[0].applicable

    def test_presets(self):
        rows = all_bounds(EXAMPLE, BoundPresets(weights=[[3.0]], fujiwara=[0.5, 0.5]))
        labels = [r.label for r in rows]
        assert labels == ["CAUCHY", "WEIGHTED[alpha=ones]", "WEIGHTED[alpha=|a_i|]", "WEIGHTED[alpha=3]",
                          "RATIO", "FUJIWARA[lambda=0.5,0.5]", "LACUNARY_SUM[r=1]", "LACUNARY_MAX[r=1]"]

    def test_csv(self):
        text = results_to_csv(2, all_bounds(QPolynomial([K, ZERO, ONE])))
        lines = text.splitlines()
        assert lines[0] == "degree,method,params,radius,applicable,note"
        ratio = next(l for l in lines if l.startswith("2,RATIO"))
        assert ",,false," in ratio
