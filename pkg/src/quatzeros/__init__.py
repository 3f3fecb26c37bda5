"""Inclusion balls for the zeros of unilateral quaternionic polynomials."""

from .bounds import (
    BoundMethod,
    BoundPresets,
    BoundResult,
    all_bounds,
    cauchy_bound,
    fujiwara_bound,
    lacunary_max_bound,
    lacunary_sum_bound,
    ratio_bound,
    weighted_bound,
)
from .companion import CompanionKind, Preset, QMatrix, build_companion, diagonal_similarity, preset_transform
from .gershgorin import Ball, BallUnion, enclosing_radius, gershgorin_balls, left_eigenvalues_2x2, membership
from .polynomial import (
    QPolynomial,
    Side,
    evaluate,
    lacunary_profile,
    mirror_convention,
    multiply_polynomials,
    normalize_monic,
)
from .quaternion import I, J, K, ONE, ZERO, Quaternion, SimilarityClass, parse_quaternion
from .roots import ZeroRecord, companion_polynomial, complex_roots, find_zeros, recover_zeros, solve_quadratic

__version__ = "0.1.0"
