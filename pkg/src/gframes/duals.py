"""Alternate duals and the two optimal proximity bounds with their extremal frames."""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .errors import EpsilonOutOfRangeError, PostconditionError
from .identities import DUAL_TOLERANCE, canonical_dual_gap, parseval_gap
from .linalg import matrix_power_eig
from .model import (
    GFrame,
    dual_residual,
    frame_operator,
    require_matching_shapes,
    validate_frame,
)
from .rng import complex_gaussian_matrix, stream


@dataclass(frozen=True)
class DualCertificate:
    """Outcome of checking sum(adjoint(lam_i) @ gam_i) against the identity."""

    residual: float
    tolerance: float
    passed: bool


def verify_alternate_dual(lam: GFrame, gam: GFrame, tolerance: float | None = None) -> DualCertificate:
    """Certificate for the dual equation; default tolerance scales with dim_h."""
    require_matching_shapes(lam, gam)
    residual = dual_residual(lam, gam)
    if tolerance is None:
        tolerance = DUAL_TOLERANCE * lam.dim_h
    return DualCertificate(residual=residual, tolerance=float(tolerance), passed=residual <= tolerance)


def random_alternate_dual(lam: GFrame, magnitude: float, seed: int) -> GFrame:
    """A verified alternate dual at a chosen distance scale from the canonical one.

    Starting from the canonical dual, each operator gains a perturbation
    theta_i = delta_i - lam_i S^(-1) (sum_j adjoint(lam_j) delta_j) where the
    delta_i are seeded Gaussian blocks rescaled to Frobenius norm `magnitude`.
    The projection annihilates sum(adjoint(lam_i) theta_i), so the dual
    equation survives any magnitude; magnitude 0 returns the canonical dual.
    """
    if magnitude < 0:
        raise ValueError(f"magnitude must be non-negative, got {magnitude}")
    validate_frame(lam)
    inv = matrix_power_eig(frame_operator(lam).eig, -1.0)
    gen = stream(seed)
    deltas = []
    for op in lam.operators:
        block = complex_gaussian_matrix(gen, op.shape[0], lam.dim_h)
        norm = sqrt(float(np.sum(block.real**2 + block.imag**2)))
        deltas.append(block * (magnitude / norm) if norm > 0 else np.zeros_like(block))
    pulled = np.zeros((lam.dim_h, lam.dim_h), dtype=np.complex128)
    for op, delta in zip(lam.operators, deltas):
        pulled += op.conj().T @ delta
    correction = inv @ pulled
    duals = [
        op @ inv + delta - op @ correction
        for op, delta in zip(lam.operators, deltas)
    ]
    return GFrame(duals, dim_h=lam.dim_h)


def _require_epsilon(f: GFrame) -> tuple[float, int]:
    bounds = validate_frame(f)
    eps = bounds.epsilon
    if eps >= 1.0:
        raise EpsilonOutOfRangeError(
            f"nearly-Parseval rating must be below 1, got epsilon = {eps!r}", epsilon=eps
        )
    return eps, f.dim_h


def parseval_proximity_bound(g: GFrame) -> tuple[float, float]:
    """Distance to the canonical Parseval family against its optimal ceiling.

    Returns (gap, bound) with bound = n * (1 - sqrt(1 - eps))^2; requires the
    nearly-Parseval rating eps to be below 1. The bound uses the stable form
    eps / (1 + sqrt(1 - eps)) for 1 - sqrt(1 - eps).
    """
    eps, n = _require_epsilon(g)
    gap = parseval_gap(g)
    shrink = eps / (1.0 + sqrt(1.0 - eps))
    stretch = eps / (sqrt(1.0 + eps) + 1.0)
    # The shrink side always dominates; the bound would be wrong otherwise.
    if max(shrink, stretch) != shrink:
        raise PostconditionError(
            f"binding side inverted: shrink {shrink!r} < stretch {stretch!r}"
        )
    bound = n * shrink * shrink
    if gap > bound + 1e-9 * n:
        raise PostconditionError(
            f"proximity bound violated: gap {gap!r} exceeds bound {bound!r}"
        )
    return gap, bound


def dual_proximity_bound(g: GFrame) -> tuple[float, float]:
    """Distance to the canonical dual against its optimal ceiling.

    Returns (gap, bound) with gap the spectral form sum_k (lambda_k - 1)^2 /
    lambda_k and bound = n * eps^2 / (1 - eps); requires eps below 1.
    """
    eps, n = _require_epsilon(g)
    gap = canonical_dual_gap(g)
    bound = n * eps * eps / (1.0 - eps) if eps > 0.0 else 0.0
    if gap > bound + 1e-9 * n:
        raise PostconditionError(
            f"dual proximity bound violated: gap {gap!r} exceeds bound {bound!r}"
        )
    return gap, bound


def extremal_frame(n: int, epsilon: float) -> GFrame:
    """Scaled orthonormal rows sqrt(1 - epsilon) * e_k, one per index.

    The frame operator is (1 - epsilon) * I, the rating is exactly epsilon,
    and both proximity bounds are attained with equality.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0.0 <= epsilon < 1.0:
        raise EpsilonOutOfRangeError("epsilon must lie in [0,1)", epsilon=epsilon)
    scale = sqrt(1.0 - epsilon)
    eye = np.eye(n)
    return GFrame([scale * eye[k : k + 1, :] for k in range(n)], dim_h=n)
