"""Executable equalities tying operator families to functions of their frame operator.

Every operation returns the computed terms so callers can report residuals;
pass/fail at a tolerance is the caller's job. Each operation also runs a
cheap internal consistency check at a slightly looser tolerance and raises
PostconditionError if the arithmetic went off the rails.
"""

from __future__ import annotations

import numpy as np

from .errors import NotADualError, NotParsevalError, PostconditionError
from .linalg import frobenius_norm, frobenius_norm_sq, matrix_power_eig, as_matrix, trace
from .model import (
    GFrame,
    analysis_apply,
    dual_residual,
    frame_operator,
    require_matching_shapes,
    total_frobenius_energy,
    validate_frame,
)

# Families qualify as Parseval when ||S - I||_F <= PARSEVAL_TOLERANCE * n.
PARSEVAL_TOLERANCE = 1e-6
# Alternate duals must satisfy ||sum adjoint(lam_i) gam_i - I||_F <= DUAL_TOLERANCE * n.
DUAL_TOLERANCE = 1e-8


def parseval_defect(g: GFrame) -> float:
    """||S - I||_F for the family."""
    s = frame_operator(g).matrix
    return frobenius_norm(s - np.eye(g.dim_h))


def require_parseval(g: GFrame, name: str = "frame") -> None:
    defect = parseval_defect(g)
    if defect > PARSEVAL_TOLERANCE * g.dim_h:
        raise NotParsevalError(
            f"{name} is not Parseval: ||S - I||_F = {defect:.3e} exceeds "
            f"{PARSEVAL_TOLERANCE:.0e} * n",
            residual=defect,
        )


def require_alternate_dual(lam: GFrame, gam: GFrame) -> None:
    residual = dual_residual(lam, gam)
    if residual > DUAL_TOLERANCE * lam.dim_h:
        raise NotADualError(
            f"family is not an alternate dual: residual {residual:.3e} exceeds "
            f"{DUAL_TOLERANCE:.0e} * n",
            residual=residual,
        )


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise PostconditionError(message)


def parseval_weighted_energy(weight, g: GFrame) -> float:
    """Sum of ||W adjoint(op)||_F^2 over a Parseval family.

    The value is independent of the particular Parseval family and equals
    ||W||_F^2; the weight must act on the domain, i.e. have dim_h columns.
    """
    w = as_matrix(weight, "weight")
    if w.shape[1] != g.dim_h:
        raise ValueError(f"weight must have {g.dim_h} columns, got {w.shape[1]}")
    require_parseval(g)
    value = float(sum(frobenius_norm_sq(w @ op.conj().T) for op in g.operators))
    closed = frobenius_norm_sq(w)
    _check(
        abs(value - closed) <= 1e-8 * (1.0 + closed),
        f"weighted energy {value!r} drifted from ||W||_F^2 = {closed!r}",
    )
    return value


def parseval_frobenius_budget(g: GFrame) -> float:
    """Total Frobenius energy of a Parseval family; always the dimension n."""
    require_parseval(g)
    value = total_frobenius_energy(g)
    n = g.dim_h
    _check(abs(value - n) <= 1e-8 * n, f"Parseval energy budget {value!r} is not n = {n}")
    return value


def power_trace_identity(g: GFrame, a: float) -> tuple[float, float]:
    """Two routes to the same number: energy of the S^a-weighted family vs a trace.

    Returns (lhs, rhs) with lhs the operator-by-operator sum of
    ||op @ S^a||_F^2 and rhs the trace of S^(2a + 1).
    """
    validate_frame(g)
    eig = frame_operator(g).eig
    sa = matrix_power_eig(eig, a)
    lhs = float(sum(frobenius_norm_sq(op @ sa) for op in g.operators))
    rhs = trace(matrix_power_eig(eig, 2.0 * a + 1.0)).real
    _check(
        abs(lhs - rhs) <= 1e-8 * (1.0 + rhs),
        f"power-trace identity drifted: lhs {lhs!r} vs rhs {rhs!r} at a = {a}",
    )
    return lhs, rhs


def parseval_approx_decomposition(lam: GFrame, gam: GFrame) -> tuple[float, float, float]:
    """Split the Frobenius distance to a Parseval family into two non-negative sums.

    Returns (total, canonical_gap, cross_term):
      total          sum ||lam_i - gam_i||_F^2
      canonical_gap  sum ||lam_i - lam_i S^(-1/2)||_F^2
      cross_term     sum ||gam_i S^(1/4) - lam_i S^(-1/4)||_F^2
    with total = canonical_gap + cross_term; the cross term vanishes exactly
    when gam is the canonical Parseval family of lam.
    """
    validate_frame(lam)
    require_parseval(gam, "second family")
    require_matching_shapes(lam, gam)
    eig = frame_operator(lam).eig
    root_inv = matrix_power_eig(eig, -0.5)
    quarter = matrix_power_eig(eig, 0.25)
    quarter_inv = matrix_power_eig(eig, -0.25)
    total = 0.0
    canonical_gap = 0.0
    cross_term = 0.0
    for a, b in zip(lam.operators, gam.operators):
        total += frobenius_norm_sq(a - b)
        canonical_gap += frobenius_norm_sq(a - a @ root_inv)
        cross_term += frobenius_norm_sq(b @ quarter - a @ quarter_inv)
    _check(
        abs(total - canonical_gap - cross_term) <= 1e-7 * (1.0 + total),
        f"decomposition drifted: {total!r} vs {canonical_gap!r} + {cross_term!r}",
    )
    return total, canonical_gap, cross_term


def parseval_gap(lam: GFrame) -> float:
    """Frobenius distance (squared) from a frame to its canonical Parseval family.

    Computed from the definition sum and cross-checked against the spectral
    closed form sum_k (sqrt(lambda_k) - 1)^2.
    """
    validate_frame(lam)
    eig = frame_operator(lam).eig
    root_inv = matrix_power_eig(eig, -0.5)
    value = float(sum(frobenius_norm_sq(op - op @ root_inv) for op in lam.operators))
    closed = float(np.sum((np.sqrt(eig.eigenvalues) - 1.0) ** 2))
    _check(
        abs(value - closed) <= 1e-8 * (1.0 + value),
        f"gap paths disagree: definition {value!r} vs spectral {closed!r}",
    )
    return value


def canonical_dual_gap(lam: GFrame) -> float:
    """Spectral form sum_k (lambda_k - 1)^2 / lambda_k of the distance to the canonical dual."""
    validate_frame(lam)
    lam_k = frame_operator(lam).eig.eigenvalues
    return float(np.sum((lam_k - 1.0) ** 2 / lam_k))


def pointwise_dual_decomposition(lam: GFrame, gam: GFrame, x) -> tuple[float, float, float]:
    """Split the coefficient distance at one vector between a frame and a dual.

    Returns (total, canonical, residual):
      total      sum ||lam_i x - gam_i x||^2
      canonical  sum ||lam_i x - lam_i S^(-1) x||^2
      residual   sum ||lam_i S^(-1) x - gam_i x||^2
    with total = canonical + residual; the residual vanishes when gam is the
    canonical dual.
    """
    validate_frame(lam)
    require_alternate_dual(lam, gam)
    inv = matrix_power_eig(frame_operator(lam).eig, -1.0)
    lam_x = analysis_apply(lam, x)
    gam_x = analysis_apply(gam, x)
    inv_x = inv @ np.asarray(x, dtype=np.complex128)
    total = 0.0
    canonical = 0.0
    residual = 0.0
    for op, lx, gx in zip(lam.operators, lam_x, gam_x):
        cx = op @ inv_x
        total += float(np.sum(np.abs(lx - gx) ** 2))
        canonical += float(np.sum(np.abs(lx - cx) ** 2))
        residual += float(np.sum(np.abs(cx - gx) ** 2))
    _check(
        abs(total - canonical - residual) <= 1e-8 * (1.0 + total),
        f"pointwise decomposition drifted: {total!r} vs {canonical!r} + {residual!r}",
    )
    return total, canonical, residual


def frobenius_dual_decomposition(lam: GFrame, gam: GFrame) -> tuple[float, float, float]:
    """Split the Frobenius distance between a frame and an alternate dual.

    Returns (total, canonical, residual):
      total      sum ||lam_i - gam_i||_F^2
      canonical  sum ||lam_i - lam_i S^(-1)||_F^2
      residual   sum ||lam_i S^(-1) - gam_i||_F^2
    with total = canonical + residual; canonical matches the spectral form
    sum_k (lambda_k - 1)^2 / lambda_k.
    """
    validate_frame(lam)
    require_alternate_dual(lam, gam)
    eig = frame_operator(lam).eig
    inv = matrix_power_eig(eig, -1.0)
    total = 0.0
    canonical = 0.0
    residual = 0.0
    for a, b in zip(lam.operators, gam.operators):
        c = a @ inv
        total += frobenius_norm_sq(a - b)
        canonical += frobenius_norm_sq(a - c)
        residual += frobenius_norm_sq(c - b)
    _check(
        abs(total - canonical - residual) <= 1e-7 * (1.0 + total),
        f"dual decomposition drifted: {total!r} vs {canonical!r} + {residual!r}",
    )
    closed = float(np.sum((eig.eigenvalues - 1.0) ** 2 / eig.eigenvalues))
    _check(
        abs(canonical - closed) <= 1e-8 * (1.0 + canonical),
        f"canonical term drifted from spectral form: {canonical!r} vs {closed!r}",
    )
    return total, canonical, residual
