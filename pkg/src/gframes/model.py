"""Operator-valued frames on a finite-dimensional complex space.

A GFrame is a finite family of operators, the i-th mapping C^n into C^(k_i),
stored as k_i x n complex matrices. The frame operator S is the n x n sum of
adjoint(op) @ op over the family; its spectrum supplies the optimal frame
bounds, the nearly-Parseval rating, and every canonical transform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotAFrameError
from .linalg import (
    RANK_TOLERANCE,
    HermitianEigen,
    as_vector,
    frobenius_norm,
    frobenius_norm_sq,
    hermitian_eig,
    matrix_power_eig,
)


class GFrame:
    """Immutable finite family of operators with a common domain dimension."""

    __slots__ = ("_operators", "_dim_h", "_frame_op")

    def __init__(self, operators, dim_h: int | None = None):
        ops = []
        for idx, op in enumerate(operators):
            arr = np.array(op, dtype=np.complex128)
            if arr.ndim != 2:
                raise ValueError(f"operator {idx} must be a matrix, got shape {arr.shape}")
            if arr.shape[0] < 1 or arr.shape[1] < 1:
                raise ValueError(f"operator {idx} must have positive dimensions")
            if not np.isfinite(arr).all():
                raise ValueError(f"operator {idx} contains non-finite entries")
            arr.setflags(write=False)
            ops.append(arr)
        if not ops:
            raise ValueError("a frame needs at least one operator")
        if dim_h is None:
            dim_h = ops[0].shape[1]
        if dim_h < 1:
            raise ValueError(f"dim_h must be positive, got {dim_h}")
        for idx, arr in enumerate(ops):
            if arr.shape[1] != dim_h:
                raise ValueError(
                    f"operator {idx} has {arr.shape[1]} columns, expected dim_h = {dim_h}"
                )
        self._operators = tuple(ops)
        self._dim_h = int(dim_h)
        self._frame_op = None

    @property
    def dim_h(self) -> int:
        return self._dim_h

    @property
    def operators(self) -> tuple[np.ndarray, ...]:
        return self._operators

    @property
    def counts(self) -> tuple[int, ...]:
        """Output dimension k_i of each operator."""
        return tuple(op.shape[0] for op in self._operators)

    def __len__(self) -> int:
        return len(self._operators)

    def __repr__(self) -> str:
        return f"GFrame(dim_h={self._dim_h}, counts={list(self.counts)})"


@dataclass(frozen=True, eq=False)
class FrameOperator:
    """The matrix S with its cached eigendecomposition."""

    matrix: np.ndarray
    eig: HermitianEigen


@dataclass(frozen=True)
class FrameBounds:
    """Optimal constants: lower = lambda_min(S), upper = lambda_max(S).

    epsilon is the nearly-Parseval rating max(1 - lower, upper - 1); values
    below 1 mean the spectrum sits inside (0, 2).
    """

    lower: float
    upper: float
    epsilon: float | None = None


def frame_operator(f: GFrame) -> FrameOperator:
    """S = sum of adjoint(op) @ op, with eigendecomposition; cached per frame."""
    cached = f._frame_op
    if cached is not None:
        return cached
    n = f.dim_h
    s = np.zeros((n, n), dtype=np.complex128)
    for op in f.operators:
        s += op.conj().T @ op
    s.setflags(write=False)
    result = FrameOperator(matrix=s, eig=hermitian_eig(s))
    f._frame_op = result
    return result


def validate_frame(f: GFrame) -> FrameBounds:
    """Certify the family as a frame and return its optimal bounds.

    Raises NotAFrameError when lambda_min(S) <= RANK_TOLERANCE * lambda_max(S).
    """
    eig = frame_operator(f).eig
    upper = float(eig.eigenvalues[0])
    lower = float(eig.eigenvalues[-1])
    if not lower > RANK_TOLERANCE * upper:
        raise NotAFrameError(
            f"not a frame: lambda_min(S) = {lower:.6e} is at or below "
            f"{RANK_TOLERANCE:.0e} * lambda_max(S) = {RANK_TOLERANCE * upper:.6e}",
            lambda_min=lower,
        )
    epsilon = max(1.0 - lower, upper - 1.0)
    return FrameBounds(lower=lower, upper=upper, epsilon=epsilon)


def analysis_apply(f: GFrame, x) -> list[np.ndarray]:
    """The coefficient family (op @ x) for each operator."""
    vec = as_vector(x, f.dim_h, "x")
    return [op @ vec for op in f.operators]


def synthesis_apply(f: GFrame, y) -> np.ndarray:
    """Adjoint of analysis: sum of adjoint(op) @ y_i."""
    parts = list(y)
    if len(parts) != len(f.operators):
        raise ValueError(f"expected {len(f.operators)} coefficient blocks, got {len(parts)}")
    out = np.zeros(f.dim_h, dtype=np.complex128)
    for idx, (op, block) in enumerate(zip(f.operators, parts)):
        b = as_vector(block, op.shape[0], f"y[{idx}]")
        out += op.conj().T @ b
    return out


def canonical_parseval(f: GFrame) -> GFrame:
    """Right-multiply every operator by S^(-1/2); the result has frame operator I."""
    validate_frame(f)
    root_inv = matrix_power_eig(frame_operator(f).eig, -0.5)
    return GFrame([op @ root_inv for op in f.operators], dim_h=f.dim_h)


def canonical_dual(f: GFrame) -> GFrame:
    """Right-multiply every operator by S^(-1); the canonical alternate dual."""
    validate_frame(f)
    inv = matrix_power_eig(frame_operator(f).eig, -1.0)
    return GFrame([op @ inv for op in f.operators], dim_h=f.dim_h)


def reconstruct(f: GFrame, x) -> np.ndarray:
    """Recover x as S^(-1) applied to the synthesis of the analysis coefficients."""
    validate_frame(f)
    inv = matrix_power_eig(frame_operator(f).eig, -1.0)
    return inv @ synthesis_apply(f, analysis_apply(f, x))


def total_frobenius_energy(f: GFrame) -> float:
    """Sum of squared Frobenius norms over the family; finite-dimension diagnostic.

    For a certified frame the value lies in [lower * n, upper * n].
    """
    return float(sum(frobenius_norm_sq(op) for op in f.operators))


def matching_shapes(a: GFrame, b: GFrame) -> bool:
    return a.dim_h == b.dim_h and a.counts == b.counts


def require_matching_shapes(a: GFrame, b: GFrame) -> None:
    if not matching_shapes(a, b):
        raise ValueError(
            f"families do not match: dim_h {a.dim_h} vs {b.dim_h}, "
            f"counts {list(a.counts)} vs {list(b.counts)}"
        )


def dual_residual(lam: GFrame, gam: GFrame) -> float:
    """Frobenius distance of sum(adjoint(lam_i) @ gam_i) from the identity."""
    require_matching_shapes(lam, gam)
    n = lam.dim_h
    acc = np.zeros((n, n), dtype=np.complex128)
    for a, b in zip(lam.operators, gam.operators):
        acc += a.conj().T @ b
    return frobenius_norm(acc - np.eye(n))
