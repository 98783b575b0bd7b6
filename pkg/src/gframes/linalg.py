"""Dense complex matrix arithmetic and a Hermitian eigensolver.

Matrices are numpy arrays with dtype complex128 (one 64-bit float per real
and imaginary part). The eigensolver is a cyclic Jacobi iteration with
complex plane rotations; within each sweep the pairs are visited in a fixed
round-robin order so that the disjoint rotations of one round commute and
can be applied as a single batched update.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, NotHermitianError, NotPositiveDefiniteError

# lambda_min must exceed RANK_TOLERANCE * lambda_max for powers/inverses.
RANK_TOLERANCE = 1e-10
# Admissible input asymmetry, relative to 1 + ||M||_F.
HERMITIAN_INPUT_TOLERANCE = 1e-8
# Sweeps stop once the off-diagonal Frobenius norm drops below this times ||M||_F.
OFF_DIAGONAL_FACTOR = 1e-13
MAX_SWEEPS = 64


def as_matrix(value, name: str = "matrix", require_finite: bool = False) -> np.ndarray:
    """Coerce to a 2-d complex128 array; optionally reject NaN/Inf entries."""
    arr = np.asarray(value, dtype=np.complex128)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be two-dimensional, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"{name} must have positive dimensions, got shape {arr.shape}")
    if require_finite and not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def as_vector(value, length: int | None = None, name: str = "vector") -> np.ndarray:
    """Coerce to a 1-d complex128 array of the expected length."""
    arr = np.asarray(value, dtype=np.complex128)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if length is not None and arr.shape[0] != length:
        raise ValueError(f"{name} must have length {length}, got {arr.shape[0]}")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit inner-dimension check."""
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"inner dimensions differ: {a.shape} x {b.shape}")
    return a @ b


def adjoint(m) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(m).conj().T


def frobenius_norm_sq(m) -> float:
    """Sum of squared moduli of all entries."""
    arr = as_matrix(m)
    return float(np.sum(arr.real * arr.real + arr.imag * arr.imag))


def frobenius_norm(m) -> float:
    return float(np.sqrt(frobenius_norm_sq(m)))


def trace(m) -> complex:
    """Sum of diagonal entries of a square matrix."""
    arr = as_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        raise ValueError(f"trace needs a square matrix, got shape {arr.shape}")
    return complex(np.trace(arr))


@dataclass(frozen=True, eq=False)
class HermitianEigen:
    """Eigenvalues (non-increasing) and matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@lru_cache(maxsize=None)
def _rotation_schedule(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Round-robin rounds covering every index pair once; pairs in a round are disjoint."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        if ps:
            rounds.append((np.array(ps), np.array(qs)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _off_diagonal_norm(a: np.ndarray) -> float:
    # Summed directly over off-diagonal entries; computing total minus diagonal
    # cancels catastrophically once the off-diagonal mass is near convergence.
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.sqrt(np.sum(off.real * off.real + off.imag * off.imag)))


def _rotate_round(a: np.ndarray, v: np.ndarray, p: np.ndarray, q: np.ndarray, gate: float) -> None:
    """Annihilate a[p, q] for disjoint pairs via unitary plane rotations."""
    apq = a[p, q]
    mag = np.abs(apq)
    active = mag > gate
    if not active.any():
        return
    p = p[active]
    q = q[active]
    apq = apq[active]
    mag = mag[active]

    app = a[p, p].real
    aqq = a[q, q].real
    theta = (aqq - app) / (2.0 * mag)
    t = 1.0 / (theta + np.copysign(np.sqrt(1.0 + theta * theta), theta))
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = (t * c) * (apq / mag)
    s_conj = np.conj(s)

    rp = a[p, :]
    rq = a[q, :]
    a[p, :] = c[:, None] * rp - s[:, None] * rq
    a[q, :] = s_conj[:, None] * rp + c[:, None] * rq

    cp = a[:, p]
    cq = a[:, q]
    a[:, p] = cp * c - cq * s_conj
    a[:, q] = cq * c + cp * s

    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real

    vp = v[:, p]
    vq = v[:, q]
    v[:, p] = vp * c - vq * s_conj
    v[:, q] = vq * c + vp * s


def hermitian_eig(m) -> HermitianEigen:
    """Full eigendecomposition of a Hermitian matrix.

    The input is symmetrized to (M + M*)/2 before iterating; asymmetry beyond
    HERMITIAN_INPUT_TOLERANCE * (1 + ||M||_F) is rejected. Raises
    ConvergenceError if MAX_SWEEPS sweeps do not reach the off-diagonal
    threshold.
    """
    a = as_matrix(m, "m", require_finite=True)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"eigendecomposition needs a square matrix, got shape {a.shape}")
    n = a.shape[0]
    norm = frobenius_norm(a)
    asym = frobenius_norm(a - a.conj().T)
    if asym > HERMITIAN_INPUT_TOLERANCE * (1.0 + norm):
        raise NotHermitianError(
            f"matrix is not Hermitian: ||M - M*||_F = {asym:.3e} exceeds "
            f"{HERMITIAN_INPUT_TOLERANCE:.0e} * (1 + ||M||_F)"
        )

    work = 0.5 * (a + a.conj().T)
    vec = np.eye(n, dtype=np.complex128)
    threshold = OFF_DIAGONAL_FACTOR * frobenius_norm(work)
    # Elements below the skip gate cannot push off(M) above the threshold even
    # if every pair sits exactly at the gate.
    gate = threshold / (2.0 * n)

    if n > 1:
        converged = False
        schedule = _rotation_schedule(n)
        for _ in range(MAX_SWEEPS):
            if _off_diagonal_norm(work) <= threshold:
                converged = True
                break
            for p, q in schedule:
                _rotate_round(work, vec, p, q, gate)
        if not converged and _off_diagonal_norm(work) > threshold:
            raise ConvergenceError(
                f"Jacobi sweeps did not converge after {MAX_SWEEPS} sweeps "
                f"(off-diagonal norm {_off_diagonal_norm(work):.3e}, threshold {threshold:.3e})"
            )

    diag = np.real(np.diagonal(work)).copy()
    order = np.argsort(-diag, kind="stable")
    eigenvalues = diag[order]
    eigenvectors = np.ascontiguousarray(vec[:, order])
    eigenvalues.setflags(write=False)
    eigenvectors.setflags(write=False)
    return HermitianEigen(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def matrix_power_eig(eig: HermitianEigen, a: float) -> np.ndarray:
    """U diag(lambda^a) U* from a precomputed decomposition; gates on positive definiteness."""
    lam = eig.eigenvalues
    lam_max = float(lam[0])
    lam_min = float(lam[-1])
    if not lam_min > RANK_TOLERANCE * lam_max:
        raise NotPositiveDefiniteError(
            f"matrix power needs lambda_min > {RANK_TOLERANCE:.0e} * lambda_max; "
            f"got lambda_min = {lam_min:.6e}, lambda_max = {lam_max:.6e}",
            lambda_min=lam_min,
        )
    u = eig.eigenvectors
    return (u * np.power(lam, a)) @ u.conj().T


def matrix_power(m, a: float) -> np.ndarray:
    """Fractional power of a Hermitian positive definite matrix."""
    return matrix_power_eig(hermitian_eig(m), a)
