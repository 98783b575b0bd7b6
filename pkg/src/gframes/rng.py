"""Seeded random streams used by all generators.

The stream is the counter-based Philox 4x64 generator keyed directly by the
user seed, so a (seed, substream) pair identifies the draws exactly.
Substream r is the base stream jumped r times. Gaussian variates come from
the Box-Muller transform applied to consecutive uniform doubles: each pair
(u1, u2) yields r*cos and r*sin with r = sqrt(-2 ln(1 - u1)); the cos block
of a batch precedes the sin block.
"""

from __future__ import annotations

import numpy as np


def stream(seed: int, substream: int = 0) -> np.random.Generator:
    """Deterministic generator for (seed, substream)."""
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    if substream < 0:
        raise ValueError(f"substream must be non-negative, got {substream}")
    bits = np.random.Philox(key=seed)
    if substream:
        bits = bits.jumped(substream)
    return np.random.Generator(bits)


def standard_normals(gen: np.random.Generator, count: int) -> np.ndarray:
    """Box-Muller standard normals drawn from the uniform stream."""
    if count == 0:
        return np.zeros(0)
    pairs = (count + 1) // 2
    u1 = 1.0 - gen.random(pairs)  # (0, 1], keeps the log finite
    u2 = gen.random(pairs)
    radius = np.sqrt(-2.0 * np.log(u1))
    angle = (2.0 * np.pi) * u2
    z = np.concatenate([radius * np.cos(angle), radius * np.sin(angle)])
    return z[:count]


def real_gaussian_matrix(gen: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return standard_normals(gen, rows * cols).reshape(rows, cols)


def complex_gaussian_matrix(gen: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    """Independent standard-Gaussian real and imaginary parts (real block drawn first)."""
    re = standard_normals(gen, rows * cols)
    im = standard_normals(gen, rows * cols)
    return (re + 1j * im).reshape(rows, cols)
