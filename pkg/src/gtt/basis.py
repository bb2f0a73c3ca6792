"""Piecewise-constant basis functions on [0, 1) generated by the base matrix.

The order-N basis function with index j is a product of base-matrix entries
selected by the base-b digits of j and of the evaluation point; it is
constant on each of the N uniform subintervals.  Scaling by b**(n/2) makes
the family orthonormal in L2[0,1), and sampling the unscaled functions at
subinterval midpoints recovers the tensor-power transform matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import GTTOperator, dense_gtt_matrix
from .errors import BadSampleCount, DomainError, IndexOutOfRange

# Guard for floor(b*x) when repeated scaling leaves b*x a hair below an
# integer (dyadic/triadic rationals accumulate representation error).
_FLOOR_GUARD = 1e-12


def _digit_and_frac(b: int, x: float) -> tuple[int, float]:
    bx = b * x
    d = math.floor(bx)
    if d + 1 - bx < _FLOOR_GUARD:
        d += 1
    if d >= b:
        d = b - 1
    return d, bx - d


def eval_basis(op: GTTOperator, j: int, x: float) -> complex:
    """Evaluate the unnormalized basis function f_j at x in [0, 1)."""
    if not 0.0 <= x < 1.0:
        raise DomainError(f"x must lie in [0, 1), got {x}")
    if not 0 <= j < op.N:
        raise IndexOutOfRange(f"basis index must lie in [0, {op.N}), got {j}")
    b = op.b
    W = op.base
    value = 1.0 + 0.0j
    scale = op.N // b
    for _ in range(op.n):
        row, x = _digit_and_frac(b, x)
        col, j = divmod(j, scale)
        value *= W[row, col]
        scale //= b
    return value


def eval_normalized_basis(op: GTTOperator, j: int, x: float) -> complex:
    """Orthonormal variant: b**(n/2) * f_j(x)."""
    return op.b ** (op.n / 2.0) * eval_basis(op, j, x)


def sample_matrix(op: GTTOperator) -> np.ndarray:
    """N x N matrix of basis values at subinterval midpoints.

    G[p, q] = f_q((2p+1) / (2N)); unitary, and equal to the dense tensor
    power of the base matrix.
    """
    N = op.N
    dense_gtt_matrix(op)  # reuse the size-cap check
    xs = (2 * np.arange(N) + 1) / (2 * N)
    G = np.empty((N, N), dtype=np.complex128)
    for q in range(N):
        for p in range(N):
            G[p, q] = eval_basis(op, q, xs[p])
    return G


@dataclass(frozen=True)
class SeriesExpansion:
    """Expansion of a function in the orthonormal basis of an operator."""

    op: GTTOperator
    coefficients: np.ndarray


def series_coefficients(op: GTTOperator, samples) -> SeriesExpansion:
    """Expansion coefficients of a function sampled at M uniform midpoints.

    ``samples`` holds g at x_t = (2t+1)/(2M) with M a multiple of N.  The
    midpoint rule gives C_m = (1/M) sum_t conj(phi_m(x_t)) g(x_t), exact
    whenever g is constant on the N base subintervals.
    """
    g = np.asarray(samples, dtype=np.complex128)
    N = op.N
    if g.ndim != 1 or g.shape[0] < N or g.shape[0] % N != 0:
        raise BadSampleCount(
            f"need a multiple of N={N} midpoint samples, got shape {g.shape}"
        )
    M = g.shape[0]
    # phi_m is constant on each base subinterval, so group the M samples
    # into the N subintervals and weight by the sampled basis matrix.
    scale = op.b ** (op.n / 2.0)
    Phi = scale * dense_gtt_matrix(op)  # Phi[p, m] = phi_m on subinterval p
    block_sums = g.reshape(N, M // N).sum(axis=1)
    return SeriesExpansion(op, (Phi.conj().T @ block_sums) / M)


def series_reconstruct(exp: SeriesExpansion, x: float) -> complex:
    """Evaluate sum_m C_m phi_m(x) at a point of [0, 1)."""
    op = exp.op
    C = np.asarray(exp.coefficients, dtype=np.complex128)
    if C.shape != (op.N,):
        raise BadSampleCount(f"expected {op.N} coefficients, got shape {C.shape}")
    if not 0.0 <= x < 1.0:
        raise DomainError(f"x must lie in [0, 1), got {x}")
    total = 0.0 + 0.0j
    for m in range(op.N):
        total += C[m] * eval_normalized_basis(op, m, x)
    return total
