"""Tensor-power transforms of a small unitary base matrix.

The transform acts on vectors of length N = b**n as the n-fold Kronecker
power of a b x b unitary W, with the first tensor factor acting on the
most-significant base-b digit of the index.  A butterfly-style fast path
applies W once per digit position, costing O(N * b * log_b N) arithmetic
instead of the O(N**2) dense product.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np

from .errors import BadShape, IndexOutOfRange, LengthMismatch, NotUnitary, TooLarge

UNITARITY_TOL = 1e-10

DEFAULT_DENSE_CAP = 4096


def _dense_cap() -> int:
    return int(os.environ.get("GTT_DENSE_CAP", DEFAULT_DENSE_CAP))


def make_base_matrix(b: int, entries) -> np.ndarray:
    """Validate and return a b x b unitary base matrix as a complex array.

    Raises BadShape for wrong dimensions or non-finite entries, NotUnitary
    when max|W^H W - I| exceeds 1e-10.
    """
    if b < 2:
        raise BadShape(f"base dimension must be >= 2, got {b}")
    W = np.asarray(entries, dtype=np.complex128)
    if W.shape != (b, b):
        raise BadShape(f"expected a {b}x{b} matrix, got shape {W.shape}")
    if not np.all(np.isfinite(W)):
        raise BadShape("matrix entries must be finite")
    err = np.max(np.abs(W.conj().T @ W - np.eye(b)))
    if err > UNITARITY_TOL:
        raise NotUnitary(f"max|W^H W - I| = {err:.3e} exceeds {UNITARITY_TOL:g}")
    W.setflags(write=False)
    return W


def hadamard() -> np.ndarray:
    """The 2x2 Hadamard matrix."""
    s = 1.0 / math.sqrt(2.0)
    return make_base_matrix(2, [[s, s], [s, -s]])


def u3(theta: float, phi: float, lam: float) -> np.ndarray:
    """General 2x2 unitary from the (theta, phi, lambda) rotation angles.

    [[cos(t/2), -e^{i lam} sin(t/2)],
     [e^{i phi} sin(t/2), e^{i (phi+lam)} cos(t/2)]]
    """
    for name, v in (("theta", theta), ("phi", phi), ("lambda", lam)):
        if not math.isfinite(v):
            raise BadShape(f"{name} must be finite")
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    W = np.array(
        [
            [c, -np.exp(1j * lam) * s],
            [np.exp(1j * phi) * s, np.exp(1j * (phi + lam)) * c],
        ],
        dtype=np.complex128,
    )
    return make_base_matrix(2, W)


def dft_matrix(b: int) -> np.ndarray:
    """Unitary b x b DFT matrix, F[j,k] = exp(+2 pi i j k / b) / sqrt(b)."""
    if b < 2:
        raise BadShape(f"base dimension must be >= 2, got {b}")
    j = np.arange(b)
    F = np.exp(2j * np.pi * np.outer(j, j) / b) / math.sqrt(b)
    return make_base_matrix(b, F)


@dataclass(frozen=True)
class GTTOperator:
    """A base matrix together with its tensor power n; N = b**n."""

    base: np.ndarray
    n: int
    N: int = field(init=False)

    def __post_init__(self):
        b = self.base.shape[0]
        if self.n < 1:
            raise BadShape(f"tensor power must be >= 1, got {self.n}")
        N = b**self.n
        if N > np.iinfo(np.intp).max:
            raise TooLarge(f"b**n = {b}**{self.n} exceeds the index range")
        object.__setattr__(self, "N", int(N))

    @property
    def b(self) -> int:
        return self.base.shape[0]

    def conj(self) -> "GTTOperator":
        """Operator built from the conjugate transpose of the base matrix."""
        return GTTOperator(make_base_matrix(self.b, self.base.conj().T), self.n)


class OpCounter:
    """Tallies multiplications and additions performed by the fast transform."""

    def __init__(self):
        self.mults = 0
        self.adds = 0

    @property
    def total(self) -> int:
        return self.mults + self.adds


def _check_vector(op: GTTOperator, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.complex128)
    if x.ndim != 1 or x.shape[0] != op.N:
        raise LengthMismatch(f"expected a length-{op.N} vector, got shape {x.shape}")
    return x


def _fast_apply(W: np.ndarray, x: np.ndarray, n: int, counter: OpCounter | None) -> np.ndarray:
    """Butterfly application of W tensored n times.

    Level-by-level equivalent of the recursive reshape/multiply/recurse
    procedure: W is applied to the least-significant digit first, then to
    each more significant digit in turn.
    """
    b = W.shape[0]
    N = b**n
    T = x.reshape((b,) * n)
    # axis n-1 is the least-significant digit; the recursion transforms it
    # first, then recurses on the leading digits.
    for axis in range(n - 1, -1, -1):
        T = np.moveaxis(np.tensordot(W, T, axes=(1, axis)), 0, axis)
        if counter is not None:
            counter.mults += N * b
            counter.adds += N * (b - 1)
    return T.reshape(N)


def gtt_apply(op: GTTOperator, x, counter: OpCounter | None = None) -> np.ndarray:
    """Compute y = (W tensor n) x via the fast butterfly algorithm."""
    x = _check_vector(op, x)
    return _fast_apply(op.base, x, op.n, counter)


def gtt_inverse_apply(op: GTTOperator, y, counter: OpCounter | None = None) -> np.ndarray:
    """Compute (W^H tensor n) y, inverting gtt_apply."""
    y = _check_vector(op, y)
    return _fast_apply(op.base.conj().T, y, op.n, counter)


def dense_gtt_matrix(op: GTTOperator) -> np.ndarray:
    """Explicit N x N matrix via iterated Kronecker products.

    Intended as an oracle and for small worked examples; guarded by a size
    cap (GTT_DENSE_CAP env var, default 4096) against O(N^2) blowups.
    """
    cap = _dense_cap()
    if op.N > cap:
        raise TooLarge(f"N = {op.N} exceeds the dense cap {cap}")
    G = op.base
    for _ in range(op.n - 1):
        G = np.kron(G, op.base)
    return G


def digit_counts(op: GTTOperator, p: int, q: int) -> np.ndarray:
    """b x b table counting how often digit pair (i, j) occurs in (p, q).

    Digits are read position by position from the base-b expansions; the
    counts over all pairs sum to n.
    """
    if not (0 <= p < op.N and 0 <= q < op.N):
        raise IndexOutOfRange(f"indices must lie in [0, {op.N}), got ({p}, {q})")
    b = op.b
    alpha = np.zeros((b, b), dtype=np.int64)
    for _ in range(op.n):
        alpha[p % b, q % b] += 1
        p //= b
        q //= b
    return alpha


def gtt_element(op: GTTOperator, p: int, q: int) -> complex:
    """Closed-form matrix element: product of W[p_k, q_k] over digit positions."""
    alpha = digit_counts(op, p, q)
    return complex(np.prod(op.base**alpha))
