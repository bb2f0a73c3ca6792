"""Statevector-level compression and filtering protocols.

Compression transforms a unit-norm state, keeps the k largest spectral
coefficients, renormalizes, and inverse-transforms; the fully quantum
variant reproduces the same result by simulating the flag/transfer circuit
on the joint register statevector, with measurement replaced by branch
projection and probability bookkeeping.  Filtering splits the spectrum at
a natural-order cutoff into two unnormalized branches whose energies sum
to one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .core import GTTOperator, gtt_apply, gtt_inverse_apply
from .errors import (
    BadCutoff,
    BadK,
    BadSelection,
    EmptySelection,
    LengthMismatch,
    NotNormalized,
)

NORM_TOL = 1e-9


def _check_unit(v, name: str = "state") -> np.ndarray:
    v = np.asarray(v, dtype=np.complex128)
    nrm = np.linalg.norm(v)
    if abs(nrm - 1.0) > NORM_TOL:
        raise NotNormalized(f"{name} must have unit norm, got {nrm!r}")
    return v


def fidelity(a, b) -> float:
    """Squared magnitude of the inner product of two unit-norm vectors."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise LengthMismatch(f"shapes differ: {a.shape} vs {b.shape}")
    a = _check_unit(a, "first vector")
    b = _check_unit(b, "second vector")
    return float(abs(np.vdot(a, b)) ** 2)


@dataclass(frozen=True)
class SparseSelection:
    """Retained spectral index set, sorted ascending, with its mass."""

    indices: tuple
    mass: float

    @property
    def k(self) -> int:
        return len(self.indices)

    @property
    def normalizer(self) -> float:
        return float(np.sqrt(self.mass))


def make_selection(indices: Sequence[int], spectrum) -> SparseSelection:
    """Build a selection over explicit indices, computing the retained mass."""
    spectrum = np.asarray(spectrum, dtype=np.complex128)
    N = spectrum.shape[0]
    idx = sorted(int(i) for i in indices)
    if len(idx) == 0 or len(idx) != len(set(idx)):
        raise BadSelection("indices must be non-empty and distinct")
    if idx[0] < 0 or idx[-1] >= N:
        raise BadSelection(f"indices must lie in [0, {N})")
    mass = float(np.sum(np.abs(spectrum[idx]) ** 2))
    return SparseSelection(tuple(idx), mass)


def top_k_indices(spectrum, k: int) -> SparseSelection:
    """Select the k largest-magnitude coefficients, ties toward smaller index."""
    spectrum = np.asarray(spectrum, dtype=np.complex128)
    N = spectrum.shape[0]
    if not 1 <= k <= N:
        raise BadK(f"k must lie in [1, {N}], got {k}")
    order = np.argsort(-np.abs(spectrum), kind="stable")
    return make_selection(order[:k], spectrum)


@dataclass(frozen=True)
class CompressionResult:
    selection: SparseSelection
    compressed: np.ndarray  # unit-norm retained amplitudes, selection order
    reconstructed: np.ndarray
    fidelity: float
    discarded_norm: float  # spectral mass lost to truncation, 1 - mass


def compress_hybrid(state, op: GTTOperator, k: int) -> CompressionResult:
    """Transform, keep the top-k coefficients, renormalize, reconstruct."""
    state = _check_unit(state)
    if state.shape[0] != op.N:
        raise LengthMismatch(f"state length {state.shape[0]} != N = {op.N}")
    spectrum = gtt_apply(op, state)
    selection = top_k_indices(spectrum, k)
    return _finish_compression(state, spectrum, selection, op)


def _finish_compression(state, spectrum, selection, op) -> CompressionResult:
    if selection.mass <= 0.0:
        raise EmptySelection("retained spectral mass is zero")
    idx = list(selection.indices)
    compressed = spectrum[idx] / selection.normalizer
    truncated = np.zeros_like(spectrum)
    truncated[idx] = compressed
    reconstructed = gtt_inverse_apply(op, truncated)
    fid = float(abs(np.vdot(state, reconstructed)) ** 2)
    return CompressionResult(
        selection=selection,
        compressed=compressed,
        reconstructed=reconstructed,
        fidelity=fid,
        discarded_norm=max(0.0, 1.0 - selection.mass),
    )


def reconstruct_from_classical(
    selection: SparseSelection, compressed, op: GTTOperator
) -> np.ndarray:
    """Scatter received amplitudes back to their spectral slots and invert."""
    compressed = np.asarray(compressed, dtype=np.complex128)
    if compressed.shape[0] != selection.k:
        raise LengthMismatch(
            f"expected {selection.k} amplitudes, got {compressed.shape[0]}"
        )
    full = np.zeros(op.N, dtype=np.complex128)
    full[list(selection.indices)] = compressed
    return gtt_inverse_apply(op, full)


@dataclass(frozen=True)
class QuantumSimOutcome:
    success_probability: float  # retained mass; ancilla-1 branch weight
    transmitted: np.ndarray  # post-selected compressed register, length k
    reconstructed: np.ndarray


def compress_fully_quantum(
    state, op: GTTOperator, selection: SparseSelection
) -> QuantumSimOutcome:
    """Simulate the flag-and-transfer compression circuit exactly.

    Joint registers: the original N-dimensional register, a 2-level ancilla
    flag, and a k-dimensional compressed register.  The selection oracle
    flips the ancilla on retained indices, a controlled map moves flagged
    amplitudes to the compressed register (uncomputing the original), and
    post-selecting ancilla = 1 is performed deterministically with the
    branch weight reported as the success probability.
    """
    state = _check_unit(state)
    if state.shape[0] != op.N:
        raise LengthMismatch(f"state length {state.shape[0]} != N = {op.N}")
    idx = list(selection.indices)
    if len(idx) == 0 or idx != sorted(set(idx)) or idx[0] < 0 or idx[-1] >= op.N:
        raise BadSelection("selection indices invalid for this operator")
    k = len(idx)

    # joint[y, a, c] with y the original register, a the ancilla, c the
    # compressed register (rank map f sends the j-th smallest index to j)
    joint = np.zeros((op.N, 2, k), dtype=np.complex128)
    joint[:, 0, 0] = gtt_apply(op, state)

    # oracle: flip the ancilla where the original register is in the set
    for y in idx:
        joint[y, 1, :], joint[y, 0, :] = joint[y, 0, :].copy(), joint[y, 1, :].copy()

    # controlled transfer: |y_j, 1, 0> -> |0, 1, j>
    for j, y in enumerate(idx):
        amp = joint[y, 1, 0]
        joint[y, 1, 0] = 0.0
        joint[0, 1, j] += amp

    success = float(np.sum(np.abs(joint[:, 1, :]) ** 2))
    if success <= 0.0:
        raise EmptySelection("ancilla-1 branch has zero weight; process failed")
    branch = joint[:, 1, :] / np.sqrt(success)
    transmitted = branch[0, :].copy()

    # decode: expand |j> back to |y_j> and invert the transform
    decoded = np.zeros(op.N, dtype=np.complex128)
    for j, y in enumerate(idx):
        decoded[y] = transmitted[j]
    reconstructed = gtt_inverse_apply(op, decoded)
    return QuantumSimOutcome(success, transmitted, reconstructed)


@dataclass(frozen=True)
class FilterOutput:
    cutoff: int
    low_branch: np.ndarray
    high_branch: np.ndarray
    low_spectrum: np.ndarray
    high_spectrum: np.ndarray


SpectrumHook = Callable[[np.ndarray], np.ndarray]


def filter_natural(
    state,
    op: GTTOperator,
    cutoff: int,
    spectrum_hook: SpectrumHook | None = None,
) -> FilterOutput:
    """Split a state at a natural-order spectral cutoff.

    Indices below the cutoff go to the low branch, the rest to the high
    branch; neither branch is renormalized, so their energies sum to one.
    ``spectrum_hook``, if given, maps the full spectrum before splitting
    (the optional mid-circuit processing slot).
    """
    state = _check_unit(state)
    if state.shape[0] != op.N:
        raise LengthMismatch(f"state length {state.shape[0]} != N = {op.N}")
    if not 1 <= cutoff <= op.N:
        raise BadCutoff(f"cutoff must lie in [1, {op.N}], got {cutoff}")
    spectrum = gtt_apply(op, state)
    if spectrum_hook is not None:
        spectrum = np.asarray(spectrum_hook(spectrum), dtype=np.complex128)
    low_spectrum = spectrum.copy()
    low_spectrum[cutoff:] = 0.0
    high_spectrum = spectrum - low_spectrum
    return FilterOutput(
        cutoff=cutoff,
        low_branch=gtt_inverse_apply(op, low_spectrum),
        high_branch=gtt_inverse_apply(op, high_spectrum),
        low_spectrum=low_spectrum,
        high_spectrum=high_spectrum,
    )
