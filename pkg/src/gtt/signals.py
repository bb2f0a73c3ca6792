"""Built-in named test signals.

Three 8-component complex states ("s1", "s2", "s3") that are nearly sparse
under the u3(pi/4, pi/3, pi/6) tensor-power basis, and "table2", the
midpoint discretization of a perturbed degree-7 polynomial on [0, 1] at
N = 16 points.  All are returned normalized to unit norm.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import IndexOutOfRange

_S1 = [
    0.693 - 0.048j, -0.373 + 0.083j, -0.373 + 0.083j, -0.258 - 0.107j,
    -0.239 + 0.161j, 0.117 - 0.107j, 0.117 - 0.107j, 0.115 - 0.015j,
]

_S2 = [
    0.706 - 0.076j, -0.371 + 0.096j, -0.371 + 0.003j, -0.241 - 0.078j,
    -0.238 + 0.173j, 0.113 - 0.111j, 0.133 - 0.078j, 0.102 - 0.022j,
]

_S3 = [
    0.718 - 0.101j, -0.370 + 0.108j, -0.370 + 0.015j, -0.242 - 0.082j,
    -0.237 + 0.101j, 0.128 - 0.085j, 0.147 - 0.052j, 0.091 - 0.028j,
]


def perturbed_polynomial(x: float) -> float:
    """Degree-7 polynomial with small sinusoidal and exponential terms."""
    poly = (
        -978.7 * x**7 + 3677.0 * x**6 - 5575.0 * x**5 + 4366.0 * x**4
        - 1875.0 * x**3 + 431.6 * x**2 - 47.57 * x + 1.886
    )
    return poly + 0.1 * math.sin(0.1 * x) - 0.01 * math.exp(-x)


def _normalized(values) -> np.ndarray:
    v = np.asarray(values, dtype=np.complex128)
    return v / np.linalg.norm(v)


def builtin_signal(name: str) -> np.ndarray:
    """Return a named unit-norm signal: "s1", "s2", "s3", or "table2"."""
    key = name.strip().lower()
    if key == "s1":
        return _normalized(_S1)
    if key == "s2":
        return _normalized(_S2)
    if key == "s3":
        return _normalized(_S3)
    if key == "table2":
        xs = (2 * np.arange(16) + 1) / 32.0
        return _normalized([perturbed_polynomial(x) for x in xs])
    raise IndexOutOfRange(f"unknown built-in signal {name!r}")
