"""The 2x2 unitary gate primitive and the standard gate library.

Gates are only ever single-qubit matrices; multi-qubit behaviour comes from
applying them under a control (see kernel.apply_controlled_gate). The
parametric phase gate is u1(theta) = diag(1, e^{i·theta}). Note u1 differs
from Rz(theta) = diag(e^{-i·theta/2}, e^{i·theta/2}) by the global phase
e^{i·theta/2}, which is unobservable but shows up when comparing matrices.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NotUnitaryError

UNITARITY_TOL = 1e-6


def unitarity_deviation(matrix) -> float:
    """Max entry of |U†U - I|."""
    m = np.asarray(matrix, dtype=np.complex128)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    return float(np.abs(m.conj().T @ m - np.eye(2)).max())


def is_unitary(matrix, tol: float = UNITARITY_TOL) -> bool:
    """True iff U†U = I entrywise within tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return unitarity_deviation(matrix) <= tol


@dataclass(frozen=True)
class Gate:
    """Single-qubit gate [[a, b], [c, d]] with a name for the text format."""

    name: str
    a: complex
    b: complex
    c: complex
    d: complex
    angle: float | None = None

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=np.complex128)

    def dagger(self) -> "Gate":
        """Conjugate transpose; the inverse, since gates are unitary."""
        conj = [complex(x).conjugate() for x in (self.a, self.c, self.b, self.d)]
        return Gate(f"{self.name}†", *conj)


def make_gate(matrix, name: str = "custom", tol: float = UNITARITY_TOL) -> Gate:
    """Build a Gate from a 2x2 matrix, rejecting anything non-unitary."""
    m = np.asarray(matrix, dtype=np.complex128)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise ValueError("matrix entries must be finite")
    deviation = unitarity_deviation(m)
    if deviation > tol:
        raise NotUnitaryError(deviation)
    return Gate(name, complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]))


_SQRT2_INV = 1.0 / math.sqrt(2.0)

H = Gate("h", _SQRT2_INV, _SQRT2_INV, _SQRT2_INV, -_SQRT2_INV)
X = Gate("x", 0, 1, 1, 0)
Y = Gate("y", 0, -1j, 1j, 0)
Z = Gate("z", 1, 0, 0, -1)
S = Gate("s", 1, 0, 0, 1j)
T = Gate("t", 1, 0, 0, cmath.exp(1j * math.pi / 4))

FIXED_GATES = {g.name: g for g in (H, X, Y, Z, S, T)}


def u1(theta: float) -> Gate:
    """Phase gate diag(1, e^{i·theta})."""
    return Gate("u1", 1, 0, 0, cmath.exp(1j * theta), angle=float(theta))


def std_gate(name: str, angle: float | None = None) -> Gate:
    """Look up a library gate by mnemonic; u1 requires an angle."""
    if name == "u1":
        if angle is None:
            raise ValueError("u1 requires an angle")
        return u1(angle)
    gate = FIXED_GATES.get(name)
    if gate is None:
        raise ValueError(f"unknown gate {name!r}")
    if angle is not None:
        raise ValueError(f"gate {name!r} takes no angle")
    return gate


def random_unitary_gate(rng: np.random.Generator, name: str = "custom") -> Gate:
    """Haar-random 2x2 unitary via QR of a complex Gaussian matrix."""
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    return make_gate(q, name=name)
