"""The n-qubit register: 2^n complex amplitudes plus memory accounting.

Basis index convention: bit t of the index is the state of qubit t, so
qubit 0 is the least-significant bit. Index 2 of a two-qubit register is
|10> (qubit 1 set, qubit 0 clear).
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError

# memory_required rejects anything past this outright; 2^300 amplitudes is
# far beyond any addressable memory and huge shifts only burn time.
MAX_SUPPORTED_QUBITS = 300

_FALLBACK_FREE_BYTES = 8_000_000_000


class Precision(enum.Enum):
    """Per-amplitude storage width: two 32-bit or two 64-bit reals."""

    SINGLE = "single"
    DOUBLE = "double"

    @property
    def dtype(self) -> np.dtype:
        return np.dtype(np.complex64 if self is Precision.SINGLE else np.complex128)

    @property
    def bits_per_amplitude(self) -> int:
        return 64 if self is Precision.SINGLE else 128

    @property
    def norm_tolerance(self) -> float:
        # Drift past this is a bug; the engine never renormalizes silently.
        return 1e-4 if self is Precision.SINGLE else 1e-10


@dataclass
class StateVector:
    """Dense register state; amps[j] is the amplitude of basis state |j>."""

    num_qubits: int
    amps: np.ndarray

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be >= 1")
        self.amps = np.asarray(self.amps)
        dim = 1 << self.num_qubits
        if self.amps.shape != (dim,):
            raise ValueError(f"expected {dim} amplitudes, got shape {self.amps.shape}")
        if self.amps.dtype not in (np.complex64, np.complex128):
            raise ValueError(f"unsupported amplitude dtype {self.amps.dtype}")

    @property
    def dim(self) -> int:
        return 1 << self.num_qubits

    @property
    def precision(self) -> Precision:
        return Precision.SINGLE if self.amps.dtype == np.complex64 else Precision.DOUBLE


def memory_required(num_qubits: int, precision: Precision = Precision.SINGLE) -> int:
    """Bits needed for the amplitude array: 64·2^n single, 128·2^n double.

    The count is exact (arbitrary-precision); widths past MAX_SUPPORTED_QUBITS
    raise CapacityError instead of producing astronomically large integers.
    """
    if num_qubits < 1:
        raise ValueError("num_qubits must be >= 1")
    if num_qubits > MAX_SUPPORTED_QUBITS:
        raise CapacityError(
            f"{num_qubits} qubits is past the supported limit of {MAX_SUPPORTED_QUBITS}"
        )
    return precision.bits_per_amplitude << num_qubits


def format_bytes(num_bytes: int) -> str:
    """Human-readable byte count in decimal units, 4 significant digits."""
    if num_bytes < 1000:
        return f"{num_bytes} B"
    value = float(num_bytes)
    for unit in ("kB", "MB", "GB", "TB", "PB", "EB"):
        value /= 1000.0
        if value < 1000.0 or unit == "EB":
            break
    digits = 3 if value < 10 else 2 if value < 100 else 1
    text = f"{value:.{digits}f}".rstrip("0").rstrip(".")
    return f"{text} {unit}"


def _detect_free_memory() -> int | None:
    try:
        with open("/proc/meminfo") as fh:
            for line in fh:
                if line.startswith("MemAvailable:"):
                    return int(line.split()[1]) * 1024
    except (OSError, ValueError, IndexError):
        pass
    try:
        return os.sysconf("SC_AVPHYS_PAGES") * os.sysconf("SC_PAGE_SIZE")
    except (AttributeError, ValueError, OSError):
        return None


def default_memory_budget() -> int:
    """Allocation cap in bytes: 75% of detected free memory, else 8 GB."""
    free = _detect_free_memory()
    if free is None or free <= 0:
        free = _FALLBACK_FREE_BYTES
    return free * 3 // 4


def new_state(
    num_qubits: int,
    precision: Precision = Precision.SINGLE,
    memory_budget: int | None = None,
) -> StateVector:
    """Freshly allocated |00...0>: amps[0] = 1, everything else 0.

    Raises CapacityError before touching memory when the amplitude array
    would not fit the budget (default: `default_memory_budget()`).
    """
    if num_qubits < 1:
        raise ValueError("num_qubits must be >= 1")
    need_bytes = memory_required(num_qubits, precision) // 8
    budget = default_memory_budget() if memory_budget is None else memory_budget
    if need_bytes > budget:
        raise CapacityError(
            f"{num_qubits} qubits need {format_bytes(need_bytes)} "
            f"({need_bytes} bytes); memory budget is {format_bytes(budget)}"
        )
    amps = np.zeros(1 << num_qubits, dtype=precision.dtype)
    amps[0] = 1.0
    return StateVector(num_qubits, amps)


def norm_squared(state: StateVector) -> float:
    """Sum of |amps[j]|^2, accumulated in float64 regardless of precision."""
    a = state.amps
    re = a.real.astype(np.float64, copy=False)
    im = a.imag.astype(np.float64, copy=False)
    return float(np.dot(re, re) + np.dot(im, im))


def amplitude_of(state: StateVector, basis_index: int) -> complex:
    """Read one amplitude without disturbing the register.

    A simulator-only capability: physical hardware cannot expose amplitudes.
    """
    if not 0 <= basis_index < state.dim:
        raise IndexError(f"basis index {basis_index} out of range [0, {state.dim})")
    return complex(state.amps[basis_index])
