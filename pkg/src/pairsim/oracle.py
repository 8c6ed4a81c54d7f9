"""Brute-force dense reference: full 2^n x 2^n operators via Kronecker products.

Exists to verify the pair-update engine on small registers, so it is always
double precision and deliberately unoptimized; building a lifted operator
costs O(4^n) memory and applying it O(4^n) time. Hard-capped at
ORACLE_MAX_QUBITS to keep it in its verification lane.
"""

from __future__ import annotations

import numpy as np

from .circuits import Apply, Circuit, ControlledApply, Instruction, SampleMeasure
from .errors import CapacityError, DimensionError
from .gates import Gate
from .kernel import apply_controlled_gate, apply_gate
from .state import Precision, StateVector, new_state

ORACLE_MAX_QUBITS = 12


def _check_capacity(num_qubits: int) -> None:
    if num_qubits > ORACLE_MAX_QUBITS:
        raise CapacityError(
            f"dense oracle capped at {ORACLE_MAX_QUBITS} qubits, got {num_qubits}"
        )


def _is_pow2(k: int) -> bool:
    return k > 0 and (k & (k - 1)) == 0


def kron(a, b) -> np.ndarray:
    """Kronecker product of vectors or matrices with power-of-two sizes."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    for arr in (a, b):
        if not all(_is_pow2(s) for s in arr.shape):
            raise ValueError(f"dimensions must be powers of two, got shape {arr.shape}")
    out_dim = a.shape[0] * b.shape[0]
    if out_dim > (1 << ORACLE_MAX_QUBITS):
        raise CapacityError(f"kron result dimension {out_dim} past the oracle cap")
    return np.kron(a, b)


def dense_lift(gate: Gate, target: int, num_qubits: int) -> np.ndarray:
    """Embed a 1-qubit gate at position `target` of an identity chain.

    Qubit 0 is the least-significant Kronecker factor, matching the basis
    index convention (|1> ⊗ |0> is index 2).
    """
    if not 0 <= target < num_qubits:
        raise IndexError(f"target {target} out of range for {num_qubits} qubits")
    _check_capacity(num_qubits)
    eye_hi = np.eye(1 << (num_qubits - 1 - target), dtype=np.complex128)
    eye_lo = np.eye(1 << target, dtype=np.complex128)
    return kron(kron(eye_hi, gate.matrix), eye_lo)


def dense_controlled_lift(gate: Gate, control: int, target: int, num_qubits: int) -> np.ndarray:
    """Operator acting as the gate on `target` where bit `control` is 1.

    Columns with the control bit clear are identity columns; the rest come
    from the lifted gate. Index-wise masking keeps both qubit orders honest.
    """
    if control == target:
        raise ValueError("control and target must differ")
    if not 0 <= control < num_qubits:
        raise IndexError(f"control {control} out of range for {num_qubits} qubits")
    _check_capacity(num_qubits)
    lifted = dense_lift(gate, target, num_qubits)
    dim = 1 << num_qubits
    control_set = ((np.arange(dim) >> control) & 1).astype(np.float64)
    return np.diag(1.0 - control_set).astype(np.complex128) + lifted * control_set[None, :]


def dense_apply(op: np.ndarray, state: StateVector) -> StateVector:
    """Plain matrix-vector product; returns a fresh double-precision state."""
    op = np.asarray(op, dtype=np.complex128)
    if op.shape != (state.dim, state.dim):
        raise DimensionError(
            f"operator shape {op.shape} does not match state dimension {state.dim}"
        )
    return StateVector(state.num_qubits, op @ state.amps.astype(np.complex128))


def instruction_operator(instr: Instruction, num_qubits: int) -> np.ndarray:
    """Dense operator realizing one gate instruction."""
    if isinstance(instr, Apply):
        return dense_lift(instr.gate, instr.target, num_qubits)
    if isinstance(instr, ControlledApply):
        return dense_controlled_lift(instr.gate, instr.control, instr.target, num_qubits)
    raise ValueError(f"no operator for instruction {instr!r}")


def circuit_operator(circuit: Circuit) -> np.ndarray:
    """Product of all gate operators of a circuit (measurement skipped)."""
    _check_capacity(circuit.num_qubits)
    op = np.eye(1 << circuit.num_qubits, dtype=np.complex128)
    for instr in circuit.instructions:
        if isinstance(instr, SampleMeasure):
            continue
        op = instruction_operator(instr, circuit.num_qubits) @ op
    return op


def engine_oracle_deviation(
    circuit: Circuit, precision: Precision = Precision.DOUBLE, executor=None
) -> float:
    """Run the pair-update engine and the dense oracle side by side.

    Returns the max per-amplitude deviation observed after any instruction;
    the oracle trajectory stays double precision whatever the engine uses.
    """
    _check_capacity(circuit.num_qubits)
    state = new_state(circuit.num_qubits, precision)
    vec = np.zeros(state.dim, dtype=np.complex128)
    vec[0] = 1.0
    worst = 0.0
    for instr in circuit.instructions:
        if isinstance(instr, SampleMeasure):
            continue
        if isinstance(instr, Apply):
            apply_gate(state, instr.target, instr.gate, executor)
        else:
            apply_controlled_gate(state, instr.control, instr.target, instr.gate, executor)
        vec = instruction_operator(instr, circuit.num_qubits) @ vec
        worst = max(worst, float(np.abs(state.amps - vec).max()))
    return worst
