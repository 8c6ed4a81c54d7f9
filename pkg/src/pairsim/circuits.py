"""Circuit IR, the .qc text format, and the built-in workload circuits.

Text format, one instruction per line:

    qubits N            header, must come first
    h 0                 gate mnemonic + target qubit
    u1 2 0.785398       parametric gate: trailing angle in radians
    cx 0 1              controlled gate: control qubit, then target
    cu1 1 0 1.570796
    measure 1000        sample count; allowed only as the final instruction
    # comment           comments and blank lines are ignored

Gate mnemonics are h x y z s t u1 plus their controlled forms ch cx cy cz
cs ct cu1. format_circuit emits exactly this format and parse_circuit reads
it back to an identical instruction list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import ParseError, ValidationError
from .gates import FIXED_GATES, Gate, H, Z, random_unitary_gate, std_gate, u1
from .kernel import apply_controlled_gate, apply_gate
from .measure import MeasurementHistogram, sample
from .state import Precision, StateVector, new_state


@dataclass(frozen=True)
class Apply:
    gate: Gate
    target: int


@dataclass(frozen=True)
class ControlledApply:
    gate: Gate
    control: int
    target: int


@dataclass(frozen=True)
class SampleMeasure:
    n_samples: int


Instruction = Union[Apply, ControlledApply, SampleMeasure]


@dataclass(frozen=True)
class Circuit:
    """Ordered instructions over a fixed register width."""

    num_qubits: int
    instructions: tuple[Instruction, ...]

    def __post_init__(self):
        object.__setattr__(self, "instructions", tuple(self.instructions))
        if self.num_qubits < 1:
            raise ValidationError("num_qubits must be >= 1")
        last = len(self.instructions) - 1
        for pos, instr in enumerate(self.instructions):
            if isinstance(instr, SampleMeasure):
                if pos != last:
                    raise ValidationError("measure is only allowed as the final instruction")
                if instr.n_samples < 1:
                    raise ValidationError("measure needs a positive sample count")
                continue
            targets = (instr.target,) if isinstance(instr, Apply) else (instr.control, instr.target)
            for q in targets:
                if not 0 <= q < self.num_qubits:
                    raise ValidationError(
                        f"qubit index {q} out of range for {self.num_qubits} qubits"
                    )
            if isinstance(instr, ControlledApply) and instr.control == instr.target:
                raise ValidationError("control and target must differ")

    def gate_count(self) -> int:
        return sum(1 for i in self.instructions if not isinstance(i, SampleMeasure))


def parse_circuit(text: str) -> Circuit:
    """Parse the text format above; ParseError carries the offending line."""
    num_qubits = None
    instructions: list[Instruction] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        word, args = fields[0].lower(), fields[1:]
        if num_qubits is None:
            if word != "qubits":
                raise ParseError(line_no, f"expected 'qubits N' header, got {word!r}")
            num_qubits = _parse_int(line_no, args, "qubit count")
            if num_qubits < 1:
                raise ValidationError(f"line {line_no}: qubit count must be >= 1")
            continue
        if word == "qubits":
            raise ParseError(line_no, "duplicate 'qubits' header")
        if word == "measure":
            instructions.append(SampleMeasure(_parse_int(line_no, args, "sample count")))
            continue
        instructions.append(_parse_gate_line(line_no, word, args))
    if num_qubits is None:
        raise ParseError(max(1, text.count("\n") + 1), "missing 'qubits N' header")
    try:
        return Circuit(num_qubits, tuple(instructions))
    except ValidationError as exc:
        raise ValidationError(f"{exc} (in parsed circuit)") from exc


def _parse_int(line_no: int, args: list[str], what: str) -> int:
    if len(args) != 1:
        raise ParseError(line_no, f"expected one {what}")
    try:
        return int(args[0])
    except ValueError:
        raise ParseError(line_no, f"{what} must be an integer, got {args[0]!r}") from None


def _parse_gate_line(line_no: int, word: str, args: list[str]) -> Instruction:
    controlled = word.startswith("c")
    name = word[1:] if controlled else word
    if name not in FIXED_GATES and name != "u1":
        raise ParseError(line_no, f"unknown gate {word!r}")
    want = (2 if controlled else 1) + (1 if name == "u1" else 0)
    if len(args) != want:
        raise ParseError(line_no, f"gate {word!r} expects {want} argument(s)")
    try:
        indices = [int(a) for a in args[: want - 1 if name == "u1" else want]]
    except ValueError:
        raise ParseError(line_no, f"qubit indices must be integers: {args!r}") from None
    angle = None
    if name == "u1":
        try:
            angle = float(args[-1])
        except ValueError:
            raise ParseError(line_no, f"angle must be a number, got {args[-1]!r}") from None
    gate = std_gate(name, angle)
    if controlled:
        return ControlledApply(gate, indices[0], indices[1])
    return Apply(gate, indices[0])


_FORMATTABLE = set(FIXED_GATES) | {"u1"}


def format_circuit(circuit: Circuit) -> str:
    """Canonical text for a circuit of library gates; parse round-trips it."""
    lines = [f"qubits {circuit.num_qubits}"]
    for instr in circuit.instructions:
        if isinstance(instr, SampleMeasure):
            lines.append(f"measure {instr.n_samples}")
            continue
        gate = instr.gate
        if gate.name not in _FORMATTABLE:
            raise ValueError(f"gate {gate.name!r} has no text mnemonic")
        angle = f" {gate.angle!r}" if gate.name == "u1" else ""
        if isinstance(instr, Apply):
            lines.append(f"{gate.name} {instr.target}{angle}")
        else:
            lines.append(f"c{gate.name} {instr.control} {instr.target}{angle}")
    return "\n".join(lines)


def run_circuit(
    circuit: Circuit,
    precision: Precision = Precision.SINGLE,
    seed: int | None = None,
    executor=None,
    memory_budget: int | None = None,
) -> tuple[StateVector, MeasurementHistogram | None]:
    """Execute instructions in order on a fresh |0...0> register.

    Each gate is one sweep with a full barrier before the next; a trailing
    measure instruction samples the final state and fills the histogram.
    """
    state = new_state(circuit.num_qubits, precision, memory_budget)
    histogram = None
    for instr in circuit.instructions:
        if isinstance(instr, Apply):
            apply_gate(state, instr.target, instr.gate, executor)
        elif isinstance(instr, ControlledApply):
            apply_controlled_gate(state, instr.control, instr.target, instr.gate, executor)
        else:
            histogram = sample(state, instr.n_samples, seed)
    return state, histogram


def build_qft(num_qubits: int) -> Circuit:
    """Fourier-transform workload: n Hadamards and n(n-1)/2 controlled phases.

    For each qubit j, the controlled phases u1(pi/2^(j-k)) against every
    k < j come first, then H on j. There are no trailing bit-reversal swaps,
    so the realized operator is the DFT composed with bit reversal of the
    input index.
    """
    if num_qubits < 1:
        raise ValueError("num_qubits must be >= 1")
    instrs: list[Instruction] = []
    for j in range(num_qubits):
        for k in range(j):
            instrs.append(ControlledApply(u1(math.pi / 2 ** (j - k)), j, k))
        instrs.append(Apply(H, j))
    return Circuit(num_qubits, tuple(instrs))


def build_bernstein_vazirani(num_qubits: int, hidden: int, shots: int = 1000) -> Circuit:
    """Hidden-integer circuit: H layer, Z where the hidden bit is 1, H layer.

    One query recovers the integer: measuring the final state yields the
    basis index `hidden` with certainty. Qubits whose hidden bit is 0 would
    get an identity, which is omitted since it does not change the state.
    """
    if not 0 <= hidden < (1 << num_qubits):
        raise ValueError(f"hidden integer {hidden} does not fit in {num_qubits} qubits")
    instrs: list[Instruction] = [Apply(H, i) for i in range(num_qubits)]
    instrs += [Apply(Z, i) for i in range(num_qubits) if (hidden >> i) & 1]
    instrs += [Apply(H, i) for i in range(num_qubits)]
    instrs.append(SampleMeasure(shots))
    return Circuit(num_qubits, tuple(instrs))


def random_circuit(
    num_qubits: int,
    depth: int,
    rng: np.random.Generator,
    controlled_fraction: float = 0.4,
    custom_fraction: float = 0.25,
) -> Circuit:
    """Random mix of library and Haar-random gates, for verification runs."""
    library = list(FIXED_GATES.values())
    instrs: list[Instruction] = []
    for _ in range(depth):
        r = rng.random()
        if r < custom_fraction:
            gate = random_unitary_gate(rng)
        elif r < custom_fraction + 0.15:
            gate = u1(float(rng.uniform(0, 2 * math.pi)))
        else:
            gate = library[int(rng.integers(len(library)))]
        target = int(rng.integers(num_qubits))
        if num_qubits > 1 and rng.random() < controlled_fraction:
            control = int(rng.integers(num_qubits - 1))
            if control >= target:
                control += 1
            instrs.append(ControlledApply(gate, control, target))
        else:
            instrs.append(Apply(gate, target))
    return Circuit(num_qubits, tuple(instrs))
