#!/usr/bin/env python3
# A register of n qubits is 2^n complex amplitudes. Allocate one, poke at
# it, and see why the approach runs out of memory fast.

from pairsim import (
    H,
    Precision,
    amplitude_of,
    apply_gate,
    format_bytes,
    memory_required,
    new_state,
    norm_squared,
)

state = new_state(3)
print("fresh 3-qubit register (|000>):", state.amps)
print("norm² =", norm_squared(state))

# qubit 0 is the least-significant bit of the basis index
apply_gate(state, 0, H)
print("\nafter H on qubit 0:")
for j in range(state.dim):
    amp = amplitude_of(state, j)
    if amp != 0:
        print(f"  |{j:03b}> (index {j}): {amp:.4f}")

# the exponential wall: storage doubles per qubit
print("\nsingle-precision storage per register width:")
for n in (5, 10, 20, 25, 30, 40):
    bits = memory_required(n, Precision.SINGLE)
    print(f"  {n:>2} qubits -> {format_bytes(bits // 8)}")

# double precision doubles every row above
print("\n30 qubits in double precision ->",
      format_bytes(memory_required(30, Precision.DOUBLE) // 8))
