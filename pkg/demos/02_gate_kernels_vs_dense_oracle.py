#!/usr/bin/env python3
"""Two routes to the same answer.

The engine applies a gate as a sweep over amplitude pairs picked out by
nth_cleared; the oracle builds the full 2^n x 2^n operator with Kronecker
products and multiplies. The oracle is exponentially more expensive, which
is exactly why it only exists to check the kernels.
"""

import time

import numpy as np

from pairsim import (
    Precision,
    apply_controlled_gate,
    apply_gate,
    dense_controlled_lift,
    dense_lift,
    new_state,
    nth_cleared,
    random_circuit,
    random_unitary_gate,
    engine_oracle_deviation,
)

# the index arithmetic that drives every sweep: pairs (a, a | 1<<t)
print("pairs touched by a gate on target bit 1 of a 3-qubit register:")
for i in range(4):
    a = nth_cleared(i, 1)
    print(f"  work item {i}: ({a:03b}, {a | 0b010:03b})")

rng = np.random.default_rng(1)
gate = random_unitary_gate(rng)

state = new_state(6, Precision.DOUBLE)
state.amps[:] = rng.normal(size=64) + 1j * rng.normal(size=64)
state.amps /= np.linalg.norm(state.amps)
reference = state.amps.copy()

apply_gate(state, 3, gate)
expected = dense_lift(gate, 3, 6) @ reference
print("\nsingle gate, kernel vs dense:", np.abs(state.amps - expected).max())

apply_controlled_gate(state, 5, 0, gate)
expected = dense_controlled_lift(gate, 5, 0, 6) @ expected
print("controlled gate, kernel vs dense:", np.abs(state.amps - expected).max())

# whole random circuits, step by step
worst = 0.0
t0 = time.perf_counter()
for _ in range(25):
    circuit = random_circuit(int(rng.integers(1, 9)), int(rng.integers(1, 40)), rng)
    worst = max(worst, engine_oracle_deviation(circuit, Precision.DOUBLE))
print(f"\n25 random circuits, worst step deviation: {worst:.3e} "
      f"({time.perf_counter() - t0:.1f}s, oracle cost dominates)")
