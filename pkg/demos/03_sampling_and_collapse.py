#!/usr/bin/env python3
# Measurement without wrecking the state: probabilities are |amp|², sampling
# is inverse-CDF over their cumulative sum, and the register is only
# overwritten if you ask for a collapse.

import numpy as np

from pairsim import (
    H,
    Precision,
    X,
    apply_controlled_gate,
    apply_gate,
    measure_collapse,
    new_state,
    probabilities,
    sample,
)

# Bell pair: both qubits always agree
state = new_state(2, Precision.DOUBLE)
apply_gate(state, 0, H)
apply_controlled_gate(state, 0, 1, X)
print("Bell state amplitudes:", np.round(state.amps, 4))
print("probabilities:", probabilities(state))

hist = sample(state, 100_000, seed=7)
print("\n100k draws (state untouched, same seed -> same histogram):")
print(hist.bar_chart(num_qubits=2))
print("counts sum:", sum(hist.counts.values()))

print("\nhistogram as CSV:")
print(hist.to_csv(), end="")

# sampling again does not need the gates re-run; collapse does change things
outcome, state = measure_collapse(state, seed=3)
print(f"\ncollapse picked outcome {outcome:02b}; register is now one-hot:")
print(state.amps)
