"""Outcome probabilities, non-destructive sampling, and basis collapse.

Probabilities square the real and imaginary parts directly (re² + im²)
rather than taking |amp·amp|; the magnitude is the same but squaring the
complex product first doubles the rounding error and halves the exponent
range before the magnitude is even taken.

Sampling determinism: uniforms come from numpy's PCG64 generator, where
each double is a 53-bit integer scaled by 2^-53, so a fixed seed reproduces
the same outcomes on any platform. Outcome selection is inverse-CDF: one
cumulative sum (normalized by its final value to absorb float drift) and a
binary search per draw. Only the probability computation is data-parallel;
selection is a host-side pass, which is also what lets a state be sampled
repeatedly without re-running its gates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateStateError
from .state import StateVector

__all__ = ["MeasurementHistogram", "probabilities", "sample", "measure_collapse"]


def probabilities(state: StateVector) -> np.ndarray:
    """probs[j] = |amps[j]|² as float64; the state is left untouched."""
    a = state.amps
    re = a.real.astype(np.float64, copy=False)
    im = a.imag.astype(np.float64, copy=False)
    return re * re + im * im


@dataclass
class MeasurementHistogram:
    """Observed counts per basis index for one batch of draws."""

    counts: dict[int, int]
    samples: int

    @classmethod
    def from_outcomes(cls, outcomes: np.ndarray) -> "MeasurementHistogram":
        values, counts = np.unique(outcomes, return_counts=True)
        return cls({int(v): int(c) for v, c in zip(values, counts)}, int(len(outcomes)))

    def to_csv(self) -> str:
        lines = ["basis_index,count"]
        lines += [f"{idx},{self.counts[idx]}" for idx in sorted(self.counts)]
        return "\n".join(lines) + "\n"

    def bar_chart(self, num_qubits: int | None = None, max_width: int = 40) -> str:
        """Text bars scaled to the largest count, one basis index per line."""
        if not self.counts:
            return ""
        peak = max(self.counts.values())
        width = num_qubits if num_qubits is not None else max(self.counts).bit_length() or 1
        lines = []
        for idx in sorted(self.counts):
            count = self.counts[idx]
            bar = "#" * max(1, round(max_width * count / peak)) if count else ""
            lines.append(f"|{idx:0{width}b}>  {count:>8}  {bar}")
        return "\n".join(lines)


def _normalized_cdf(state: StateVector) -> np.ndarray:
    cdf = np.cumsum(probabilities(state))
    total = cdf[-1]
    if total <= 0.0:
        raise DegenerateStateError("all outcome probabilities are zero")
    return cdf / total


def sample(state: StateVector, n_samples: int, seed: int | None = None) -> MeasurementHistogram:
    """Draw i.i.d. basis indices from |amps|² without disturbing the state."""
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    cdf = _normalized_cdf(state)
    rng = np.random.default_rng(seed)
    draws = rng.random(n_samples)
    outcomes = np.searchsorted(cdf, draws, side="right")
    np.minimum(outcomes, state.dim - 1, out=outcomes)  # guard the u ~ 1.0 edge
    return MeasurementHistogram.from_outcomes(outcomes)


def measure_collapse(state: StateVector, seed: int | None = None) -> tuple[int, StateVector]:
    """Sample one outcome m, then overwrite the register with basis state m.

    The surviving amplitude is set to exactly 1: the factor x/|x| left by
    projection is a global phase and is discarded rather than divided out.
    """
    cdf = _normalized_cdf(state)
    rng = np.random.default_rng(seed)
    outcome = int(min(np.searchsorted(cdf, rng.random(), side="right"), state.dim - 1))
    state.amps[:] = 0
    state.amps[outcome] = 1.0
    return outcome, state
