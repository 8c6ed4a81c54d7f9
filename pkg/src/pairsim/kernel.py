"""Data-parallel gate application over amplitude pairs.

A single-qubit gate on target t touches amplitudes in pairs (a, b) with
b = a | (1 << t) and bit t of a clear. Work item i of a sweep owns the
pair whose low index is nth_cleared(i, t); the 2^(n-1) pairs partition the
whole register, so the updates are mutually independent and a sweep may run
serially or split across workers with bit-identical results. Sweeps are
sequentially ordered: one completes before the next begins.

Both amplitudes of a pair are read before either is written, which is what
makes the in-place update simultaneous without double-buffering the array.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .gates import Gate
from .state import StateVector

# body(lo, hi) processes work items lo..hi-1; ranges handed to a body are
# always disjoint within a sweep.
SweepBody = Callable[[int, int], None]


def nth_cleared(i, target):
    """i-th smallest non-negative integer whose target bit is 0.

    Accepts a Python int or an integer ndarray (elementwise).
    """
    mask = (1 << target) - 1
    return (i & mask) | ((i & ~mask) << 1)


@dataclass(frozen=True)
class KernelPlan:
    """One gate sweep: 2^(n-1) work items, one amplitude pair each."""

    num_work_items: int
    target: int
    control: int | None = None


class SerialExecutor:
    """Reference path: the whole sweep as a single in-order chunk."""

    def run(self, plan: KernelPlan, body: SweepBody) -> None:
        body(0, plan.num_work_items)


class ThreadExecutor:
    """Splits sweeps into contiguous chunks executed on a thread pool.

    Work items write disjoint pairs, so chunking and scheduling cannot change
    the result. Sweeps below min_parallel_items run inline; pool dispatch
    costs more than it saves on small registers.
    """

    def __init__(self, workers: int | None = None, min_parallel_items: int = 1 << 16):
        if workers is not None and workers < 1:
            raise ValueError("workers must be >= 1")
        self.workers = workers or min(os.cpu_count() or 1, 8)
        self.min_parallel_items = min_parallel_items
        self._pool: ThreadPoolExecutor | None = None

    def run(self, plan: KernelPlan, body: SweepBody) -> None:
        n_items = plan.num_work_items
        if self.workers == 1 or n_items < self.min_parallel_items:
            body(0, n_items)
            return
        if self._pool is None:
            self._pool = ThreadPoolExecutor(max_workers=self.workers)
        chunk = -(-n_items // self.workers)
        futures = [
            self._pool.submit(body, lo, min(lo + chunk, n_items))
            for lo in range(0, n_items, chunk)
        ]
        for f in futures:  # full barrier; re-raises the first body failure
            f.result()

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown(wait=True)
            self._pool = None


_default_executor: ThreadExecutor | None = None


def get_default_executor() -> ThreadExecutor:
    """Process-wide executor used when an operation is not handed one."""
    global _default_executor
    if _default_executor is None:
        _default_executor = ThreadExecutor()
    return _default_executor


def parallel_sweep(plan: KernelPlan, body: SweepBody, executor=None) -> None:
    """Run every work item of one sweep; returns only after all completed."""
    (executor or get_default_executor()).run(plan, body)


def apply_gate(state: StateVector, target: int, gate: Gate, executor=None) -> StateVector:
    """Apply a single-qubit gate in place via one pair sweep.

    Per pair:  v_a <- a·v_a + b·v_b,  v_b <- d·v_b + c·v_a,
    with the right-hand sides reading the pre-update values.
    """
    n = state.num_qubits
    if not 0 <= target < n:
        raise IndexError(f"target {target} out of range for {n} qubits")
    amps = state.amps
    scalar = amps.dtype.type  # gate entries round to the state's precision
    ga, gb, gc, gd = (scalar(x) for x in (gate.a, gate.b, gate.c, gate.d))
    tbit = 1 << target

    def body(lo: int, hi: int) -> None:
        i = np.arange(lo, hi, dtype=np.int64)
        a = nth_cleared(i, target)
        b = a | tbit
        va = amps[a]
        vb = amps[b]
        amps[a] = ga * va + gb * vb
        amps[b] = gd * vb + gc * va

    parallel_sweep(KernelPlan(1 << (n - 1), target), body, executor)
    return state


def apply_controlled_gate(
    state: StateVector, control: int, target: int, gate: Gate, executor=None
) -> StateVector:
    """Pair sweep that updates an amplitude only where its control bit is 1."""
    n = state.num_qubits
    if not 0 <= target < n:
        raise IndexError(f"target {target} out of range for {n} qubits")
    if not 0 <= control < n:
        raise IndexError(f"control {control} out of range for {n} qubits")
    if control == target:
        raise ValueError("control and target must differ")
    amps = state.amps
    scalar = amps.dtype.type
    ga, gb, gc, gd = (scalar(x) for x in (gate.a, gate.b, gate.c, gate.d))
    tbit = 1 << target
    cbit = 1 << control

    def body(lo: int, hi: int) -> None:
        i = np.arange(lo, hi, dtype=np.int64)
        a = nth_cleared(i, target)
        # control != target, so a and a|tbit carry the same control bit:
        # one test gates both halves of the pair update.
        a = a[(a & cbit) != 0]
        b = a | tbit
        va = amps[a]
        vb = amps[b]
        amps[a] = ga * va + gb * vb
        amps[b] = gd * vb + gc * va

    parallel_sweep(KernelPlan(1 << (n - 1), target, control), body, executor)
    return state
