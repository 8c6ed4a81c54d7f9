"""Randomized, interleaved timing of Fourier-transform workloads.

Each trial picks a back-end uniformly at random (seeded) so that run-time
warm-up effects and machine drift cannot systematically favour one
back-end; comparisons between two back-ends use the unequal-variance
t-test. Every (back-end, width) pair gets one untimed warm-up before its
first recorded trial, and each timed trial allocates the register fresh so
state construction is part of the measured cost.

The clock is injectable (default: the monotonic performance counter);
handing in a deterministic clock makes whole runs reproducible down to the
CSV bytes, which is how the harness itself is tested.
"""

from __future__ import annotations

import math
import time
import warnings
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, NamedTuple

import numpy as np

from .circuits import Apply, build_qft
from .kernel import SerialExecutor, ThreadExecutor, apply_controlled_gate, apply_gate
from .errors import InsufficientDataError
from .state import Precision, new_state

CSV_HEADER = "simulator,qubits,seconds"


@dataclass(frozen=True)
class BenchRecord:
    simulator: str
    num_qubits: int
    seconds: float


@dataclass
class BenchConfig:
    """Trial plan: widths 1..max_qubits, `samples` trials per width."""

    max_qubits: int
    samples: int
    backends: Mapping[str, Callable[[int], None]]
    seed: int | None = None
    clock: Callable[[], float] = time.perf_counter
    warmup: bool = True


def engine_qft_runner(
    precision: Precision = Precision.SINGLE, executor=None
) -> Callable[[int], None]:
    """Back-end that times register allocation plus every gate sweep."""
    circuits: dict[int, tuple] = {}

    def run(num_qubits: int) -> None:
        instrs = circuits.get(num_qubits)
        if instrs is None:
            instrs = circuits[num_qubits] = build_qft(num_qubits).instructions
        state = new_state(num_qubits, precision)
        for instr in instrs:
            if isinstance(instr, Apply):
                apply_gate(state, instr.target, instr.gate, executor)
            else:
                apply_controlled_gate(state, instr.control, instr.target, instr.gate, executor)

    return run


def oracle_qft_runner() -> Callable[[int], None]:
    """Back-end running the dense-matrix reference; only sane for tiny widths."""
    from .oracle import instruction_operator

    def run(num_qubits: int) -> None:
        vec = np.zeros(1 << num_qubits, dtype=np.complex128)
        vec[0] = 1.0
        for instr in build_qft(num_qubits).instructions:
            vec = instruction_operator(instr, num_qubits) @ vec

    return run


def default_backends(
    precision: Precision = Precision.SINGLE, include_oracle: bool = False
) -> dict[str, Callable[[int], None]]:
    """The package's own back-ends: threaded engine and serial reference."""
    backends = {
        "engine-parallel": engine_qft_runner(precision, ThreadExecutor()),
        "engine-serial": engine_qft_runner(precision, SerialExecutor()),
    }
    if include_oracle:
        backends["dense-oracle"] = oracle_qft_runner()
    return backends


def run_benchmark(cfg: BenchConfig) -> list[BenchRecord]:
    """Run all trials; back-end failures leave a gap, never a zero time."""
    if not cfg.backends:
        raise ValueError("no back-ends registered")
    if cfg.max_qubits < 1 or cfg.samples < 1:
        raise ValueError("max_qubits and samples must be >= 1")
    rng = np.random.default_rng(cfg.seed)
    labels = sorted(cfg.backends)
    records: list[BenchRecord] = []
    for width in range(1, cfg.max_qubits + 1):
        if cfg.warmup:
            for label in labels:
                try:
                    cfg.backends[label](width)
                except Exception as exc:
                    warnings.warn(f"warm-up of {label!r} failed at {width} qubits: {exc}")
        for _ in range(cfg.samples):
            label = labels[int(rng.integers(len(labels)))]
            start = cfg.clock()
            try:
                cfg.backends[label](width)
            except Exception as exc:
                warnings.warn(f"back-end {label!r} failed at {width} qubits: {exc}")
                continue
            records.append(BenchRecord(label, width, cfg.clock() - start))
    return records


def write_csv(records: Iterable[BenchRecord], path: str) -> None:
    """One row per record, seconds at fixed 6-decimal formatting."""
    with open(path, "w", newline="") as fh:
        fh.write(CSV_HEADER + "\n")
        for r in records:
            fh.write(f"{r.simulator},{r.num_qubits},{r.seconds:.6f}\n")


def read_csv(path: str) -> list[BenchRecord]:
    with open(path, newline="") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"{path}: missing header {CSV_HEADER!r}")
    records = []
    for line in lines[1:]:
        if not line:
            continue
        label, qubits, seconds = line.split(",")
        records.append(BenchRecord(label, int(qubits), float(seconds)))
    return records


@dataclass(frozen=True)
class GroupStats:
    mean_seconds: float
    std_seconds: float
    count: int


def summarize(records: Iterable[BenchRecord]) -> dict[tuple[str, int], GroupStats]:
    """Mean and sample standard deviation per (simulator, width) group."""
    groups: dict[tuple[str, int], list[float]] = {}
    for r in records:
        groups.setdefault((r.simulator, r.num_qubits), []).append(r.seconds)
    out = {}
    for key in sorted(groups):
        xs = np.asarray(groups[key])
        std = float(xs.std(ddof=1)) if xs.size > 1 else 0.0
        out[key] = GroupStats(float(xs.mean()), std, int(xs.size))
    return out


def write_plot_data(summary: Mapping[tuple[str, int], GroupStats], path: str) -> None:
    """Gnuplot-ready blocks of `qubits mean std`, one block per simulator."""
    labels = sorted({label for label, _ in summary})
    with open(path, "w") as fh:
        for pos, label in enumerate(labels):
            if pos:
                fh.write("\n\n")
            fh.write(f"# simulator: {label}\n# qubits mean_seconds std_seconds\n")
            for (lab, width), stats in sorted(summary.items()):
                if lab == label:
                    fh.write(f"{width} {stats.mean_seconds:.6f} {stats.std_seconds:.6f}\n")


class WelchResult(NamedTuple):
    t: float
    p_value: float
    df: float


def welch_t_test(xs: Iterable[float], ys: Iterable[float]) -> WelchResult:
    """Two-sided unequal-variance t-test.

    t = (mean_x - mean_y) / sqrt(s²x/nx + s²y/ny), degrees of freedom by
    Welch–Satterthwaite, p from the t-distribution survival function.
    """
    xs = np.asarray(list(xs), dtype=np.float64)
    ys = np.asarray(list(ys), dtype=np.float64)
    if xs.size < 2 or ys.size < 2:
        raise InsufficientDataError("each sample set needs at least 2 values")
    sem_x = xs.var(ddof=1) / xs.size
    sem_y = ys.var(ddof=1) / ys.size
    if sem_x + sem_y == 0.0:
        raise InsufficientDataError("both sample sets have zero variance")
    t = float((xs.mean() - ys.mean()) / math.sqrt(sem_x + sem_y))
    df = float(
        (sem_x + sem_y) ** 2 / (sem_x**2 / (xs.size - 1) + sem_y**2 / (ys.size - 1))
    )
    p = 2.0 * _student_t_sf(abs(t), df)
    return WelchResult(t, p, df)


def _student_t_sf(t: float, df: float) -> float:
    """P(T > t) for Student's t via the regularized incomplete beta."""
    x = df / (df + t * t)
    tail = 0.5 * _betainc_reg(0.5 * df, 0.5, x)
    return tail if t >= 0 else 1.0 - tail


def _betainc_reg(a: float, b: float, x: float) -> float:
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
        + a * math.log(x) + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    # continued fraction converges fastest below the distribution mean;
    # above it, use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def _betacf(a: float, b: float, x: float, max_iter: int = 300, eps: float = 3e-16) -> float:
    """Lentz continued fraction for the incomplete beta integral."""
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        num = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + num * d
        d = tiny if abs(d) < tiny else d
        c = 1.0 + num / c
        c = tiny if abs(c) < tiny else c
        d = 1.0 / d
        h *= d * c
        num = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + num * d
        d = tiny if abs(d) < tiny else d
        c = 1.0 + num / c
        c = tiny if abs(c) < tiny else c
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < eps:
            return h
    raise ArithmeticError("incomplete beta continued fraction did not converge")
