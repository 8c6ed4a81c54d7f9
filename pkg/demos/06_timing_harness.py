#!/usr/bin/env python3
"""Shuffled-trial benchmark of the Fourier workload.

Each trial picks a back-end at random (seeded) so warm-up drift cannot
systematically favour one side; timings go to CSV, and the two engines are
compared with the unequal-variance t-test. Expect the threaded engine to
pull ahead only once registers are large enough for the sweeps to dominate
pool overhead.
"""

from pairsim import (
    BenchConfig,
    Precision,
    SerialExecutor,
    ThreadExecutor,
    run_benchmark,
    summarize,
    welch_t_test,
    write_csv,
)
from pairsim.bench import engine_qft_runner, write_plot_data

MAX_QUBITS = 16
SAMPLES = 6

cfg = BenchConfig(
    max_qubits=MAX_QUBITS,
    samples=SAMPLES,
    backends={
        "engine-parallel": engine_qft_runner(Precision.SINGLE, ThreadExecutor()),
        "engine-serial": engine_qft_runner(Precision.SINGLE, SerialExecutor()),
    },
    seed=11,
)

records = run_benchmark(cfg)
write_csv(records, "qft_timings.csv")
print(f"{len(records)} trials written to qft_timings.csv")

summary = summarize(records)
write_plot_data(summary, "qft_timings.dat")
print("per-width means written to qft_timings.dat (gnuplot-ready)\n")

for (label, width), stats in summary.items():
    if width in (1, MAX_QUBITS // 2, MAX_QUBITS):
        print(f"  {label:16s} n={width:>2}: mean {stats.mean_seconds:.6f}s "
              f"± {stats.std_seconds:.6f} ({stats.count} trials)")

# is the difference at the top width statistically real?
top_par = [r.seconds for r in records
           if r.simulator == "engine-parallel" and r.num_qubits == MAX_QUBITS]
top_ser = [r.seconds for r in records
           if r.simulator == "engine-serial" and r.num_qubits == MAX_QUBITS]
if len(top_par) >= 2 and len(top_ser) >= 2:
    result = welch_t_test(top_par, top_ser)
    print(f"\nwidth {MAX_QUBITS}, parallel vs serial: "
          f"t = {result.t:.3f}, p = {result.p_value:.4f} (df {result.df:.1f})")
