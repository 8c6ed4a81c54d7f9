"""Command-line front-end.

stdout carries data only; diagnostics and errors go to stderr. Errors print
one machine-readable line `error kind=<ExceptionType> msg=<text>` and map to
exit codes: 1 parse/validation/usage, 2 capacity, 3 I/O. The seed defaults
to 0 so identical invocations give identical output; pass a different seed
for different randomness.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import oracle
from .bench import BenchConfig, default_backends, run_benchmark, summarize, write_csv, write_plot_data
from .circuits import Circuit, SampleMeasure, parse_circuit, build_bernstein_vazirani, random_circuit, run_circuit
from .errors import CapacityError, DegenerateStateError, ParseError, ValidationError
from .kernel import ThreadExecutor
from .measure import probabilities, sample
from .state import Precision, StateVector

EXIT_USAGE = 1
EXIT_CAPACITY = 2
EXIT_IO = 3

VERIFY_TOLERANCE = 1e-10  # double-precision engine vs dense oracle


def _precision(flag: str) -> Precision:
    return Precision.SINGLE if flag == "single" else Precision.DOUBLE


def _read_circuit(path: str):
    with open(path) as fh:
        return parse_circuit(fh.read())


def _print_top_amplitudes(state: StateVector, limit: int) -> None:
    probs = probabilities(state)
    order = np.argsort(probs)[::-1][:limit]
    n = state.num_qubits
    for idx in order:
        amp = state.amps[idx]
        print(f"|{int(idx):0{n}b}>  0x{int(idx):x}  {amp.real:+.6f}{amp.imag:+.6f}i  p={probs[idx]:.6f}")


def _cmd_run(args) -> int:
    circuit = _read_circuit(args.file)
    state, hist = run_circuit(circuit, _precision(args.precision), seed=args.seed,
                              executor=ThreadExecutor())
    if args.shots is not None:
        hist = sample(state, args.shots, args.seed)
    if hist is not None:
        if args.chart:
            print(hist.bar_chart(num_qubits=circuit.num_qubits))
        else:
            sys.stdout.write(hist.to_csv())
    else:
        _print_top_amplitudes(state, args.limit)
    return 0


def _cmd_state(args) -> int:
    circuit = _read_circuit(args.file)
    gates_only = tuple(i for i in circuit.instructions if not isinstance(i, SampleMeasure))
    state, _ = run_circuit(
        Circuit(circuit.num_qubits, gates_only),
        _precision(args.precision),
        executor=ThreadExecutor(),
    )
    _print_top_amplitudes(state, args.limit)
    return 0


def _cmd_bv(args) -> int:
    if not 0 <= args.a < (1 << args.n):
        raise ValidationError(f"hidden integer {args.a} does not fit in {args.n} qubits")
    circuit = build_bernstein_vazirani(args.n, args.a, shots=args.shots)
    _, hist = run_circuit(circuit, _precision(args.precision), seed=args.seed,
                          executor=ThreadExecutor())
    for idx in sorted(hist.counts):
        print(f"{idx}: {hist.counts[idx]}")
    decoded = max(hist.counts, key=hist.counts.get)
    print(f"decoded: {decoded} (bit-string {decoded:b})")
    return 0


def _cmd_bench(args) -> int:
    backends = default_backends(_precision(args.precision),
                                include_oracle=args.max_qubits <= oracle.ORACLE_MAX_QUBITS)
    cfg = BenchConfig(max_qubits=args.max_qubits, samples=args.samples,
                      backends=backends, seed=args.seed)
    records = run_benchmark(cfg)
    if args.out:
        write_csv(records, args.out)
    else:
        print("simulator,qubits,seconds")
        for r in records:
            print(f"{r.simulator},{r.num_qubits},{r.seconds:.6f}")
    summary = summarize(records)
    if args.plot_data:
        write_plot_data(summary, args.plot_data)
    for (label, width), stats in summary.items():
        print(f"{label} n={width}: mean {stats.mean_seconds:.6f}s "
              f"std {stats.std_seconds:.6f}s ({stats.count} trials)", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    if args.max_qubits > oracle.ORACLE_MAX_QUBITS:
        raise ValidationError(f"oracle cap exceeded: max {oracle.ORACLE_MAX_QUBITS} qubits")
    if args.max_qubits < 1 or args.trials < 1:
        raise ValidationError("max-qubits and trials must be >= 1")
    rng = np.random.default_rng(args.seed)
    worst = 0.0
    for _ in range(args.trials):
        n = int(rng.integers(1, args.max_qubits + 1))
        depth = int(rng.integers(1, 41))
        circuit = random_circuit(n, depth, rng)
        worst = max(worst, oracle.engine_oracle_deviation(circuit, Precision.DOUBLE))
    print(f"trials={args.trials} max_qubits={args.max_qubits} max_deviation={worst:.3e}")
    if worst > VERIFY_TOLERANCE:
        print(f"error kind=VerificationFailure msg=deviation {worst:.3e} "
              f"exceeds {VERIFY_TOLERANCE:.0e}", file=sys.stderr)
        return EXIT_USAGE
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2, which means capacity here
        self.print_usage(sys.stderr)
        print(f"error kind=UsageError msg={message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pairsim",
                     description="State-vector simulator with pair-update kernels")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, precision=True):
        p.add_argument("--seed", type=int, default=0)
        if precision:
            p.add_argument("--precision", choices=("single", "double"), default="single")

    p_run = sub.add_parser("run", help="execute a .qc circuit file")
    p_run.add_argument("file")
    p_run.add_argument("--shots", type=int, default=None,
                       help="sample the final state this many times")
    p_run.add_argument("--chart", action="store_true",
                       help="print the histogram as a text bar chart instead of CSV")
    p_run.add_argument("--limit", type=int, default=16,
                       help="amplitudes shown when the circuit does not sample")
    common(p_run)
    p_run.set_defaults(func=_cmd_run)

    p_state = sub.add_parser("state", help="print the largest final amplitudes")
    p_state.add_argument("file")
    p_state.add_argument("--limit", type=int, default=16)
    common(p_state)
    p_state.set_defaults(func=_cmd_state)

    p_bv = sub.add_parser("bv", help="run the hidden-integer recovery circuit")
    p_bv.add_argument("n", type=int, help="register width")
    p_bv.add_argument("a", type=int, help="hidden integer, a < 2^n")
    p_bv.add_argument("--shots", type=int, default=1000)
    common(p_bv)
    p_bv.set_defaults(func=_cmd_bv)

    p_bench = sub.add_parser("bench", help="time the Fourier workload across back-ends")
    p_bench.add_argument("--max-qubits", type=int, default=10)
    p_bench.add_argument("--samples", type=int, default=5)
    p_bench.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p_bench.add_argument("--plot-data", default=None, help="gnuplot-ready summary path")
    common(p_bench)
    p_bench.set_defaults(func=_cmd_bench)

    p_verify = sub.add_parser("verify", help="random circuits vs the dense oracle")
    p_verify.add_argument("--max-qubits", type=int, default=6)
    p_verify.add_argument("--trials", type=int, default=50)
    common(p_verify, precision=False)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def _fail(exc: BaseException, code: int) -> int:
    print(f"error kind={type(exc).__name__} msg={exc}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValidationError, ValueError, IndexError, DegenerateStateError) as exc:
        return _fail(exc, EXIT_USAGE)
    except CapacityError as exc:
        return _fail(exc, EXIT_CAPACITY)
    except OSError as exc:
        return _fail(exc, EXIT_IO)


if __name__ == "__main__":
    sys.exit(main())
