"""State-vector quantum circuit simulator built on amplitude-pair kernels.

An n-qubit register is a dense array of 2^n complex amplitudes; every gate
is a 2x2 unitary applied by a data-parallel sweep over amplitude pairs,
optionally under a control qubit. A brute-force Kronecker-product oracle
verifies the kernels on small registers, and a shuffled-trial harness times
the Fourier workload across back-ends.
"""

from .errors import (
    CapacityError,
    DegenerateStateError,
    DimensionError,
    InsufficientDataError,
    NotUnitaryError,
    ParseError,
    ValidationError,
)
from .state import (
    Precision,
    StateVector,
    amplitude_of,
    default_memory_budget,
    format_bytes,
    memory_required,
    new_state,
    norm_squared,
)
from .gates import (
    FIXED_GATES,
    Gate,
    H,
    S,
    T,
    X,
    Y,
    Z,
    is_unitary,
    make_gate,
    random_unitary_gate,
    std_gate,
    u1,
)
from .kernel import (
    KernelPlan,
    SerialExecutor,
    ThreadExecutor,
    apply_controlled_gate,
    apply_gate,
    nth_cleared,
    parallel_sweep,
)
from .measure import MeasurementHistogram, measure_collapse, probabilities, sample
from .circuits import (
    Apply,
    Circuit,
    ControlledApply,
    SampleMeasure,
    build_bernstein_vazirani,
    build_qft,
    format_circuit,
    parse_circuit,
    random_circuit,
    run_circuit,
)
from .oracle import (
    ORACLE_MAX_QUBITS,
    circuit_operator,
    dense_apply,
    dense_controlled_lift,
    dense_lift,
    engine_oracle_deviation,
    instruction_operator,
    kron,
)
from .bench import (
    BenchConfig,
    BenchRecord,
    GroupStats,
    WelchResult,
    default_backends,
    read_csv,
    run_benchmark,
    summarize,
    welch_t_test,
    write_csv,
    write_plot_data,
)

__version__ = "0.1.0"
