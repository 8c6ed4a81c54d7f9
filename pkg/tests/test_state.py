import numpy as np
import pytest

from pairsim import (
    CapacityError,
    Precision,
    StateVector,
    amplitude_of,
    apply_gate,
    default_memory_budget,
    format_bytes,
    H,
    memory_required,
    new_state,
    norm_squared,
)


class TestNewState:
    def test_single_qubit_is_ket_zero(self):
        state = new_state(1)
        np.testing.assert_array_equal(state.amps, [1, 0])

    def test_three_qubits_one_hot(self):
        state = new_state(3)
        np.testing.assert_array_equal(state.amps, [1, 0, 0, 0, 0, 0, 0, 0])

    @pytest.mark.parametrize("n", range(1, 8))
    def test_reconstructs_e0_via_accessor(self, n):
        state = new_state(n)
        amps = [amplitude_of(state, j) for j in range(1 << n)]
        assert amps[0] == 1 + 0j
        assert all(a == 0 for a in amps[1:])

    def test_dtype_follows_precision(self):
        assert new_state(2, Precision.SINGLE).amps.dtype == np.complex64
        assert new_state(2, Precision.DOUBLE).amps.dtype == np.complex128

    def test_30_qubits_rejected_on_8gb_budget(self):
        # 30 single-precision qubits need 8.59 GB, more than a decimal 8 GB cap
        with pytest.raises(CapacityError) as err:
            new_state(30, Precision.SINGLE, memory_budget=8_000_000_000)
        assert "8589934592" in str(err.value)

    def test_30_qubits_fit_exactly_on_859gb_budget(self):
        # boundary: equal to the budget is allowed, so the check is not off by one
        need = memory_required(30, Precision.SINGLE) // 8
        try:
            state = new_state(30, Precision.SINGLE, memory_budget=need)
        except MemoryError:
            pytest.skip("host lacks 8.6 GB of free memory")
        assert state.amps[0] == 1

    def test_zero_qubits_rejected(self):
        with pytest.raises(ValueError):
            new_state(0)


class TestMemoryRequired:
    @pytest.mark.parametrize(
        "n,bits",
        [(5, 2048), (10, 65536), (20, 64 << 20), (25, 64 << 25), (30, 64 << 30)],
    )
    def test_single_precision_bits(self, n, bits):
        assert memory_required(n, Precision.SINGLE) == bits

    def test_double_precision_doubles_storage(self):
        assert memory_required(12, Precision.DOUBLE) == 2 * memory_required(12, Precision.SINGLE)

    def test_monotone_and_doubling(self):
        previous = memory_required(1)
        for n in range(2, 64):
            current = memory_required(n)
            assert current == 2 * previous
            previous = current

    def test_absurd_width_rejected(self):
        with pytest.raises(CapacityError):
            memory_required(400)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            memory_required(0)


class TestFormatBytes:
    @pytest.mark.parametrize(
        "n,text",
        [
            (5, "256 B"),
            (10, "8.192 kB"),
            (20, "8.389 MB"),
            (25, "268.4 MB"),
            (30, "8.59 GB"),
        ],
    )
    def test_reference_table(self, n, text):
        assert format_bytes(memory_required(n, Precision.SINGLE) // 8) == text

    def test_small_counts_verbatim(self):
        assert format_bytes(0) == "0 B"
        assert format_bytes(999) == "999 B"


class TestNormAndAccess:
    def test_fresh_state_normalized(self):
        assert norm_squared(new_state(4)) == 1.0

    def test_hadamard_preserves_norm(self):
        state = apply_gate(new_state(1, Precision.DOUBLE), 0, H)
        assert abs(norm_squared(state) - 1.0) < 1e-12

    def test_scaling_amps_scales_quadratically(self):
        state = new_state(3, Precision.DOUBLE)
        state.amps *= 2
        assert norm_squared(state) == pytest.approx(4.0)

    def test_amplitude_of_hadamard_output(self):
        state = apply_gate(new_state(1, Precision.DOUBLE), 0, H)
        assert amplitude_of(state, 1) == pytest.approx(1 / np.sqrt(2))

    @pytest.mark.parametrize("bad", [-1, 4])
    def test_amplitude_out_of_range(self, bad):
        with pytest.raises(IndexError):
            amplitude_of(new_state(2), bad)

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError):
            StateVector(2, np.zeros(3, dtype=np.complex64))

    def test_wrong_dtype_rejected(self):
        with pytest.raises(ValueError):
            StateVector(1, np.zeros(2, dtype=np.float64))


def test_default_budget_positive():
    assert default_memory_budget() > 0
