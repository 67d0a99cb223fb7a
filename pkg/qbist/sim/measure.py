"""Born-rule readout, measurement faults and Bell-basis measurement."""

from collections.abc import Sequence

import numpy as np

from .models import (
    Branch,
    FaultSpec,
    MeasureBias,
    OutcomeDistribution,
    StateVector,
)

_NEGLIGIBLE = 1e-15

_BELL_NAMES = {(0, 0): "phi+", (0, 1): "psi+", (1, 0): "phi-", (1, 1): "psi-"}

# Bell basis indexed [code_a, code_b, a, b]; the code is the readout of the
# pair after CN(a -> b) and H(a).
_BELL_BASIS = (
    np.array(
        [
            [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
            [[[1, 0], [0, -1]], [[0, 1], [-1, 0]]],
        ],
        dtype=np.complex128,
    )
    / np.sqrt(2)
)


def _check_pair(width: int, pair: tuple[int, int]) -> None:
    a, b = pair
    if a == b or not (0 <= a < width and 0 <= b < width):
        raise ValueError(f"invalid Bell pair {pair} for width {width}")


def _bell_probabilities(state: StateVector, pair: tuple[int, int]) -> np.ndarray:
    _check_pair(state.width, pair)
    psi = np.moveaxis(state.amplitudes.reshape((2,) * state.width), pair, (0, 1))
    projected = np.einsum("xyab,ab...->xy...", _BELL_BASIS.conj(), psi)
    return np.abs(np.moveaxis(projected, (0, 1), pair)) ** 2


def _raw_probabilities(
    state: StateVector, bell_pair: tuple[int, int] | None
) -> np.ndarray:
    if bell_pair is None:
        return state.probabilities().reshape((2,) * state.width)
    return _bell_probabilities(state, bell_pair)


def _apply_stuck(probs: np.ndarray, qubit: int, stuck: int, bias: float) -> np.ndarray:
    out = (1.0 - bias) * probs
    index: list[int | slice] = [slice(None)] * probs.ndim
    index[qubit] = stuck
    out[tuple(index)] += bias * probs.sum(axis=qubit)
    return out


def _label(index: int, width: int, bell_pair: tuple[int, int] | None) -> str:
    bits = format(index, f"0{width}b")
    if bell_pair is None:
        return bits
    a, b = bell_pair
    rest = "".join(bit for q, bit in enumerate(bits) if q not in bell_pair)
    return f"{_BELL_NAMES[int(bits[a]), int(bits[b])]}:{rest}"


def _distribution(
    probs: np.ndarray, bell_pair: tuple[int, int] | None
) -> OutcomeDistribution:
    flat = probs.reshape(-1)
    width = probs.ndim
    return OutcomeDistribution(
        probabilities={
            _label(int(i), width, bell_pair): float(flat[i])
            for i in np.flatnonzero(flat > _NEGLIGIBLE)
        }
    )


def measure_distribution(
    ensemble: Sequence[Branch],
    measure_faults: Sequence[FaultSpec] = (),
    bell_pair: tuple[int, int] | None = None,
) -> OutcomeDistribution:
    """Exact outcome distribution of a branch ensemble.

    Args:
        ensemble: Weighted branches from :func:`apply_faulty`.
        measure_faults: Faults whose MeasureBias models are applied to the
            readout; other models are ignored here.
        bell_pair: Measure this pair in the Bell basis, the rest
            computationally.

    Returns:
        The mixture of per-branch Born distributions after readout faults.
    """
    if not ensemble:
        raise ValueError("empty ensemble")
    probs = sum(
        branch.weight * _raw_probabilities(branch.state, bell_pair)
        for branch in ensemble
    )
    for fault in measure_faults:
        if isinstance(fault.model, MeasureBias):
            probs = _apply_stuck(
                probs, fault.location.qubit, fault.model.stuck, fault.model.bias
            )
    return _distribution(probs, bell_pair)  # type: ignore[arg-type]


def bell_measure(state: StateVector, pair: tuple[int, int]) -> OutcomeDistribution:
    """Measure ``pair`` in the Bell basis and every other qubit computationally."""
    return _distribution(_bell_probabilities(state, pair), pair)
