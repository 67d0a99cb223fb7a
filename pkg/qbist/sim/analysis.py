import numpy as np

from qbist.boolfn import SignVector
from qbist.exceptions import NotBalancedError, TargetEntangledError
from qbist.utils.config import resolve_tolerance

from .models import StateVector


def _normalize_phase(vector: np.ndarray, tol: float) -> tuple[np.ndarray, complex]:
    """Make the first non-negligible component real positive; return the phase."""
    for component in vector:
        if abs(component) > tol:
            phase = component / abs(component)
            return vector / phase, phase
    return vector, 1.0


def is_product(
    state: StateVector, tol: float | None = None
) -> tuple[bool, tuple[np.ndarray, ...] | None]:
    """Test whether ``state`` is a tensor product of single-qubit states.

    Qubits are split off one at a time: the leading qubit separates iff the
    2 x 2^(n-1) amplitude matrix has rank one, i.e. its second singular value
    is negligible relative to the first.

    Returns:
        ``(True, factors)`` with one normalized 2-vector per qubit whose
        Kronecker product equals ``state`` exactly (the global phase sits on
        the first factor), or ``(False, None)``.
    """
    tol = resolve_tolerance(tol)
    factors: list[np.ndarray] = []
    rest = state.amplitudes
    for _ in range(state.width - 1):
        u, singular, vh = np.linalg.svd(rest.reshape(2, -1), full_matrices=False)
        if singular[1] > tol * singular[0]:
            return False, None
        factors.append(u[:, 0])
        rest = singular[0] * vh[0]
    factors.append(rest / np.linalg.norm(rest))

    for index in range(1, len(factors)):
        factors[index], phase = _normalize_phase(factors[index], tol)
        factors[0] = factors[0] * phase
    return True, tuple(factors)


def phase_vector(state: StateVector, tol: float | None = None) -> SignVector:
    """Per-minterm signs of the register when the target is |+> or |->.

    Raises:
        TargetEntangledError: If the target is not a |+> or |-> factor.
        NotBalancedError: If register magnitudes differ or phases are not +-1.
    """
    tol = resolve_tolerance(tol)
    k = state.width - 1
    columns = state.amplitudes.reshape(-1, 2)
    zero, one = columns[:, 0], columns[:, 1]
    minus = np.allclose(one, -zero, atol=tol, rtol=0.0)
    if not minus and not np.allclose(one, zero, atol=tol, rtol=0.0):
        raise TargetEntangledError("target qubit is not a |+> or |-> product factor")
    register = zero * np.sqrt(2)

    magnitudes = np.abs(register)
    if not np.allclose(magnitudes, 2 ** (-k / 2), atol=tol, rtol=0.0):
        raise NotBalancedError("register amplitudes do not share magnitude 2^(-k/2)")
    ratios = register / register[0]
    if not np.allclose(ratios.imag, 0.0, atol=tol) or not np.allclose(
        np.abs(ratios.real), 1.0, atol=tol
    ):
        raise NotBalancedError("register phases are not +-1")
    return SignVector(k=k, signs=tuple(1 if r > 0 else -1 for r in ratios.real))
