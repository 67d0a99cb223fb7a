import numpy as np

from .models import (
    AffineCoeffs,
    BooleanFunction,
    PprmExpansion,
    SignVector,
    minterm_index,
    term_order,
)


def _moebius(bits: np.ndarray, k: int) -> np.ndarray:
    """Binary Reed-Muller transform of a length-2^k 0/1 vector (self-inverse)."""
    out = bits.astype(np.uint8).copy()
    for b in range(k):
        view = out.reshape(-1, 2, 1 << b)
        view[:, 1, :] ^= view[:, 0, :]
    return out


def pprm_expand(f: BooleanFunction) -> PprmExpansion:
    """Expand ``f`` into its unique positive-polarity Reed-Muller form.

    Coefficient ``m`` of the transform is the coefficient of the product of
    the variables set in mask ``m``; mask 0 is the constant.
    """
    coefficients = _moebius(np.asarray(f.table), f.k)
    terms = [m for m in np.flatnonzero(coefficients).tolist() if m]
    terms.sort(key=lambda mask: term_order(mask, f.k))
    return PprmExpansion(k=f.k, constant=int(coefficients[0]), terms=tuple(terms))


def pprm_to_function(p: PprmExpansion) -> BooleanFunction:
    """Inverse of :func:`pprm_expand`."""
    coefficients = np.zeros(1 << p.k, dtype=np.uint8)
    coefficients[0] = p.constant
    for mask in p.terms:
        coefficients[mask] = 1
    return BooleanFunction(k=p.k, table=tuple(_moebius(coefficients, p.k).tolist()))


def evaluate(f: BooleanFunction, assignment: str | int) -> int:
    """Value of ``f`` at a k-bit assignment such as ``"0110"``."""
    return f.table[minterm_index(assignment, f.k)]


def is_affine(f: BooleanFunction) -> AffineCoeffs | None:
    """Return the affine coefficients of ``f``, or None if it has a nonlinear term."""
    p = pprm_expand(f)
    if p.degree > 1:
        return None
    c = 0
    for mask in p.terms:
        c |= mask
    return AffineCoeffs(k=f.k, c0=p.constant, c=c)


def enumerate_affine(k: int) -> list[AffineCoeffs]:
    """All 2^(k+1) affine functions of k variables, ordered by encoding."""
    return [AffineCoeffs(k=k, c0=c0, c=c) for c in range(1 << k) for c0 in (0, 1)]


def sign_vector(f: BooleanFunction) -> SignVector:
    """Phase signs (-1)^f(x) per minterm."""
    return SignVector(k=f.k, signs=tuple(-1 if bit else 1 for bit in f.table))


def sign_decode(signs: SignVector) -> BooleanFunction:
    """Inverse of :func:`sign_vector`."""
    return BooleanFunction(k=signs.k, table=tuple(int(s < 0) for s in signs.signs))
