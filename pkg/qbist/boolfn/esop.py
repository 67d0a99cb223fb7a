"""Exact ESOP minimization by breadth-first search over truth tables."""

from functools import cache
from itertools import product

import numpy as np

from qbist.exceptions import KTooLargeError
from qbist.log import logger

from .algebra import enumerate_affine, pprm_expand
from .models import (
    AffineCoeffs,
    BistResidue,
    BooleanFunction,
    Cube,
    Esop,
    LiteralKind,
    variables,
)

EXACT_LIMIT = 4

_logger = logger.getChild("esop")


@cache
def cube_library(k: int) -> tuple[tuple[Cube, ...], tuple[int, ...]]:
    """All 3^k cubes in lexicographic PLA order with their minterm masks."""
    cubes = tuple(Cube.parse("".join(lits)) for lits in product("-01", repeat=k))
    return cubes, tuple(cube.mask() for cube in cubes)


@cache
def esop_distance_table(k: int) -> np.ndarray:
    """Minimum ESOP cost of every k-variable function, indexed by ``to_int()``.

    Raises:
        KTooLargeError: If ``k`` exceeds the exact range.
    """
    if k > EXACT_LIMIT:
        raise KTooLargeError(f"exact ESOP minimization supports k <= {EXACT_LIMIT}")
    _, masks = cube_library(k)
    edges = np.asarray(masks, dtype=np.int64)
    dist = np.full(1 << (1 << k), -1, dtype=np.int8)
    dist[0] = 0
    frontier = np.zeros(1, dtype=np.int64)
    level = 0
    while frontier.size:
        candidates = np.unique((frontier[:, None] ^ edges[None, :]).ravel())
        frontier = candidates[dist[candidates] < 0]
        level += 1
        dist[frontier] = level
        _logger.debug("k=%d level %d: %d functions", k, level, frontier.size)
    dist.setflags(write=False)
    return dist


def esop_min_cubes(f: BooleanFunction) -> tuple[int, Esop]:
    """Return the minimum cube count of ``f`` and a witness ESOP.

    The witness is rebuilt greedily: at each step the lexicographically
    smallest cube that lowers the remaining distance by one is taken, so equal
    inputs always yield the same witness.

    Raises:
        KTooLargeError: If ``f.k`` is 5 or more.
    """
    dist = esop_distance_table(f.k)
    cubes, masks = cube_library(f.k)
    state = f.to_int()
    cost = int(dist[state])
    chosen: list[int] = []
    remaining = cost
    while remaining:
        for index, mask in enumerate(masks):
            if dist[state ^ mask] == remaining - 1:
                chosen.append(index)
                state ^= mask
                remaining -= 1
                break
    witness = Esop(k=f.k, cubes=tuple(cubes[i] for i in sorted(chosen)))
    return cost, witness


def _truncated_residue(f: BooleanFunction) -> BistResidue:
    p = pprm_expand(f)
    c = 0
    cubes = []
    for mask in p.ordered_terms():
        if mask.bit_count() == 1:
            c |= mask
            continue
        present = set(variables(mask, f.k))
        cubes.append(
            Cube(
                literals=tuple(
                    LiteralKind.POSITIVE if j in present else LiteralKind.ABSENT
                    for j in range(1, f.k + 1)
                )
            )
        )
    affine = AffineCoeffs(k=f.k, c0=p.constant, c=c)
    return BistResidue(
        affine=affine,
        bist=f ^ affine.to_function(),
        esop=Esop(k=f.k, cubes=tuple(cubes)),
        exact=False,
    )


def bist_residue(f: BooleanFunction) -> BistResidue:
    """Split ``f`` into an affine part and the cheapest ESOP residue.

    For k <= 4 every affine candidate is scored by the exact ESOP cost of
    ``f ^ A``; ties go to the smaller affine encoding. For larger k the affine
    part is the degree-1 truncation of the PPRM and the residue keeps the
    nonlinear PPRM terms (flagged non-exact).
    """
    if f.k > EXACT_LIMIT:
        _logger.info("k=%d exceeds exact range, using PPRM truncation", f.k)
        return _truncated_residue(f)

    dist = esop_distance_table(f.k)
    value = f.to_int()

    def rank(affine: AffineCoeffs) -> tuple[int, int]:
        residue = value ^ affine.to_function().to_int()
        return int(dist[residue]), affine.encoding

    best = min(enumerate_affine(f.k), key=rank)
    bist = f ^ best.to_function()
    _, esop = esop_min_cubes(bist)
    return BistResidue(affine=best, bist=bist, esop=esop)
