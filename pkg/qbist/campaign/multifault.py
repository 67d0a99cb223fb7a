"""Monte-Carlo placements of several simultaneous Pauli faults."""

from collections import defaultdict
from collections.abc import Sequence
from functools import reduce

import numpy as np

from qbist.circuit import Circuit, SiteKind, enumerate_error_locations
from qbist.log import logger
from qbist.sim import FaultSpec, PauliAxis, PauliFault
from qbist.sim.statevector import PAULI
from qbist.testgen import TestPlan, run_plan
from qbist.utils.config import resolve_tolerance

from .models import MultiFaultReport

_logger = logger.getChild("multifault")

_AXES = tuple(PauliAxis)


def cancels(faults: Sequence[FaultSpec], tol: float | None = None) -> bool:
    """Whether the Pauli faults multiply to the identity (up to phase) at every site."""
    tol = resolve_tolerance(tol)
    sites: dict[tuple[int | None, int], list[np.ndarray]] = defaultdict(list)
    for fault in faults:
        if not isinstance(fault.model, PauliFault):
            return False
        key = (fault.location.boundary, fault.location.qubit)
        sites[key].append(PAULI[fault.model.axis])
    for matrices in sites.values():
        product = reduce(np.matmul, matrices)
        if abs(product[0, 1]) > tol or abs(product[0, 0] - product[1, 1]) > tol:
            return False
    return True


def _detected(
    plans: Sequence[TestPlan], oracle: Circuit, faults: Sequence[FaultSpec], tol: float
) -> bool:
    for plan in plans:
        placed = [plan.locate(fault) for fault in faults]
        if 1.0 - run_plan(plan, oracle, placed).probability(plan.expected) > tol:
            return True
    return False


def multi_fault_experiment(
    oracle: Circuit,
    plans: Sequence[TestPlan],
    n_faults: int = 2,
    trials: int = 100,
    seed: int = 0,
    probability: float = 1.0,
    tol: float | None = None,
) -> MultiFaultReport:
    """Place ``n_faults`` random Pauli faults on oracle wires per trial.

    Sites and axes are drawn uniformly with ``numpy.random.default_rng(seed)``,
    so a seed reproduces the report. A trial counts as detected when any
    plan deviates from its expected outcome with positive probability.
    Trials whose faults cancel are reported separately and excluded from
    the detected fraction.
    """
    if n_faults < 1 or trials < 1:
        raise ValueError("n_faults and trials must be positive")
    tol = resolve_tolerance(tol)
    rng = np.random.default_rng(seed)
    sites = [
        location
        for location in enumerate_error_locations(oracle)
        if location.kind is SiteKind.WIRE
    ]
    detected = cancelled = 0
    undetected = []
    for _ in range(trials):
        picks = rng.integers(len(sites), size=n_faults)
        axes = rng.integers(len(_AXES), size=n_faults)
        faults = [
            FaultSpec.pauli(
                _AXES[axis],
                sites[site].boundary or 0,
                sites[site].qubit,
                probability,
            )
            for site, axis in zip(picks, axes)
        ]
        if cancels(faults, tol):
            cancelled += 1
        elif _detected(plans, oracle, faults, tol):
            detected += 1
        else:
            undetected.append(tuple(str(fault) for fault in faults))
    report = MultiFaultReport(
        n_faults=n_faults,
        trials=trials,
        seed=seed,
        detected=detected,
        cancelled=cancelled,
        undetected=tuple(undetected),
    )
    _logger.info(
        "%d-fault experiment: %d/%d detected, %d cancelled",
        n_faults,
        detected,
        report.effective_trials,
        cancelled,
    )
    return report
