from qbist.circuit import Circuit
from qbist.sim import FaultSpec, validate_location
from qbist.testgen import TestPlan, run_plan
from qbist.utils.config import resolve_tolerance

from .models import DetectionRecord


def detection_probability(
    plan: TestPlan,
    fault: FaultSpec,
    oracle: Circuit,
    in_qbist: bool = False,
    tol: float | None = None,
) -> DetectionRecord:
    """Exact probability that ``plan`` reads something other than its expected outcome.

    The fault-free branch always reads the expected outcome, so the result is
    the placement probability times the deviation of the faulty branch.

    Args:
        plan: Test to run.
        fault: Oracle-local fault, or a plan-local one when ``in_qbist``.
        oracle: Circuit under test.
        in_qbist: ``fault`` already addresses the composed circuit.
        tol: Tolerance of the deterministic flag.

    Raises:
        LocationInvalidError: If the fault addresses a missing site.
    """
    placed = fault if in_qbist else plan.locate(fault)
    validate_location(plan.circuit(oracle), placed.location)
    outcome = run_plan(plan, oracle, [placed])
    probability = 1.0 - outcome.probability(plan.expected)
    return DetectionRecord(
        fault=fault,
        test=plan.name,
        probability=probability,
        deterministic=abs(probability - fault.placement) <= resolve_tolerance(tol),
        in_qbist=in_qbist,
    )
