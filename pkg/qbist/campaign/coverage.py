"""Requirement coverage: detection records and traces rolled up per test column."""

from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Literal

from qbist.boolfn import BooleanFunction
from qbist.circuit import Circuit, Gate
from qbist.exceptions import CampaignError
from qbist.log import logger
from qbist.sim import FaultSpec, InitBias, MeasureBias, PauliAxis, PauliFault
from qbist.testgen import TestPlan, build_suite
from qbist.utils.config import resolve_tolerance

from .detection import detection_probability
from .faults import enumerate_single_faults, qbist_faults
from .models import (
    CampaignConfig,
    CoverageMatrix,
    DetectionRecord,
    GateTrace,
    Grade,
    PhaseEvent,
    Requirement,
)
from .traces import trace_activations

UNIONS = (("T1", "T2"), ("T3", "T4"), ("T5", "T6"))
ALT_COLUMN = "ALT"
ALL_COLUMN = "ALL"

Suite = Literal["standard", "alternative"]


def union_name(members: Sequence[str]) -> str:
    return "∪".join(members)


def plan_columns(plans: Sequence[TestPlan]) -> dict[str, tuple[str, ...]]:
    """Single-test columns, the pairwise unions present, ALT and ALL."""
    names = [plan.name for plan in plans]
    columns = {name: (name,) for name in names}
    for members in UNIONS:
        if all(name in names for name in members):
            columns[union_name(members)] = members
    alternative = tuple(name for name in names if name.startswith("ALT-"))
    if alternative:
        columns[ALT_COLUMN] = alternative
    columns[ALL_COLUMN] = tuple(names)
    return columns


def required_cells(suite: Suite) -> dict[Requirement, tuple[str, ...]]:
    """Cells a suite must grade full.

    The alternative suite keeps the standard rows except phase kickback,
    which its walking pairs cover together with the T5/T6 phase-flip tests.
    """
    t12, t34, t56 = (union_name(members) for members in UNIONS)
    cells = {
        Requirement.BIT_FLIP: ("T1", "T2", t12),
        Requirement.PHASE_FLIP: ("T5", "T6", t56),
        Requirement.INITIALIZATION: (t12, t34),
        Requirement.KICKBACK: (t34,),
        Requirement.LOST_PHASE: (t56,),
        Requirement.CONTROLS: (t12,),
        Requirement.TARGET_BASIS: (t12,),
        Requirement.MEASUREMENT: (t12,),
    }
    if suite == "alternative":
        cells[Requirement.INITIALIZATION] = (t12,)
        cells[Requirement.KICKBACK] = (ALL_COLUMN,)
    return cells


def _is_axis(*axes: PauliAxis) -> Callable[[DetectionRecord], bool]:
    def matches(record: DetectionRecord) -> bool:
        model = record.fault.model
        return isinstance(model, PauliFault) and model.axis in axes

    return matches


def _is_model(kind: type) -> Callable[[DetectionRecord], bool]:
    return lambda record: isinstance(record.fault.model, kind)


def _detection_grade(
    records: Iterable[DetectionRecord],
    members: tuple[str, ...],
    selected: Callable[[DetectionRecord], bool],
    tol: float,
) -> Grade:
    best: dict[str, tuple[float, float]] = {}
    for record in records:
        if record.test not in members or not selected(record):
            continue
        placement, probability = best.get(record.key, (0.0, 0.0))
        best[record.key] = (
            record.fault.placement,
            max(probability, record.probability),
        )
    if not best:
        return Grade.NONE
    full = sum(p >= placement - tol for placement, p in best.values())
    if full == len(best):
        return Grade.FULL
    return Grade.PARTIAL if any(p > tol for _, p in best.values()) else Grade.NONE


def _structural_grade(
    plans: Sequence[TestPlan], bits: Callable[[TestPlan], dict[int, str]]
) -> Grade:
    width = plans[0].width
    seen = {(q, value) for plan in plans for q, value in bits(plan).items()}
    return Grade.of(len(seen), 2 * width)


def _merge(traces: Iterable[GateTrace], members: tuple[str, ...]) -> dict[int, dict]:
    merged: dict[int, dict] = {}
    for trace in traces:
        if trace.test not in members:
            continue
        slot = merged.setdefault(
            trace.gate, {"active": set(), "idle": set(), "phases": set()}
        )
        slot["active"].update(trace.active_targets)
        slot["idle"].update(trace.idle_controls)
        slot["phases"].update(trace.phases)
    return merged


def _count(items: Iterable[tuple[bool, ...]]) -> Grade:
    flags = [all(item) for item in items]
    return Grade.of(sum(flags), len(flags))


def _controls_grade(gates: Sequence[Gate], merged: dict[int, dict]) -> Grade:
    items = []
    for index, gate in enumerate(gates):
        slot = merged.get(index, {"active": set(), "idle": set()})
        for value in (0, 1):
            items.append((value in slot["active"],))
            items.extend(
                ((c.qubit, value) in slot["idle"],) for c in gate.controls
            )
    return _count(items)


def _target_grade(gates: Sequence[Gate], merged: dict[int, dict]) -> Grade:
    return _count(
        (value in merged.get(index, {}).get("active", set()),)
        for index in range(len(gates))
        for value in (0, 1)
    )


def _phase_grade(
    gates: Sequence[Gate], merged: dict[int, dict], mode: Literal["minus", "plus"]
) -> Grade:
    return _count(
        (
            PhaseEvent(mode=mode, activating=activating, sign=sign)
            in merged.get(index, {}).get("phases", set()),
        )
        for index in range(len(gates))
        for activating in (True, False)
        for sign in (1, -1)
    )


def requirement_rollup(
    plans: Sequence[TestPlan],
    records: Sequence[DetectionRecord],
    traces: Sequence[GateTrace],
    columns: dict[str, tuple[str, ...]],
    oracle: Circuit,
    include_qbist: bool = False,
    tol: float | None = None,
) -> CoverageMatrix:
    """Grade every requirement for every column.

    Bit and phase flips are graded from Pauli detection records; a union
    column takes each fault's best detection among its members. Init and
    measurement coverage take the better of the structural grade (every
    qubit initialized, or read, in both basis states) and the bias-fault
    detection grade. Controls and target-basis coverage come from the basis
    traces. Phase kickback with |-> and phase preservation with |+> need
    both the phase traces and the phase-flip detection grade.
    """
    tol = resolve_tolerance(tol)
    if not include_qbist:
        records = [record for record in records if not record.in_qbist]
    by_name = {plan.name: plan for plan in plans}
    cells: dict[Requirement, dict[str, Grade]] = {r: {} for r in Requirement}
    for column, members in columns.items():
        member_plans = [by_name[name] for name in members]
        merged = _merge(traces, members)
        detection = partial(_detection_grade, records, members, tol=tol)
        phase_flip = detection(_is_axis(PauliAxis.Z, PauliAxis.Y))
        row = {
            Requirement.BIT_FLIP: detection(_is_axis(PauliAxis.X, PauliAxis.Y)),
            Requirement.PHASE_FLIP: phase_flip,
            Requirement.INITIALIZATION: Grade.best(
                _structural_grade(
                    member_plans, lambda plan: dict(enumerate(plan.init))
                ),
                detection(_is_model(InitBias)),
            ),
            Requirement.KICKBACK: Grade.worst(
                _phase_grade(oracle.gates, merged, "minus"), phase_flip
            ),
            Requirement.LOST_PHASE: Grade.worst(
                _phase_grade(oracle.gates, merged, "plus"), phase_flip
            ),
            Requirement.CONTROLS: _controls_grade(oracle.gates, merged),
            Requirement.TARGET_BASIS: _target_grade(oracle.gates, merged),
            Requirement.MEASUREMENT: Grade.best(
                _structural_grade(member_plans, TestPlan.measured_bits),
                detection(_is_model(MeasureBias)),
            ),
        }
        for requirement, grade in row.items():
            cells[requirement][column] = grade
    return CoverageMatrix(columns=columns, cells=cells, records=tuple(records))


class CampaignRunner:
    """Runs every (test, fault) pair of a suite and grades the coverage."""

    def __init__(
        self,
        oracle: Circuit,
        plans: Sequence[TestPlan],
        config: CampaignConfig | None = None,
    ):
        if not plans:
            raise CampaignError("a campaign needs at least one test plan")
        widths = {plan.width for plan in plans}
        if widths != {oracle.width}:
            raise CampaignError(
                f"plans of width {sorted(widths)} do not fit a width-{oracle.width} "
                "oracle"
            )
        self.oracle = oracle
        self.plans = list(plans)
        self.config = config or CampaignConfig()
        self.logger = logger.getChild(self.__class__.__name__)

    def default_faults(self) -> list[FaultSpec]:
        return enumerate_single_faults(
            self.oracle,
            self.config.models,
            probability=self.config.probability,
            bias=self.config.bias,
            sweep=self.config.sweep,
        )

    def _jobs(
        self, faults: Sequence[FaultSpec]
    ) -> list[tuple[TestPlan, FaultSpec, bool]]:
        jobs = [(plan, fault, False) for plan in self.plans for fault in faults]
        if self.config.include_qbist_faults and "pauli" in self.config.models:
            probability = self.config.probability
            for plan in self.plans:
                jobs.extend(
                    (plan, fault, True)
                    for fault in qbist_faults(plan, self.oracle, probability)
                )
        return jobs

    def records(self, faults: Sequence[FaultSpec]) -> list[DetectionRecord]:
        """Detection records in (plan order, fault order), for any worker count."""
        jobs = self._jobs(faults)
        self.logger.debug("evaluating %d (test, fault) pairs", len(jobs))

        def evaluate(job: tuple[TestPlan, FaultSpec, bool]) -> DetectionRecord:
            plan, fault, in_qbist = job
            return detection_probability(plan, fault, self.oracle, in_qbist)

        if self.config.max_workers == 1:
            return [evaluate(job) for job in jobs]
        with ThreadPoolExecutor(max_workers=self.config.max_workers) as executor:
            return list(executor.map(evaluate, jobs))

    def run(self, faults: Sequence[FaultSpec] | None = None) -> CoverageMatrix:
        faults = self.default_faults() if faults is None else list(faults)
        self.logger.info(
            "campaign: %d tests x %d faults", len(self.plans), len(faults)
        )
        records = self.records(faults)
        traces = [
            trace
            for plan in self.plans
            for trace in trace_activations(plan, self.oracle)
        ]
        matrix = requirement_rollup(
            self.plans,
            records,
            traces,
            plan_columns(self.plans),
            self.oracle,
            include_qbist=self.config.include_qbist_faults,
        )
        self.logger.info("campaign finished with %d records", len(records))
        return matrix


def run_campaign(
    oracle: Circuit,
    f: BooleanFunction | None = None,
    suite: Suite = "standard",
    faults: Sequence[FaultSpec] | None = None,
    config: CampaignConfig | None = None,
) -> CoverageMatrix:
    """Generate a suite for ``oracle`` and grade it against ``faults``.

    The suite comes from ``config`` when given, otherwise from ``suite``.
    ``faults`` defaults to every single fault the config's models enumerate
    on the oracle; an empty sequence leaves only the structural grades.
    """
    config = config or CampaignConfig(suite=suite)
    plans = build_suite(oracle, f, config.suite).plans
    return CampaignRunner(oracle, plans, config).run(faults)
