"""Standard T1..T6 suite and the alternative walking-pair suite."""

from collections.abc import Sequence
from math import ceil
from typing import Any, Literal

from qbist.boolfn import BooleanFunction
from qbist.circuit import Circuit, Gate, GateKind, check_oracle, oracle_function
from qbist.exceptions import SuiteGenerationError
from qbist.log import logger
from qbist.sim import (
    FaultSpec,
    OutcomeDistribution,
    apply_faulty,
    measure_distribution,
    prepare,
)

from .models import Measurement, TestPlan, TestSuite
from .stages import gen_ghz_stage, hadamard_layer, synthesize_qbist32

_logger = logger.getChild("testgen")


def run_plan(
    plan: TestPlan, oracle: Circuit, faults: Sequence[FaultSpec] = ()
) -> OutcomeDistribution:
    """Outcome distribution of ``plan`` around ``oracle``.

    ``faults`` are in the composed circuit's coordinates, see
    :meth:`TestPlan.locate`.
    """
    circuit = plan.circuit(oracle)
    ensemble = apply_faulty(circuit, prepare(plan.width, plan.init), faults)
    return measure_distribution(ensemble, faults, plan.measurement.pair)


def _build_plan(oracle: Circuit, **fields: Any) -> TestPlan:
    draft = TestPlan(expected="", **fields)
    outcome = run_plan(draft, oracle)
    if not outcome.is_deterministic():
        raise SuiteGenerationError(
            f"{draft.name} has no deterministic outcome: {outcome.probabilities}"
        )
    _logger.debug("%s expects %s", draft.name, outcome.most_likely())
    return draft.model_copy(update={"expected": outcome.most_likely()})


def _stack(width: int, *parts: Circuit | Sequence[Gate]) -> Circuit:
    gates: list[Gate] = []
    for part in parts:
        gates.extend(part.gates if isinstance(part, Circuit) else part)
    return Circuit(width=width, gates=tuple(gates))


def _resolve_function(oracle: Circuit, f: BooleanFunction | None) -> BooleanFunction:
    derived = oracle_function(oracle)
    if f is None:
        return derived
    if f.k != oracle.k:
        raise SuiteGenerationError(f"function has k={f.k}, oracle has k={oracle.k}")
    if (derived ^ f).weight not in (0, 1 << f.k):
        raise SuiteGenerationError("function does not match the oracle")
    return f


def gen_t1_t2(oracle: Circuit) -> list[TestPlan]:
    """GHZ tests that switch every oracle gate on and off at once.

    The parity-fix CN (positive control on qubit ``k-1``) is placed before
    the unprep stage when the oracle answers differently on ``0..0`` and
    ``1..1``, which for a PPRM oracle means an odd gate count.
    """
    check_oracle(oracle)
    k, width = oracle.k, oracle.width
    at_zeros = oracle.evaluate_classical("0" * width)[-1]
    at_ones = oracle.evaluate_classical("1" * k + "0")[-1]
    fix = [Gate.cn(k - 1, k)] if at_zeros != at_ones else []

    plans = []
    for name, a, labels, description in (
        ("T1", 0, ("QBIST11", "QBIST12"), "(|0..0> + |1..1>)/sqrt2 (x) |0>"),
        ("T2", 1, ("QBIST21", "QBIST22"), "(|0..0> - |1..1>)/sqrt2 (x) |1>"),
    ):
        prep, unprep = gen_ghz_stage(k, a)
        plans.append(
            _build_plan(
                oracle,
                name=name,
                init=str(a) * width,
                prep=prep,
                post=_stack(width, fix, unprep),
                prep_label=labels[0],
                post_label=labels[1],
                oracle_input=description,
            )
        )
    return plans


def gen_t5_t6(oracle: Circuit) -> list[TestPlan]:
    """Hadamard-basis tests; the oracle must leave the relative phase alone."""
    check_oracle(oracle)
    k, width = oracle.k, oracle.width
    layer = hadamard_layer(width)
    return [
        _build_plan(
            oracle,
            name=name,
            init=str(a) * k + "0",
            prep=layer,
            post=layer,
            prep_label=labels[0],
            post_label=labels[1],
            oracle_input=description,
        )
        for name, a, labels, description in (
            ("T5", 0, ("QBIST51", "QBIST52"), "|+>^k (x) |+>"),
            ("T6", 1, ("QBIST61", "QBIST62"), "|->^k (x) |+>"),
        )
    ]


def gen_t3_t4(oracle: Circuit, f: BooleanFunction | None = None) -> list[TestPlan]:
    """Phase-kickback tests closed by the synthesized QBIST32 stage.

    Both tests share the same disentangling stage; expected outcomes are
    fixed by fault-free simulation.

    Raises:
        SuiteGenerationError: If ``f`` does not match ``oracle`` up to a
            constant.
    """
    check_oracle(oracle)
    f = _resolve_function(oracle, f)
    k, width = oracle.k, oracle.width
    layer = hadamard_layer(width)
    qbist = synthesize_qbist32(f)
    _logger.info("QBIST32 for %s uses %d gates", f.to_int(), len(qbist))
    return [
        _build_plan(
            oracle,
            name=name,
            init=str(a) * k + "1",
            prep=layer,
            post=_stack(width, qbist, layer),
            prep_label=labels[0],
            post_label=labels[1],
            oracle_input=description,
        )
        for name, a, labels, description in (
            ("T3", 0, ("QBIST31", "QBIST32"), "|+>^k (x) |->"),
            ("T4", 1, ("QBIST41", "QBIST42"), "|->^k (x) |->"),
        )
    ]


def gen_standard_suite(
    oracle: Circuit, f: BooleanFunction | None = None
) -> list[TestPlan]:
    """T1..T6 in name order."""
    plans = gen_t1_t2(oracle) + gen_t3_t4(oracle, f) + gen_t5_t6(oracle)
    return sorted(plans, key=lambda plan: plan.name)


def pair_positions(k: int) -> list[tuple[int, int]]:
    """Adjacent qubit pairs walked by the alternative suite.

    An odd ``k`` reuses the last two qubits for the final position.
    """
    pairs = []
    for j in range(ceil(k / 2)):
        a, b = 2 * j, 2 * j + 1
        if b >= k:
            a, b = k - 2, k - 1
        pairs.append((a, b))
    return pairs


def _predicted_bell(f: BooleanFunction, pair: tuple[int, int], sign: int) -> str:
    k = f.k
    a, b = pair
    low = ["1"] * k
    low[a] = "0"
    high = ["1"] * k
    high[b] = "0"
    flips = f.table[int("".join(low), 2)] ^ f.table[int("".join(high), 2)]
    name = "psi+" if sign * (-1) ** flips > 0 else "psi-"
    return f"{name}:{'1' * (k - 1)}"


def _alt_target_repeat(oracle: Circuit) -> dict[str, Any]:
    k, width = oracle.k, oracle.width
    prep, unprep = gen_ghz_stage(k, 0)
    target_h = [Gate.single(GateKind.H, k)]
    return {
        "init": "0" * k + "1",
        "prep": _stack(width, prep, target_h),
        "post": _stack(width, unprep, target_h),
        "oracle_input": "(|0..0> + |1..1>)/sqrt2 (x) |->",
    }


def _alt_pair(
    oracle: Circuit, pair: tuple[int, int], sign: int, source: int
) -> dict[str, Any]:
    k, width = oracle.k, oracle.width
    partner = pair[1] if source == pair[0] else pair[0]
    init = ["1"] * width
    init[source] = "0" if sign > 0 else "1"
    h_target = Gate.single(GateKind.H, k)
    symbol = "+" if sign > 0 else "-"
    return {
        "init": "".join(init),
        "prep": _stack(
            width, [Gate.single(GateKind.H, source), Gate.cn(source, partner), h_target]
        ),
        "post": _stack(width, [h_target]),
        "measurement": Measurement(kind="bell", pair=pair),
        "oracle_input": (
            f"(|01> {symbol} |10>)/sqrt2 on q{pair[0]},q{pair[1]}, |1> elsewhere "
            "(x) |->"
        ),
    }


def gen_alternative_suite(
    oracle: Circuit, f: BooleanFunction | None = None
) -> list[TestPlan]:
    """T1, T2, T5, T6, the T1 repeat with a |-> target, then the walking pairs.

    Each pair position gets four plans: both signs of ``(|01> +- |10>)/sqrt2``,
    each prepared with the |+-> control on either member of the pair.

    Raises:
        SuiteGenerationError: If ``k < 2`` or a simulated Bell outcome
            disagrees with the one predicted from ``f``.
    """
    check_oracle(oracle)
    if oracle.k < 2:
        raise SuiteGenerationError("the alternative suite needs k >= 2")
    f = _resolve_function(oracle, f)
    t1, t2 = gen_t1_t2(oracle)
    t5, t6 = gen_t5_t6(oracle)
    plans = [t1, t2, t5, t6]

    variants = [_alt_target_repeat(oracle)]
    checks: list[str | None] = [None]
    for pair in pair_positions(oracle.k):
        for sign in (1, -1):
            for source in (pair[1], pair[0]):
                variants.append(_alt_pair(oracle, pair, sign, source))
                checks.append(_predicted_bell(f, pair, sign))

    for index, (fields, predicted) in enumerate(zip(variants, checks), start=1):
        plan = _build_plan(
            oracle,
            name=f"ALT-{index}",
            prep_label=f"QBISTA{index}1",
            post_label=f"QBISTA{index}2",
            **fields,
        )
        if predicted is not None and plan.expected != predicted:
            raise SuiteGenerationError(
                f"{plan.name} measured {plan.expected}, expected {predicted}"
            )
        plans.append(plan)
    return plans


def build_suite(
    oracle: Circuit,
    f: BooleanFunction | None = None,
    suite: Literal["standard", "alternative"] = "standard",
) -> TestSuite:
    """Generate a suite and bind it to the oracle's fingerprint."""
    generate = gen_standard_suite if suite == "standard" else gen_alternative_suite
    plans = generate(oracle, f)
    _logger.info("generated %d %s plans for k=%d", len(plans), suite, oracle.k)
    return TestSuite(
        suite=suite,
        k=oracle.k,
        oracle_fingerprint=oracle.fingerprint(),
        plans=tuple(plans),
    )
