import pytest

from qbist.exceptions import SuiteGenerationError
from qbist.sim import FaultSpec, apply, prepare
from qbist.testgen import (
    build_suite,
    gen_alternative_suite,
    gen_standard_suite,
    gen_t1_t2,
    gen_t3_t4,
    pair_positions,
    run_plan,
)

EXPECTED = {
    "T1": "00000",
    "T2": "11111",
    "T3": "11101",
    "T4": "00011",
    "T5": "00000",
    "T6": "11110",
}


class TestStandardSuite:
    def test_example_outcomes(self, example_oracle):
        plans = gen_standard_suite(example_oracle)
        assert {plan.name: plan.expected for plan in plans} == EXPECTED

    def test_plans_are_deterministic(self, example_oracle):
        for plan in gen_standard_suite(example_oracle):
            outcome = run_plan(plan, example_oracle)
            assert outcome.probability(plan.expected) == pytest.approx(1.0)

    def test_stage_labels(self, example_oracle):
        plan = gen_standard_suite(example_oracle)[2]
        assert (plan.prep_label, plan.post_label) == ("QBIST31", "QBIST32")
        labels = [stage.label for stage in plan.circuit(example_oracle).stages]
        assert labels == ["QBIST31", "oracle", "QBIST32"]

    def test_parity_fix_for_odd_oracle(self, example_oracle):
        t1, _ = gen_t1_t2(example_oracle)
        # fix CN, three ladder CNs, H
        assert len(t1.post) == 5
        assert t1.post.gates[0].target == example_oracle.k

    def test_no_parity_fix_for_even_oracle(self, make_oracle):
        oracle = make_oracle(2, [1, 2])
        t1, _ = gen_t1_t2(oracle)
        assert len(t1.post) == 2

    def test_t1_target_toggles_at_every_gate(self, example_oracle):
        t1, _ = gen_t1_t2(example_oracle)
        state = apply(t1.prep, prepare(5, t1.init))
        assert state.support() == ["00000", "11110"]
        for stop, target in enumerate([1, 0, 1, 0, 1, 0, 1], start=1):
            after = apply(example_oracle.slice(0, stop), state)
            assert after.support() == ["00000", f"1111{target}"]
            assert abs(after.amplitude("00000")) == pytest.approx(2**-0.5)

    @pytest.mark.parametrize(
        "k,minterms",
        [(1, [0]), (2, [1, 2]), (3, [3, 5, 6]), (4, (2, 4, 5, 8, 9, 15))],
        ids=["k1", "k2", "k3", "example"],
    )
    def test_t1_t2_cover_both_basis_values(self, make_oracle, k, minterms):
        t1, t2 = gen_t1_t2(make_oracle(k, list(minterms)))
        flipped = str.maketrans("01", "10")
        assert t2.init == t1.init.translate(flipped)
        assert t2.expected == t1.expected.translate(flipped)

    @pytest.mark.parametrize(
        "k,minterms",
        [(1, [1]), (2, [3]), (3, [0, 7]), (3, [1, 2, 4, 7])],
        ids=["identity", "and", "constant-heavy", "parity"],
    )
    def test_small_oracles(self, make_oracle, k, minterms):
        oracle = make_oracle(k, minterms)
        plans = gen_standard_suite(oracle)
        assert [plan.name for plan in plans] == list(EXPECTED)
        assert all(len(plan.expected) == k + 1 for plan in plans)

    def test_complement_accepted(self, example_oracle, make_function):
        complement = make_function(
            4, [i for i in range(16) if i not in (2, 4, 5, 8, 9, 15)]
        )
        assert len(gen_t3_t4(example_oracle, complement)) == 2

    @pytest.mark.parametrize(
        "k,minterms,message",
        [(4, [1], "does not match"), (3, [1], "function has k=3")],
        ids=["mismatch", "width"],
    )
    def test_function_must_match(
        self, example_oracle, make_function, k, minterms, message
    ):
        with pytest.raises(SuiteGenerationError, match=message):
            gen_t3_t4(example_oracle, make_function(k, minterms))


class TestAlternativeSuite:
    @pytest.mark.parametrize(
        "k,minterms,size",
        [
            (2, [3], 9),
            (3, [3, 5, 6, 7], 13),
            (4, (2, 4, 5, 8, 9, 15), 13),
            (5, [31], 17),
            (6, [63], 17),
            (7, [127], 21),
            (8, [255], 21),
        ],
        ids=["k2", "k3", "k4", "k5", "k6", "k7", "k8"],
    )
    def test_size(self, make_oracle, k, minterms, size):
        assert len(gen_alternative_suite(make_oracle(k, list(minterms)))) == size

    def test_names_and_labels(self, example_oracle):
        plans = gen_alternative_suite(example_oracle)
        names = [plan.name for plan in plans]
        assert names[:4] == ["T1", "T2", "T5", "T6"]
        assert names[4:] == [f"ALT-{i}" for i in range(1, 10)]
        assert plans[5].prep_label == "QBISTA21"
        assert plans[5].post_label == "QBISTA22"

    def test_target_repeat(self, example_oracle):
        alt = gen_alternative_suite(example_oracle)[4]
        assert alt.init == "00001"
        assert alt.expected == "10001"

    def test_bell_plans(self, example_oracle):
        for plan in gen_alternative_suite(example_oracle)[5:]:
            assert plan.measurement.kind == "bell"
            name, rest = plan.expected.split(":")
            assert name in ("psi+", "psi-")
            assert rest == "111"
            outcome = run_plan(plan, example_oracle)
            assert outcome.is_deterministic()

    def test_measured_bits_skip_the_pair(self, example_oracle):
        plan = gen_alternative_suite(example_oracle)[5]
        assert plan.measurement.pair == (0, 1)
        assert plan.measured_bits() == {2: "1", 3: "1", 4: "1"}

    def test_needs_two_variables(self, make_oracle):
        with pytest.raises(SuiteGenerationError, match="k >= 2"):
            gen_alternative_suite(make_oracle(1, [1]))


@pytest.mark.parametrize(
    "k,pairs",
    [
        (2, [(0, 1)]),
        (3, [(0, 1), (1, 2)]),
        (4, [(0, 1), (2, 3)]),
        (5, [(0, 1), (2, 3), (3, 4)]),
    ],
    ids=["k2", "k3", "k4", "k5"],
)
def test_pair_positions(k, pairs):
    assert pair_positions(k) == pairs


class TestRunPlan:
    def test_located_phase_flip(self, example_oracle):
        t5 = gen_standard_suite(example_oracle)[4]
        assert t5.oracle_span(example_oracle) == range(5, 13)
        fault = t5.locate(FaultSpec.pauli("z", 0, 0))
        assert fault.location.boundary == 5
        outcome = run_plan(t5, example_oracle, [fault])
        assert outcome.probability("10000") == pytest.approx(1.0)

    def test_partial_fault_mixes(self, example_oracle):
        t5 = gen_standard_suite(example_oracle)[4]
        fault = t5.locate(FaultSpec.pauli("z", 0, 0, probability=0.25))
        outcome = run_plan(t5, example_oracle, [fault])
        assert outcome.probability("00000") == pytest.approx(0.75)


class TestBuildSuite:
    def test_binds_fingerprint(self, example_oracle):
        suite = build_suite(example_oracle)
        assert suite.oracle_fingerprint == example_oracle.fingerprint()
        assert suite.k == 4
        assert suite.plan("T4").expected == "00011"

    def test_alternative(self, example_oracle):
        suite = build_suite(example_oracle, suite="alternative")
        assert suite.suite == "alternative"
        assert len(suite.plans) == 13

    @pytest.mark.slow
    def test_every_three_variable_function(self, make_oracle):
        for value in range(256):
            minterms = [i for i in range(8) if value >> i & 1]
            suite = build_suite(make_oracle(3, minterms))
            assert len(suite.plans) == 6
            t1, t2 = suite.plans[:2]
            assert {t1.expected, t2.expected} == {"0000", "1111"}
            assert {t1.init, t2.init} == {"0000", "1111"}
