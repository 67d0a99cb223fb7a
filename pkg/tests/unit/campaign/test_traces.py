from qbist.campaign import PhaseEvent, trace_activations


class TestTraceActivations:
    def test_one_trace_per_gate(self, example_oracle, example_suite):
        traces = trace_activations(example_suite.plan("T1"), example_oracle)
        assert [trace.gate for trace in traces] == list(range(7))
        assert {trace.test for trace in traces} == {"T1"}

    def test_basis_events_in_ghz_test(self, example_oracle, example_suite):
        first = trace_activations(example_suite.plan("T1"), example_oracle)[0]
        assert first.active_targets == (0,)
        assert first.idle_controls == ((0, 0),)
        assert first.phases == ()

    def test_open_controls_see_ones(self, example_oracle, example_suite):
        first = trace_activations(example_suite.plan("T2"), example_oracle)[0]
        assert first.active_targets == (1,)
        assert first.idle_controls == ((0, 1),)

    def test_plus_target_before_any_phase(self, example_oracle, example_suite):
        first = trace_activations(example_suite.plan("T5"), example_oracle)[0]
        assert first.active_targets == ()
        assert set(first.phases) == {
            PhaseEvent(mode="plus", activating=True, sign=1),
            PhaseEvent(mode="plus", activating=False, sign=1),
        }

    def test_minus_target_with_mixed_signs(self, example_oracle, example_suite):
        traces = trace_activations(example_suite.plan("T4"), example_oracle)
        expected = {
            PhaseEvent(mode="minus", activating=activating, sign=sign)
            for activating in (True, False)
            for sign in (1, -1)
        }
        assert all(set(trace.phases) == expected for trace in traces)
