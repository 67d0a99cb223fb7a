import pytest

from qbist.boolfn import BooleanFunction, pprm_expand
from qbist.circuit import Circuit, build_oracle, parse_circuit

# Running example: ones at minterms 0010, 0100, 0101, 1000, 1001, 1111.
EXAMPLE_MINTERMS = (2, 4, 5, 8, 9, 15)
EXAMPLE_TT = 0x8334


@pytest.fixture(scope="session")
def example_function() -> BooleanFunction:
    return BooleanFunction.from_minterms(4, EXAMPLE_MINTERMS)


@pytest.fixture(scope="session")
def example_oracle(example_function) -> Circuit:
    return build_oracle(pprm_expand(example_function))


@pytest.fixture(scope="session")
def make_function():
    def _make_function(k=3, minterms=()):
        return BooleanFunction.from_minterms(k, minterms)

    return _make_function


@pytest.fixture(scope="session")
def make_oracle(make_function):
    def _make_oracle(k=3, minterms=()):
        return build_oracle(pprm_expand(make_function(k, minterms)))

    return _make_oracle


@pytest.fixture(scope="session")
def make_circuit():
    def _make_circuit(*lines, width=3):
        return parse_circuit("\n".join([f"# width: {width}", *lines]))

    return _make_circuit
