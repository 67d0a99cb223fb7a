import pytest
from pydantic import ValidationError

from qbist.boolfn import AffineCoeffs, BooleanFunction, Cube, Esop, LiteralKind


class TestBooleanFunction:
    def test_from_minterms(self, example_function):
        assert example_function.minterms() == [2, 4, 5, 8, 9, 15]
        assert example_function.weight == 6

    def test_int_round_trip(self, example_function):
        assert example_function.to_int() == 0x8334
        assert BooleanFunction.from_int(4, 0x8334) == example_function

    def test_xor(self, make_function):
        f = make_function(3, [0, 1])
        g = make_function(3, [1, 2])
        assert (f ^ g).minterms() == [0, 2]

    def test_xor_rejects_other_k(self, make_function):
        with pytest.raises(ValueError, match="cannot combine"):
            make_function(3, [0]) ^ make_function(2, [0])

    def test_wrong_table_length_raises(self):
        with pytest.raises(ValidationError, match="expected 8"):
            BooleanFunction(k=3, table=(0, 1))

    def test_non_binary_entries_raise(self):
        with pytest.raises(ValidationError, match="0 or 1"):
            BooleanFunction(k=1, table=(0, 2))

    def test_minterm_out_of_range_raises(self):
        with pytest.raises(ValueError, match="out of range"):
            BooleanFunction.from_minterms(2, [4])


class TestCube:
    @pytest.mark.parametrize(
        "text,covered",
        [("1-0", [4, 6]), ("---", list(range(8))), ("011", [3])],
        ids=["mixed", "constant-one", "minterm"],
    )
    def test_covers(self, text, covered):
        cube = Cube.parse(text)
        assert [i for i in range(8) if cube.covers(i)] == covered
        assert str(cube) == text

    def test_literal_count(self):
        assert Cube.parse("1-0-").literal_count == 2

    def test_minterm_cube(self):
        assert str(Cube.minterm(5, 4)) == "0101"

    def test_invalid_literal_raises(self):
        with pytest.raises(ValueError):
            Cube.parse("1x0")


class TestEsop:
    def test_to_function(self):
        esop = Esop(k=2, cubes=(Cube.parse("1-"), Cube.parse("-1")))
        assert esop.to_function().minterms() == [1, 2]
        assert esop.cost == 2

    def test_cube_width_mismatch_raises(self):
        with pytest.raises(ValidationError, match="2 literals"):
            Esop(k=2, cubes=(Cube.parse("1-0"),))

    def test_empty_esop_is_zero(self):
        assert str(Esop(k=3)) == "0"
        assert Esop(k=3).to_function().weight == 0


class TestAffineCoeffs:
    def test_evaluate(self):
        affine = AffineCoeffs(k=3, c0=1, c=0b101)
        # 1 ^ x1 ^ x3
        assert [affine.evaluate(i) for i in range(8)] == [1, 0, 1, 0, 0, 1, 0, 1]
        assert str(affine) == "1 ^ x1 ^ x3"

    def test_encoding(self):
        assert AffineCoeffs(k=3, c0=1, c=0b011).encoding == 0b0111

    def test_coefficients_must_fit(self):
        with pytest.raises(ValidationError, match="exceeds 3 bits"):
            AffineCoeffs(k=3, c=8)


def test_literal_kinds_use_pla_symbols():
    assert [kind.value for kind in LiteralKind] == ["-", "0", "1"]
