from __future__ import annotations

from collections.abc import Iterable
from enum import Enum
from typing import Self

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationInfo,
    field_validator,
    model_validator,
)

MAX_VARIABLES = 16


def minterm_index(assignment: str | int, k: int) -> int:
    """Convert a k-bit assignment into its minterm index (x1 is the MSB)."""
    if isinstance(assignment, int):
        if not 0 <= assignment < 1 << k:
            raise ValueError(f"minterm {assignment} out of range for k={k}")
        return assignment
    if len(assignment) != k or set(assignment) - {"0", "1"}:
        raise ValueError(f"assignment {assignment!r} is not a {k}-bit string")
    return int(assignment, 2)


def variables(mask: int, k: int) -> tuple[int, ...]:
    """Return the 1-based variable indices present in a k-bit mask."""
    return tuple(j for j in range(1, k + 1) if mask >> (k - j) & 1)


def term_order(mask: int, k: int) -> tuple[int, tuple[int, ...]]:
    """Sort key for product terms: literal count, then variable indices."""
    names = variables(mask, k)
    return len(names), names


def format_term(mask: int, k: int) -> str:
    return "".join(f"x{j}" for j in variables(mask, k)) or "1"


class BooleanFunction(BaseModel):
    """Truth table of a k-variable switching function.

    ``table[i]`` is the value at minterm ``i`` where x1 is the most
    significant bit of ``i``.
    """

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1, le=MAX_VARIABLES, description="Number of variables")
    table: tuple[int, ...] = Field(description="Function value per minterm")

    @model_validator(mode="after")
    def _check_table(self) -> Self:
        if len(self.table) != 1 << self.k:
            raise ValueError(
                f"table has {len(self.table)} entries, expected {1 << self.k}"
            )
        if any(bit not in (0, 1) for bit in self.table):
            raise ValueError("table entries must be 0 or 1")
        return self

    @classmethod
    def zero(cls, k: int) -> BooleanFunction:
        return cls(k=k, table=(0,) * (1 << k))

    @classmethod
    def from_minterms(cls, k: int, minterms: Iterable[int]) -> BooleanFunction:
        """Build the function that is 1 exactly on ``minterms``."""
        ones = set(minterms)
        if any(not 0 <= m < 1 << k for m in ones):
            raise ValueError(f"minterm out of range for k={k}")
        return cls(k=k, table=tuple(int(i in ones) for i in range(1 << k)))

    @classmethod
    def from_int(cls, k: int, value: int) -> BooleanFunction:
        """Build from an integer whose bit ``i`` is the value at minterm ``i``."""
        if not 0 <= value < 1 << (1 << k):
            raise ValueError(f"value does not fit in {1 << k} bits")
        return cls(k=k, table=tuple(value >> i & 1 for i in range(1 << k)))

    def to_int(self) -> int:
        return sum(bit << i for i, bit in enumerate(self.table))

    def minterms(self) -> list[int]:
        return [i for i, bit in enumerate(self.table) if bit]

    @property
    def weight(self) -> int:
        return sum(self.table)

    def __xor__(self, other: BooleanFunction) -> BooleanFunction:
        if other.k != self.k:
            raise ValueError(f"cannot combine k={self.k} with k={other.k}")
        return BooleanFunction(
            k=self.k, table=tuple(a ^ b for a, b in zip(self.table, other.table))
        )


class PprmExpansion(BaseModel):
    """Positive-polarity Reed-Muller form: constant XOR product terms."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1, le=MAX_VARIABLES)
    constant: int = Field(default=0, ge=0, le=1, description="Coefficient c0")
    terms: tuple[int, ...] = Field(
        default=(), description="Product terms as k-bit masks, x1 in the MSB"
    )

    @model_validator(mode="after")
    def _check_terms(self) -> Self:
        if len(set(self.terms)) != len(self.terms):
            raise ValueError("duplicate product terms")
        for mask in self.terms:
            if not 0 < mask < 1 << self.k:
                raise ValueError(f"invalid product term mask {mask}")
        return self

    def ordered_terms(self) -> list[int]:
        """Terms by ascending literal count, then variable indices."""
        return sorted(self.terms, key=lambda mask: term_order(mask, self.k))

    @property
    def degree(self) -> int:
        return max((m.bit_count() for m in self.terms), default=0)

    def evaluate(self, assignment: str | int) -> int:
        x = minterm_index(assignment, self.k)
        value = self.constant
        for mask in self.terms:
            value ^= int(x & mask == mask)
        return value

    def __str__(self) -> str:
        parts = [format_term(m, self.k) for m in self.ordered_terms()]
        if self.constant:
            parts.insert(0, "1")
        return " ^ ".join(parts) or "0"


class LiteralKind(str, Enum):
    """Cube literal in PLA notation."""

    ABSENT = "-"
    NEGATIVE = "0"
    POSITIVE = "1"


class Cube(BaseModel):
    """Mixed-polarity product term, one literal per variable."""

    model_config = ConfigDict(frozen=True)

    literals: tuple[LiteralKind, ...] = Field(min_length=1, max_length=MAX_VARIABLES)

    @classmethod
    def parse(cls, text: str) -> Cube:
        """Parse PLA notation such as ``"1-0-"``."""
        return cls(literals=tuple(LiteralKind(ch) for ch in text))

    @classmethod
    def minterm(cls, index: int, k: int) -> Cube:
        return cls.parse(format(index, f"0{k}b"))

    @property
    def k(self) -> int:
        return len(self.literals)

    @property
    def literal_count(self) -> int:
        return sum(lit is not LiteralKind.ABSENT for lit in self.literals)

    def covers(self, index: int) -> bool:
        for j, lit in enumerate(self.literals):
            bit = index >> (self.k - 1 - j) & 1
            if lit is LiteralKind.POSITIVE and not bit:
                return False
            if lit is LiteralKind.NEGATIVE and bit:
                return False
        return True

    def mask(self) -> int:
        """Covered minterms as an integer, bit ``i`` for minterm ``i``."""
        return sum(1 << i for i in range(1 << self.k) if self.covers(i))

    def __str__(self) -> str:
        return "".join(lit.value for lit in self.literals)


class Esop(BaseModel):
    """Exclusive-or of mixed-polarity cubes."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1, le=MAX_VARIABLES)
    cubes: tuple[Cube, ...] = ()

    @model_validator(mode="after")
    def _check_widths(self) -> Self:
        if any(cube.k != self.k for cube in self.cubes):
            raise ValueError(f"all cubes must have {self.k} literals")
        return self

    @property
    def cost(self) -> int:
        return len(self.cubes)

    def to_function(self) -> BooleanFunction:
        value = 0
        for cube in self.cubes:
            value ^= cube.mask()
        return BooleanFunction.from_int(self.k, value)

    def __str__(self) -> str:
        return " ^ ".join(str(cube) for cube in self.cubes) or "0"


class AffineCoeffs(BaseModel):
    """Coefficients of A(x) = c0 ^ c1*x1 ^ ... ^ ck*xk."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1, le=MAX_VARIABLES)
    c0: int = Field(default=0, ge=0, le=1)
    c: int = Field(default=0, ge=0, description="Linear coefficients, c1 in the MSB")

    @field_validator("c")
    @classmethod
    def _fits(cls, value: int, info: ValidationInfo) -> int:
        k = info.data.get("k")
        if k is not None and value >= 1 << k:
            raise ValueError(f"coefficient mask {value} exceeds {k} bits")
        return value

    @property
    def encoding(self) -> int:
        """Deterministic rank used for tie-breaking: ``(c << 1) | c0``."""
        return self.c << 1 | self.c0

    def evaluate(self, assignment: str | int) -> int:
        x = minterm_index(assignment, self.k)
        return self.c0 ^ (x & self.c).bit_count() & 1

    def to_function(self) -> BooleanFunction:
        return BooleanFunction(
            k=self.k, table=tuple(self.evaluate(i) for i in range(1 << self.k))
        )

    def __str__(self) -> str:
        parts = [f"x{j}" for j in variables(self.c, self.k)]
        if self.c0:
            parts.insert(0, "1")
        return " ^ ".join(parts) or "0"


class SignVector(BaseModel):
    """Per-minterm phase signs, en(+1) = 0 and en(-1) = 1."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1, le=MAX_VARIABLES)
    signs: tuple[int, ...]

    @model_validator(mode="after")
    def _check_signs(self) -> Self:
        if len(self.signs) != 1 << self.k:
            raise ValueError(f"expected {1 << self.k} signs")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        return self

    def __str__(self) -> str:
        return " ".join("+" if s > 0 else "-" for s in self.signs)


class BistResidue(BaseModel):
    """Affine part, residue and ESOP realization chosen for a BIST stage."""

    model_config = ConfigDict(frozen=True)

    affine: AffineCoeffs
    bist: BooleanFunction
    esop: Esop
    exact: bool = Field(
        default=True, description="False when the k >= 5 PPRM fallback was used"
    )

    @property
    def cost(self) -> int:
        return self.esop.cost
