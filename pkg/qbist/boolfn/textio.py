"""Truth-table text format.

A file holds a ``k=<n>`` line followed by either ``tt=<hex>`` (bit ``i`` of
the hex number is the value at minterm ``i``) or ``minterms=<i,j,...>``.
Blank lines and ``#`` comments are ignored.
"""

import re

from qbist.exceptions import TruthTableParseError

from .models import MAX_VARIABLES, BooleanFunction

_LINE = re.compile(r"^\s*(k|tt|minterms)\s*=\s*(.*?)\s*$")


def parse_truth_table(text: str) -> BooleanFunction:
    """Parse the truth-table text format.

    Raises:
        TruthTableParseError: With the 1-based line number of the problem.
    """
    k: int | None = None
    body: tuple[str, str, int] | None = None
    last_line = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _LINE.match(line)
        if match is None:
            raise TruthTableParseError(number, f"unrecognized line {raw.strip()!r}")
        key, value = match.groups()
        if key == "k":
            if k is not None:
                raise TruthTableParseError(number, "duplicate k line")
            if not value.isdigit() or not 1 <= int(value) <= MAX_VARIABLES:
                raise TruthTableParseError(
                    number, f"k must be an integer in 1..{MAX_VARIABLES}"
                )
            k = int(value)
        else:
            if body is not None:
                raise TruthTableParseError(number, "more than one table line")
            body = (key, value, number)

    if k is None:
        raise TruthTableParseError(max(last_line, 1), "missing k line")
    if body is None:
        raise TruthTableParseError(max(last_line, 1), "missing tt or minterms line")

    key, value, number = body
    if key == "tt":
        return _parse_hex(k, value, number)
    return _parse_minterms(k, value, number)


def _parse_hex(k: int, value: str, number: int) -> BooleanFunction:
    digits = value.lower().removeprefix("0x")
    if not digits or any(ch not in "0123456789abcdef" for ch in digits):
        raise TruthTableParseError(number, f"malformed hex {value!r}")
    bits = int(digits, 16)
    if bits >> (1 << k):
        raise TruthTableParseError(number, f"hex value exceeds {1 << k} table bits")
    return BooleanFunction.from_int(k, bits)


def _parse_minterms(k: int, value: str, number: int) -> BooleanFunction:
    items = [item.strip() for item in value.split(",") if item.strip()]
    minterms = []
    for item in items:
        if not item.isdigit():
            raise TruthTableParseError(number, f"malformed minterm {item!r}")
        index = int(item)
        if index >= 1 << k:
            raise TruthTableParseError(number, f"minterm {index} out of range")
        minterms.append(index)
    return BooleanFunction.from_minterms(k, minterms)


def format_truth_table(f: BooleanFunction) -> str:
    """Print ``f`` in the ``tt=`` form with the minimal fixed digit count."""
    digits = max(1, (1 << f.k) // 4)
    return f"k={f.k}\ntt={f.to_int():0{digits}x}\n"
