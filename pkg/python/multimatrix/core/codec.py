"""Text codec for multimatrix instances.

Format (UTF-8, whitespace-separated tokens)::

    mm <n> <k> sparse|dense      binary multimatrix
    cmm <n> <k> sparse|dense     cost multimatrix

Sparse bodies list one `<c1> ... <cn> <v>` record per line (1-based, unlisted
cells are 0). Dense bodies hold exactly k^n values in lexicographic order with
the last coordinate varying fastest. Lines starting with `#` are comments.
"""

from __future__ import annotations

import hashlib
from collections.abc import Iterator
from fractions import Fraction

import numpy as np

from multimatrix.core.matrix import BinaryMultimatrix, CostMultimatrix
from multimatrix.core.shape import Shape
from multimatrix.exceptions import InputError, ParseError

Multimatrix = BinaryMultimatrix | CostMultimatrix

MODES = ("sparse", "dense")


def _lines(text: bytes | str) -> Iterator[tuple[int, list[str]]]:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(1, f"not valid UTF-8: {e}") from e
    for number, line in enumerate(text.splitlines(), 1):
        tokens = line.split()
        if tokens and not tokens[0].startswith("#"):
            yield number, tokens


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line, f"{what} {token!r} is not an integer") from None


def _cost(token: str, line: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(line, f"cost {token!r} is not a decimal or p/q rational") from None


def _binary(token: str, line: int) -> bool:
    if token not in ("0", "1"):
        raise ParseError(line, f"value {token!r} is not 0 or 1")
    return token == "1"


def parse(text: bytes | str) -> Multimatrix:
    """Parse a `mm` or `cmm` instance.

    Raises:
        ParseError: Malformed header, wrong token count, out-of-range or duplicate
            coordinate, or a non-binary value in `mm` mode. Carries the line number.
    """
    lines = _lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise ParseError(1, "missing header") from None

    if len(header) != 4 or header[0] not in ("mm", "cmm") or header[3] not in MODES:
        raise ParseError(number, "header must be 'mm|cmm <n> <k> sparse|dense'")
    kind, mode = header[0], header[3]
    try:
        shape = Shape(_int(header[1], number, "n"), _int(header[2], number, "k"))
    except InputError as e:
        raise ParseError(number, str(e)) from None

    if kind == "mm":
        array = np.zeros(shape.dims, dtype=bool)
        read = _binary
    else:
        array = np.full(shape.dims, Fraction(0), dtype=object)
        read = _cost

    if mode == "sparse":
        seen: set[tuple[int, ...]] = set()
        for number, tokens in lines:
            if len(tokens) != shape.n + 1:
                raise ParseError(number, f"expected {shape.n + 1} tokens, got {len(tokens)}")
            coord = tuple(_int(t, number, "coordinate") for t in tokens[:-1])
            if any(not 1 <= i <= shape.k for i in coord):
                raise ParseError(number, f"coordinate {coord} out of range 1..{shape.k}")
            if coord in seen:
                raise ParseError(number, f"duplicate coordinate {coord}")
            seen.add(coord)
            array[shape.index(coord)] = read(tokens[-1], number)
    else:
        flat = array.reshape(-1)
        position = 0
        last = number
        for number, tokens in lines:
            last = number
            if position + len(tokens) > shape.cells:
                raise ParseError(number, f"more than {shape.cells} values")
            for token in tokens:
                flat[position] = read(token, number)
                position += 1
        if position != shape.cells:
            raise ParseError(last, f"expected {shape.cells} values, got {position}")

    if kind == "mm":
        return BinaryMultimatrix(shape, array)
    return CostMultimatrix(shape, array)


def _format(value: object) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    return str(value)


def serialize(m: Multimatrix) -> bytes:
    """Canonical text form: sparse when fewer than half the cells are nonzero, else dense."""
    shape = m.shape
    kind = "mm" if isinstance(m, BinaryMultimatrix) else "cmm"
    nonzero = [coord for coord in shape.coords() if m.array[shape.index(coord)] != 0]
    sparse = 2 * len(nonzero) < shape.cells

    out = [f"{kind} {shape.n} {shape.k} {'sparse' if sparse else 'dense'}"]
    if sparse:
        for coord in nonzero:
            value = _format(m.array[shape.index(coord)])
            out.append(" ".join(map(str, coord)) + " " + value)
    else:
        flat = [_format(v) for v in m.array.reshape(-1)]
        for start in range(0, len(flat), shape.k):
            out.append(" ".join(flat[start : start + shape.k]))
    return ("\n".join(out) + "\n").encode("utf-8")


def digest(data: Multimatrix | bytes) -> str:
    """Content hash of the canonical serialization."""
    if not isinstance(data, bytes):
        data = serialize(data)
    return "sha256:" + hashlib.sha256(data).hexdigest()
