"""2x2 matrices over a commutative ring.

``pow_naive`` is plain square-and-multiply and serves as the oracle for
``pow_ch``, which reduces M^m to ``a*M + b*I`` with (a, b) taken from
:func:`quadalg.quadratic.x_power` at t = tr M, d = det M (Cayley-Hamilton
gives M^2 - tr(M)*M + det(M)*I = 0).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .quadratic import Engine, QuadParams, x_power
from .ring import INTEGERS, ParseError, Ring, RingMismatchError, ring_of

__all__ = [
    "Mat2",
    "FIB_MATRIX",
    "trace",
    "det",
    "mat_mul",
    "pow_naive",
    "pow_ch",
    "parse_matrix",
    "render_matrix",
]


@dataclass(frozen=True)
class Mat2:
    e11: Any
    e12: Any
    e21: Any
    e22: Any

    def __post_init__(self):
        ring = ring_of(self.e11)
        for e in (self.e12, self.e21, self.e22):
            if ring_of(e) != ring:
                raise RingMismatchError("matrix entries come from different rings")

    @property
    def ring(self) -> Ring:
        return ring_of(self.e11)

    @classmethod
    def identity(cls, ring: Ring = INTEGERS) -> "Mat2":
        return cls(ring.one, ring.zero, ring.zero, ring.one)

    @classmethod
    def of(cls, rows, ring: Ring = INTEGERS) -> "Mat2":
        """Build from integer rows ``[[a, b], [c, d]]`` embedded in ``ring``."""
        (a, b), (c, d) = rows
        f = ring.from_int
        return cls(f(a), f(b), f(c), f(d))

    def rows(self) -> tuple[tuple[Any, Any], tuple[Any, Any]]:
        return ((self.e11, self.e12), (self.e21, self.e22))

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def __str__(self):
        return render_matrix(self)


FIB_MATRIX = Mat2(1, 1, 1, 0)


def trace(m: Mat2) -> Any:
    return m.e11 + m.e22


def det(m: Mat2) -> Any:
    return m.e11 * m.e22 - m.e12 * m.e21


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    return Mat2(
        x.e11 * y.e11 + x.e12 * y.e21,
        x.e11 * y.e12 + x.e12 * y.e22,
        x.e21 * y.e11 + x.e22 * y.e21,
        x.e21 * y.e12 + x.e22 * y.e22,
    )


def pow_naive(m: Mat2, n: int) -> Mat2:
    if n < 0:
        raise ValueError(f"exponent must be >= 0, got {n}")
    result = Mat2.identity(m.ring)
    base = m
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def pow_ch(m: Mat2, n: int, engine: Engine | str = Engine.DOUBLING) -> Mat2:
    """M^n as P_n(t, d)*M - d*P_{n-1}(t, d)*I with t = tr M, d = det M."""
    form = x_power(QuadParams(trace(m), det(m)), n, engine)
    a, b = form.a, form.b
    return Mat2(a * m.e11 + b, a * m.e12, a * m.e21, a * m.e22 + b)


def parse_matrix(text: str, ring: Ring = INTEGERS) -> Mat2:
    """Parse ``"a,b;c,d"`` (row-major, ';' between rows, ',' between columns)."""
    rows = text.split(";")
    if len(rows) != 2:
        pos = len(text) if len(rows) < 2 else len(rows[0]) + len(rows[1]) + 1
        raise ParseError(f"expected 2 rows separated by ';', found {len(rows)}", text, pos)
    entries = []
    offset = 0
    for r, row in enumerate(rows):
        cells = row.split(",")
        if len(cells) != 2:
            pos = offset + (len(row) if len(cells) < 2 else len(cells[0]) + len(cells[1]) + 1)
            raise ParseError(
                f"row {r + 1}: expected 2 entries separated by ',', found {len(cells)}", text, pos
            )
        col_offset = offset
        for c, cell in enumerate(cells):
            try:
                entries.append(ring.parse(cell))
            except ParseError as exc:
                raise ParseError(
                    f"row {r + 1}, column {c + 1}: {exc.message}",
                    text,
                    col_offset + exc.position,
                ) from None
            col_offset += len(cell) + 1
        offset += len(row) + 1
    return Mat2(*entries)


def render_matrix(m: Mat2) -> str:
    render = m.ring.render
    return f"{render(m.e11)},{render(m.e12)};{render(m.e21)},{render(m.e22)}"
