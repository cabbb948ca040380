"""Sparse polynomials in Z[T, D]."""
from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .ring import ParseError, RingMismatchError, register_ring_type, ring_of

__all__ = ["BivariatePoly", "PolynomialRing", "POLYNOMIALS", "T", "D", "poly_eval"]


def _graded_lex(key: tuple[int, int]) -> tuple[int, int]:
    i, j = key
    return (-(i + j), -i)


class BivariatePoly:
    """Element of Z[T, D] stored as ``{(i, j): c}`` for the monomial c*T^i*D^j.

    Zero coefficients are never stored, so the zero polynomial is the empty
    map and equality of canonical forms is plain dict equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in {(i, j)}")
            if c:
                clean[(int(i), int(j))] = int(c)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePoly is immutable")

    @classmethod
    def _trusted(cls, terms: dict) -> "BivariatePoly":
        p = object.__new__(cls)
        object.__setattr__(p, "_terms", terms)
        return p

    @classmethod
    def constant(cls, c: int) -> "BivariatePoly":
        return cls._trusted({(0, 0): c} if c else {})

    @property
    def terms(self) -> Mapping[tuple[int, int], int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def _combine(self, other, sign: int) -> "BivariatePoly":
        if type(other) is not BivariatePoly:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + sign * c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BivariatePoly._trusted(out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return BivariatePoly._trusted({k: -c for k, c in self._terms.items()})

    def __mul__(self, other):
        if type(other) is not BivariatePoly:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariatePoly._trusted({k: c for k, c in out.items() if c})

    def __eq__(self, other):
        if type(other) is not BivariatePoly:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"BivariatePoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms, key=_graded_lex):
            c = self._terms[k]
            factors = []
            if abs(c) != 1 or k == (0, 0):
                factors.append(str(abs(c)))
            for sym, e in zip("TD", k):
                if e == 1:
                    factors.append(sym)
                elif e > 1:
                    factors.append(f"{sym}^{e}")
            body = "*".join(factors)
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "BivariatePoly":
        """Inverse of ``str``: sums of ``c*T^i*D^j`` terms, any order."""
        s = text.replace("−", "-")
        compact = re.sub(r"[ \t]+", "", s)
        if not compact:
            raise ParseError("empty polynomial", text, 0)
        out = cls()
        for m in re.finditer(r"([+-]?)([^+-]*)", compact):
            if m.start() == len(compact):
                break
            sign, body = m.groups()
            if not body:
                raise ParseError("empty term", text, _orig_pos(s, m.start()))
            coeff, i, j = -1 if sign == "-" else 1, 0, 0
            offset = m.start(2)
            for factor in body.split("*"):
                fm = re.fullmatch(r"([TD])(?:\^([0-9]+))?|([0-9]+)", factor)
                if fm is None:
                    raise ParseError(f"bad factor {factor!r}", text, _orig_pos(s, offset))
                if fm.group(3) is not None:
                    coeff *= int(fm.group(3))
                elif fm.group(1) == "T":
                    i += int(fm.group(2) or 1)
                else:
                    j += int(fm.group(2) or 1)
                offset += len(factor) + 1
            out = out + cls({(i, j): coeff})
        return out


def _orig_pos(text: str, compact_pos: int) -> int:
    # Map an offset in the whitespace-stripped string back to ``text``.
    seen = 0
    for idx, ch in enumerate(text):
        if ch in " \t":
            continue
        if seen == compact_pos:
            return idx
        seen += 1
    return len(text)


T = BivariatePoly({(1, 0): 1})
D = BivariatePoly({(0, 1): 1})


@dataclass(frozen=True)
class PolynomialRing:
    name: str = "poly"

    @property
    def zero(self) -> BivariatePoly:
        return BivariatePoly()

    @property
    def one(self) -> BivariatePoly:
        return BivariatePoly.constant(1)

    def from_int(self, n: int) -> BivariatePoly:
        return BivariatePoly.constant(int(n))

    def parse(self, text: str) -> BivariatePoly:
        return BivariatePoly.parse(text)

    def render(self, value: BivariatePoly) -> str:
        return str(value)


POLYNOMIALS = PolynomialRing()
register_ring_type(BivariatePoly, lambda v: POLYNOMIALS)


def poly_eval(p: BivariatePoly, t, d):
    """Evaluate ``p`` at ``T = t``, ``D = d`` in the ring of ``t`` and ``d``."""
    ring = ring_of(t)
    if ring_of(d) != ring:
        raise RingMismatchError("t and d must come from the same ring")
    total = ring.zero
    if p.is_zero():
        return total
    max_i = max(i for i, _ in p.terms)
    max_j = max(j for _, j in p.terms)
    t_pows = [ring.one]
    for _ in range(max_i):
        t_pows.append(t_pows[-1] * t)
    d_pows = [ring.one]
    for _ in range(max_j):
        d_pows.append(d_pows[-1] * d)
    for (i, j), c in p.terms.items():
        total = total + ring.from_int(c) * t_pows[i] * d_pows[j]
    return total
