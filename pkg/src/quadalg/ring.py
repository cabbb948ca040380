"""Commutative rings with identity.

Ring *elements* use the ordinary Python operators (``+``, ``-``, unary ``-``,
``*``, ``==``).  A ring *instance* is a small descriptor object exposing
``zero``, ``one``, ``from_int``, ``parse`` and ``render``; generic code asks
:func:`ring_of` for it instead of branching on element types.

Four concrete instances are provided:

=================  ============================  ====================
instance           element type                  text form
=================  ============================  ====================
``INTEGERS``       :class:`int`                  ``-12``
``ModularRing(n)`` :class:`ModValue`             ``5 mod 7``
``RATIONALS``      :class:`fractions.Fraction`   ``-3/4``
``POLYNOMIALS``    :class:`~.bivariate.BivariatePoly`  ``T^2 - D``
=================  ============================  ====================

plus :class:`CountingRing`, a wrapper that counts the operations performed
in any of them.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Protocol, runtime_checkable

__all__ = [
    "ParseError",
    "RingMismatchError",
    "Ring",
    "IntegerRing",
    "INTEGERS",
    "ModValue",
    "ModularRing",
    "RationalRing",
    "RATIONALS",
    "OpCounter",
    "Counted",
    "CountingRing",
    "ring_of",
    "register_ring_type",
    "parse_int",
    "int_to_str",
]


class RingMismatchError(ValueError):
    """Operands belong to different ring instances."""


class ParseError(ValueError):
    """Malformed textual input.  ``position`` is a 0-based character offset."""

    def __init__(self, message: str, text: str, position: int = 0):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.message = message
        self.text = text
        self.position = position


@runtime_checkable
class Ring(Protocol):
    name: str

    @property
    def zero(self) -> Any: ...

    @property
    def one(self) -> Any: ...

    def from_int(self, n: int) -> Any: ...

    def parse(self, text: str) -> Any: ...

    def render(self, value: Any) -> str: ...


_INT_RE = re.compile(r"[ \t]*([+-]?)[ \t]*([0-9]+)[ \t]*")


def _normalize_minus(text: str) -> str:
    return text.replace("−", "-")


def parse_int(text: str) -> int:
    """Parse a signed decimal; accepts ASCII '-' or U+2212 as the sign."""
    s = _normalize_minus(text)
    m = _INT_RE.fullmatch(s)
    if m is None:
        pos = 0
        while pos < len(s) and s[pos] in " \t+-":
            pos += 1
        while pos < len(s) and s[pos] in "0123456789":
            pos += 1
        raise ParseError("expected a signed decimal integer", text, pos)
    value = int(m.group(2))
    return -value if m.group(1) == "-" else value


def int_to_str(value: int) -> str:
    """``str(value)`` without the interpreter's digit limit for huge ints."""
    try:
        return str(value)
    except ValueError:
        import sys

        old = sys.get_int_max_str_digits()
        sys.set_int_max_str_digits(0)
        try:
            return str(value)
        finally:
            sys.set_int_max_str_digits(old)


# -- integers ---------------------------------------------------------------


@dataclass(frozen=True)
class IntegerRing:
    name: str = "bigint"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return int(n)

    def parse(self, text: str) -> int:
        return parse_int(text)

    def render(self, value: int) -> str:
        return int_to_str(value)


INTEGERS = IntegerRing()


# -- residues mod n ---------------------------------------------------------


class ModValue:
    """Residue class ``residue mod modulus`` with ``0 <= residue < modulus``."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        object.__setattr__(self, "residue", residue % modulus)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("ModValue is immutable")

    def _check(self, other) -> int:
        n = self.modulus
        if other.modulus != n:
            raise RingMismatchError(f"moduli differ: {n} vs {other.modulus}")
        return n

    def __add__(self, other):
        if type(other) is not ModValue:
            return NotImplemented
        n = self._check(other)
        r = self.residue + other.residue
        return _mod(r - n if r >= n else r, n)

    def __sub__(self, other):
        if type(other) is not ModValue:
            return NotImplemented
        n = self._check(other)
        r = self.residue - other.residue
        return _mod(r + n if r < 0 else r, n)

    def __neg__(self):
        n = self.modulus
        return _mod((n - self.residue) if self.residue else 0, n)

    def __mul__(self, other):
        if type(other) is not ModValue:
            return NotImplemented
        n = self._check(other)
        return _mod(self.residue * other.residue % n, n)

    def __eq__(self, other):
        if type(other) is not ModValue:
            return NotImplemented
        return self.residue == other.residue and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __repr__(self):
        return f"ModValue({self.residue}, {self.modulus})"

    def __str__(self):
        return f"{self.residue} mod {self.modulus}"


_new = object.__new__
_set = object.__setattr__


def _mod(r: int, n: int) -> ModValue:
    # Trusted constructor: caller guarantees 0 <= r < n.
    v = _new(ModValue)
    _set(v, "residue", r)
    _set(v, "modulus", n)
    return v


_MOD_RE = re.compile(r"[ \t]*(.*?)[ \t]+mod[ \t]+([^ \t]+)[ \t]*")


@dataclass(frozen=True)
class ModularRing:
    modulus: int
    name: str = field(init=False)

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "name", f"mod({self.modulus})")

    @property
    def zero(self) -> ModValue:
        return _mod(0, self.modulus)

    @property
    def one(self) -> ModValue:
        return _mod(1, self.modulus)

    def from_int(self, n: int) -> ModValue:
        return _mod(int(n % self.modulus), self.modulus)

    def parse(self, text: str) -> ModValue:
        """Accept ``"r"`` or ``"r mod n"``; in the latter n must match."""
        m = _MOD_RE.fullmatch(text)
        if m is None:
            return self.from_int(parse_int(text))
        n = parse_int(m.group(2))
        if n != self.modulus:
            raise RingMismatchError(f"expected modulus {self.modulus}, got {n}")
        return self.from_int(parse_int(m.group(1)))

    def render(self, value: ModValue) -> str:
        return str(value)


# -- rationals --------------------------------------------------------------


@dataclass(frozen=True)
class RationalRing:
    """Exact rationals backed by :class:`fractions.Fraction` (always reduced)."""

    name: str = "rational"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(int(n))

    def parse(self, text: str) -> Fraction:
        s = _normalize_minus(text).strip()
        num, sep, den = s.partition("/")
        q = Fraction(parse_int(num))
        if sep:
            d = parse_int(den)
            if d == 0:
                raise ParseError("zero denominator", text, len(num) + 1)
            q /= d
        return q

    def render(self, value: Fraction) -> str:
        return f"{value.numerator}/{value.denominator}"


RATIONALS = RationalRing()


# -- operation counting -----------------------------------------------------


@dataclass
class OpCounter:
    multiplications: int = 0
    additions: int = 0

    def reset(self) -> None:
        self.multiplications = 0
        self.additions = 0


class Counted:
    """Element of a :class:`CountingRing`; wraps an element of the inner ring."""

    __slots__ = ("value", "ring")

    def __init__(self, value, ring: "CountingRing"):
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("Counted is immutable")

    def _other(self, other) -> Any:
        if type(other) is not Counted:
            raise TypeError(f"cannot combine Counted with {type(other).__name__}")
        if other.ring is not self.ring:
            raise RingMismatchError("values from different counting rings")
        return other.value

    def __add__(self, other):
        v = self._other(other)
        self.ring.counter.additions += 1
        return Counted(self.value + v, self.ring)

    def __sub__(self, other):
        v = self._other(other)
        self.ring.counter.additions += 1
        return Counted(self.value - v, self.ring)

    def __neg__(self):
        return Counted(-self.value, self.ring)

    def __mul__(self, other):
        v = self._other(other)
        self.ring.counter.multiplications += 1
        return Counted(self.value * v, self.ring)

    def __eq__(self, other):
        if type(other) is not Counted:
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"Counted({self.value!r})"


class CountingRing:
    """Wraps ``inner`` so that every ``+``, ``-`` and ``*`` is tallied.

    Negation and embedding of integers are free.  One counter belongs to one
    computation at a time; call ``counter.reset()`` between runs.
    """

    def __init__(self, inner: Ring, counter: OpCounter | None = None):
        self.inner = inner
        self.counter = counter if counter is not None else OpCounter()
        self.name = inner.name

    def wrap(self, value) -> Counted:
        return Counted(value, self)

    @property
    def zero(self) -> Counted:
        return Counted(self.inner.zero, self)

    @property
    def one(self) -> Counted:
        return Counted(self.inner.one, self)

    def from_int(self, n: int) -> Counted:
        return Counted(self.inner.from_int(n), self)

    def parse(self, text: str) -> Counted:
        return Counted(self.inner.parse(text), self)

    def render(self, value: Counted) -> str:
        return self.inner.render(value.value)


_RING_OF_TYPE: dict[type, Callable[[Any], Ring]] = {}


def register_ring_type(tp: type, lookup: Callable[[Any], Ring]) -> None:
    """Teach :func:`ring_of` which ring instance owns elements of ``tp``."""
    _RING_OF_TYPE[tp] = lookup


@lru_cache(maxsize=None)
def _modular_ring(n: int) -> ModularRing:
    return ModularRing(n)


register_ring_type(int, lambda v: INTEGERS)
register_ring_type(ModValue, lambda v: _modular_ring(v.modulus))
register_ring_type(Fraction, lambda v: RATIONALS)
register_ring_type(Counted, lambda v: v.ring)


def ring_of(value) -> Ring:
    """Return the ring instance an element belongs to."""
    try:
        return _RING_OF_TYPE[type(value)](value)
    except KeyError:
        raise TypeError(f"{type(value).__name__} is not an element of a supported ring") from None
