"""Powers of a generator x with x^2 - t*x + d = 0.

Every power reduces to ``x^m = P_m(t, d) * x - d * P_{m-1}(t, d)`` where

    P_0 = 0,  P_1 = 1,  P_{m+1} = t*P_m - d*P_{m-1}.

Sign conventions, since they are easy to get wrong:

==========================  ===============================
this module                 classical Lucas sequences
==========================  ===============================
relation x^2 - t*x + d = 0  x^2 - P*x + Q = 0
``P_m(t, d)``               ``U_m(P, Q)`` with P = t, Q = d
companion ``v_m``           ``V_m(P, Q)``
Fibonacci F_m               ``P_m(1, -1)``
Lucas L_m                   ``v_m`` at (1, -1)
==========================  ===============================

Three engines compute P_m and agree exactly over every ring:

``iterative``
    the defining recurrence, m - 1 steps.  Reference oracle.
``binomial``
    the closed sum  sum_i C(m-1-i, i) t^(m-1-2i) (-d)^i,  m >= 1 only.
``doubling``
    O(log m) index doubling on the pair (P_k, P_{k+1}).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Iterator

try:
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover
    _bigint = int

from .bivariate import BivariatePoly, D, T
from .ring import Ring, RingMismatchError, ring_of

__all__ = [
    "Engine",
    "QuadParams",
    "LinearForm",
    "CompanionPair",
    "p_m",
    "p_m_iterative",
    "p_m_binomial",
    "p_m_doubling",
    "companion",
    "companion_states",
    "x_power",
    "x_power_by_stepping",
    "p_m_symbolic",
    "binomial_sum_poly",
]


class Engine(str, enum.Enum):
    ITERATIVE = "iterative"
    BINOMIAL = "binomial"
    DOUBLING = "doubling"


@dataclass(frozen=True)
class QuadParams:
    """Coefficients of the relation x^2 - t*x + d = 0."""

    t: Any
    d: Any

    def __post_init__(self):
        if ring_of(self.t) != ring_of(self.d):
            raise RingMismatchError("t and d must belong to the same ring")

    @property
    def ring(self) -> Ring:
        return ring_of(self.t)

    @classmethod
    def of(cls, t: int, d: int, ring: Ring | None = None) -> "QuadParams":
        """Embed integer t, d into ``ring`` (integers by default)."""
        if ring is None:
            return cls(int(t), int(d))
        return cls(ring.from_int(t), ring.from_int(d))


@dataclass(frozen=True)
class LinearForm:
    """``a*x + b``."""

    a: Any
    b: Any


@dataclass(frozen=True)
class CompanionPair:
    u: Any
    v: Any
    dpow: Any


def _check_index(m: int) -> None:
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m} (negative powers need d invertible)")


def _iterate(params: QuadParams, m: int) -> tuple[Any, Any]:
    """Return (P_{m-1}, P_m) for m >= 1 by m - 1 recurrence steps."""
    t, d = params.t, params.d
    ring = params.ring
    prev, cur = ring.zero, ring.one
    for _ in range(m - 1):
        prev, cur = cur, t * cur - d * prev
    return prev, cur


def p_m_iterative(params: QuadParams, m: int) -> Any:
    _check_index(m)
    if m == 0:
        return params.ring.zero
    return _iterate(params, m)[1]


def _next_diagonal_binomial(c: int, n: int, i: int) -> int:
    """C(n-i-1, i+1) from c = C(n-i, i).

    Two exact steps through C(n-i-1, i) keep every divisor small, which is
    much cheaper than one division by (i+1)*(n-i) on a huge c.
    """
    c = c * (n - 2 * i) // (n - i)
    return c * (n - 2 * i - 1) // (i + 1)


def _binomial_sum(params: QuadParams, m: int) -> Any:
    # Horner in t^2 over i = 0..k, then one extra factor t when m - 1 is odd:
    #   sum_i C(n-i, i) t^(n-2i) (-d)^i = t^r * sum_i C(n-i, i) (t^2)^(k-i) (-d)^i
    ring = params.ring
    n = m - 1
    k, r = divmod(n, 2)
    t2 = params.t * params.t
    neg_d = -params.d
    acc = ring.zero
    coeff = _bigint(1)  # C(n - i, i); rings accept any Integral in from_int
    neg_d_pow = ring.one
    for i in range(k + 1):
        acc = acc * t2 + ring.from_int(coeff) * neg_d_pow
        if i < k:
            coeff = _next_diagonal_binomial(coeff, n, i)
            neg_d_pow = neg_d_pow * neg_d
    return acc * params.t if r else acc


def p_m_binomial(params: QuadParams, m: int) -> Any:
    if m < 1:
        raise ValueError(f"binomial engine needs m >= 1, got {m}")
    return _binomial_sum(params, m)


def _ladder(params: QuadParams, k_target: int, trace: list | None = None):
    """Return (P_k, P_{k+1}, d^k) for k = k_target >= 1 by index doubling.

    Doubling (k -> 2k) uses
        P_{2k}   = 2*P_k*P_{k+1} - t*P_k^2     (= P_k * v_k)
        P_{2k+1} = P_{k+1}^2 - d*P_k^2
    and an odd bit advances once with the recurrence.
    """
    t, d = params.t, params.d
    u0, u1, q = params.ring.one, t, d  # state at k = 1
    if trace is not None:
        trace.append((1, u0, u1, q))
    k = 1
    for bit in bin(k_target)[3:]:
        a = u0 * u0
        b = u1 * u1
        c = u0 * u1
        u0, u1 = c + c - t * a, b - d * a
        q = q * q
        k *= 2
        if bit == "1":
            u0, u1 = u1, t * u1 - d * u0
            q = q * d
            k += 1
        if trace is not None:
            trace.append((k, u0, u1, q))
    return u0, u1, q


def p_m_doubling(params: QuadParams, m: int) -> Any:
    _check_index(m)
    if m == 0:
        return params.ring.zero
    return _ladder(params, m)[0]


def _to_companion(params: QuadParams, u0, u1, q) -> CompanionPair:
    return CompanionPair(u=u0, v=u1 + u1 - params.t * u0, dpow=q)


def companion(params: QuadParams, m: int) -> CompanionPair:
    """(P_m, v_m, d^m), where v_0 = 2, v_1 = t and v follows the P recurrence."""
    _check_index(m)
    ring = params.ring
    if m == 0:
        return CompanionPair(ring.zero, ring.one + ring.one, ring.one)
    return _to_companion(params, *_ladder(params, m))


def companion_states(params: QuadParams, m: int) -> Iterator[tuple[int, CompanionPair]]:
    """Yield ``(k, state)`` for every index k visited while doubling up to m."""
    _check_index(m)
    if m == 0:
        yield 0, companion(params, 0)
        return
    trace: list = []
    _ladder(params, m, trace)
    for k, u0, u1, q in trace:
        yield k, _to_companion(params, u0, u1, q)


def p_m(params: QuadParams, m: int, engine: Engine | str = Engine.DOUBLING) -> Any:
    engine = Engine(engine)
    if engine is Engine.ITERATIVE:
        return p_m_iterative(params, m)
    if engine is Engine.BINOMIAL:
        return p_m_binomial(params, m)
    return p_m_doubling(params, m)


def x_power(params: QuadParams, m: int, engine: Engine | str = Engine.DOUBLING) -> LinearForm:
    """Reduce x^m to ``a*x + b``; x^0 is taken to be 1, i.e. (0, 1)."""
    engine = Engine(engine)
    _check_index(m)
    ring = params.ring
    if engine is Engine.BINOMIAL and m == 0:
        raise ValueError("binomial engine needs m >= 1, got 0")
    if m == 0:
        return LinearForm(ring.zero, ring.one)
    if engine is Engine.ITERATIVE:
        prev, cur = _iterate(params, m)
    elif engine is Engine.BINOMIAL:
        cur = _binomial_sum(params, m)
        prev = _binomial_sum(params, m - 1) if m > 1 else ring.zero
    elif m == 1:
        prev, cur = ring.zero, ring.one
    else:
        prev, cur, _ = _ladder(params, m - 1)
    return LinearForm(cur, -(params.d * prev))


def x_power_by_stepping(params: QuadParams, m: int) -> LinearForm:
    """(a_m, b_m) from a_{k+1} = t*a_k + b_k, b_{k+1} = -d*a_k, (a_1, b_1) = (1, 0)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    ring = params.ring
    t, neg_d = params.t, -params.d
    a, b = ring.one, ring.zero
    for _ in range(m - 1):
        a, b = t * a + b, neg_d * a
    return LinearForm(a, b)


def p_m_symbolic(m: int) -> BivariatePoly:
    """The universal polynomial P_m(T, D) in Z[T, D]."""
    return p_m_iterative(QuadParams(T, D), m)


def binomial_sum_poly(m: int) -> BivariatePoly:
    """P_m(T, D) assembled coefficient by coefficient from the closed sum."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    n = m - 1
    terms = {}
    for i in range(n // 2 + 1):
        c = _comb(n - i, i) * (-1) ** i
        terms[(n - 2 * i, i)] = c
    return BivariatePoly(terms)


def _comb(n: int, k: int) -> int:
    # Incremental C(n, j+1) = C(n, j) * (n - j) / (j + 1); each division is exact.
    c = 1
    for j in range(k):
        c = c * (n - j) // (j + 1)
    return c

