"""Fibonacci and Lucas numbers, the F_{nm} expansion, and Chebyshev U.

The Fibonacci matrix A = [[1, 1], [1, 0]] has trace 1 and determinant -1,
so F_n = P_n(1, -1) and L_n = tr(A^n) is the companion sequence v_n at the
same parameters.  Writing M = A^n, the (1, 2) entry of M^m gives

    F_{nm} = F_n * sum_i C(m-1-i, i) * L_n^(m-1-2i) * (-1)^(i(n+1)).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .mat2 import FIB_MATRIX, det, pow_naive, trace
from .quadratic import Engine, QuadParams, _next_diagonal_binomial, companion, p_m
from .report import Check
from .ring import INTEGERS, RATIONALS, Ring

__all__ = [
    "FibPair",
    "ChebUPoly",
    "fib",
    "fib_pair",
    "lucas",
    "fib_nm_terms",
    "fib_nm_identity",
    "fib_matrix_check",
    "chebyshev_u",
    "chebyshev_u_value",
    "verify_chebyshev_relation",
    "verify_chebyshev_numeric",
    "NUMERIC_REL_TOL",
]

NUMERIC_REL_TOL = 1e-9


def _fib_params(ring: Ring) -> QuadParams:
    return QuadParams(ring.one, -ring.one)


def _check_nonneg(name: str, n: int) -> None:
    if n < 0:
        raise ValueError(f"{name} must be >= 0, got {n}")


def fib(n: int, engine: Engine | str = Engine.DOUBLING, ring: Ring = INTEGERS) -> Any:
    _check_nonneg("n", n)
    if n == 0:
        return ring.zero
    return p_m(_fib_params(ring), n, engine)


@dataclass(frozen=True)
class FibPair:
    """(F_k, F_{k+1})."""

    f: int
    f_next: int

    def step(self) -> "FibPair":
        return FibPair(self.f_next, self.f + self.f_next)


def fib_pair(k: int) -> FibPair:
    _check_nonneg("k", k)
    c = companion(_fib_params(INTEGERS), k)
    # F_{k+1} = (v_k + F_k) / 2 at t = 1
    return FibPair(c.u, (c.v + c.u) // 2)


def lucas(n: int, ring: Ring = INTEGERS) -> Any:
    _check_nonneg("n", n)
    return companion(_fib_params(ring), n).v


def fib_nm_terms(n: int, m: int) -> list[int]:
    """The summands C(m-1-i, i) * L_n^(m-1-2i) * (-1)^(i(n+1)), i = 0..(m-1)//2."""
    _check_identity_args(n, m)
    ell = lucas(n)
    sign = -1 if n % 2 == 0 else 1
    terms = []
    for i in range((m - 1) // 2 + 1):
        terms.append(math.comb(m - 1 - i, i) * ell ** (m - 1 - 2 * i) * sign**i)
    return terms


def _check_identity_args(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise ValueError(f"the F_(nm) expansion needs n >= 1 and m >= 1, got n={n}, m={m}")


def fib_nm_identity(n: int, m: int) -> int:
    """F_{nm} from the binomial expansion in L_n (not from fib(n*m))."""
    _check_identity_args(n, m)
    ell = lucas(n)
    ell2 = ell * ell
    # (-1)^(i(n+1)) is 1 for odd n and (-1)^i for even n
    sign = -1 if n % 2 == 0 else 1
    top = m - 1
    k, r = divmod(top, 2)
    acc = 0
    coeff = 1  # C(top - i, i)
    for i in range(k + 1):
        acc = acc * ell2 + (coeff if sign == 1 or i % 2 == 0 else -coeff)
        if i < k:
            coeff = _next_diagonal_binomial(coeff, top, i)
    if r:
        acc *= ell
    return fib(n) * acc


def fib_matrix_check(n: int) -> list[Check]:
    """Check A^n = [[F_{n+1}, F_n], [F_n, F_{n-1}]], tr A^n = L_n, det A^n = (-1)^n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    power = pow_naive(FIB_MATRIX, n)
    expected_entries = (fib(n + 1), fib(n), fib(n), fib(n - 1))
    actual_entries = (power.e11, power.e12, power.e21, power.e22)
    sign = 1 if n % 2 == 0 else -1
    return [
        Check(
            f"A^{n} entries",
            "{},{};{},{}".format(*expected_entries),
            "{},{};{},{}".format(*actual_entries),
            expected_entries == actual_entries,
        ),
        Check(f"tr(A^{n}) = L_{n}", str(lucas(n)), str(trace(power)), trace(power) == lucas(n)),
        Check(f"det(A^{n}) = (-1)^{n}", str(sign), str(det(power)), det(power) == sign),
    ]


@dataclass(frozen=True)
class ChebUPoly:
    """Chebyshev polynomial of the second kind; ``coeffs[i]`` multiplies x^i."""

    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            body = "" if mag == 1 and i else str(mag)
            if i:
                body += "x" if i == 1 else f"x^{i}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts) or "0"


def chebyshev_u(k: int) -> ChebUPoly:
    """U_k from U_0 = 1, U_1 = 2x, U_{j+1} = 2x U_j - U_{j-1}."""
    _check_nonneg("k", k)
    prev: list[Fraction] = [Fraction(1)]
    if k == 0:
        return ChebUPoly(tuple(prev))
    cur: list[Fraction] = [Fraction(0), Fraction(2)]
    for _ in range(k - 1):
        nxt = [Fraction(0)] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return ChebUPoly(tuple(cur))


def chebyshev_u_value(k: int, x: float) -> float:
    """U_k(x) in floating point by the three-term recurrence."""
    _check_nonneg("k", k)
    prev, cur = 1.0, 2.0 * x
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def verify_chebyshev_relation(t: int, s: int, m: int) -> Check:
    """Exactly compare P_m(t, s^2) with s^(m-1) * U_{m-1}(t / (2s))."""
    if s == 0:
        raise ValueError("s must be nonzero (the argument t/(2s) divides by s)")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    lhs = p_m(QuadParams(RATIONALS.from_int(t), RATIONALS.from_int(s * s)), m)
    rhs = Fraction(s) ** (m - 1) * chebyshev_u(m - 1)(Fraction(t, 2 * s))
    return Check(
        f"P_{m}({t},{s * s}) = {s}^{m - 1} U_{m - 1}({t}/(2*{s}))",
        RATIONALS.render(rhs),
        RATIONALS.render(lhs),
        lhs == rhs,
    )


def _p_m_float(t: float, d: float, m: int) -> float:
    prev, cur = 0.0, 1.0
    for _ in range(m - 1):
        prev, cur = cur, t * cur - d * prev
    return cur


def verify_chebyshev_numeric(
    t: float, d: float, m: int, rel_tol: float = NUMERIC_REL_TOL
) -> Check:
    """Floating-point comparison of P_m(t, d) with d^((m-1)/2) U_{m-1}(t / (2 sqrt d)).

    The error is measured relative to max(|lhs|, |rhs|, d^((m-1)/2)); the last
    term keeps the ratio meaningful when both sides sit near a zero of U.
    """
    if d <= 0:
        raise ValueError(f"numeric mode needs d > 0, got {d}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    root = math.sqrt(d)
    scale = root ** (m - 1)
    lhs = _p_m_float(t, d, m)
    rhs = scale * chebyshev_u_value(m - 1, t / (2.0 * root))
    err = abs(lhs - rhs) / max(abs(lhs), abs(rhs), scale)
    return Check(
        f"P_{m}({t:g},{d:g}) ~ d^{(m - 1) / 2:g} U_{m - 1}", repr(rhs), repr(lhs), err <= rel_tol
    )
