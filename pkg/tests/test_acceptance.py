"""Acceptance suite: eight end-to-end criteria, each with a runtime budget.

Every criterion prints exactly one line of the form

    PASS  [n] title (1.23 s / budget 5 s)

whether or not pytest is capturing output.  Run it alone with

    pytest tests/test_acceptance.py -v

or as a plain script: ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import math
import random
import sys
import time
from dataclasses import dataclass

import pytest

from quadalg.bivariate import BivariatePoly
from quadalg.fibapp import (
    fib,
    fib_matrix_check,
    fib_nm_identity,
    verify_chebyshev_numeric,
    verify_chebyshev_relation,
)
from quadalg.mat2 import FIB_MATRIX, Mat2, det, pow_ch, pow_naive, trace
from quadalg.quadratic import Engine, QuadParams, p_m, p_m_binomial, p_m_doubling, p_m_iterative, p_m_symbolic
from quadalg.ring import INTEGERS, CountingRing, ModularRing, int_to_str

P = 10**9 + 7
SEED = 1729


@dataclass
class Outcome:
    passed: bool
    detail: str


def _fib_list(n):
    out = [0, 1]
    while len(out) <= n:
        out.append(out[-1] + out[-2])
    return out


def _lucas_list(n):
    out = [2, 1]
    while len(out) <= n:
        out.append(out[-1] + out[-2])
    return out


# -- the criteria ------------------------------------------------------------


def symbolic_closed_form() -> Outcome:
    # Coefficients of the closed sum are computed here with math.comb, not by the package.
    for m in range(1, 65):
        closed = BivariatePoly(
            {(m - 1 - 2 * i, i): math.comb(m - 1 - i, i) * (-1) ** i for i in range((m - 1) // 2 + 1)}
        )
        if p_m_symbolic(m) != closed:
            return Outcome(False, f"m={m}: {p_m_symbolic(m)} != {closed}")
    return Outcome(True, "64 polynomials equal coefficient for coefficient")


def engine_equivalence() -> Outcome:
    rng = random.Random(SEED)
    for k in range(1000):
        params = QuadParams(rng.randint(-100, 100), rng.randint(-100, 100))
        m = rng.randint(1, 64)
        ref = p_m_iterative(params, m)
        if not ref == p_m_binomial(params, m) == p_m_doubling(params, m):
            return Outcome(False, f"bigint #{k} {params} m={m}")
    ring = ModularRing(P)
    for m in (10**3, 10**4, 10**5):
        params = QuadParams.of(rng.randrange(P), rng.randrange(P), ring)
        ref = p_m_iterative(params, m)
        if not ref == p_m_binomial(params, m) == p_m_doubling(params, m):
            return Outcome(False, f"mod {P} {params} m={m}")
    return Outcome(True, "1000 bigint cases and m in {1e3, 1e4, 1e5} mod 1e9+7 agree")


def cayley_hamilton() -> Outcome:
    rng = random.Random(SEED + 1)
    for k in range(500):
        m_ = Mat2(*(rng.randint(-20, 20) for _ in range(4)))
        power = Mat2.identity()
        for m in range(0, 201):
            if pow_ch(m_, m) != power:
                return Outcome(False, f"bigint matrix #{k} m={m}")
            power = power @ m_
    ring = ModularRing(P)
    for k in range(10):
        m_ = Mat2(*(ring.from_int(rng.randrange(P)) for _ in range(4)))
        for m in (10**5, rng.randint(1, 10**5)):
            ref = pow_naive(m_, m)
            for engine in (Engine.DOUBLING, Engine.ITERATIVE):
                if pow_ch(m_, m, engine) != ref:
                    return Outcome(False, f"mod matrix #{k} m={m} {engine.value}")
    return Outcome(True, "500 matrices for m<=200, 10 matrices mod 1e9+7 up to m=1e5")


def fibonacci_identity() -> Outcome:
    F = _fib_list(10**4)
    for n in range(1, 51):
        for m in range(1, 51):
            if fib_nm_identity(n, m) != F[n * m]:
                return Outcome(False, f"n={n} m={m}")
    rng = random.Random(SEED + 2)
    for _ in range(100):
        n = rng.randint(1, 100)
        m = rng.randint(1, 10**4 // n)
        if fib_nm_identity(n, m) != fib(n * m):
            return Outcome(False, f"random n={n} m={m}")
    return Outcome(True, "2500 grid pairs and 100 random pairs")


def matrix_facts() -> Outcome:
    F, L = _fib_list(202), _lucas_list(201)
    power = Mat2.identity()
    for n in range(0, 201):
        # independent check by repeated multiplication
        if (trace(power), det(power)) != (L[n], (-1) ** n):
            return Outcome(False, f"trace/det at n={n}")
        if n >= 1 and power != Mat2(F[n + 1], F[n], F[n], F[n - 1]):
            return Outcome(False, f"entries at n={n}")
        if n >= 1 and not all(c.passed for c in fib_matrix_check(n)):
            return Outcome(False, f"fib_matrix_check({n})")
        power = power @ FIB_MATRIX
    return Outcome(True, "n = 0..200")


def chebyshev_relation() -> Outcome:
    for s in (1, 2, 3):
        for t in range(-5, 6):
            for m in range(1, 33):
                if not verify_chebyshev_relation(t, s, m).passed:
                    return Outcome(False, f"exact t={t} s={s} m={m}")
    for i in range(10):
        for j in range(10):
            for k in range(10):
                t, d, m = -10 + 20 * i / 9, 0.5 + 9.5 * j / 9, 1 + round(39 * k / 9)
                c = verify_chebyshev_numeric(t, d, m)
                if not c.passed:
                    return Outcome(False, f"numeric t={t} d={d} m={m}: {c.actual}")
    return Outcome(True, "1056 exact cases and 1000 grid points within 1e-9")


def complexity() -> Outcome:
    parts = []
    for m in (2**8, 2**12, 2**16):
        counts = {}
        for engine in (Engine.DOUBLING, Engine.ITERATIVE):
            ring = CountingRing(INTEGERS)
            p_m(QuadParams(ring.from_int(1), ring.from_int(-1)), m, engine)
            counts[engine] = ring.counter.multiplications
        bound = 10 * math.log2(m + 2)
        if counts[Engine.DOUBLING] > bound or counts[Engine.ITERATIVE] < m - 1:
            return Outcome(False, f"m={m}: doubling {counts[Engine.DOUBLING]} (bound {bound:.1f}), "
                                  f"iterative {counts[Engine.ITERATIVE]}")
        parts.append(f"m=2^{m.bit_length() - 1}: {counts[Engine.DOUBLING]} vs {counts[Engine.ITERATIVE]}")
    return Outcome(True, "; ".join(parts))


def scale_demo() -> Outcome:
    start = time.perf_counter()
    value = fib(10**6)
    digits = int_to_str(value)
    elapsed = time.perf_counter() - start
    if elapsed >= 5:
        return Outcome(False, f"fib(10^6) took {elapsed:.2f} s")
    residue = fib(10**6, Engine.ITERATIVE, ModularRing(10**9)).residue
    if digits[-9:] != f"{residue:09d}":
        return Outcome(False, f"last digits {digits[-9:]} vs {residue:09d}")
    return Outcome(True, f"{len(digits)} digits in {elapsed:.2f} s, last 9 digits {digits[-9:]}")


CRITERIA = [
    (1, "symbolic recurrence equals closed sum, m<=64", symbolic_closed_form, 1),
    (2, "three engines agree", engine_equivalence, 5),
    (3, "Cayley-Hamilton power equals naive power", cayley_hamilton, 10),
    (4, "F_nm expansion equals fib(n*m)", fibonacci_identity, 5),
    (5, "Fibonacci matrix trace, determinant, entries", matrix_facts, 1),
    (6, "Chebyshev relation exact and numeric", chebyshev_relation, 2),
    (7, "multiplication counts", complexity, 1),
    (8, "fib(10^6) at scale", scale_demo, 10),
]


def evaluate(number, title, fn, budget):
    start = time.perf_counter()
    outcome = fn()
    elapsed = time.perf_counter() - start
    ok = outcome.passed and elapsed < budget
    status = "PASS" if ok else "FAIL"
    line = f"{status}  [{number}] {title} ({elapsed:.2f} s / budget {budget} s): {outcome.detail}"
    return ok, outcome, elapsed, line


@pytest.mark.parametrize("number, title, fn, budget", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_acceptance(number, title, fn, budget, capsys):
    ok, outcome, elapsed, line = evaluate(number, title, fn, budget)
    with capsys.disabled():
        print("\n" + line)
    assert outcome.passed, outcome.detail
    assert elapsed < budget, f"took {elapsed:.2f} s, budget {budget} s"


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, _, _, line in results:
        print(line)
    sys.exit(0 if all(r[0] for r in results) else 1)
