"""Invariant sweeps behind ``quadalg verify``.

Each scope returns a list of :class:`~quadalg.report.Check`.  Large sweeps
are folded into a single check whose ``actual`` names the first failing
case.  Random cases come from a fixed seed, so reruns are identical.

Modules are referenced through their namespace (``quadratic.p_m_binomial``
rather than a bare import) so a patched function is what gets verified.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from . import bivariate, fibapp, mat2, quadratic
from .quadratic import Engine, QuadParams
from .report import Check
from .ring import INTEGERS, RATIONALS, CountingRing, ModularRing, Ring

SCOPES = ("ring", "engines", "matrix", "fibonacci", "chebyshev", "symbolic")
BIG_PRIME = 10**9 + 7
SEED = 20260415

Case = tuple[str, object, object]


def sweep(name: str, cases: Iterable[Case]) -> Check:
    """Fold ``(label, expected, actual)`` cases into one check."""
    total = 0
    failed: list[str] = []
    for label, expected, actual in cases:
        total += 1
        if expected != actual:
            failed.append(label)
    agree = total - len(failed)
    actual = f"{agree}/{total} agree"
    if failed:
        actual += f"; first failure {failed[0]}"
    return Check(name, f"{total}/{total} agree", actual, not failed and total > 0)


def _random_params(rng: random.Random, ring: Ring, lo: int = -100, hi: int = 100) -> QuadParams:
    return QuadParams.of(rng.randint(lo, hi), rng.randint(lo, hi), ring)


def _random_matrix(rng: random.Random, ring: Ring = INTEGERS, lo: int = -9, hi: int = 9) -> mat2.Mat2:
    return mat2.Mat2.of([[rng.randint(lo, hi) for _ in range(2)] for _ in range(2)], ring)


def _engine_cases(params: QuadParams, ms: Iterable[int], tag: str) -> Iterator[Case]:
    for m in ms:
        ref = quadratic.p_m_iterative(params, m)
        yield f"{tag} m={m} binomial", ref, quadratic.p_m_binomial(params, m)
        yield f"{tag} m={m} doubling", ref, quadratic.p_m_doubling(params, m)


# -- ring -------------------------------------------------------------------


def _ring_samplers(rng: random.Random) -> dict[str, Callable[[], object]]:
    mod = ModularRing(97)

    def poly():
        return bivariate.BivariatePoly(
            {(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-5, 5) for _ in range(3)}
        )

    return {
        "bigint": lambda: rng.randint(-(10**30), 10**30),
        "mod(97)": lambda: mod.from_int(rng.randint(0, 96)),
        "rational": lambda: Fraction(rng.randint(-50, 50), rng.randint(1, 50)),
        "poly": poly,
    }


def _random_tree(rng: random.Random, depth: int):
    if depth == 0 or rng.random() < 0.2:
        return rng.randint(-(10**6), 10**6)
    op = rng.choice("+-*n")
    if op == "n":
        return ("n", _random_tree(rng, depth - 1))
    return (op, _random_tree(rng, depth - 1), _random_tree(rng, depth - 1))


def eval_tree(tree, leaf: Callable[[int], object]):
    if isinstance(tree, int):
        return leaf(tree)
    if tree[0] == "n":
        return -eval_tree(tree[1], leaf)
    a, b = eval_tree(tree[1], leaf), eval_tree(tree[2], leaf)
    if tree[0] == "+":
        return a + b
    if tree[0] == "-":
        return a - b
    return a * b


def check_ring(samples: int = 200) -> list[Check]:
    rng = random.Random(SEED)
    rings: dict[str, Ring] = {
        "bigint": INTEGERS,
        "mod(97)": ModularRing(97),
        "rational": RATIONALS,
        "poly": bivariate.POLYNOMIALS,
    }
    checks = []
    for name, sample in _ring_samplers(rng).items():
        ring = rings[name]

        def cases() -> Iterator[Case]:
            for k in range(samples):
                a, b, c = sample(), sample(), sample()
                yield f"{name}#{k} add assoc", (a + b) + c, a + (b + c)
                yield f"{name}#{k} mul assoc", (a * b) * c, a * (b * c)
                yield f"{name}#{k} add comm", a + b, b + a
                yield f"{name}#{k} mul comm", a * b, b * a
                yield f"{name}#{k} distrib", a * (b + c), a * b + a * c
                yield f"{name}#{k} mul unit", a * ring.one, a
                yield f"{name}#{k} add unit", a + ring.zero, a
                yield f"{name}#{k} inverse", a + (-a), ring.zero
                yield f"{name}#{k} reparse", ring.parse(ring.render(a)), a

        checks.append(sweep(f"ring axioms over {name}", cases()))

    def mod_cases() -> Iterator[Case]:
        for k in range(samples):
            n = rng.randint(2, 10**12)
            ring = ModularRing(n)
            tree = _random_tree(rng, 8)
            expected = ring.from_int(eval_tree(tree, int))
            yield f"tree#{k} mod {n}", expected, eval_tree(tree, ring.from_int)

    checks.append(sweep("mod(n) agrees with reduced bigint on expression trees", mod_cases()))

    def eval_cases() -> Iterator[Case]:
        sample_poly = _ring_samplers(rng)["poly"]
        for k in range(samples):
            p, q = sample_poly(), sample_poly()
            t, d = rng.randint(-20, 20), rng.randint(-20, 20)
            yield (
                f"eval#{k}",
                bivariate.poly_eval(p, t, d) * bivariate.poly_eval(q, t, d),
                bivariate.poly_eval(p * q, t, d),
            )
            yield (
                f"eval#{k} sum",
                bivariate.poly_eval(p, t, d) + bivariate.poly_eval(q, t, d),
                bivariate.poly_eval(p + q, t, d),
            )

    checks.append(sweep("poly_eval is a ring homomorphism", eval_cases()))
    return checks


# -- engines ----------------------------------------------------------------


def _op_counts(engine: Engine, m: int) -> int:
    counting = CountingRing(INTEGERS)
    params = QuadParams(counting.wrap(1), counting.wrap(-1))
    counting.counter.reset()
    quadratic.p_m(params, m, engine)
    return counting.counter.multiplications


def check_complexity(ms: Iterable[int] = (2**8, 2**12, 2**16)) -> list[Check]:
    checks = []
    for m in ms:
        bound = 10 * math.log2(m + 2)
        dbl = _op_counts(Engine.DOUBLING, m)
        it = _op_counts(Engine.ITERATIVE, m)
        checks.append(
            Check(f"doubling multiplications at m={m}", f"<= {bound:.2f}", str(dbl), dbl <= bound)
        )
        checks.append(
            Check(f"iterative multiplications at m={m}", f">= {m - 1}", str(it), it >= m - 1)
        )
    return checks


def check_engines(n_params: int = 1000) -> list[Check]:
    rng = random.Random(SEED + 1)
    checks = []

    def bigint_cases() -> Iterator[Case]:
        for k in range(n_params):
            params = _random_params(rng, INTEGERS)
            yield from _engine_cases(params, range(1, 65), f"#{k} (t,d)=({params.t},{params.d})")
            yield f"#{k} m=0 doubling", 0, quadratic.p_m_doubling(params, 0)

    checks.append(sweep(f"engines agree over bigint, {n_params} (t,d), m<=64", bigint_cases()))

    big = ModularRing(BIG_PRIME)

    def mod_cases() -> Iterator[Case]:
        for k in range(3):
            params = _random_params(rng, big, -(10**9), 10**9)
            ms = [10**3, 10**4, 10**5, rng.randint(2, 10**5)]
            yield from _engine_cases(params, ms, f"mod#{k}")

    checks.append(sweep(f"engines agree over mod({BIG_PRIME}), m up to 1e5", mod_cases()))

    def large_bigint_cases() -> Iterator[Case]:
        params = _random_params(rng, INTEGERS, -3, 3)
        yield from _engine_cases(params, [rng.randint(5 * 10**4, 10**5)], "bigint-large")

    checks.append(sweep("engines agree over bigint at random m <= 1e5", large_bigint_cases()))

    def stepping_cases() -> Iterator[Case]:
        for ring in (INTEGERS, ModularRing(BIG_PRIME)):
            for k in range(3):
                params = _random_params(rng, ring)
                for m in range(1, 513):
                    ref = quadratic.x_power_by_stepping(params, m)
                    for engine in Engine:
                        yield f"{ring.name}#{k} m={m} {engine.value}", ref, quadratic.x_power(
                            params, m, engine
                        )

    checks.append(sweep("x_power agrees with coefficient stepping, m<=512", stepping_cases()))

    def soundness_cases() -> Iterator[Case]:
        for k in range(20):
            m_ = _random_matrix(rng)
            params = QuadParams(mat2.trace(m_), mat2.det(m_))
            power = mat2.Mat2.identity()
            for m in range(0, 201):
                form = quadratic.x_power(params, m)
                combo = mat2.Mat2(
                    form.a * m_.e11 + form.b, form.a * m_.e12, form.a * m_.e21, form.a * m_.e22 + form.b
                )
                yield f"M#{k} m={m}", power, combo
                power = mat2.mat_mul(power, m_)

    checks.append(sweep("x^m reduction reproduces naive M^m, m<=200", soundness_cases()))

    def companion_cases() -> Iterator[Case]:
        for k in range(30):
            params = _random_params(rng, INTEGERS)
            t, d = params.t, params.d
            disc = t * t - 4 * d
            m = rng.randint(1, 1000)
            states = dict(quadratic.companion_states(params, m))
            for idx, st in states.items():
                yield f"#{k} k={idx} identity", 4 * d**idx, st.v * st.v - disc * st.u * st.u
                yield f"#{k} k={idx} u", quadratic.p_m_iterative(params, idx), st.u
                yield f"#{k} k={idx} dpow", d**idx, st.dpow
                half = states.get(idx // 2)
                if idx % 2 == 0 and half is not None:
                    yield f"#{k} k={idx} v doubling", half.v * half.v - 2 * half.dpow, st.v
                    yield f"#{k} k={idx} u doubling", half.u * half.v, st.u

    checks.append(sweep("companion state invariants, m<=1000", companion_cases()))
    checks.extend(check_complexity())
    return checks


# -- matrices ---------------------------------------------------------------


def pow_ch_cases(rng: random.Random, n_matrices: int, max_m: int, engines=(Engine.DOUBLING,)):
    for k in range(n_matrices):
        m_ = _random_matrix(rng)
        for m in range(0, max_m + 1):
            ref = mat2.pow_naive(m_, m)
            for engine in engines:
                if engine is Engine.BINOMIAL and m == 0:
                    continue
                yield f"M#{k}={m_} m={m} {engine.value}", ref, mat2.pow_ch(m_, m, engine)


def check_matrix(n_matrices: int = 500) -> list[Check]:
    rng = random.Random(SEED + 2)
    checks = []

    def ch_base() -> Iterator[Case]:
        for k in range(200):
            m_ = _random_matrix(rng, lo=-1000, hi=1000)
            t, d = mat2.trace(m_), mat2.det(m_)
            sq = mat2.mat_mul(m_, m_)
            lhs = mat2.Mat2(
                sq.e11 - t * m_.e11 + d, sq.e12 - t * m_.e12, sq.e21 - t * m_.e21, sq.e22 - t * m_.e22 + d
            )
            yield f"M#{k}", mat2.Mat2(0, 0, 0, 0), lhs

    checks.append(sweep("M^2 - tr(M) M + det(M) I = 0", ch_base()))
    checks.append(
        sweep(
            f"pow_ch = pow_naive, {n_matrices} matrices, m<=200",
            pow_ch_cases(rng, n_matrices, 200),
        )
    )
    checks.append(
        sweep("pow_ch = pow_naive for every engine, m<=200", pow_ch_cases(rng, 30, 200, tuple(Engine)))
    )

    def mod_cases() -> Iterator[Case]:
        for p in (2, 7, BIG_PRIME):
            ring = ModularRing(p)
            for k in range(10):
                m_ = _random_matrix(rng, ring)
                for m in (10**5, rng.randint(1, 10**5), rng.randint(1, 1000)):
                    ref = mat2.pow_naive(m_, m)
                    # the closed sum costs ~1 s per call near m = 1e5, so sample it
                    engines = tuple(Engine) if k == 0 or m <= 1000 else (Engine.ITERATIVE, Engine.DOUBLING)
                    for engine in engines:
                        yield f"mod {p} M#{k} m={m} {engine.value}", ref, mat2.pow_ch(m_, m, engine)

    checks.append(sweep("pow_ch = pow_naive over mod 2, 7, 1e9+7, m<=1e5", mod_cases()))

    def similarity() -> Iterator[Case]:
        for k in range(50):
            m_ = _random_matrix(rng, RATIONALS)
            s = _random_matrix(rng, RATIONALS)
            while mat2.det(s) == 0:
                s = _random_matrix(rng, RATIONALS)
            ds = mat2.det(s)
            s_inv = mat2.Mat2(s.e22 / ds, -s.e12 / ds, -s.e21 / ds, s.e11 / ds)
            conj = mat2.mat_mul(mat2.mat_mul(s, m_), s_inv)
            yield f"#{k} trace", mat2.trace(m_), mat2.trace(conj)
            yield f"#{k} det", mat2.det(m_), mat2.det(conj)
            for m in (1, 2, 7, 30):
                form_m = quadratic.x_power(QuadParams(mat2.trace(m_), mat2.det(m_)), m)
                form_c = quadratic.x_power(QuadParams(mat2.trace(conj), mat2.det(conj)), m)
                yield f"#{k} m={m} coefficients", form_m, form_c

    checks.append(sweep("similar matrices share trace, det and (P_m, -d P_(m-1))", similarity()))

    for m in (2**8, 2**12, 2**16):
        counting = CountingRing(INTEGERS)
        a = mat2.Mat2(*(counting.wrap(x) for x in (2, 1, 1, 1)))
        params = QuadParams(mat2.trace(a), mat2.det(a))
        counting.counter.reset()
        quadratic.x_power(params, m)
        n_mul = counting.counter.multiplications
        bound = 10 * math.log2(m + 2)
        checks.append(
            Check(f"pow_ch coefficient multiplications at m={m}", f"<= {bound:.2f}", str(n_mul), n_mul <= bound)
        )
    return checks


# -- fibonacci --------------------------------------------------------------


def check_fibonacci() -> list[Check]:
    rng = random.Random(SEED + 3)
    checks = []

    def grid() -> Iterator[Case]:
        for n in range(1, 51):
            for m in range(1, 51):
                yield f"(n,m)=({n},{m})", fibapp.fib(n * m), fibapp.fib_nm_identity(n, m)

    checks.append(sweep("F_nm expansion = fib(n*m), 1<=n,m<=50", grid()))

    def random_pairs() -> Iterator[Case]:
        for _ in range(100):
            n = rng.randint(1, 200)
            m = rng.randint(1, 10**4 // n)
            yield f"(n,m)=({n},{m})", fibapp.fib(n * m), fibapp.fib_nm_identity(n, m)

    checks.append(sweep("F_nm expansion = fib(n*m), 100 random pairs, nm<=1e4", random_pairs()))

    def matrix_facts() -> Iterator[Case]:
        for n in range(1, 201):
            for c in fibapp.fib_matrix_check(n):
                yield c.name, c.expected, c.actual

    checks.append(sweep("A^n entries, trace L_n, det (-1)^n, n<=200", matrix_facts()))

    def signs() -> Iterator[Case]:
        for n in range(1, 51, 2):
            for m in range(1, 51):
                terms = fibapp.fib_nm_terms(n, m)
                yield f"(n,m)=({n},{m})", True, all(x > 0 for x in terms)

    checks.append(sweep("odd n: every summand of the expansion is positive", signs()))
    checks.append(
        sweep(
            "F_(1*m) expansion collapses to fib(m)",
            ((f"m={m}", fibapp.fib(m), fibapp.fib_nm_identity(1, m)) for m in range(1, 201)),
        )
    )

    def lucas_cases() -> Iterator[Case]:
        prev, cur = 2, 1
        for n in range(0, 300):
            yield f"L_{n}", prev, fibapp.lucas(n)
            prev, cur = cur, prev + cur

    checks.append(sweep("lucas(n) matches L recurrence, n<300", lucas_cases()))
    return checks


# -- chebyshev --------------------------------------------------------------


def numeric_grid() -> Iterator[tuple[float, float, int]]:
    ts = [-10 + 20 * i / 9 for i in range(10)]
    ds = [0.5 + 9.5 * i / 9 for i in range(10)]
    ms = [1 + round(39 * i / 9) for i in range(10)]
    for t in ts:
        for d in ds:
            for m in ms:
                yield t, d, m


def check_chebyshev() -> list[Check]:
    exact = (
        fibapp.verify_chebyshev_relation(t, s, m)
        for s in (1, 2, 3)
        for t in range(-5, 6)
        for m in range(1, 33)
    )
    numeric = (fibapp.verify_chebyshev_numeric(t, d, m) for t, d, m in numeric_grid())
    return [
        sweep("P_m(t,s^2) = s^(m-1) U_(m-1)(t/2s) exactly", ((c.name, True, c.passed) for c in exact)),
        sweep(
            f"numeric Chebyshev relation within {fibapp.NUMERIC_REL_TOL:g}",
            ((c.name, True, c.passed) for c in numeric),
        ),
    ]


# -- symbolic ---------------------------------------------------------------


def check_symbolic(max_m: int = 64) -> list[Check]:
    checks = []
    for m in range(1, max_m + 1):
        rec = quadratic.p_m_symbolic(m)
        closed = quadratic.binomial_sum_poly(m)
        checks.append(Check(f"P_{m}(T,D) recurrence = closed sum", str(closed), str(rec), rec == closed))

    rng = random.Random(SEED + 4)
    polys = [quadratic.p_m_symbolic(m) for m in range(max_m + 1)]
    rings: list[Ring] = [INTEGERS, ModularRing(BIG_PRIME), ModularRing(6), RATIONALS]

    def universality() -> Iterator[Case]:
        for ring in rings:
            for k in range(5):
                if ring is RATIONALS:
                    params = QuadParams(
                        Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                        Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                    )
                else:
                    params = _random_params(rng, ring)
                for m, poly in enumerate(polys):
                    yield (
                        f"{ring.name}#{k} m={m}",
                        quadratic.p_m_iterative(params, m),
                        bivariate.poly_eval(poly, params.t, params.d),
                    )

    checks.append(sweep(f"P_m(T,D) specializes correctly in every ring, m<={max_m}", universality()))
    return checks


_RUNNERS: dict[str, Callable[[], list[Check]]] = {
    "ring": check_ring,
    "engines": check_engines,
    "matrix": check_matrix,
    "fibonacci": check_fibonacci,
    "chebyshev": check_chebyshev,
    "symbolic": check_symbolic,
}


def verify_suite(scope: str = "all") -> list[Check]:
    if scope == "all":
        return [c for name in SCOPES for c in _RUNNERS[name]()]
    if scope not in _RUNNERS:
        raise ValueError(f"unknown scope {scope!r}; choose from {', '.join(SCOPES)} or all")
    return _RUNNERS[scope]()

