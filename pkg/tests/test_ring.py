from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadalg.bivariate import POLYNOMIALS, BivariatePoly, D, T, poly_eval
from quadalg.ring import (
    INTEGERS,
    RATIONALS,
    CountingRing,
    ModularRing,
    ModValue,
    ParseError,
    RingMismatchError,
    parse_int,
    ring_of,
)
from quadalg.verify import eval_tree

MOD7 = ModularRing(7)


def brute_convolve(p: BivariatePoly, q: BivariatePoly) -> dict:
    out = {}
    for (i1, j1), a in p.terms.items():
        for (i2, j2), b in q.terms.items():
            out[(i1 + i2, j1 + j2)] = out.get((i1 + i2, j1 + j2), 0) + a * b
    return {k: v for k, v in out.items() if v}


def test_examples():
    assert 3 + 5 == 8
    assert MOD7.from_int(4) + MOD7.from_int(5) == MOD7.from_int(2)
    assert (T + (-T)).terms == {}
    assert 6 * 7 == 42
    assert Fraction(1, 2) * Fraction(2, 3) == Fraction(1, 3)
    prod = (T + D) * (T - D)
    assert dict(prod.terms) == brute_convolve(T + D, T - D) == {(2, 0): 1, (0, 2): -1}
    assert str(prod) == "T^2 - D^2"


@pytest.mark.parametrize(
    "poly, t, d, expected",
    [
        (T * T - D, 3, 1, 8),
        (BivariatePoly(), 5, 9, 0),
        (T * T * T - BivariatePoly.constant(2) * T * D, 2, 3, -4),
    ],
)
def test_poly_eval_examples(poly, t, d, expected):
    assert poly_eval(poly, t, d) == expected


def test_poly_eval_in_other_rings():
    p = T * T - D
    assert poly_eval(p, MOD7.from_int(3), MOD7.from_int(1)) == MOD7.from_int(1)
    assert poly_eval(BivariatePoly(), Fraction(1, 2), Fraction(3)) == Fraction(0)


def test_mod_mismatch_is_an_error():
    with pytest.raises(RingMismatchError):
        ModValue(1, 7) + ModValue(1, 11)
    with pytest.raises(RingMismatchError):
        ModValue(1, 7) * ModValue(1, 11)
    with pytest.raises(TypeError):
        ModValue(1, 7) + 1


def test_mod_value_invariants():
    v = ModValue(-3, 7)
    assert v.residue == 4 and v.modulus == 7
    with pytest.raises(ValueError):
        ModValue(0, 1)
    with pytest.raises(AttributeError):
        v.residue = 1


def test_poly_canonical_form():
    p = BivariatePoly({(1, 0): 0, (0, 1): 3})
    assert dict(p.terms) == {(0, 1): 3}
    with pytest.raises(ValueError):
        BivariatePoly({(-1, 0): 1})
    assert BivariatePoly({(2, 1): 5}) == BivariatePoly({(2, 1): 5})
    assert hash(BivariatePoly({(2, 1): 5})) == hash(BivariatePoly({(2, 1): 5}))


def test_rendering():
    assert INTEGERS.render(-12) == "-12"
    assert MOD7.render(MOD7.from_int(12)) == "5 mod 7"
    assert RATIONALS.render(Fraction(-6, 8)) == "-3/4"
    assert RATIONALS.render(Fraction(2)) == "2/1"
    assert str(BivariatePoly()) == "0"
    assert str(T * T * D - BivariatePoly.constant(3) * D + BivariatePoly.constant(1)) == "T^2*D - 3*D + 1"
    assert str(-(T * D * D)) == "-T*D^2"


def test_graded_lex_order():
    p = D * D * D + T * D + T * T * D + BivariatePoly.constant(7) + T
    assert str(p) == "T^2*D + D^3 + T*D + T + 7"


def test_parsing():
    assert parse_int("−17") == -17
    assert parse_int(" +4 ") == 4
    assert MOD7.parse("12") == MOD7.from_int(5)
    assert MOD7.parse("3 mod 7") == MOD7.from_int(3)
    with pytest.raises(RingMismatchError):
        MOD7.parse("3 mod 8")
    assert RATIONALS.parse("−6/8") == Fraction(-3, 4)
    assert POLYNOMIALS.parse("T^2 − D") == T * T - D
    with pytest.raises(ParseError) as exc:
        parse_int("12a")
    assert exc.value.position == 2
    with pytest.raises(ParseError):
        POLYNOMIALS.parse("T^2 + x")
    with pytest.raises(ParseError):
        RATIONALS.parse("1/0")


@pytest.mark.parametrize("text", ["12\n", "١٢", "1 2", "", "-", "1e3", "0x10", "--1", " 12"])
def test_integer_grammar_is_strict(text):
    with pytest.raises(ParseError):
        parse_int(text)


def test_ring_of():
    assert ring_of(3) is INTEGERS
    assert ring_of(Fraction(1, 2)) is RATIONALS
    assert ring_of(T) is POLYNOMIALS
    assert ring_of(ModValue(1, 7)) == MOD7
    with pytest.raises(TypeError):
        ring_of(1.5)
    with pytest.raises(TypeError):
        ring_of(True)


def test_counting_ring_counts_and_resets():
    ring = CountingRing(INTEGERS)
    a, b = ring.from_int(3), ring.from_int(4)
    c = a * b + a - b
    assert c.value == 11
    assert (ring.counter.multiplications, ring.counter.additions) == (1, 2)
    ring.counter.reset()
    assert (ring.counter.multiplications, ring.counter.additions) == (0, 0)
    other = CountingRing(INTEGERS)
    with pytest.raises(RingMismatchError):
        a + other.from_int(1)


# -- properties -------------------------------------------------------------

ints = st.integers(min_value=-(10**40), max_value=10**40)
moduli = st.integers(min_value=2, max_value=10**12)
rationals = st.fractions(max_denominator=10**6)
polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-50, 50), max_size=5
).map(BivariatePoly)


def _triples(elem):
    return st.tuples(elem, elem, elem)


def mod_triples():
    return moduli.flatmap(
        lambda n: _triples(st.integers(0, n - 1).map(lambda r: ModularRing(n).from_int(r)))
    )


@pytest.mark.parametrize(
    "triples",
    [_triples(ints), mod_triples(), _triples(rationals), _triples(polys)],
    ids=["bigint", "mod", "rational", "poly"],
)
def test_ring_axioms(triples):
    @given(triples)
    @settings(max_examples=150, deadline=None)
    def check(abc):
        a, b, c = abc
        ring = ring_of(a)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a * ring.one == a
        assert a + ring.zero == a
        assert a + (-a) == ring.zero
        assert a - b == a + (-b)
        assert ring.parse(ring.render(a)) == a

    check()


def trees(depth=8):
    leaves = st.integers(-(10**6), 10**6)
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            st.tuples(st.sampled_from("+-*"), sub, sub), st.tuples(st.just("n"), sub)
        ),
        max_leaves=2**depth,
    )


@given(trees(), moduli)
@settings(max_examples=200, deadline=None)
def test_mod_agrees_with_reduced_bigint(tree, n):
    ring = ModularRing(n)
    assert eval_tree(tree, ring.from_int) == ring.from_int(eval_tree(tree, int))


@given(polys, polys, st.integers(-30, 30), st.integers(-30, 30))
@settings(max_examples=150, deadline=None)
def test_poly_eval_is_multiplicative(p, q, t, d):
    assert poly_eval(p * q, t, d) == poly_eval(p, t, d) * poly_eval(q, t, d)
    assert poly_eval(p + q, t, d) == poly_eval(p, t, d) + poly_eval(q, t, d)


@given(polys)
def test_poly_recanonicalize_is_identity(p):
    assert BivariatePoly(p.terms) == p
    assert POLYNOMIALS.parse(str(p)) == p


@given(ints, moduli)
def test_mod_canonical(x, n):
    v = ModularRing(n).from_int(x)
    assert 0 <= v.residue < n
    assert ModValue(v.residue, n) == v
