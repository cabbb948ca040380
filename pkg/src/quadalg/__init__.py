"""Exact powers in quadratic algebras over arbitrary commutative rings."""
from .bivariate import POLYNOMIALS, BivariatePoly, D, T, poly_eval
from .fibapp import fib, fib_nm_identity, lucas
from .mat2 import Mat2, pow_ch, pow_naive
from .quadratic import (
    Engine,
    LinearForm,
    QuadParams,
    p_m,
    p_m_binomial,
    p_m_doubling,
    p_m_iterative,
    p_m_symbolic,
    x_power,
)
from .ring import (
    INTEGERS,
    RATIONALS,
    CountingRing,
    ModularRing,
    ModValue,
    OpCounter,
    ring_of,
)

__version__ = "0.1.0"
