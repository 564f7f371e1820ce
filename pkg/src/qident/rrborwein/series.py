"""Truncated q-series helpers: inverse Pochhammers and triple products.

Everything here is exact below a chosen order N.  A product (x; q^b)_inf is
truncated by keeping only factors whose exponent is below N; discarded
factors are 1 + O(q^N) and cannot touch the kept coefficients.  The same
argument makes the geometric expansion of 1/(1 - q^e) exact below N.
"""

from fractions import Fraction
from functools import lru_cache

from ..qpoly import QPoly, TruncSeries

__all__ = [
    "geom_inverse",
    "inv_poch_finite",
    "inv_poch_inf",
    "jacobi_triple",
    "poch_inf",
    "triple_product",
]


def _trunc(p: QPoly, order) -> QPoly:
    return TruncSeries(p, order).poly


@lru_cache(maxsize=None)
def geom_inverse(exp, order, phase=Fraction(0)) -> QPoly:
    """1/(1 - zeta q^exp) truncated below ``order``; exp > 0, zeta a root of 1.

    Only the rational phases 0 and 1/2 occur here, giving the plain and
    the alternating geometric series.
    """
    exp = Fraction(exp)
    order = Fraction(order)
    phase = Fraction(phase)
    if exp <= 0:
        raise ValueError("geometric inverse needs a positive exponent")
    if phase not in (Fraction(0), Fraction(1, 2)):
        raise ValueError("only real unit factors supported")
    out = QPoly.ZERO
    e = Fraction(0)
    c = 1
    while e < order:
        out = out + QPoly.monomial(c, e)
        e += exp
        if phase:
            c = -c
    return out


@lru_cache(maxsize=None)
def inv_poch_finite(exp, step, n, order, phase=Fraction(0)) -> QPoly:
    """1/(zeta q^exp; q^step)_n truncated below ``order``, n >= 0."""
    if n == 0:
        return QPoly.ONE
    prev = inv_poch_finite(exp, step, n - 1, order, phase)
    e = Fraction(exp) + (n - 1) * Fraction(step)
    return _trunc(prev * geom_inverse(e, order, phase), order)


@lru_cache(maxsize=None)
def inv_poch_inf(exp, step, order) -> QPoly:
    """1/(q^exp; q^step)_inf truncated below ``order``."""
    exp, step, order = Fraction(exp), Fraction(step), Fraction(order)
    out = QPoly.ONE
    e = exp
    while e < order:
        out = _trunc(out * geom_inverse(e, order), order)
        e += step
    return out


@lru_cache(maxsize=None)
def poch_inf(exp, step, order, phase=Fraction(0)) -> QPoly:
    """(zeta q^exp; q^step)_inf truncated below ``order``."""
    exp, step, order = Fraction(exp), Fraction(step), Fraction(order)
    out = QPoly.ONE
    e = exp
    while e < order:
        out = _trunc(out * QPoly.binomial_factor(Fraction(phase), e), order)
        e += step
    return out


def jacobi_triple(exp, modulus, order, negative=False) -> QPoly:
    """(a, q^m/a, q^m; q^m)_inf with a = q^exp (or -q^exp) via the theta sum.

    By the triple product identity this equals
    sum_k (-1)^k a^k q^(m*C(k,2)), which is what gets assembled here.
    """
    exp, m, order = Fraction(exp), Fraction(modulus), Fraction(order)
    out = QPoly.ZERO
    for sign in (1, -1):
        k = 0 if sign == 1 else -1
        while True:
            e = exp * k + m * k * (k - 1) / 2
            if e >= order and abs(k) * m >= 2 * abs(exp):
                break
            if e < order:
                c = 1 if (negative or k % 2 == 0) else -1
                out = out + QPoly.monomial(c, e)
            k += sign
    return out


def triple_product(e1, e2, modulus, order, negative=False) -> QPoly:
    """(q^e1, q^e2, q^m; q^m)_inf for e1 + e2 = m (both -q^e if negative)."""
    if Fraction(e1) + Fraction(e2) != Fraction(modulus):
        raise ValueError("triple product needs e1 + e2 = modulus")
    return jacobi_triple(e1, modulus, order, negative=negative)
