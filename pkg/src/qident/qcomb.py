"""q-combinatorial primitives.

q-binomial coefficients in arbitrary (rational-exponent) bases, q-shifted
factorials with monomial arguments including negative index, and the finite
Jacobi triple product identities used as seeds for the transformation engine.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .qpoly import FactoredRational, QMonomial, QPoly

# ---------------------------------------------------------------------------
# q-binomial coefficients
# ---------------------------------------------------------------------------

# Pascal table in base q, grown row by row. Row n is a tuple of term dicts
# (exponent -> int) for r = 0 .. n. The recurrence used is
#   [n, r] = [n-1, r] + q^(n-r) [n-1, r-1],
# and rows are immutable once published, so concurrent readers are safe.
_rows: list[tuple[dict, ...]] = [({0: 1},)]
_rows_lock = threading.Lock()


def _grow_rows(n: int) -> None:
    with _rows_lock:
        while len(_rows) <= n:
            m = len(_rows)
            prev = _rows[m - 1]
            row = []
            for r in range(m + 1):
                t = dict(prev[r]) if r < m else {}
                if r > 0:
                    shift = m - r
                    for k, c in prev[r - 1].items():
                        kk = k + shift
                        v = t.get(kk)
                        t[kk] = c if v is None else v + c
                row.append(t)
            _rows.append(tuple(row))


def qbinom_terms(n: int, r: int) -> dict:
    """Term dict of [n, r] in base q; {} outside 0 <= r <= n."""
    if r < 0 or n < 0 or r > n:
        return {}
    if len(_rows) <= n:
        _grow_rows(n)
    return _rows[n][r]


def qbinom(n: int, r: int, base=1) -> QPoly:
    """The q-binomial [n, r] in base q^base; zero outside 0 <= r <= n."""
    t = qbinom_terms(n, r)
    if not t:
        return QPoly.ZERO
    base = Fraction(base)
    if base == 1:
        return QPoly(dict(t), 1, _canonical=True)
    return QPoly({k * base.numerator: c for k, c in t.items()}, base.denominator)


# ---------------------------------------------------------------------------
# q-shifted factorials (Pochhammer symbols)
# ---------------------------------------------------------------------------


def poch_factor_list(a: QMonomial, n: int, base=1) -> list[tuple[Fraction, Fraction]]:
    """Factors (phase, exponent) of (a; q^base)_n for n >= 0."""
    base = Fraction(base)
    return [(a.phase, a.exp + j * base) for j in range(n)]


def poch_poly(a: QMonomial, n: int, base=1) -> QPoly:
    """(a; q^base)_n as a polynomial; requires n >= 0."""
    if n < 0:
        raise ValueError("poch_poly needs n >= 0; use pochhammer")
    out = QPoly.ONE
    for ph, e in poch_factor_list(a, n, base):
        out = out * QPoly.binomial_factor(ph, e)
    return out


def pochhammer(a: QMonomial, n: int, base=1) -> FactoredRational:
    """(a; q^base)_n for any integer n.

    Negative index by the reciprocal convention
    (a; q)_{-n} = 1 / (a q^{-n}; q)_n; a factor (1 - q^0) landing in the
    denominator is kept and surfaces as InfinitePole only if the caller
    collapses the value without it cancelling.
    """
    base = Fraction(base)
    if n >= 0:
        return FactoredRational(poch_poly(a, n, base))
    out = FactoredRational.one()
    for j in range(1, -n + 1):
        out = out.div_factor(a.phase, a.exp - j * base)
    return out


def poch_ratio(num_specs, den_specs) -> FactoredRational:
    """Exact ratio prod (a;q^b)_n / prod (c;q^b)_m of Pochhammer symbols.

    Each spec is (QMonomial, length, base). Matching factors cancel as
    multisets before anything is expanded, so ratios like
    (q;q)_L / (q;q)_{L-r} stay small.
    """
    from collections import Counter

    num = Counter()
    den = Counter()
    for a, n, b in num_specs:
        tgt, other = (num, den) if n >= 0 else (den, num)
        b = Fraction(b)
        rng = poch_factor_list(a, n, b) if n >= 0 else [
            (a.phase, a.exp - j * b) for j in range(1, -n + 1)
        ]
        for f in rng:
            if other.get(f):
                other[f] -= 1
                if not other[f]:
                    del other[f]
            else:
                tgt[f] += 1
    for a, n, b in den_specs:
        tgt, other = (den, num) if n >= 0 else (num, den)
        b = Fraction(b)
        rng = poch_factor_list(a, n, b) if n >= 0 else [
            (a.phase, a.exp - j * b) for j in range(1, -n + 1)
        ]
        for f in rng:
            if other.get(f):
                other[f] -= 1
                if not other[f]:
                    del other[f]
            else:
                tgt[f] += 1
    p = QPoly.ONE
    for f, m in num.items():
        fp = QPoly.binomial_factor(*f)
        for _ in range(m):
            p = p * fp
    return FactoredRational(p, den)


def qfac(n: int, base=1) -> QPoly:
    """(q^base; q^base)_n for n >= 0 (and 1 for n = -0)."""
    if n < 0:
        raise ValueError("qfac needs n >= 0")
    base = Fraction(base)
    return poch_poly(QMonomial(base), n, base)


# ---------------------------------------------------------------------------
# Finite Jacobi triple product
# ---------------------------------------------------------------------------


def binom2(j: int) -> int:
    """The binomial coefficient C(j, 2) = j(j-1)/2, valid for all integers."""
    return j * (j - 1) // 2


def jtp_sides(L: int, a: QMonomial):
    """Both sides of the even finite Jacobi triple product:
    sum_j (-1)^j a^j q^C(j,2) [2L, L-j] = (a, q/a; q)_L."""
    lhs = QPoly.ZERO
    for j in range(-L, L + 1):
        mono = a ** j
        c = mono.coeff()
        if j % 2:
            c = -c
        lhs = lhs + QPoly.monomial(c, mono.exp + binom2(j)) * qbinom(2 * L, L - j)
    qa = QMonomial(1 - a.exp, -a.phase)  # q / a
    rhs = poch_poly(a, L) * poch_poly(qa, L)
    return lhs, rhs


def jtp_sides_odd(L: int, a: QMonomial):
    """Both sides of the odd finite triple product:
    sum_{j=-L-1}^{L} (-1)^j a^j q^C(j+1,2) [2L+1, L-j] = (1/a; q)_{L+1} (aq; q)_L."""
    lhs = QPoly.ZERO
    for j in range(-L - 1, L + 1):
        mono = a ** j
        c = mono.coeff()
        if j % 2:
            c = -c
        lhs = lhs + QPoly.monomial(c, mono.exp + binom2(j + 1)) * qbinom(2 * L + 1, L - j)
    ainv = QMonomial(-a.exp, -a.phase)
    aq = QMonomial(1 + a.exp, a.phase)
    rhs = poch_poly(ainv, L + 1) * poch_poly(aq, L)
    return lhs, rhs


def finite_jtp(L: int, a: QMonomial) -> QPoly:
    """Difference LHS - RHS of the even finite triple product (zero iff it holds)."""
    lhs, rhs = jtp_sides(L, a)
    return lhs - rhs


def finite_jtp_odd(L: int, a: QMonomial) -> QPoly:
    lhs, rhs = jtp_sides_odd(L, a)
    return lhs - rhs
