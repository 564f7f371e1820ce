"""Rogers-Ramanujan identities from iterated q-binomial transformations.

Three kinds of statements are verified here:

* fixed polynomial identities (the J-family triple-product variants, the
  quartic identity for (-q^2;q^2)_L, Slater-style single sums at finite L);
* chain theorems: an identity generated by driving the seed through a
  stated sequence of transformation kernels, whose right side has a
  displayed multisum form and whose large-L limit has a displayed
  product form;
* the corresponding infinite series, checked to a truncation order with
  the product side expanded through the Jacobi triple product.
"""

from fractions import Fraction

from ..qcomb import QMonomial, poch_poly, poch_ratio, qbinom, qfac
from ..qpoly import FactoredRational, QPoly, TruncSeries
from ..report import Stopwatch, VerificationReport
from ..transforms import apply_transform, seed_identity, verify_identity
from .gseries import g_poly
from .series import inv_poch_finite, inv_poch_inf, poch_inf, triple_product

__all__ = [
    "RR_THEOREMS",
    "chain_identity",
    "multisum_eval",
    "verify_rr",
    "verify_rr_suite",
]

HALF = Fraction(1, 2)


def _trunc(p: QPoly, order) -> QPoly:
    return TruncSeries(p, order).poly


def _q(e) -> QMonomial:
    return QMonomial(Fraction(e))


def _mq(e) -> QMonomial:
    """-q^e."""
    return QMonomial(Fraction(e), HALF)


# ---------------------------------------------------------------------------
# Fixed polynomial identities
# ---------------------------------------------------------------------------


def j1_sides(L: int):
    """sum_j (-1)^j q^(3j(3j+1)/2) [2L, L-3j] against its closed form."""
    lhs = QPoly.ZERO
    for j in range(-(L // 3) - 1, L // 3 + 2):
        b = qbinom(2 * L, L - 3 * j)
        if b.is_zero():
            continue
        t = b.times_qpow(Fraction(3 * j * (3 * j + 1), 2))
        lhs = lhs + (t if j % 2 == 0 else -t)
    if L == 0:
        return lhs, QPoly.ONE
    rhs = (QPoly.ONE + QPoly.qpow(L)) * qfac(L - 1, 3).exact_div(qfac(L - 1))
    return lhs, rhs


def j12_sides(L: int):
    """sum_j (-1)^j q^(9j(j+1)/2) [2L, L-3j-1] = q^(L-1)(q^3;q^3)_(L-1)/(q;q)_(L-1)."""
    lhs = QPoly.ZERO
    for j in range(-(L // 3) - 2, L // 3 + 2):
        b = qbinom(2 * L, L - 3 * j - 1)
        if b.is_zero():
            continue
        t = b.times_qpow(Fraction(9 * j * (j + 1), 2))
        lhs = lhs + (t if j % 2 == 0 else -t)
    if L == 0:
        return lhs, QPoly.ZERO
    rhs = qfac(L - 1, 3).exact_div(qfac(L - 1)).times_qpow(L - 1)
    return lhs, rhs


def j1_odd_sides(L: int):
    """sum_j (-1)^j q^(3j(3j+1)/2) [2L+1, L-3j] = (q^3;q^3)_L/(q;q)_L."""
    lhs = QPoly.ZERO
    for j in range(-(L // 3) - 2, L // 3 + 2):
        b = qbinom(2 * L + 1, L - 3 * j)
        if b.is_zero():
            continue
        t = b.times_qpow(Fraction(3 * j * (3 * j + 1), 2))
        lhs = lhs + (t if j % 2 == 0 else -t)
    return lhs, qfac(L, 3).exact_div(qfac(L))


def f34_sides(L: int):
    """sum_{j = -L (2) L} q^j [L, (L-j)/2]_{q^4} = q^(-L) (-q^2; q^2)_L."""
    lhs = QPoly.ZERO
    for j in range(-L, L + 1, 2):
        lhs = lhs + qbinom(L, (L - j) // 2, 4).times_qpow(j)
    rhs = poch_poly(_mq(2), L, 2).times_qpow(-L)
    return lhs, rhs


def i12_sides(L: int):
    """sum_j (-1)^j q^(2j^2) [2L, L-2j] = (-q; q^2)_L."""
    return g_poly(L, 1, 1, 2), poch_poly(_mq(1), L, 2)


def g1_t2_sides(L: int):
    """sum_j (-1)^j q^(j(7j+1)/2) [2L, L-2j] as a single sum over n."""
    lhs = g_poly(L, 2, Fraction(3, 2), 2)
    acc = FactoredRational.zero()
    for n in range(L // 2 + 1):
        t = poch_ratio(
            [(_q(2), L, 2), (_mq(1), L - 2 * n, 1)],
            [(_q(2), n, 2), (_mq(1), 2 * n, 1), (_q(2), L - 2 * n, 2)],
        )
        acc = acc + t * FactoredRational(QPoly.qpow(2 * n * n))
    return lhs, acc.to_qpoly()


def g1_t2b_sides(L: int):
    """sum_j (-1)^j q^(j(5j+1)/2) [2L, L-2j] as (1+q^L) times a single sum."""
    lhs = g_poly(L, Fraction(3, 2), 1, 2)
    if L == 0:
        # the n = 0 term reads 1/(2 (-q^2;q^2)_{-1}) = 1 by the
        # reciprocal convention for negative Pochhammer length
        return lhs, QPoly.ONE
    acc = FactoredRational.zero()
    for n in range(L // 2 + 1):
        t = poch_ratio(
            [(_q(1), L, 1), (_mq(2), L - n - 1, 2)],
            [(_q(4), n, 4), (_q(1), L - 2 * n, 1)],
        )
        acc = acc + t * FactoredRational(QPoly.qpow(n * n))
    rhs = (acc * FactoredRational(QPoly.ONE + QPoly.qpow(L))).to_qpoly()
    return lhs, rhs


def perfect_poly_sides(L: int):
    """sum_j (-1)^j q^(6j(3j+1)) [2L, L-6j-1] as a bounded single sum."""
    lhs = QPoly.ZERO
    for j in range(-(L // 6) - 2, L // 6 + 2):
        b = qbinom(2 * L, L - 6 * j - 1)
        if b.is_zero():
            continue
        t = b.times_qpow(6 * j * (3 * j + 1))
        lhs = lhs + (t if j % 2 == 0 else -t)
    if L == 0:
        return lhs, QPoly.ZERO
    acc = FactoredRational.zero()
    for n in range((L + 1) // 2):
        t = poch_ratio(
            [(_q(1), L, 1), (_q(6), n, 6), (_mq(1), L - n - 1, 2)],
            [(_q(2), n, 2), (_q(2), n, 2), (_q(2), n + 1, 4), (_q(1), L - 2 * n - 1, 1)],
        )
        acc = acc + t * FactoredRational(QPoly.qpow(n * (n + 1)))
    rhs = (acc * FactoredRational(QPoly.ONE + QPoly.qpow(L))).to_qpoly()
    return lhs, rhs


def s78_poly_sides(L: int):
    """sum_j (-1)^j q^(18j^2) [2L, L-6j] as a bounded single sum.

    The displayed left side carries 2/(1+q^(6j)); pairing j with -j shows
    it equals the plain alternating sum with exponent 18j^2.
    """
    lhs = g_poly(L, 3, 3, 6)
    acc = FactoredRational(poch_poly(_mq(1), L, 2))
    for n in range(1, L // 2 + 1):
        t = poch_ratio(
            [(_q(6), n - 1, 6), (_mq(1), L - n, 2)],
            [(_mq(1), n, 2), (_q(2), n - 1, 2)],
        )
        t = t * FactoredRational(QPoly.const(2) * qbinom(L, 2 * n) * QPoly.qpow(n * (n + 1)))
        acc = acc + t
    return lhs, acc.to_qpoly()


# ---------------------------------------------------------------------------
# Cubic splitting of the finite triple product (even and odd forms)
# ---------------------------------------------------------------------------


def cubic_split_even_sides(L: int, k: int, i: int):
    """Triple-split identity in base q^(k/3), k >= 2, 0 < i < k."""
    b3 = Fraction(k, 3)
    lhs = QPoly.ZERO
    for j in range(-(L // 3) - 1, L // 3 + 2):
        b = qbinom(2 * L, L - 3 * j, b3)
        if b.is_zero():
            continue
        t = b.times_qpow(Fraction(j * (3 * k * j - k + 2 * i), 2))
        lhs = lhs + (t if j % 2 == 0 else -t)
    if L == 0:
        return lhs, QPoly.ONE
    acc = FactoredRational.zero()
    edge = QPoly.ONE - QPoly.qpow(Fraction(2 * k * L, 3))
    for n in range(L // 3 + 1):
        t = poch_ratio(
            [(_q(i), n, k), (_q(k - i), n, k), (_q(k), L - n - 1, k)],
            [(_q(k), 2 * n, k), (QMonomial(b3), L - 3 * n, b3)],
        )
        acc = acc + t * FactoredRational(edge.times_qpow(k * n * n))
    return lhs, acc.to_qpoly()


def cubic_split_odd_sides(L: int, k: int, i: int):
    """Odd companion of the triple-split identity."""
    b3 = Fraction(k, 3)
    lhs = QPoly.ZERO
    for j in range(-(L // 3) - 2, L // 3 + 2):
        b = qbinom(2 * L + 1, L - 3 * j - 1, b3)
        if b.is_zero():
            continue
        t = b.times_qpow(Fraction(j * (3 * k * j + 3 * k - 2 * i), 2))
        lhs = lhs + (t if j % 2 == 0 else -t)
    acc = FactoredRational.zero()
    edge = QPoly.ONE - QPoly.qpow(Fraction(2 * k * L + k, 3))
    for n in range((L - 1) // 3 + 1 if L >= 1 else 0):
        t = poch_ratio(
            [(_q(i), n, k), (_q(k - i), n, k), (_q(k), L - n - 1, k)],
            [(_q(k), 2 * n + 1, k), (QMonomial(b3), L - 3 * n - 1, b3)],
        )
        extra = (QPoly.ONE - QPoly.qpow(k * n + i)) * edge
        acc = acc + t * FactoredRational(extra.times_qpow(k * n * (n + 1)))
    return lhs, acc.to_qpoly()


# ---------------------------------------------------------------------------
# Modulus-3k series (the corollary family and its -q^i companion)
# ---------------------------------------------------------------------------


def cubic_mod3k_sides(k: int, i: int, order: int, variant: str = "even"):
    """Series forms of the cubic split; variant in {even, odd, neg}."""
    lhs = QPoly.ZERO
    n = 0
    while True:
        if variant == "odd":
            shift = k * n * (n + 1)
        else:
            shift = k * n * n
        if shift >= order:
            break
        rem = order - shift
        if variant == "neg":
            num = poch_poly(_mq(i), n, k) * poch_poly(_mq(k - i), n, k)
        else:
            num = poch_poly(_q(i), n, k) * poch_poly(_q(k - i), n, k)
        if variant == "odd":
            num = num * (QPoly.ONE - QPoly.qpow(k * n + i))
            t = _trunc(num * inv_poch_finite(k, k, 2 * n + 1, rem), rem)
        else:
            t = _trunc(num * inv_poch_finite(k, k, 2 * n, rem), rem)
        lhs = lhs + t.times_qpow(shift)
        n += 1
    lhs = _trunc(lhs, order)
    if variant == "even":
        prod = triple_product(k + i, 2 * k - i, 3 * k, order)
    elif variant == "odd":
        prod = triple_product(i, 3 * k - i, 3 * k, order)
    else:
        prod = triple_product(k + i, 2 * k - i, 3 * k, order, negative=True)
    rhs = _trunc(prod * inv_poch_inf(k, k, order), order)
    return lhs, rhs


# ---------------------------------------------------------------------------
# Single-sum series
# ---------------------------------------------------------------------------


def _single_series(order, shift_of_n, factors_of_n):
    out = QPoly.ZERO
    n = 0
    while True:
        shift = shift_of_n(n)
        if shift >= order:
            break
        rem = order - shift
        p = QPoly.ONE
        for f in factors_of_n(n, rem):
            p = _trunc(p * f, rem)
        out = out + p.times_qpow(shift)
        n += 1
    return _trunc(out, order)


def s33_sides(order: int):
    """Rogers-Selberg: sum q^(2n^2)/((q^2;q^2)_n (-q;q)_(2n))."""
    lhs = _single_series(
        order,
        lambda n: 2 * n * n,
        lambda n, rem: [inv_poch_finite(2, 2, n, rem), inv_poch_finite(1, 1, 2 * n, rem, HALF)],
    )
    rhs = _trunc(triple_product(3, 4, 7, order) * inv_poch_inf(2, 2, order), order)
    return lhs, rhs


def slater20_sides(order: int):
    """Rogers: sum q^(n^2)/(q^4;q^4)_n."""
    lhs = _single_series(
        order,
        lambda n: n * n,
        lambda n, rem: [inv_poch_finite(4, 4, n, rem)],
    )
    rhs = poch_inf(1, 2, order, HALF) * triple_product(2, 3, 5, order)
    rhs = _trunc(_trunc(rhs, order) * inv_poch_inf(2, 2, order), order)
    return lhs, rhs


def perfect_sides(order: int):
    """sum q^(n(n+1)/2) (q^3;q^3)_n / ((q;q)_n^2 (q^3;q^2)_n)."""
    lhs = _single_series(
        order,
        lambda n: Fraction(n * (n + 1), 2),
        lambda n, rem: [
            poch_poly(_q(3), n, 3),
            inv_poch_finite(1, 1, n, rem),
            inv_poch_finite(1, 1, n, rem),
            inv_poch_finite(3, 2, n, rem),
        ],
    )
    rhs = _trunc(poch_inf(6, 6, order) * inv_poch_inf(1, 1, order), order)
    rhs = _trunc(rhs * inv_poch_inf(3, 2, order), order)
    return lhs, rhs


def s78_sides(order: int):
    """1 + 2 sum_(n>=1) q^(n(n+1)/2) (q^3;q^3)_(n-1)/((q;q)_n (q;q^2)_n (q;q)_(n-1))."""
    lhs = QPoly.ONE
    n = 1
    while True:
        shift = Fraction(n * (n + 1), 2)
        if shift >= order:
            break
        rem = order - shift
        p = poch_poly(_q(3), n - 1, 3) * QPoly.const(2)
        p = _trunc(p * inv_poch_finite(1, 1, n, rem), rem)
        p = _trunc(p * inv_poch_finite(1, 2, n, rem), rem)
        p = _trunc(p * inv_poch_finite(1, 1, n - 1, rem), rem)
        lhs = lhs + p.times_qpow(shift)
        n += 1
    lhs = _trunc(lhs, order)
    # (q^9;q^9)(q^9;q^18) = (q^9, q^9, q^18; q^18)
    rhs = _trunc(triple_product(9, 9, 18, order) * inv_poch_inf(1, 1, order), order)
    rhs = _trunc(rhs * inv_poch_inf(1, 2, order), order)
    return lhs, rhs


# ---------------------------------------------------------------------------
# Polynomial multisums of the iterated chain theorems
# ---------------------------------------------------------------------------


def t2_iter_poly(L: int, k: int) -> QPoly:
    """Nested doubling multisum equal to G(L; 2^k-1, 2^k, 2^k)."""

    def factor(j, a, b):
        return (poch_poly(_mq(2 ** (j - 1)), a - 2 * b, 2 ** (j - 1))
                * qbinom(a, 2 * b, 2 ** j)).times_qpow(2 ** j * b * b)

    def rec(j, prev):
        if j == k:
            return factor(k, prev, 0)
        out = QPoly.ZERO
        for nj in range(prev // 2 + 1):
            out = out + factor(j, prev, nj) * rec(j + 1, nj)
        return out

    return rec(1, L)


def t2b_iter_poly(L: int, k: int) -> QPoly:
    """Halved multisum equal to G(L; (2^k-1)/2, (2^k+1)/2, 2^k)."""

    def factor(j, a, b):
        return (poch_poly(QMonomial(Fraction(2 ** j * b), HALF), a - 2 * b, 2 ** j)
                * qbinom(a, 2 * b, 2 ** (j - 1))).times_qpow(2 ** (j - 1) * b * b)

    def rec(j, prev):
        if j == k:
            return factor(k, prev, 0)
        out = QPoly.ZERO
        for nj in range(prev // 2 + 1):
            out = out + factor(j, prev, nj) * rec(j + 1, nj)
        return out

    half = QPoly.const(Fraction(1, 2))
    return half * (QPoly.ONE + QPoly.qpow(L)) * rec(1, L)


def t3_iter_poly(L: int, k: int) -> QPoly:
    """Cubic multisum equal to G(L; (3^k-1)/2, (3^k+1)/2, 3^k)."""

    def factor(j, a, b) -> FactoredRational:
        if a == 0:
            return FactoredRational.one()
        t = poch_ratio(
            [(_q(3 ** j), a - b - 1, 3 ** j)],
            [(_q(3 ** (j - 1)), a - 3 * b, 3 ** (j - 1)), (_q(3 ** j), 2 * b, 3 ** j)],
        )
        edge = QPoly.ONE - QPoly.qpow(2 * 3 ** (j - 1) * a)
        return t * FactoredRational(edge.times_qpow(3 ** j * b * b))

    def rec(j, prev) -> FactoredRational:
        if j == k:
            return factor(k, prev, 0)
        out = FactoredRational.zero()
        for nj in range(prev // 3 + 1):
            out = out + factor(j, prev, nj) * rec(j + 1, nj)
        return out

    return rec(1, L).to_qpoly()


# ---------------------------------------------------------------------------
# Series sides of the chain theorems
# ---------------------------------------------------------------------------
#
# All eleven series share one shape: a sum over (n_1, ..., n_(k-1)) with
# n_k = 0, a quadratic exponent sum_m w_m n_m^2, optional polynomial
# numerator factors, and a product of inverse Pochhammers.  The driver
# below walks the tuples depth first, pruning on the exponent.


def _chain_series(order, kvars, wcoef, cmode, factors):
    total = QPoly.ZERO

    def rec(ns, shift):
        nonlocal total
        m = len(ns)
        if m == kvars:
            rem = order - shift
            scalar, nums, invs = factors(ns)
            p = QPoly.const(scalar) if scalar != 1 else QPoly.ONE
            for f in nums:
                p = _trunc(p * f, rem)
            for (e, st, n, ph) in invs:
                if n:
                    p = _trunc(p * inv_poch_finite(e, st, n, rem, ph), rem)
            total = total + p.times_qpow(shift)
            return
        prev = ns[-1] if ns else None
        v = 0
        while True:
            w = wcoef[m] * v * v
            if shift + w >= order:
                break
            if prev is not None:
                mode = cmode[m]
                if mode == "half" and v > prev // 2:
                    break
                if mode == "full" and v > prev:
                    break
                if mode == "third" and v > prev // 3:
                    break
            rec(ns + [v], shift + w)
            v += 1

    rec([], 0)
    return _trunc(total, order)


def _nv(ns, m, k):
    """n_m with the boundary conventions n_k = 0 (n_0 never read)."""
    return 0 if m == k else ns[m - 1]


def t2_iter_series(k, order):
    def factors(ns):
        nums, invs = [], [(1, 1, 2 * ns[0], Fraction(0))]
        for j in range(2, k + 1):
            a, b = _nv(ns, j - 1, k), _nv(ns, j, k)
            nums.append(poch_poly(_mq(2 ** (j - 2)), a - 2 * b, 2 ** (j - 2)))
            nums.append(qbinom(a, 2 * b, 2 ** (j - 1)))
        return 1, nums, invs

    return _chain_series(order, k - 1, [2 ** m for m in range(k - 1)],
                         [None] + ["half"] * (k - 2), factors)


def t2b_iter_series(k, order):
    def factors(ns):
        n1 = ns[0]
        invs = [(1, 1, 2 * n1, Fraction(0))]
        scalar = 1
        if n1 >= 1:
            scalar = Fraction(1, 2)
            invs.append((2, 2, n1 - 1, HALF))
        nums = []
        for j in range(2, k + 1):
            a, b = _nv(ns, j - 1, k), _nv(ns, j, k)
            nums.append(poch_poly(QMonomial(Fraction(2 ** j * b), HALF), a - 2 * b, 2 ** j))
            nums.append(qbinom(a, 2 * b, 2 ** (j - 1)))
        return scalar, nums, invs

    return _chain_series(order, k - 1, [2 ** m for m in range(k - 1)],
                         [None] + ["half"] * (k - 2), factors)


def t3_iter_series(k, order):
    def factors(ns):
        nums, invs = [], [(1, 1, 2 * ns[0], Fraction(0))]
        for j in range(2, k + 1):
            a, b = _nv(ns, j - 1, k), _nv(ns, j, k)
            if a == 0:
                continue
            nums.append(poch_poly(_q(3 ** (j - 1)), a - b - 1, 3 ** (j - 1)))
            nums.append(QPoly.ONE - QPoly.qpow(2 * 3 ** (j - 2) * a))
            invs.append((3 ** (j - 2), 3 ** (j - 2), a - 3 * b, Fraction(0)))
            invs.append((3 ** (j - 1), 3 ** (j - 1), 2 * b, Fraction(0)))
        return 1, nums, invs

    return _chain_series(order, k - 1, [3 ** m for m in range(k - 1)],
                         [None] + ["third"] * (k - 2), factors)


def alt_qt3_t2_odd_series(k, order):
    def factors(ns):
        invs = [(1, 2, ns[0], Fraction(0))]
        for j in range(2, k, 2):
            a, b, c = _nv(ns, j - 1, k), _nv(ns, j, k), _nv(ns, j + 1, k)
            invs += [(1, 1, a - 2 * b, Fraction(0)), (1, 1, 2 * b, HALF),
                     (2, 2, b - c, Fraction(0)), (1, 2, c, Fraction(0))]
        return 1, [], invs

    wcoef = [1] + [2 if m % 2 == 0 else 1 for m in range(2, k)]
    cmode = [None] + ["half" if m % 2 == 0 else "full" for m in range(2, k)]
    return _chain_series(order, k - 1, wcoef, cmode, factors)


def alt_qt3_t2_even_series(k, order):
    def factors(ns):
        invs = []
        for j in range(1, k, 2):
            a = None if j == 1 else _nv(ns, j - 1, k)
            b, c = _nv(ns, j, k), _nv(ns, j + 1, k)
            if a is not None:
                invs.append((1, 1, a - 2 * b, Fraction(0)))
            invs += [(1, 1, 2 * b, HALF), (2, 2, b - c, Fraction(0)), (1, 2, c, Fraction(0))]
        return 1, [], invs

    wcoef = [2 if m % 2 == 1 else 1 for m in range(1, k)]
    cmode = [None] + ["half" if m % 2 == 1 else "full" for m in range(2, k)]
    return _chain_series(order, k - 1, wcoef, cmode, factors)


def alt_t2_qt3_odd_series(k, order):
    def factors(ns):
        invs = [(1, 1, 2 * ns[0], HALF)]
        for j in range(2, k, 2):
            a, b, c = _nv(ns, j - 1, k), _nv(ns, j, k), _nv(ns, j + 1, k)
            invs += [(2, 2, a - b, Fraction(0)), (1, 2, b, Fraction(0)),
                     (1, 1, b - 2 * c, Fraction(0)), (1, 1, 2 * c, HALF)]
        return 1, [], invs

    wcoef = [2] + [1 if m % 2 == 0 else 2 for m in range(2, k)]
    cmode = [None] + ["full" if m % 2 == 0 else "half" for m in range(2, k)]
    return _chain_series(order, k - 1, wcoef, cmode, factors)


def alt_t2_qt3_even_series(k, order):
    def factors(ns):
        invs = []
        for j in range(1, k, 2):
            a = None if j == 1 else _nv(ns, j - 1, k)
            b, c = _nv(ns, j, k), _nv(ns, j + 1, k)
            if a is not None:
                invs.append((2, 2, a - b, Fraction(0)))
            invs += [(1, 2, b, Fraction(0)), (1, 1, b - 2 * c, Fraction(0)),
                     (1, 1, 2 * c, HALF)]
        return 1, [], invs

    wcoef = [1 if m % 2 == 1 else 2 for m in range(1, k)]
    cmode = [None] + ["full" if m % 2 == 1 else "half" for m in range(2, k)]
    return _chain_series(order, k - 1, wcoef, cmode, factors)


def alt_qt1_t2_odd_series(k, order):
    def factors(ns):
        invs = [(1, 2, ns[0], Fraction(0))]
        for j in range(2, k, 2):
            a, b, c = _nv(ns, j - 1, k), _nv(ns, j, k), _nv(ns, j + 1, k)
            h = 2 ** (j // 2)
            invs += [(h // 2, h // 2, a - 2 * b, Fraction(0)),
                     (h, h, b - c, Fraction(0)), (h, 2 * h, c, Fraction(0))]
        return 1, [], invs

    wcoef = [1] + [2 ** (m // 2) if m % 2 == 0 else 2 ** ((m - 1) // 2)
                   for m in range(2, k)]
    cmode = [None] + ["half" if m % 2 == 0 else "full" for m in range(2, k)]
    return _chain_series(order, k - 1, wcoef, cmode, factors)


def alt_qt1_t2_even_series(k, order):
    def factors(ns):
        invs = []
        for j in range(0, k - 1, 2):
            a = None if j == 0 else _nv(ns, j, k)
            b, c = _nv(ns, j + 1, k), _nv(ns, j + 2, k)
            h = 2 ** (j // 2)
            if a is not None:
                invs.append((h // 2, h // 2, a - 2 * b, Fraction(0)))
            invs += [(h, h, b - c, Fraction(0)), (h, 2 * h, c, Fraction(0))]
        return 1, [], invs

    wcoef = [2 ** ((m - 1) // 2) if m % 2 == 1 else 2 ** ((m - 2) // 2)
             for m in range(1, k)]
    cmode = [None] + ["half" if m % 2 == 1 else "full" for m in range(2, k)]
    return _chain_series(order, k - 1, wcoef, cmode, factors)


def alt_t2_qt1_odd_series(k, order):
    def factors(ns):
        invs = []
        for j in range(0, k - 2, 2):
            a, b, c = _nv(ns, j + 1, k), _nv(ns, j + 2, k), _nv(ns, j + 3, k)
            h = 2 ** (j // 2)
            invs += [(h, h, a - b, Fraction(0)), (h, 2 * h, b, Fraction(0)),
                     (h, h, b - 2 * c, Fraction(0))]
        return 1, [], invs

    wcoef = [1] + [2 ** ((m - 2) // 2) if m % 2 == 0 else 2 ** ((m - 1) // 2)
                   for m in range(2, k)]
    cmode = [None] + ["full" if m % 2 == 0 else "half" for m in range(2, k)]
    return _chain_series(order, k - 1, wcoef, cmode, factors)


def alt_t2_qt1_even_series(k, order):
    def factors(ns):
        invs = []
        for j in range(0, k - 1, 2):
            a = None if j == 0 else _nv(ns, j, k)
            b, c = _nv(ns, j + 1, k), _nv(ns, j + 2, k)
            h = 2 ** (j // 2)
            if a is not None:
                invs.append((h, h, a - b, Fraction(0)))
            invs += [(h, 2 * h, b, Fraction(0)), (h, h, b - 2 * c, Fraction(0))]
        return 1, [], invs

    wcoef = [2 ** ((m - 1) // 2) if m % 2 == 1 else 2 ** (m // 2)
             for m in range(1, k)]
    cmode = [None] + ["full" if m % 2 == 1 else "half" for m in range(2, k)]
    return _chain_series(order, k - 1, wcoef, cmode, factors)


# ---------------------------------------------------------------------------
# Chain theorem registry
# ---------------------------------------------------------------------------


def chain_identity(tags):
    """Drive the seed through a list of kernel tags."""
    ident = seed_identity()
    for t in tags:
        ident = apply_transform(t, ident)
    return ident


def _alt_tags(first, second, k):
    return [first if i % 2 == 0 else second for i in range(k)]


def _product(e1, e2, dens):
    def build(order):
        p = triple_product(e1, e2, e1 + e2, order)
        for (e, st) in dens:
            p = _trunc(p * inv_poch_inf(e, st, order), order)
        return p

    return build


RR_THEOREMS = {
    "t2-iter": dict(
        tags=lambda k: ["t2"] * k,
        stated=lambda k: (2 ** k - 1, 2 ** k, 2 ** k),
        poly=t2_iter_poly,
        series=t2_iter_series,
        product=lambda k: _product((4 ** k - 2 ** k) // 2, 4 ** k // 2, [(1, 1)]),
        k_poly_min=1,
        k_series_min=2,
    ),
    "t2b-iter": dict(
        tags=lambda k: ["t2b"] * k,
        stated=lambda k: (Fraction(2 ** k - 1, 2), Fraction(2 ** k + 1, 2), 2 ** k),
        poly=t2b_iter_poly,
        series=t2b_iter_series,
        product=lambda k: _product((4 ** k - 2 ** k) // 2, (4 ** k + 2 ** k) // 2,
                                   [(1, 2), (4, 4)]),
        k_poly_min=1,
        k_series_min=2,
    ),
    "t3-iter": dict(
        tags=lambda k: ["t3"] * k,
        stated=lambda k: (Fraction(3 ** k - 1, 2), Fraction(3 ** k + 1, 2), 3 ** k),
        poly=t3_iter_poly,
        series=t3_iter_series,
        product=lambda k: _product((9 ** k - 3 ** k) // 6, (9 ** k + 3 ** k) // 6, [(1, 1)]),
        k_poly_min=1,
        k_series_min=2,
    ),
    "alt-qt3-t2-odd": dict(
        tags=lambda k: _alt_tags("qt3", "t2", k),
        stated=lambda k: (Fraction(2 ** ((k - 1) // 2) * (2 ** k - 1), 2 ** k),
                          2 ** ((k - 1) // 2), 2 ** ((k - 1) // 2)),
        series=alt_qt3_t2_odd_series,
        product=lambda k: _product(2 ** k - 1, 2 ** k, [(1, 1)]),
        k_parity=1,
        k_series_min=3,
    ),
    "alt-qt3-t2-even": dict(
        tags=lambda k: _alt_tags("qt3", "t2", k),
        stated=lambda k: (Fraction(2 ** (k // 2) * (2 ** k - 1), 2 ** k),
                          2 ** (k // 2), 2 ** (k // 2)),
        series=alt_qt3_t2_even_series,
        product=lambda k: _product(2 ** k - 1, 2 ** k, [(2, 2)]),
        k_parity=0,
        k_series_min=2,
    ),
    "alt-t2-qt3-odd": dict(
        tags=lambda k: _alt_tags("t2", "qt3", k),
        stated=lambda k: (Fraction(2 ** ((k + 1) // 2) * (2 ** k - 1), 2 ** k),
                          2 ** ((k + 1) // 2), 2 ** ((k + 1) // 2)),
        series=alt_t2_qt3_odd_series,
        product=lambda k: _product(2 ** (k + 1) - 2, 2 ** (k + 1), [(2, 2)]),
        k_parity=1,
        k_series_min=3,
    ),
    "alt-t2-qt3-even": dict(
        tags=lambda k: _alt_tags("t2", "qt3", k),
        stated=lambda k: (Fraction(2 ** (k // 2) * (2 ** k - 1), 2 ** k),
                          2 ** (k // 2), 2 ** (k // 2)),
        series=alt_t2_qt3_even_series,
        product=lambda k: _product(2 ** (k + 1) - 2, 2 ** (k + 1), [(1, 1)]),
        k_parity=0,
        k_series_min=2,
    ),
    "alt-qt1-t2-odd": dict(
        tags=lambda k: _alt_tags("qt1", "t2", k),
        stated=lambda k: (3 * 2 ** ((k - 1) // 2) - 2, 3 * 2 ** ((k - 1) // 2) - 1,
                          2 ** ((k - 1) // 2)),
        series=alt_qt1_t2_odd_series,
        product=lambda k: _product(3 * 2 ** (k - 1) - 2 ** ((k + 1) // 2),
                                   3 * 2 ** (k - 1) - 2 ** ((k - 1) // 2), [(1, 1)]),
        k_parity=1,
        k_series_min=3,
    ),
    "alt-qt1-t2-even": dict(
        tags=lambda k: _alt_tags("qt1", "t2", k),
        stated=lambda k: (2 ** (k // 2 + 1) - 2, 2 ** (k // 2 + 1) - 1, 2 ** (k // 2)),
        series=alt_qt1_t2_even_series,
        product=lambda k: _product(2 ** k - 2 ** (k // 2), 2 ** k - 2 ** (k // 2 - 1),
                                   [(1, 1)]),
        k_parity=0,
        k_series_min=2,
    ),
    "alt-t2-qt1-odd": dict(
        tags=lambda k: _alt_tags("t2", "qt1", k),
        stated=lambda k: (2 ** ((k + 3) // 2) - 3, 2 ** ((k + 3) // 2) - 2,
                          2 ** ((k + 1) // 2)),
        series=alt_t2_qt1_odd_series,
        product=lambda k: _product(2 ** (k + 1) - 3 * 2 ** ((k - 1) // 2),
                                   2 ** (k + 1) - 2 ** ((k + 1) // 2), [(1, 1)]),
        k_parity=1,
        k_series_min=3,
    ),
    "alt-t2-qt1-even": dict(
        tags=lambda k: _alt_tags("t2", "qt1", k),
        stated=lambda k: (3 * (2 ** (k // 2) - 1), 3 * 2 ** (k // 2) - 2, 2 ** (k // 2)),
        series=alt_t2_qt1_even_series,
        product=lambda k: _product(3 * (2 ** k - 2 ** (k // 2)),
                                   3 * 2 ** k - 2 ** (k // 2 + 1), [(1, 1)]),
        k_parity=0,
        k_series_min=2,
    ),
}


def multisum_eval(theorem: str, k: int, L: int = None, order: int = None):
    """Displayed multisum of a chain theorem: polynomial at L or series to order."""
    rec = RR_THEOREMS[theorem]
    if L is not None:
        poly = rec.get("poly")
        if poly is None:
            raise ValueError(f"{theorem} has no displayed polynomial multisum")
        return poly(L, k)
    if order is None:
        raise ValueError("need L or order")
    return rec["series"](k, order)


# ---------------------------------------------------------------------------
# Verification drivers
# ---------------------------------------------------------------------------

_FIXED = {
    "j1": (j1_sides, "L"),
    "j12": (j12_sides, "L"),
    "j1-odd": (j1_odd_sides, "L"),
    "f34": (f34_sides, "L"),
    "i12": (i12_sides, "L"),
    "g1-t2": (g1_t2_sides, "L"),
    "g1-t2b": (g1_t2b_sides, "L"),
    "perfect-poly": (perfect_poly_sides, "L"),
    "s78-poly": (s78_poly_sides, "L"),
    "s33": (s33_sides, "order"),
    "slater20": (slater20_sides, "order"),
    "perfect": (perfect_sides, "order"),
    "s78": (s78_sides, "order"),
}


def _record_diff(report, where, lhs, rhs):
    diff = lhs - rhs
    ok = diff.is_zero()
    report.record(where, ok, None if ok else diff)
    return ok


def verify_rr(theorem: str, L_max: int = 12, order: int = 100,
              k_values=None) -> VerificationReport:
    """Verify one named identity or chain theorem."""
    report = VerificationReport(f"rr-{theorem}",
                                params={"L_max": L_max, "order": order})
    with Stopwatch() as sw:
        if theorem in _FIXED:
            fn, kind = _FIXED[theorem]
            if kind == "L":
                for L in range(L_max + 1):
                    lhs, rhs = fn(L)
                    if not _record_diff(report, (L,), lhs, rhs):
                        break
            else:
                lhs, rhs = fn(order)
                _record_diff(report, (order,), lhs, rhs)
        elif theorem in ("prop1", "prop2"):
            fn = cubic_split_even_sides if theorem == "prop1" else cubic_split_odd_sides
            ks = k_values or range(2, 6)
            done = False
            for k in ks:
                for i in range(1, k):
                    for L in range(L_max + 1):
                        lhs, rhs = fn(L, k, i)
                        if not _record_diff(report, (L, k, i), lhs, rhs):
                            done = True
                            break
                    if done:
                        break
                if done:
                    break
        elif theorem in ("coreq1", "coreq1-odd", "coreq1-neg"):
            variant = {"coreq1": "even", "coreq1-odd": "odd", "coreq1-neg": "neg"}[theorem]
            ks = k_values or range(2, 7)
            done = False
            for k in ks:
                for i in range(1, k):
                    lhs, rhs = cubic_mod3k_sides(k, i, order, variant)
                    if not _record_diff(report, (k, i), lhs, rhs):
                        done = True
                        break
                if done:
                    break
        elif theorem in RR_THEOREMS:
            rec = RR_THEOREMS[theorem]
            parity = rec.get("k_parity")
            if k_values is None:
                lo = rec.get("k_poly_min", rec["k_series_min"])
                k_values = [k for k in range(lo, 5) if parity is None or k % 2 == parity]
            for k in k_values:
                ident = chain_identity(rec["tags"](k))
                stated = rec["stated"](k)
                ok = (ident.alpha, ident.beta, ident.K) == tuple(map(Fraction, stated))
                report.record((k, "params"), ok, None if ok else ident.params())
                if not ok:
                    break
                sub = verify_identity(ident, L_max)
                report.record((k, "chain"), sub.passed,
                              None if sub.passed else sub.first_counterexample)
                poly = rec.get("poly")
                if poly is not None:
                    for L in range(L_max + 1):
                        lhs = g_poly(L, *stated)
                        if not _record_diff(report, (k, "poly", L), lhs, poly(L, k)):
                            break
                if k >= rec["k_series_min"]:
                    lhs = rec["series"](k, order)
                    rhs = _trunc(rec["product"](k)(order), order)
                    _record_diff(report, (k, "series"), lhs, rhs)
        else:
            raise ValueError(f"unknown theorem {theorem!r}")
    report.seconds = sw.elapsed
    return report


def verify_rr_suite(L_max: int = 12, order: int = 100) -> list:
    """Run every cataloged identity in this module; returns a list of reports."""
    names = list(_FIXED) + ["prop1", "prop2", "coreq1", "coreq1-odd", "coreq1-neg"]
    names += list(RR_THEOREMS)
    return [verify_rr(n, L_max=L_max, order=order) for n in names]
