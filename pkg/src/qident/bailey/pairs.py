"""Bailey pairs and the lemmas that transform them.

A Bailey pair relative to (a, q) is a pair of sequences (alpha, beta) with

    beta_L = sum_{r=0}^{L} alpha_r / ((q;q)_{L-r} (aq;q)_{L+r}).

Pairs here carry an exact monomial a and a rational base exponent, so that
the same machinery covers pairs relative to (a, q^2), (a^2, q^4) and so on.
Each lemma consumes a pair relative to one (a, base) and produces a pair
relative to another; the bookkeeping of that move is part of the lemma.

The parameter INF marks the formal limit b -> infinity of a lemma's free
parameter; each lemma stores its limit form explicitly instead of trying
to take limits symbolically.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..qpoly import FactoredRational, QMonomial
from ..qcomb import poch_ratio
from ..report import Stopwatch, VerificationReport
from .phi import ParameterPole

__all__ = [
    "INF",
    "LimitNotSupported",
    "BaileyPair",
    "unit_pair",
    "bl0",
    "bis1",
    "bis2",
    "bl2",
    "bl4",
    "bl4p",
    "bl3",
    "odd2",
    "inv_bl2",
    "inv_bl4",
    "inv_bl4p",
    "inv_bl3",
    "LEMMAS",
    "apply_lemma",
    "verify_pair",
    "pairs_agree",
]


class _Inf:
    __slots__ = ()

    def __repr__(self):
        return "INF"


INF = _Inf()


class LimitNotSupported(ValueError):
    """The requested parameter limit is not in the lemma catalog."""


def _pr(num_specs, den_specs) -> FactoredRational:
    """poch_ratio that refuses vanishing denominator factors.

    A factor 1 - q^0 in a denominator Pochhammer means the pair being built
    does not exist at these parameter values; raising here keeps the
    multiset cancellation inside poch_ratio from silently absorbing it.
    """
    for x, n, b in den_specs:
        if n > 0 and x.phase == 0:
            for j in range(n):
                if x.exp + j * b == 0:
                    raise ParameterPole(f"zero factor in ({x!r}; q^{b})_{n}")
    for x, n, b in num_specs:
        if n < 0 and x.phase == 0:
            for j in range(1, -n + 1):
                if x.exp - j * b == 0:
                    raise ParameterPole(f"zero factor in ({x!r}; q^{b})_{n}")
    return poch_ratio(num_specs, den_specs)


def _mono(v, m: QMonomial):
    return v * FactoredRational(m.to_qpoly())


def _ratio(num_monos, den_monos) -> FactoredRational:
    """prod (1 - x) / prod (1 - y) over monomials."""
    out = FactoredRational.one()
    for x in num_monos:
        out = out.mul_factor(x.phase, x.exp)
    for y in den_monos:
        if y.is_one():
            raise ParameterPole(f"factor 1 - {y!r} vanishes")
        out = out.div_factor(y.phase, y.exp)
    return out


class BaileyPair:
    """Sequences alpha, beta (callables on L >= 0) relative to (a, q^base)."""

    __slots__ = ("a", "base", "alpha", "beta")

    def __init__(self, a: QMonomial, base, alpha, beta):
        self.a = a
        self.base = Fraction(base)
        if self.base <= 0:
            raise ValueError("base exponent must be positive")
        self.alpha = lru_cache(maxsize=None)(alpha)
        self.beta = lru_cache(maxsize=None)(beta)

    def __repr__(self):
        return f"BaileyPair(a={self.a!r}, base={self.base})"


def unit_pair(a: QMonomial, base=1) -> BaileyPair:
    """The pair with beta_L = delta_{L,0}."""
    B = Fraction(base)

    def alpha(L):
        if L == 0:
            return FactoredRational.one()
        m = QMonomial(B * L * (L - 1) / 2, Fraction(L, 2))
        val = _ratio([a * QMonomial.qpow(2 * L * B)], [a])
        val = val * _pr([(a, L, B)], [(QMonomial.qpow(B), L, B)])
        return _mono(val, m)

    def beta(L):
        return FactoredRational.one() if L == 0 else FactoredRational.zero()

    return BaileyPair(a, B, alpha, beta)


# ---------------------------------------------------------------------------
# forward lemmas
# ---------------------------------------------------------------------------


def bl0(pair: BaileyPair, b, c) -> BaileyPair:
    """Insert two parameters b, c; (a, q) unchanged. b, c may be INF."""
    a, B = pair.a, pair.base
    Q = lambda e: QMonomial.qpow(e * B)
    if b is INF and c is not INF:
        b, c = c, b

    if c is INF and b is INF:
        def alpha(L):
            return _mono(pair.alpha(L), a ** L * Q(L * L))

        def beta(L):
            tot = FactoredRational.zero()
            for r in range(L + 1):
                t = _pr([(Q(-L), r, B)], [])
                t = _mono(t, (-(a * Q(L + 1))) ** r * Q(Fraction(r * (r - 1), 2)))
                tot = tot + t * pair.beta(r)
            return tot * _pr([], [(Q(1), L, B)])

    elif c is INF:
        def alpha(L):
            m = (-(a * Q(1) / b)) ** L * Q(Fraction(L * (L - 1), 2))
            return _mono(_pr([(b, L, B)], [(a * Q(1) / b, L, B)]) * pair.alpha(L), m)

        def beta(L):
            tot = FactoredRational.zero()
            for r in range(L + 1):
                t = _pr([(b, r, B), (Q(-L), r, B)], [])
                t = _mono(t, (a * Q(L) / b) ** r * Q(r))
                tot = tot + t * pair.beta(r)
            return tot * _pr([], [(Q(1), L, B), (a * Q(1) / b, L, B)])

    else:
        def alpha(L):
            val = _pr([(b, L, B), (c, L, B)],
                      [(a * Q(1) / b, L, B), (a * Q(1) / c, L, B)])
            return _mono(val * pair.alpha(L), (a * Q(1) / (b * c)) ** L)

        def beta(L):
            tot = FactoredRational.zero()
            for r in range(L + 1):
                t = _pr([(b, r, B), (c, r, B), (Q(-L), r, B)],
                        [(b * c * Q(-L) / a, r, B)])
                tot = tot + _mono(t, Q(r)) * pair.beta(r)
            pre = _pr([(a * Q(1) / (b * c), L, B)],
                      [(Q(1), L, B), (a * Q(1) / b, L, B), (a * Q(1) / c, L, B)])
            return tot * pre

    return BaileyPair(a, B, alpha, beta)


def bis1(pair: BaileyPair, b) -> BaileyPair:
    """(a, q) -> (a^2, q^2) with one free parameter b (INF allowed)."""
    a, B = pair.a, pair.base
    Q = lambda e: QMonomial.qpow(e * B)

    if b is INF:
        def alpha(L):
            return _mono(pair.alpha(L), a ** L * Q(L * L))

        def beta(L):
            tot = FactoredRational.zero()
            for r in range(2 * L + 1):
                t = _pr([(Q(-2 * L), r, 2 * B)], [])
                t = _mono(t, (-(a * Q(2 * L + 1))) ** r)
                tot = tot + t * pair.beta(r)
            return tot * _pr([], [(-(a * Q(1)), 2 * L, B), (Q(2), L, 2 * B)])

    else:
        def alpha(L):
            m = (-(a * Q(1) / b)) ** L * Q(Fraction(L * (L - 1), 2))
            return _mono(_pr([(b, L, B)], [(a * Q(1) / b, L, B)]) * pair.alpha(L), m)

        def beta(L):
            tot = FactoredRational.zero()
            for r in range(2 * L + 1):
                t = _pr([(b, r, B), (Q(-2 * L), r, 2 * B)],
                        [(-(b * Q(-2 * L) / a), r, B)])
                tot = tot + _mono(t, Q(r)) * pair.beta(r)
            pre = _pr([(-(a * Q(1) / b), 2 * L, B)],
                      [(-(a * Q(1)), 2 * L, B), (Q(2), L, 2 * B),
                       (a * a * Q(2) / (b * b), L, 2 * B)])
            return tot * pre

    return BaileyPair(a * a, 2 * B, alpha, beta)


def bis2(pair: BaileyPair) -> BaileyPair:
    """(a, q) -> (a^3, q^3); no free parameters."""
    a, B = pair.a, pair.base
    Q = lambda e: QMonomial.qpow(e * B)

    def alpha(L):
        return _mono(pair.alpha(L), a ** L * Q(L * L))

    def beta(L):
        tot = FactoredRational.zero()
        for r in range(3 * L + 1):
            t = _pr([(Q(-3 * L), r, 3 * B)], [(Q(-3 * L) / a, r, B)])
            tot = tot + _mono(t, Q(r)) * pair.beta(r)
        pre = _pr([(a * Q(1), 3 * L, B)],
                  [(Q(3), L, 3 * B), (a ** 3 * Q(3), 2 * L, 3 * B)])
        return tot * pre

    return BaileyPair(a ** 3, 3 * B, alpha, beta)


def bl2(pair: BaileyPair, b) -> BaileyPair:
    """(a, q^2) -> (a, q): halve the base. b is in the output base (INF ok)."""
    a, B2 = pair.a, pair.base
    B = B2 / 2
    Q = lambda e: QMonomial.qpow(e * B)

    if b is INF:
        def alpha(L):
            return pair.alpha(L // 2) if L % 2 == 0 else FactoredRational.zero()

        def beta(L):
            tot = FactoredRational.zero()
            for r in range(L // 2 + 1):
                t = _pr([(Q(-L), 2 * r, B)], [])
                tot = tot + _mono(t, Q(2 * r)) * pair.beta(r)
            pre = _pr([], [(Q(1), L, B), (a * Q(1), L, 2 * B)])
            return tot * _mono(pre, Q(Fraction(L * (L - 1), 2)))

    else:
        def alpha(L):
            if L % 2:
                return FactoredRational.zero()
            n = L // 2
            m = (-b) ** n * Q(n * n)
            val = _pr([(a * Q(1) / b, n, 2 * B)], [(b * Q(1), n, 2 * B)])
            return _mono(val * pair.alpha(n), m)

        def beta(L):
            tot = FactoredRational.zero()
            for r in range(L // 2 + 1):
                t = _pr([(a * Q(1) / b, r, 2 * B), (Q(-L), 2 * r, B)],
                        [(Q(2 - 2 * L) / b, r, 2 * B)])
                tot = tot + _mono(t, Q(2 * r)) * pair.beta(r)
            pre = _pr([(b, L, 2 * B)],
                      [(Q(1), L, B), (b, L, B), (a * Q(1), L, 2 * B)])
            return tot * pre

    return BaileyPair(a, B, alpha, beta)


def bl4(pair: BaileyPair) -> BaileyPair:
    """(a^2, q^4) -> (a, q): quarter the base, square root of a."""
    A, B4 = pair.a, pair.base
    B = B4 / 4
    a = A.root(2)
    Q = lambda e: QMonomial.qpow(e * B)

    def alpha(L):
        return pair.alpha(L // 2) if L % 2 == 0 else FactoredRational.zero()

    def beta(L):
        tot = FactoredRational.zero()
        for r in range(L // 2 + 1):
            t = _pr([(-(A * Q(2)), 2 * r, 2 * B), (Q(-2 * L), 2 * r, 2 * B)],
                    [(-Q(3 - 2 * L), 2 * r, 2 * B)])
            tot = tot + _mono(t, Q(4 * r)) * pair.beta(r)
        pre = _pr([(-Q(-1), L, 2 * B)],
                  [(Q(2), L, 2 * B), (a * Q(1), L, 2 * B)])
        return tot * _mono(pre, Q(L))

    return BaileyPair(a, B, alpha, beta)


def bl4p(pair: BaileyPair) -> BaileyPair:
    """Companion of bl4 with a shifted alpha weight."""
    A, B4 = pair.a, pair.base
    B = B4 / 4
    a = A.root(2)
    Q = lambda e: QMonomial.qpow(e * B)

    def alpha(L):
        if L % 2:
            return FactoredRational.zero()
        n = L // 2
        val = _ratio([-a], [-(a * Q(4 * n))])
        return _mono(val * pair.alpha(n), Q(2 * n))

    def beta(L):
        tot = FactoredRational.zero()
        for r in range(L // 2 + 1):
            t = _pr([(-a, 2 * r, 2 * B), (Q(-2 * L), 2 * r, 2 * B)],
                    [(-Q(1 - 2 * L), 2 * r, 2 * B)])
            tot = tot + _mono(t, Q(4 * r)) * pair.beta(r)
        pre = _pr([(-Q(1), L, 2 * B)],
                  [(Q(2), L, 2 * B), (a * Q(1), L, 2 * B)])
        return tot * pre

    return BaileyPair(a, B, alpha, beta)


def bl3(pair: BaileyPair) -> BaileyPair:
    """(a, q^3) -> (a, q): third the base, a unchanged."""
    a, B3 = pair.a, pair.base
    B = B3 / 3
    Q = lambda e: QMonomial.qpow(e * B)

    def alpha(L):
        if L % 3:
            return FactoredRational.zero()
        n = L // 3
        return _mono(pair.alpha(n), a ** n * Q(3 * n * n))

    def beta(L):
        tot = FactoredRational.zero()
        for r in range(L // 3 + 1):
            t = _pr([(Q(-L), 3 * r, B)], [(Q(3 - 3 * L) / a, r, 3 * B)])
            tot = tot + _mono(t, Q(3 * r)) * pair.beta(r)
        pre = _pr([(a, L, 3 * B)], [(Q(1), L, B), (a, 2 * L, B)])
        return tot * pre

    return BaileyPair(a, B, alpha, beta)


def odd2(pair: BaileyPair, b) -> BaileyPair:
    """Odd-index variant of bl2: (a q^2, q^2) -> (a, q), alpha'_0 = beta'_0 = 0.

    The input pair is relative to (a q^2, q^2) in the output base, so the
    output a is the input one divided by q^(2 * output base).
    """
    A, B2 = pair.a, pair.base
    B = B2 / 2
    Q = lambda e: QMonomial.qpow(e * B)
    a = A / Q(2)

    if b is INF:
        def alpha(L):
            return pair.alpha((L - 1) // 2) if L % 2 else FactoredRational.zero()

        def beta(L):
            if L == 0:
                return FactoredRational.zero()
            n = L - 1
            tot = FactoredRational.zero()
            for r in range(n // 2 + 1):
                t = _pr([(Q(-n), 2 * r, B)], [])
                tot = tot + _mono(t, Q(2 * r)) * pair.beta(r)
            pre = _pr([], [(Q(1), n, B), (a * Q(3), n, 2 * B),
                           (a * Q(1), 2, B)])
            return tot * _mono(pre, Q(Fraction(n * (n - 1), 2)))

    else:
        def alpha(L):
            if L % 2 == 0:
                return FactoredRational.zero()
            n = (L - 1) // 2
            m = (-b) ** n * Q(n * n)
            val = _pr([(a * Q(3) / b, n, 2 * B)], [(b * Q(1), n, 2 * B)])
            return _mono(val * pair.alpha(n), m)

        def beta(L):
            if L == 0:
                return FactoredRational.zero()
            n = L - 1
            tot = FactoredRational.zero()
            for r in range(n // 2 + 1):
                t = _pr([(a * Q(3) / b, r, 2 * B), (Q(-n), 2 * r, B)],
                        [(Q(2 - 2 * n) / b, r, 2 * B)])
                tot = tot + _mono(t, Q(2 * r)) * pair.beta(r)
            pre = _pr([(b, n, 2 * B)],
                      [(Q(1), n, B), (b, n, B), (a * Q(3), n, 2 * B),
                       (a * Q(1), 2, B)])
            return tot * pre

    return BaileyPair(a, B, alpha, beta)


# ---------------------------------------------------------------------------
# left inverses
# ---------------------------------------------------------------------------


def inv_bl2(pair: BaileyPair, b) -> BaileyPair:
    """Left inverse of bl2: (a, q) -> (a, q^2). b in the input base."""
    if b is INF:
        raise LimitNotSupported("inv_bl2 has no cataloged b -> INF limit")
    a, B = pair.a, pair.base
    Q = lambda e: QMonomial.qpow(e * B)

    def alpha(L):
        m = (-(QMonomial(0) / b)) ** L * Q(-L * L)
        val = _pr([(b * Q(1), L, 2 * B)], [(a * Q(1) / b, L, 2 * B)])
        return _mono(val * pair.alpha(2 * L), m)

    def beta(L):
        tot = FactoredRational.zero()
        for r in range(2 * L + 1):
            t = _pr([(a * Q(1), r, 2 * B), (b * Q(1), r, B), (Q(-2 * L), r, B)],
                    [(b * Q(2 - 2 * L), r, 2 * B)])
            tot = tot + _mono(t, Q(r)) * pair.beta(r)
        pre = _pr([(QMonomial(0) / b, L, 2 * B)],
                  [(Q(1), 2 * L, B), (a * Q(1) / b, L, 2 * B)])
        return tot * pre

    return BaileyPair(a, 2 * B, alpha, beta)


def inv_bl4(pair: BaileyPair) -> BaileyPair:
    """Left inverse of bl4: (a, q) -> (a^2, q^4)."""
    a, B = pair.a, pair.base
    Q = lambda e: QMonomial.qpow(e * B)

    def alpha(L):
        return pair.alpha(2 * L)

    def beta(L):
        tot = FactoredRational.zero()
        for r in range(2 * L + 1):
            t = _pr([(a * Q(1), r, 2 * B), (Q(-4 * L), r, 2 * B)],
                    [(-Q(1 - 4 * L), r, 2 * B)])
            tot = tot + _mono(t, Q(r)) * pair.beta(r)
        pre = _pr([(-Q(1), 2 * L, 2 * B)],
                  [(Q(2), 2 * L, 2 * B), (-(a * Q(2)), 2 * L, 2 * B)])
        return tot * pre

    return BaileyPair(a * a, 4 * B, alpha, beta)


def inv_bl4p(pair: BaileyPair) -> BaileyPair:
    """Left inverse of bl4p: (a, q) -> (a^2, q^4)."""
    a, B = pair.a, pair.base
    Q = lambda e: QMonomial.qpow(e * B)

    def alpha(L):
        val = _ratio([-(a * Q(4 * L))], [-a])
        return _mono(val * pair.alpha(2 * L), Q(-2 * L))

    def beta(L):
        tot = FactoredRational.zero()
        for r in range(2 * L + 1):
            t = _pr([(a * Q(1), r, 2 * B), (Q(-4 * L), r, 2 * B)],
                    [(-Q(3 - 4 * L), r, 2 * B)])
            tot = tot + _mono(t, Q(2 * r)) * pair.beta(r)
        pre = _pr([(-Q(-1), 2 * L, 2 * B)],
                  [(Q(2), 2 * L, 2 * B), (-a, 2 * L, 2 * B)])
        return tot * pre

    return BaileyPair(a * a, 4 * B, alpha, beta)


def inv_bl3(pair: BaileyPair) -> BaileyPair:
    """Left inverse of bl3: (a, q) -> (a, q^3)."""
    a, B = pair.a, pair.base
    Q = lambda e: QMonomial.qpow(e * B)

    def alpha(L):
        return _mono(pair.alpha(3 * L), a ** (-L) * Q(-3 * L * L))

    def beta(L):
        tot = FactoredRational.zero()
        for r in range(3 * L + 1):
            t = _pr([(a * Q(1), 2 * r, B), (Q(-3 * L), r, B)],
                    [(a * Q(3 - 3 * L), r, 3 * B)])
            tot = tot + _mono(t, Q(r)) * pair.beta(r)
        pre = _pr([(QMonomial(0) / a, L, 3 * B)], [(Q(1), 3 * L, B)])
        return tot * pre

    return BaileyPair(a, 3 * B, alpha, beta)


LEMMAS = {
    "bl0": (bl0, ("b", "c")),
    "bis1": (bis1, ("b",)),
    "bis2": (bis2, ()),
    "bl2": (bl2, ("b",)),
    "bl4": (bl4, ()),
    "bl4p": (bl4p, ()),
    "bl3": (bl3, ()),
    "odd2": (odd2, ("b",)),
    "inv_bl2": (inv_bl2, ("b",)),
    "inv_bl4": (inv_bl4, ()),
    "inv_bl4p": (inv_bl4p, ()),
    "inv_bl3": (inv_bl3, ()),
}


def apply_lemma(pair: BaileyPair, name: str, **params) -> BaileyPair:
    fn, wanted = LEMMAS[name]
    if set(params) != set(wanted):
        raise TypeError(f"{name} takes parameters {wanted}, got {tuple(params)}")
    return fn(pair, **params)


def verify_pair(pair: BaileyPair, depth: int, name="bailey-pair") -> VerificationReport:
    """Check the defining relation for all L <= depth."""
    a, B = pair.a, pair.base
    q1 = QMonomial.qpow(B)
    report = VerificationReport(name, params={"depth": depth, "a": repr(a),
                                              "base": str(B)})
    with Stopwatch() as sw:
        for L in range(depth + 1):
            lhs = FactoredRational.zero()
            for r in range(L + 1):
                w = _pr([], [(q1, L - r, B), (a * q1, L + r, B)])
                lhs = lhs + w * pair.alpha(r)
            diff = lhs - pair.beta(L)
            ok = diff.num.is_zero()
            report.record((L,), ok, None if ok else diff)
            if not ok:
                break
    report.seconds = sw.elapsed
    return report


def _unit_input(name: str, a: QMonomial) -> BaileyPair:
    """Unit pair at the (a, base) each lemma consumes, for output slot a."""
    if name == "bl2":
        return unit_pair(a, 2)
    if name in ("bl4", "bl4p"):
        return unit_pair(a * a, 4)
    if name == "bl3":
        return unit_pair(a, 3)
    if name == "odd2":
        return unit_pair(a * QMonomial.qpow(2), 2)
    return unit_pair(a, 1)


def verify_lemma_grid(name: str, depth: int, exp_max: int = 3) -> VerificationReport:
    """Apply a lemma to unit pairs over a grid a in {±q^m}, b, c in {±q^m, INF}
    and check every output against the defining relation.

    Grid points where the lemma's closed form has a vanishing denominator
    factor are outside its domain and are skipped (counted in params).
    """
    fn, wanted = LEMMAS[name]
    a_values = [QMonomial(m, ph) for m in range(exp_max + 1)
                for ph in (Fraction(0), Fraction(1, 2))]
    p_values = [INF] + [QMonomial(m, ph) for m in range(-1, exp_max + 1)
                        for ph in (Fraction(0), Fraction(1, 2))]
    report = VerificationReport(f"bailey-{name}", params={"depth": depth,
                                                          "exp_max": exp_max})
    skips = 0
    with Stopwatch() as sw:
        import itertools
        for a in a_values:
            for ps in itertools.product(p_values, repeat=len(wanted)):
                try:
                    out = fn(_unit_input(name, a), *ps)
                    sub = verify_pair(out, depth)
                except (ParameterPole, LimitNotSupported):
                    skips += 1
                    continue
                where = (repr(a),) + tuple(repr(p) for p in ps)
                ok = sub.passed
                report.record(where, ok,
                              None if ok else sub.difference)
                if not ok:
                    break
    report.params["skipped"] = skips
    report.seconds = sw.elapsed
    return report


def pairs_agree(p1: BaileyPair, p2: BaileyPair, depth: int) -> bool:
    """Entrywise equality of two pairs (and their (a, base)) up to depth."""
    if p1.a != p2.a or p1.base != p2.base:
        return False
    for L in range(depth + 1):
        if (p1.alpha(L) - p2.alpha(L)).num.is_zero() is False:
            return False
        if (p1.beta(L) - p2.beta(L)).num.is_zero() is False:
            return False
    return True
