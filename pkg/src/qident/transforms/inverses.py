"""Inverses of the positivity-preserving transformation kernels.

For the sym2-shaped kernels the inverse is another lower-triangular family
f~ with  sum_r f~_{L,r} f_{r,s} = delta_{L,s}  (and the same in the other
order).  The cubic kernel only has a left-inverse.  Each inverse also has a
standalone q-binomial identity of the shape

    (weights) sum_r f~_{L,r}(q) [2r, r-j] = (weights) [L, (L-j)/2]_{q^k} chi(...)

and both views are verified: the delta relation in both orders, and the
displayed identity itself.
"""

from __future__ import annotations

from fractions import Fraction

from ..qcomb import binom2, poch_poly, qbinom, qfac
from ..qpoly import FactoredRational, QMonomial, QPoly
from ..report import Stopwatch, VerificationReport
from .kernels import _tree_sum

HALF = Fraction(1, 2)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _fr(p: QPoly) -> FactoredRational:
    return FactoredRational.from_qpoly(p)


def _over_qfac(p: QPoly, n: int, base=1) -> FactoredRational:
    out = FactoredRational.from_qpoly(p)
    b = Fraction(base)
    for j in range(1, n + 1):
        out = out.div_factor(Fraction(0), j * b)
    return out


# --- the inverse pairs, in the normalization in which the delta relation holds


def _pair_t2(L, r):
    f = _fr(poch_poly(QMonomial.neg_qpow(1), L - r) * qbinom(L, r, 2))
    ft = f * _fr(QPoly.monomial(_sign(L + r), binom2(L - r)))
    return f, ft


def _pair_t2b(L, r):
    n = L - r
    f = _over_qfac(
        QPoly.binomial_factor(HALF, L) * poch_poly(QMonomial.neg_qpow(r + 2), n - 1, 2),
        n,
    ) if n >= 1 else _fr(QPoly.ONE)
    ft = _over_qfac(
        QPoly.monomial(_sign(L + r), binom2(n))
        * poch_poly(QMonomial.neg_qpow(2 * r - L + 2), n, 2),
        n,
    )
    return f, ft


def _pair_t2c(L, r):
    n = L - r
    f = _over_qfac(poch_poly(QMonomial.neg_qpow(r + 1), n, 2), n)
    ft = _over_qfac(
        QPoly.monomial(_sign(L + r), binom2(n))
        * poch_poly(QMonomial.neg_qpow(2 * r - L + 3), n, 2),
        n,
    )
    return f, ft


def _pair_quartic(a_exp):
    def pair(L, r):
        n = L - r
        f = _over_qfac(
            poch_poly(QMonomial.neg_qpow(a_exp), n, 2).times_qpow(a_exp * r),
            n,
            2,
        ) * _fr(QPoly.const(_sign(r)))
        ft = _over_qfac(
            poch_poly(QMonomial.neg_qpow(-a_exp), n, 2).times_qpow(-a_exp * r),
            n,
            2,
        ) * _fr(QPoly.const(_sign(r)))
        return f, ft

    return pair


_PAIRS = {
    "t2": _pair_t2,
    "t2b": _pair_t2b,
    "t2c": _pair_t2c,
    "t4": _pair_quartic(-1),
    "t4b": _pair_quartic(1),
}

# parity constraint on (L, r) for the pair to be meaningful
_PAIR_PARITY = {"t2c"}


def _f_t3_plain(L, r):
    """The cubic kernel's f without its quadratic weight."""
    if L == 0 and r == 0:
        return _fr(QPoly.ONE)
    if r < 0 or 3 * r > L or (L - r) % 2:
        return FactoredRational.zero()
    num = qfac((L - r - 2) // 2, 3) * QPoly.binomial_factor(0, L)
    out = _fr(num)
    for j in range(1, r + 1):
        out = out.div_factor(Fraction(0), 3 * j)
    for j in range(1, (L - 3 * r) // 2 + 1):
        out = out.div_factor(Fraction(0), j)
    return out


def _ft_t3(L, r):
    """Left-inverse weights of the cubic kernel, L <= r <= 3L, r = L (2)."""
    if r < L or r > 3 * L or (L - r) % 2:
        return FactoredRational.zero()
    m = (3 * L - r) // 2
    p = QPoly.monomial(_sign((r + L) // 2), binom2(m)) * poch_poly(
        QMonomial.qpow(Fraction(3 * (r - L + 2), 2)), m, 3
    )
    return _over_qfac(p, m)


def inverse_kernel_eval(tag: str, L: int, r: int) -> FactoredRational:
    if tag == "t3":
        return _ft_t3(L, r)
    if tag not in _PAIRS:
        raise KeyError(f"kernel {tag!r} has no inverse")
    if r < 0 or r > L or (tag in _PAIR_PARITY and (L - r) % 2):
        return FactoredRational.zero()
    return _PAIRS[tag](L, r)[1]


def _delta_check(tag: str, L: int, s: int) -> bool:
    """sum_r f~_{L,r} f_{r,s} = delta_{L,s} and, where valid, the reversed order.

    The half-shifted quadratic pair is only a one-sided inverse, and only on
    the sublattice s = L (mod 2); the reversed order genuinely fails for it.
    """
    pair = _PAIRS[tag]
    left = []
    right = []
    for r in range(s, L + 1):
        left.append(pair(L, r)[1] * pair(r, s)[0])
        right.append(pair(L, r)[0] * pair(r, s)[1])
    want = FactoredRational.one() if L == s else FactoredRational.zero()
    if not (_tree_sum(left) - want).num.is_zero():
        return False
    if tag in _PAIR_PARITY:
        return True
    return (_tree_sum(right) - want).num.is_zero()


def _delta_check_t3(L: int, s: int) -> bool:
    """Left inverse only: sum_r f~_{L,r} f_{r,s} = delta_{L,s}."""
    terms = []
    for r in range(max(L, 3 * s), 3 * L + 1):
        if (r - L) % 2:
            continue
        ft = _ft_t3(L, r)
        f = _f_t3_plain(r, s)
        if ft.is_zero() or f.is_zero():
            continue
        terms.append(ft * f)
    want = FactoredRational.one() if L == s else FactoredRational.zero()
    return (_tree_sum(terms) - want).num.is_zero()


# --- the displayed inverse identities


def _inv_identity_sides(tag: str, L: int, j: int):
    """LHS and RHS of the displayed inverse identity, as FactoredRational."""
    chi = (L - j) % 2 == 0
    if tag == "t2":
        terms = []
        for r in range(abs(j), L + 1):
            b = qbinom(2 * r, r - j)
            if not b:
                continue
            p = (
                poch_poly(QMonomial.neg_qpow(1), L - r)
                * qbinom(L, r, 2)
                * b
            ).times_qpow(binom2(L - r))
            terms.append(_fr(p if (L + r) % 2 == 0 else -p))
        lhs = _tree_sum(terms) * _fr(QPoly.qpow(Fraction(-L * L, 2)))
        rhs = (
            _fr(qbinom(L, (L - j) // 2, 2).times_qpow(Fraction(-j * j, 2)))
            if chi
            else FactoredRational.zero()
        )
        return lhs, rhs
    if tag in ("t2b", "t2c"):
        shift = 2 if tag == "t2b" else 3
        terms = []
        for r in range(abs(j), L + 1):
            b = qbinom(2 * r, r - j)
            if not b:
                continue
            p = (
                poch_poly(QMonomial.neg_qpow(2 * r - L + shift), L - r, 2)
                * qbinom(L, r)
                * b
            ).times_qpow(binom2(L - r))
            terms.append(_fr(p if (L + r) % 2 == 0 else -p))
        lhs = _tree_sum(terms)
        if tag == "t2b":
            lhs = lhs * _fr(QPoly.qpow(Fraction(-L * L, 4)))
            rhs = (
                _fr(qbinom(L, (L - j) // 2, 2).times_qpow(Fraction(-j * j, 4)))
                if chi
                else FactoredRational.zero()
            )
            return lhs, rhs
        lhs = lhs * _fr(
            QPoly.binomial_factor(HALF, L).times_qpow(Fraction(-L * (L + 2), 4))
        )
        rhs = _fr(
            (QPoly.binomial_factor(HALF, j) * qbinom(L, (L - j) // 2, 2)).times_qpow(
                Fraction(-j * (j + 2), 4)
            )
        )
        return lhs, rhs
    if tag in ("t4", "t4b"):
        terms = []
        for r in range(abs(j), L + 1):
            b = qbinom(2 * r, r - j)
            if not b:
                continue
            if tag == "t4":
                p = poch_poly(QMonomial.neg_qpow(1), L - r, 2) * qbinom(L, r, 2) * b
            else:
                p = (
                    poch_poly(QMonomial.neg_qpow(-1), L - r, 2)
                    * qbinom(L, r, 2)
                    * b
                ).times_qpow(-r)
            terms.append(_fr(p if (L + r) % 2 == 0 else -p))
        lhs = _tree_sum(terms)
        if tag == "t4":
            rhs = _fr(qbinom(L, (L - j) // 2, 4)) if chi else FactoredRational.zero()
            return lhs, rhs
        lhs = lhs * _fr(QPoly.binomial_factor(HALF, 2 * L))
        rhs = (
            _fr(
                (QPoly.binomial_factor(HALF, 2 * j) * qbinom(L, (L - j) // 2, 4))
                .times_qpow(-j)
            )
            if chi
            else FactoredRational.zero()
        )
        return lhs, rhs
    if tag == "t3":
        terms = []
        for r in range(L, 3 * L + 1):
            if (r - j) % 2:
                continue
            b = qbinom(r, (r - 3 * j) // 2)
            if not b:
                continue
            terms.append(_ft_t3(L, r) * _fr(b))
        lhs = _tree_sum(terms) * _fr(QPoly.qpow(Fraction(-3 * L * L, 4)))
        rhs = _fr(qbinom(L, (L - j) // 2, 3).times_qpow(Fraction(-3 * j * j, 4)))
        return lhs, rhs
    raise KeyError(tag)


def verify_inverse(tag: str, L_max: int) -> VerificationReport:
    """Delta relations plus the displayed inverse identity, L <= L_max."""
    report = VerificationReport(f"inverse-{tag}", params={"L_max": L_max})
    parity_locked = tag in ("t2c", "t3")
    with Stopwatch() as sw:
        for L in range(L_max + 1):
            for s in range(L + 1):
                if parity_locked and (L - s) % 2:
                    continue
                ok = (
                    _delta_check_t3(L, s) if tag == "t3" else _delta_check(tag, L, s)
                )
                report.record(("delta", L, s), ok)
                if not ok:
                    report.seconds = getattr(sw, "elapsed", 0.0)
                    return report
            for j in range(-L, L + 1):
                if parity_locked and (L - j) % 2:
                    continue
                lhs, rhs = _inv_identity_sides(tag, L, j)
                diff = lhs - rhs
                ok = diff.num.is_zero()
                report.record(("identity", L, j), ok, None if ok else diff)
                if not ok:
                    report.seconds = getattr(sw, "elapsed", 0.0)
                    return report
    report.seconds = sw.elapsed
    return report


# --- the one-parameter family of triangular matrices behind the quartic pair


def m_entry(a: QMonomial, i: int, j: int) -> QPoly:
    """a^j (a; q^2)_{i-j} [i, j]_{q^2}, lower triangular in (i, j)."""
    if j < 0 or j > i:
        return QPoly.ZERO
    coeff = (a ** j).to_qpoly()
    return coeff * poch_poly(a, i - j, 2) * qbinom(i, j, 2)


def verify_m_group(a: QMonomial, b: QMonomial, n_max: int) -> VerificationReport:
    """M(a) M(b) = M(ab) entrywise for indices up to n_max."""
    report = VerificationReport("m-group", params={"n_max": n_max})
    ab = a * b
    with Stopwatch() as sw:
        for i in range(n_max + 1):
            for j in range(i + 1):
                acc = QPoly.ZERO
                for k in range(j, i + 1):
                    acc = acc + m_entry(a, i, k) * m_entry(b, k, j)
                diff = acc - m_entry(ab, i, j)
                ok = diff.is_zero()
                report.record((i, j), ok, None if ok else diff)
                if not ok:
                    report.seconds = getattr(sw, "elapsed", 0.0)
                    return report
    report.seconds = sw.elapsed
    return report
