"""Rogers-Szego polynomials and their quartic-kernel representation.

H_n(t) = sum_j t^j [n, j] has a second expression as a single sum over
r with quadratic t-powers and two Pochhammer factors in base q^2.  Both
sides are polynomials in t of degree at most n (with coefficients in
q), so checking them at the n+1 probe values t = q^0, ..., q^n proves
the identity for that n.
"""

from fractions import Fraction

from ..qcomb import QMonomial, binom2, poch_poly, qbinom
from ..qpoly import QPoly
from ..report import Stopwatch, VerificationReport

__all__ = [
    "even_sides",
    "rs_def",
    "rs_quad",
    "t4_display_sides",
    "t4b_display_sides",
    "verify_rs",
    "verify_rs_displays",
]

HALF = Fraction(1, 2)


def rs_def(n: int, t: QMonomial) -> QPoly:
    """H_n(t) = sum_j t^j [n, j]."""
    out = QPoly.ZERO
    for j in range(n + 1):
        out = out + (t ** j).to_qpoly() * qbinom(n, j)
    return out


def rs_quad(n: int, t: QMonomial) -> QPoly:
    """H_n(t) as a single sum with base q^2 Pochhammer factors."""
    h = (n + 1) // 2
    mqt = -(QMonomial.qpow(1) / t)  # -q/t
    out = QPoly.ZERO
    for r in range(n // 2 + 1):
        term = (t ** (2 * r)).to_qpoly() * poch_poly(mqt, r, 2)
        term = term * poch_poly(-t, h - r, 2) * qbinom(n // 2, r, 2)
        out = out + term
    return out


def t4_display_sides(L: int):
    """sum_j q^j [2L, L-j] as a single sum over r in base q^2."""
    lhs = QPoly.ZERO
    for j in range(-L, L + 1):
        lhs = lhs + qbinom(2 * L, L - j).times_qpow(j)
    rhs = QPoly.ZERO
    for r in range(L + 1):
        term = poch_poly(QMonomial(2, HALF), r, 2)
        term = term * poch_poly(QMonomial(-1, HALF), L - r, 2) * qbinom(L, r, 2)
        rhs = rhs + term.times_qpow(L - 2 * r)
    return lhs, rhs


def t4b_display_sides(L: int):
    """(1/2) sum_j [2L, L-j] as a single sum over r in base q^2.

    The q^(2j)/(1+q^(2j)) weight of the quartic companion kernel pairs
    off under j -> -j, leaving half the plain binomial row sum.
    """
    half = QPoly.const(HALF)
    lhs = QPoly.ZERO
    for j in range(-L, L + 1):
        lhs = lhs + qbinom(2 * L, L - j)
    lhs = half * lhs
    rhs = QPoly.ZERO
    for r in range(L + 1):
        term = poch_poly(QMonomial(0, HALF), r, 2)
        term = term * poch_poly(QMonomial(1, HALF), L - r, 2) * qbinom(L, r, 2)
        rhs = rhs + term
    return lhs, half * rhs


def even_sides(n: int, j: int):
    """sum_k q^C(j-2k,2) (-q;q)_(j-2k) [n-k, j-2k]_{q^2} [n, k]_{q^2} = [2n, j]."""
    lhs = QPoly.ZERO
    for k in range(max(0, j - n), j // 2 + 1):
        term = poch_poly(QMonomial(1, HALF), j - 2 * k, 1)
        term = term * qbinom(n - k, j - 2 * k, 2) * qbinom(n, k, 2)
        lhs = lhs + term.times_qpow(binom2(j - 2 * k))
    return lhs, qbinom(2 * n, j)


def verify_rs(n_max: int = 40) -> VerificationReport:
    """Probe equality of the two H_n(t) forms, the recurrence, and the
    classical specializations at t = -1 and t = -q."""
    report = VerificationReport("rogers-szego", params={"n_max": n_max})
    with Stopwatch() as sw:
        probes = [QMonomial.qpow(e) for e in range(n_max + 2)]
        for n in range(n_max + 1):
            for e, t in enumerate(probes[: n + 1]):
                diff = rs_def(n, t) - rs_quad(n, t)
                ok = diff.is_zero()
                report.record((n, "probe", e), ok, None if ok else diff)
                if not ok:
                    report.seconds = sw.elapsed
                    return report
        for n in range(1, n_max):
            # the recurrence is an identity of degree n+1 in t
            for e, t in enumerate(probes[: n + 2]):
                lhs = rs_quad(n + 1, t)
                rhs = ((QPoly.ONE + t.to_qpoly()) * rs_quad(n, t)
                       - (QPoly.ONE - QPoly.qpow(n)) * t.to_qpoly() * rs_quad(n - 1, t))
                diff = lhs - rhs
                ok = diff.is_zero()
                report.record((n, "rec", e), ok, None if ok else diff)
                if not ok:
                    report.seconds = sw.elapsed
                    return report
        minus_one = QMonomial(0, HALF)
        minus_q = QMonomial(1, HALF)
        for n in range(n_max + 1):
            checks = [
                ("at-minus-q", rs_quad(n, minus_q) - poch_poly(QMonomial.qpow(1), (n + 1) // 2, 2)),
            ]
            if n % 2 == 0:
                checks.append(
                    ("even-at-minus-one",
                     rs_quad(n, minus_one) - poch_poly(QMonomial.qpow(1), n // 2, 2)))
            else:
                checks.append(("odd-at-minus-one", rs_quad(n, minus_one)))
            for tag, diff in checks:
                ok = diff.is_zero()
                report.record((n, tag), ok, None if ok else diff)
                if not ok:
                    report.seconds = sw.elapsed
                    return report
    report.seconds = sw.elapsed
    return report


def verify_rs_displays(L_max: int = 20) -> VerificationReport:
    """The two quartic-kernel displays and the doubled-binomial identity."""
    report = VerificationReport("rogers-szego-displays", params={"L_max": L_max})
    with Stopwatch() as sw:
        for L in range(L_max + 1):
            for tag, (lhs, rhs) in (("t4", t4_display_sides(L)),
                                    ("t4b", t4b_display_sides(L))):
                diff = lhs - rhs
                ok = diff.is_zero()
                report.record((L, tag), ok, None if ok else diff)
                if not ok:
                    report.seconds = sw.elapsed
                    return report
        for n in range(L_max + 1):
            for j in range(2 * n + 1):
                lhs, rhs = even_sides(n, j)
                diff = lhs - rhs
                ok = diff.is_zero()
                report.record((n, j, "even"), ok, None if ok else diff)
                if not ok:
                    report.seconds = sw.elapsed
                    return report
    report.seconds = sw.elapsed
    return report
