"""Doubly-bounded Rogers-Ramanujan polynomials and the Burge transform.

The building block is the product of two q-binomial coefficients

    B(L, M, a, b) = [L+M+a-b, L+a] [L+M-a+b, L-a]

together with its asymmetric extension B_{r,s}.  The Burge transform
turns an alternating B-sum into another one with shifted (a, b); two
applications connect the doubly-bounded Rogers-Ramanujan identities to
triple sums that survive the M -> oo limit.

Both transforms carry admissibility conditions on (L, a, b, r, s); the
verification drivers skip and tally parameter choices that violate
them instead of counting the (possibly false) identity as a failure.
"""

from dataclasses import dataclass
from fractions import Fraction

from ..qcomb import qbinom, qfac
from ..qpoly import QPoly
from ..report import Stopwatch, VerificationReport

__all__ = [
    "BurgeSpec",
    "a_script",
    "alm_sides",
    "asw_sides",
    "aswvar_sides",
    "btrafo2_admissible",
    "btrafo2_sides",
    "btrafo_admissible",
    "btrafo_sides",
    "burge_b",
    "burge_eval",
    "burge_verify",
    "c_script",
    "clm_sides",
    "intermediate2_sides",
    "intermediate_sides",
]


def _bin(n: int, r: int) -> QPoly:
    if n < 0 or r < 0 or r > n:
        return QPoly.ZERO
    return qbinom(n, r)


def burge_b(L: int, M: int, a: int, b: int, r: int = 0, s: int = 0) -> QPoly:
    """B_{r,s}(L, M, a, b); r = s = 0 gives the symmetric block."""
    return _bin(L + M + a - b, L + a) * _bin(L + M - a + b + r + s, L - a + r)


@dataclass(frozen=True)
class BurgeSpec:
    """Arguments of one Burge-transform application."""

    L: int
    M: int
    a: int
    b: int
    r: int = 0
    s: int = 0

    def admissible(self) -> bool:
        if self.r == 0 and self.s == 0:
            return btrafo_admissible(self.L, self.M, self.a, self.b)
        return btrafo2_admissible(self.L, self.M, self.a, self.b, self.r, self.s)


def burge_eval(spec: BurgeSpec) -> QPoly:
    return burge_b(spec.L, spec.M, spec.a, spec.b, spec.r, spec.s)


def btrafo_admissible(L: int, M: int, a: int, b: int) -> bool:
    """Symmetric Burge transform hypothesis.

    The transform fails exactly when one of two inequality chains holds;
    the second chain is the image of the first under negating (a, b).
    """
    if -L + a <= -b <= L + a < b <= M:
        return False
    if -L - a <= b <= L - a < -b <= M:
        return False
    return True


def btrafo2_admissible(L: int, M: int, a: int, b: int, r: int, s: int) -> bool:
    """Asymmetric Burge transform hypothesis (inequality-chain form)."""
    if -L + a - r <= -b <= L + a < b + s <= M + s:
        return False
    if -L - a <= b <= L - a + r < -b - s <= M:
        return False
    return True


def btrafo_sides(L: int, M: int, a: int, b: int):
    """sum_i q^(i^2) [2L+M-i, 2L] B(L-i, i, a, b) = q^(b^2) B(L, M, a+b, b)."""
    lhs = QPoly.ZERO
    for i in range(M + 1):
        lhs = lhs + (_bin(2 * L + M - i, 2 * L)
                     * burge_b(L - i, i, a, b)).times_qpow(i * i)
    rhs = burge_b(L, M, a + b, b).times_qpow(b * b)
    return lhs, rhs


def btrafo2_sides(L: int, M: int, a: int, b: int, r: int, s: int):
    """Asymmetric transform onto B_{r,s}(L, M, a+b, b)."""
    lhs = QPoly.ZERO
    for i in range(max(b, -b - s), M + 1):
        lhs = lhs + (_bin(2 * L + M + r - i, 2 * L + r)
                     * burge_b(L - i - s, i, a, b, r + s, s)).times_qpow(i * (i + s))
    rhs = burge_b(L, M, a + b, b, r, s).times_qpow(b * (b + s))
    return lhs, rhs


def _alternating(L, M, exponent, block):
    """sum_j (-1)^j q^exponent(j) block(j) over all j with a nonzero block."""
    out = QPoly.ZERO
    bound = L + M + 2
    for j in range(-bound, bound + 1):
        p = block(j)
        if p.is_zero():
            continue
        t = p.times_qpow(exponent(j))
        out = out + (t if j % 2 == 0 else -t)
    return out


def asw_sides(L: int, M: int, sigma: int):
    """Doubly-bounded Rogers-Ramanujan pair (sigma = 0, 1)."""
    lhs = _alternating(L, M, lambda j: Fraction(j * (5 * j + 2 * sigma + 1), 2),
                       lambda j: burge_b(L, M, j, j))
    rhs = QPoly.ZERO
    for n in range(min(L, M) + 1):
        t = qfac(L + M).exact_div(qfac(L - n) * qfac(M - n) * qfac(n))
        rhs = rhs + t.times_qpow(n * (n + sigma))
    return lhs, rhs


def aswvar_sides(L: int, M: int):
    """Shifted variant with B_{0,1}; same right side as sigma = 1."""
    lhs = _alternating(L, M, lambda j: Fraction(j * (5 * j + 3), 2),
                       lambda j: burge_b(L, M, j, j, 0, 1))
    rhs = QPoly.ZERO
    for n in range(min(L, M) + 1):
        t = qfac(L + M).exact_div(qfac(L - n) * qfac(M - n) * qfac(n))
        rhs = rhs + t.times_qpow(n * (n + 1))
    return lhs, rhs


def intermediate_sides(L: int, M: int, sigma: int):
    """One Burge transform applied to the doubly-bounded pair."""
    lhs = _alternating(L, M, lambda j: Fraction(j * (7 * j + 2 * sigma + 1), 2),
                       lambda j: burge_b(L, M, 2 * j, j))
    rhs = QPoly.ZERO
    for n1 in range(L + 1):
        for n2 in range(min(n1, L - n1) + 1):
            t = qfac(L).exact_div(qfac(L - n1 - n2) * qfac(n1 - n2) * qfac(n2))
            t = t * _bin(2 * L + M - n1, 2 * L)
            rhs = rhs + t.times_qpow(n1 * n1 + n2 * n2 + sigma * n2)
    return lhs, rhs


def intermediate2_sides(L: int, M: int):
    """One asymmetric Burge transform applied to the shifted variant."""
    lhs = _alternating(L, M, lambda j: Fraction(j * (7 * j + 5), 2),
                       lambda j: burge_b(L, M, 2 * j + 1, j, 1, 1))
    rhs = QPoly.ZERO
    for n1 in range(L + 1):
        for n2 in range(min(n1, L - n1) + 1):
            t = qfac(L).exact_div(qfac(L - n1 - n2) * qfac(n1 - n2) * qfac(n2))
            t = t * _bin(2 * L + M - n1 + 1, 2 * L + 1)
            rhs = rhs + t.times_qpow(n1 * n1 + n2 * n2 + n1 + n2)
    return lhs, rhs


def _triple_rhs(L, M, sigma, shifted):
    """Triple sum over n1, n2, n3 >= 0 with N1 + N2 + N3 <= L - shifted."""
    rhs = QPoly.ZERO
    top = L - shifted
    for n3 in range(top + 1):
        for n2 in range(top + 1):
            for n1 in range(top + 1):
                N1 = n1 + n2 + n3
                N2 = n2 + n3
                N3 = n3
                if N1 + N2 + N3 > top:
                    continue
                if shifted:
                    num = qfac(L - N1 - 1)
                    den = qfac(L - N1 - N2 - N3 - 1) * qfac(n2) * qfac(n3)
                    t = num.exact_div(den)
                    t = t * _bin(2 * L + M - N1, 2 * L)
                    t = t * _bin(2 * L - N1 - N2 - 1, 2 * L - 2 * N1 - 1)
                    e = N1 * N1 + N2 * N2 + N3 * N3 + N1 + N2 + N3
                else:
                    num = qfac(L - N1)
                    den = qfac(L - N1 - N2 - N3) * qfac(n2) * qfac(n3)
                    t = num.exact_div(den)
                    t = t * _bin(2 * L + M - N1, 2 * L)
                    t = t * _bin(2 * L - N1 - N2, 2 * L - 2 * N1)
                    e = N1 * N1 + N2 * N2 + N3 * N3 + sigma * N3
                rhs = rhs + t.times_qpow(e)
    return rhs


def alm_sides(L: int, M: int, sigma: int):
    """Twice-transformed pair: alternating B(L, M, 3j, j) sum vs triple sum."""
    lhs = _alternating(L, M, lambda j: Fraction(j * (9 * j + 2 * sigma + 1), 2),
                       lambda j: burge_b(L, M, 3 * j, j))
    return lhs, _triple_rhs(L, M, sigma, shifted=False)


def clm_sides(L: int, M: int):
    """Asymmetric companion: alternating B_{0,1}(L, M, 3j+1, j) sum."""
    lhs = _alternating(L, M, lambda j: Fraction(j * (9 * j + 7), 2),
                       lambda j: burge_b(L, M, 3 * j + 1, j, 0, 1))
    return lhs, _triple_rhs(L, M, 0, shifted=True)


def a_script(L: int, M: int) -> QPoly:
    """The conjecturally nonnegative alternating sum over B(L, M, 3j, j)."""
    lhs, _ = alm_sides(L, M, 0)
    return lhs


def c_script(L: int, M: int) -> QPoly:
    """The conjecturally nonnegative alternating sum over B_{0,1}(L, M, 3j+1, j)."""
    lhs, _ = clm_sides(L, M)
    return lhs


_EQUATIONS = {
    "asw0": lambda L, M: asw_sides(L, M, 0),
    "asw1": lambda L, M: asw_sides(L, M, 1),
    "aswvar": aswvar_sides,
    "intermediate0": lambda L, M: intermediate_sides(L, M, 0),
    "intermediate1": lambda L, M: intermediate_sides(L, M, 1),
    "intermediate2": intermediate2_sides,
    "alm0": lambda L, M: alm_sides(L, M, 0),
    "alm1": lambda L, M: alm_sides(L, M, 1),
    "clm": clm_sides,
}


def burge_verify(eq: str, L_max: int = 12, M_max: int = 12,
                 ab_range: int = 3) -> VerificationReport:
    """Check one Burge-family identity over a grid.

    For the two transforms the grid also runs over (a, b) (and (r, s)
    for the asymmetric one); parameter choices failing the
    admissibility predicates are skipped and tallied.
    """
    report = VerificationReport(f"burge-{eq}",
                                params={"L_max": L_max, "M_max": M_max, "skipped": 0})
    with Stopwatch() as sw:
        for L in range(L_max + 1):
            for M in range(M_max + 1):
                if eq == "btrafo":
                    for a in range(-ab_range, ab_range + 1):
                        for b in range(-ab_range, ab_range + 1):
                            if not btrafo_admissible(L, M, a, b):
                                report.params["skipped"] += 1
                                continue
                            lhs, rhs = btrafo_sides(L, M, a, b)
                            diff = lhs - rhs
                            ok = diff.is_zero()
                            report.record((L, M, a, b), ok, None if ok else diff)
                            if not ok:
                                report.seconds = sw.elapsed
                                return report
                elif eq == "btrafo2":
                    for a in range(-ab_range, ab_range + 1):
                        for b in range(-ab_range, ab_range + 1):
                            for r, s in ((0, 1), (1, 1), (2, 1), (0, 2)):
                                if not btrafo2_admissible(L, M, a, b, r, s):
                                    report.params["skipped"] += 1
                                    continue
                                lhs, rhs = btrafo2_sides(L, M, a, b, r, s)
                                diff = lhs - rhs
                                ok = diff.is_zero()
                                report.record((L, M, a, b, r, s), ok,
                                              None if ok else diff)
                                if not ok:
                                    report.seconds = sw.elapsed
                                    return report
                else:
                    lhs, rhs = _EQUATIONS[eq](L, M)
                    diff = lhs - rhs
                    ok = diff.is_zero()
                    report.record((L, M), ok, None if ok else diff)
                    if not ok:
                        report.seconds = sw.elapsed
                        return report
    report.seconds = sw.elapsed
    return report
