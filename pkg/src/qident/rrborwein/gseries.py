"""Alternating q-binomial sums G(N, M; alpha, beta, K) and their invariants.

G(N, M; alpha, beta, K; q) = sum_j (-1)^j q^(Kj((alpha+beta)j+alpha-beta)/2)
[M+N, N-Kj], with G(L; ...) shorthand for the symmetric case N = M = L.
Rational alpha, beta, K are allowed; the exponents are then rational and
are carried exactly by the QPoly denominator.  Terms where Kj is not an
integer have a vanishing binomial and are skipped.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from ..qcomb import qbinom
from ..qpoly import QPoly
from ..report import Stopwatch, VerificationReport

__all__ = [
    "GSpec",
    "g_eval",
    "g_limit_series",
    "g_poly",
    "g_poly2",
    "verify_g_duality",
    "verify_g_symmetry",
]


@dataclass(frozen=True)
class GSpec:
    """Parameters of an alternating sum G(N, M; alpha, beta, K; q^base)."""

    alpha: Fraction
    beta: Fraction
    K: Fraction
    base: Fraction = Fraction(1)
    N: int | None = None  # asymmetric upper entries; None means N = M = L
    M: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        object.__setattr__(self, "K", Fraction(self.K))
        object.__setattr__(self, "base", Fraction(self.base))
        if self.K <= 0:
            raise ValueError("K must be positive")


def g_poly2(N, M, alpha, beta, K, base=1) -> QPoly:
    """The two-argument sum sum_j (-1)^j q^(b*Kj((a+b)j+a-b)/2) [M+N, N-Kj]."""
    alpha, beta, K, base = map(Fraction, (alpha, beta, K, base))
    out = QPoly.ZERO
    j = -((M // K).__floor__()) if K else 0
    # j must satisfy -M <= Kj <= N for a nonzero binomial
    jmin = -(Fraction(M) / K).__floor__()
    jmax = (Fraction(N) / K).__floor__()
    for j in range(jmin, jmax + 1):
        kj = K * j
        if kj.denominator != 1:
            continue
        e = base * K * j * ((alpha + beta) * j + alpha - beta) / 2
        b = qbinom(M + N, N - kj.numerator, base)
        if b.is_zero():
            continue
        term = b.times_qpow(e)
        out = out + (term if j % 2 == 0 else -term)
    return out


def g_poly(L, alpha, beta, K, base=1) -> QPoly:
    """G(L; alpha, beta, K; q^base), the symmetric N = M = L case."""
    return g_poly2(L, L, alpha, beta, K, base)


def g_eval(spec: GSpec, L: int) -> QPoly:
    if spec.N is None and spec.M is None:
        return g_poly(L, spec.alpha, spec.beta, spec.K, spec.base)
    N = L if spec.N is None else spec.N
    M = L if spec.M is None else spec.M
    return g_poly2(N, M, spec.alpha, spec.beta, spec.K, spec.base)


def g_limit_series(alpha, beta, K, order, base=1) -> QPoly:
    """The numerator theta series of lim_L G(L; alpha, beta, K; q^base).

    As L grows, [2L, L-Kj] tends to 1/(q^base; q^base)_inf, so the limit is
    this theta sum divided by (q^base; q^base)_inf.  Only terms with
    exponent below ``order`` are kept.
    """
    alpha, beta, K, base = map(Fraction, (alpha, beta, K, base))
    order = Fraction(order)
    out = QPoly.ZERO
    for sign in (1, -1):
        j = 0 if sign == 1 else -1
        while True:
            kj = K * j
            e = base * K * j * ((alpha + beta) * j + alpha - beta) / 2
            if e >= order and abs(j) * K >= max(alpha, beta, 1):
                break
            if kj.denominator == 1 and e < order:
                out = out + QPoly.monomial(1 if j % 2 == 0 else -1, e)
            j += sign
    return out


def _reciprocal(p: QPoly) -> QPoly:
    """q -> 1/q."""
    return p.substitute(-1)


def verify_g_symmetry(L_max=16, cases=40, rng_seed=0) -> VerificationReport:
    """G(L; alpha, beta, K) = G(L; beta, alpha, K) on random rational specs."""
    report = VerificationReport("g-symmetry", params={"L_max": L_max, "cases": cases})
    rng = random.Random(rng_seed)
    with Stopwatch() as sw:
        for _ in range(cases):
            K = Fraction(rng.randint(1, 6))
            den = rng.choice([1, 2, 3])
            alpha = Fraction(rng.randint(0, 6 * den), den)
            beta = Fraction(rng.randint(0, 6 * den), den)
            L = rng.randint(0, L_max)
            diff = g_poly(L, alpha, beta, K) - g_poly(L, beta, alpha, K)
            ok = diff.is_zero()
            report.record((L, str(alpha), str(beta), str(K)), ok, None if ok else diff)
            if not ok:
                break
    report.seconds = sw.elapsed
    return report


def verify_g_duality(L_max=16, cases=40, rng_seed=1) -> VerificationReport:
    """G(L; alpha, beta, K; 1/q) = q^(-L^2) G(L; K-beta, K-alpha, K; q)."""
    report = VerificationReport("g-duality", params={"L_max": L_max, "cases": cases})
    rng = random.Random(rng_seed)
    with Stopwatch() as sw:
        for _ in range(cases):
            K = Fraction(rng.randint(1, 6))
            den = rng.choice([1, 2, 3])
            alpha = Fraction(rng.randint(0, K.numerator * den), den)
            beta = Fraction(rng.randint(0, K.numerator * den), den)
            L = rng.randint(0, L_max)
            lhs = _reciprocal(g_poly(L, alpha, beta, K))
            rhs = g_poly(L, K - beta, K - alpha, K).times_qpow(-L * L)
            diff = lhs - rhs
            ok = diff.is_zero()
            report.record((L, str(alpha), str(beta), str(K)), ok, None if ok else diff)
            if not ok:
                break
    report.seconds = sw.elapsed
    return report
