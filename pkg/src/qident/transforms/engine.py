"""Iteration engine for alternating-sign q-binomial identities.

An IdentitySpec holds an identity of the shape

    sum_j (-1)^j q^{b K j ((alpha+beta) j + alpha - beta) / 2} [2L, L-Kj]_{q^b}
        = rhs(L),

with alpha, beta, K, b exact rationals and rhs an evaluator L -> QPoly in
absolute q.  Applying a kernel produces a new IdentitySpec: the parameters
move by the kernel's exponent algebra and the new right-hand side is the
kernel-weighted sum of the old one.  Starting from the delta seed, one
application of "qt1" gives the bounded pentagonal-number identity and a
second gives the bounded first Rogers-Ramanujan identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..qcomb import qbinom
from ..qpoly import QPoly
from ..report import Stopwatch, VerificationReport
from .kernels import KERNELS, kernel_eval


class ShapeMismatch(ValueError):
    pass


# parameter moves: (alpha', beta', K', b') as affine expressions of (a, b, K, base)
_PARAM_MOVES = {
    "qt1": lambda a, b, K, s: (a + K, b + K, K, s),
    "qt2": lambda a, b, K, s: (a + K / 2, b + K / 2, K, s),
    "qt3": lambda a, b, K, s: ((a + K) / 2, (b + K) / 2, K, 2 * s),
    "qt4": lambda a, b, K, s: (a / 2 + K / 4, b / 2 + K / 4, K, 2 * s),
    "qt5": lambda a, b, K, s: ((a + K) / 3, (b + K) / 3, K, 3 * s),
    "t2": lambda a, b, K, s: (a + K, b + K, 2 * K, s / 2),
    "t2dual": lambda a, b, K, s: (a, b, 2 * K, s / 2),
    "t2b": lambda a, b, K, s: (a + K / 2, b + K / 2, 2 * K, s / 2),
    "t4": lambda a, b, K, s: (2 * a, 2 * b, 2 * K, s / 4),
    "t3": lambda a, b, K, s: (a + K, b + K, 3 * K, s / 3),
    "w": lambda a, b, K, s: (a / 2 + K, b / 2 + K, 2 * K, s),
    "wdual": lambda a, b, K, s: ((a + K) / 2, (b + K) / 2, 2 * K, s),
}


@dataclass
class IdentitySpec:
    alpha: Fraction
    beta: Fraction
    K: Fraction
    base: Fraction
    rhs: callable  # L -> QPoly, absolute q
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    def rhs_at(self, L: int) -> QPoly:
        v = self._cache.get(L)
        if v is None:
            v = self.rhs(L)
            self._cache[L] = v
        return v

    def lhs_at(self, L: int) -> QPoly:
        a, b, K, s = self.alpha, self.beta, self.K, self.base
        total = QPoly.ZERO
        j = 0
        while True:
            hit = False
            for jj in ([0] if j == 0 else [j, -j]):
                kj = K * jj
                if kj.denominator != 1:
                    continue
                binom = qbinom(2 * L, L - int(kj), s)
                if not binom:
                    continue
                hit = True
                e = s * K * jj * ((a + b) * jj + a - b) / 2
                term = binom.times_qpow(e)
                total = total + (term if jj % 2 == 0 else -term)
            if j and not hit:
                break
            j += 1
        return total

    def params(self):
        return (self.alpha, self.beta, self.K, self.base)


def seed_identity() -> IdentitySpec:
    """The delta seed: sum_j (-1)^j q^{binom(j,2)} [2L, L-j] = delta_{L,0}."""
    return IdentitySpec(
        Fraction(0),
        Fraction(1),
        Fraction(1),
        Fraction(1),
        lambda L: QPoly.ONE if L == 0 else QPoly.ZERO,
        name="seed",
    )


def apply_transform(tag: str, ident: IdentitySpec) -> IdentitySpec:
    """Push an identity through one kernel."""
    move = _PARAM_MOVES.get(tag)
    if move is None:
        raise ShapeMismatch(f"kernel {tag!r} has no identity-iteration form")
    ker = KERNELS[tag]
    a2, b2, K2, s2 = move(ident.alpha, ident.beta, ident.K, ident.base)
    # the kernel weight is evaluated at its inner-binomial base, which must
    # equal the old identity's base
    if ker.shape == "sym":
        kbase = ident.base

        def weight(L, r):
            return kernel_eval(tag, 2 * L, 2 * r, kbase)

        top = lambda L: L
    elif ker.shape == "cubic":
        kbase = ident.base / 3

        def weight(L, r):
            return kernel_eval(tag, 2 * L, 2 * r, kbase)

        top = lambda L: L // 3
    else:
        kbase = ident.base / ker.k

        def weight(L, r):
            return kernel_eval(tag, L, 2 * r, kbase)

        top = lambda L: L // 2

    old = ident

    def rhs(L: int) -> QPoly:
        total = QPoly.ZERO
        for r in range(top(L) + 1):
            F = weight(L, r)
            if F.is_zero():
                continue
            total = total + F.to_qpoly() * old.rhs_at(r)
        return total

    name = f"{tag}({ident.name})" if ident.name else tag
    return IdentitySpec(a2, b2, K2, s2, rhs, name=name)


def verify_identity(ident: IdentitySpec, L_max: int) -> VerificationReport:
    report = VerificationReport(
        f"identity-{ident.name or ident.params()}", params={"L_max": L_max}
    )
    with Stopwatch() as sw:
        for L in range(L_max + 1):
            diff = ident.lhs_at(L) - ident.rhs_at(L)
            ok = diff.is_zero()
            report.record((L,), ok, None if ok else diff)
            if not ok:
                break
    report.seconds = sw.elapsed
    return report
