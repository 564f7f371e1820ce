"""Terminating basic hypergeometric series over exact monomial parameters.

A series is determined by numerator parameters, denominator parameters, a
base q^s (s a positive rational) and an argument, all of which are
root-of-unity monomials c * q^e.  Everything is evaluated exactly as a
FactoredRational; nothing is ever truncated or approximated.

The general r-by-s series carries the compensating factor
[(-1)^k q^(s k(k-1)/2)]^(s-r+1) in its k-th term, so that specialising or
reversing a series never changes conventions midway.
"""

from __future__ import annotations

from fractions import Fraction

from ..qpoly import FactoredRational, QMonomial
from ..qcomb import poch_ratio

__all__ = [
    "Nonterminating",
    "ParameterPole",
    "PhiSeries",
    "phi",
    "wseries",
    "inf_poch_ratio",
]


class Nonterminating(ValueError):
    """No numerator parameter is of the form q^(-n * base) with n >= 0."""


class ParameterPole(ZeroDivisionError):
    """A denominator parameter kills a term inside the summation range."""


def _as_monomial(x) -> QMonomial:
    if isinstance(x, QMonomial):
        return x
    return QMonomial(x)


class PhiSeries:
    """An r-phi-s series with monomial parameters, base q^base, argument z."""

    __slots__ = ("num", "den", "base", "z")

    def __init__(self, num, den, base, z):
        self.num = tuple(_as_monomial(a) for a in num)
        self.den = tuple(_as_monomial(b) for b in den)
        self.base = Fraction(base)
        if self.base <= 0:
            raise ValueError("base exponent must be positive")
        self.z = _as_monomial(z)

    @property
    def excess(self) -> int:
        """Multiplicity of the (-1)^k q^(base*C(k,2)) factor per term."""
        return len(self.den) - len(self.num) + 1

    def _steps_to_one(self, m: QMonomial):
        """n >= 0 with m * q^(n*base) == 1, or None."""
        if m.phase:
            return None
        n = -m.exp / self.base
        if n.denominator == 1 and n >= 0:
            return int(n)
        return None

    def termination(self) -> int:
        """Number of terms; raises Nonterminating if the series is infinite."""
        best = None
        for a in self.num:
            n = self._steps_to_one(a)
            if n is not None and (best is None or n < best):
                best = n
        if best is None:
            raise Nonterminating(f"no q^-n numerator among {self.num}")
        return best + 1

    def term(self, k: int) -> FactoredRational:
        nspec = [(a, k, self.base) for a in self.num]
        dspec = [(QMonomial(self.base), k, self.base)]
        dspec += [(b, k, self.base) for b in self.den]
        t = poch_ratio(nspec, dspec)
        extra = self.z ** k
        e = self.excess
        if e:
            # [(-1)^k q^(base*k(k-1)/2)]^e
            extra = extra * QMonomial(self.base * Fraction(k * (k - 1), 2),
                                      Fraction(k, 2)) ** e
        return t * extra.to_qpoly()

    def eval(self, terms=None) -> FactoredRational:
        """Sum the series; terms overrides the detected truncation.

        Passing the intended term count matters on grids: a generically
        free parameter that happens to equal q^-m truncates the series
        early, hiding denominator poles inside the intended range even
        though the point sits outside the identity's domain.
        """
        n = self.termination() if terms is None else terms
        for b in self.den:
            m = self._steps_to_one(b)
            if m is not None and m < n - 1:
                raise ParameterPole(f"denominator parameter {b!r} vanishes "
                                    f"at term {m + 1} of {n}")
        total = FactoredRational.zero()
        for k in range(n):
            total = total + self.term(k)
        return total

    # -- structural predicates ------------------------------------------

    def is_balanced(self) -> bool:
        """r+1 by r, argument q^base, and num-product * q^base = den-product."""
        if len(self.num) != len(self.den) + 1:
            return False
        if self.z != QMonomial(self.base):
            return False
        p = QMonomial(self.base)
        for a in self.num:
            p = p * a
        d = QMonomial(0)
        for b in self.den:
            d = d * b
        return p == d

    def is_well_poised(self) -> bool:
        if len(self.num) != len(self.den) + 1:
            return False
        a1 = self.num[0]
        target = a1 * QMonomial(self.base)
        rest = sorted((a * b for a, b in zip(self.num[1:], self.den)),
                      key=lambda m: (m.exp, m.phase))
        return all(m == target for m in rest)

    def is_very_well_poised(self) -> bool:
        if not self.is_well_poised():
            return False
        sa = self.num[0].root(2)
        qb = QMonomial(self.base)
        return {self.num[1], self.num[2]} == {sa * qb, -sa * qb}

    def reverse(self):
        """Rewrite sum_k t_k as t_n * (reversed series), k -> n - k.

        Only implemented for series with zero excess (an (r+1)-phi-r with
        no compensating sign factor); returns (prefactor, PhiSeries).
        """
        if self.excess:
            raise ValueError("reversal implemented for zero excess only")
        n = self.termination() - 1
        qb = QMonomial(self.base)
        qn = QMonomial(self.base * n)
        pref = poch_ratio(
            [(a, n, self.base) for a in self.num],
            [(qb, n, self.base)] + [(b, n, self.base) for b in self.den],
        ) * (self.z ** n).to_qpoly()
        rest = list(self.num)
        rest.remove(QMonomial(-self.base * n))
        num = [QMonomial(-self.base * n)] + [qb / (b * qn) for b in self.den]
        den = [qb / (a * qn) for a in rest]
        zr = qb * qn
        for b in self.den:
            zr = zr * b
        for a in rest:
            zr = zr / a
        zr = zr / self.z
        return pref, PhiSeries(num, den, self.base, zr)

    def __repr__(self):
        return (f"PhiSeries(num={list(self.num)}, den={list(self.den)}, "
                f"base={self.base}, z={self.z!r})")


def phi(num, den, base, z, terms=None) -> FactoredRational:
    return PhiSeries(num, den, base, z).eval(terms=terms)


def wseries(a1, rest, base, z) -> PhiSeries:
    """The very-well-poised (r+1)W_r(a1; a4,...,a_{r+1}; q^base, z)."""
    a1 = _as_monomial(a1)
    sa = a1.root(2)
    qb = QMonomial(base)
    num = [a1, sa * qb, -(sa * qb)] + [_as_monomial(x) for x in rest]
    den = [sa, -sa] + [a1 * qb / _as_monomial(x) for x in rest]
    return PhiSeries(num, den, base, z)


def inf_poch_ratio(num, den, base) -> FactoredRational:
    """prod (x; q^base)_inf / prod (y; q^base)_inf as a finite ratio.

    Each numerator entry must pair with a denominator entry differing by an
    integer power of the base: (y q^(m*base); q^base)_inf / (y; q^base)_inf
    = 1/(y; q^base)_m, and with the shift on the other side
    (x; q^base)_inf / (x q^(m*base); q^base)_inf = (x; q^base)_m.
    """
    base = Fraction(base)
    num = [_as_monomial(x) for x in num]
    den = [_as_monomial(y) for y in den]
    if len(num) != len(den):
        raise ValueError("unbalanced infinite-product ratio")
    def match(i, used):
        # Backtracking perfect matching: greedy pairing can strand a
        # later numerator when several denominators are integer shifts
        # of the same factor.  Any complete matching gives the same
        # value, since each pair reduces exactly.
        if i == len(num):
            return []
        x = num[i]
        for j, y in enumerate(den):
            if j in used or x.phase != y.phase:
                continue
            m = (x.exp - y.exp) / base
            if m.denominator != 1:
                continue
            rest = match(i + 1, used | {j})
            if rest is not None:
                m = int(m)
                spec = (y, m, base) if m >= 0 else (x, m, base)
                return [spec] + rest
        return None

    pairs = match(0, frozenset())
    if pairs is None:
        raise ValueError(f"no complete pairing for {num} / {den}")
    nspec = [(x, -m, b) for x, m, b in pairs if m < 0]
    dspec = [s for s in pairs if s[1] >= 0]
    for y, m, b in dspec:
        for j in range(m):
            if y.phase == 0 and y.exp + j * b == 0:
                raise ParameterPole(f"zero factor in ({y!r}; q^{b})_{m}")
    return poch_ratio(nspec, dspec)
