"""Catalog of exact q-hypergeometric summations and transformations.

Each entry is a record whose check function builds both sides of the
identity as FactoredRationals for a given depth n and concrete monomial
parameters; the verifier sweeps a deterministic grid of root-of-unity
phases and small exponents.  Parameter choices that put a pole in a
denominator (on either side, or inside a series) are skipped and counted,
never silently treated as passes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..qcomb import poch_ratio, qbinom
from ..qpoly import FactoredRational, InfinitePole, QMonomial, QPoly
from ..report import Stopwatch, VerificationReport
from .phi import ParameterPole, PhiSeries, inf_poch_ratio, phi, wseries

__all__ = [
    "SUMMATIONS",
    "TRANSFORMATIONS",
    "SeriesIdentity",
    "SkipCase",
    "verify_catalog",
    "verify_identity",
]

H = Fraction(1, 2)
QUARTER = Fraction(1, 4)
THIRD = Fraction(1, 3)
Q = QMonomial.qpow
OMEGA = QMonomial(0, THIRD)
OMEGA2 = QMonomial(0, Fraction(2, 3))
I_ = QMonomial(0, QUARTER)
PM = (Fraction(0), H)
PM_I = (Fraction(0), H, QUARTER, Fraction(3, 4))
PM_OMEGA = (Fraction(0), H, THIRD, Fraction(2, 3))
ZETA12 = (Fraction(0), H, QUARTER, THIRD, Fraction(1, 12))


class SkipCase(Exception):
    """Grid point outside the identity's domain of validity."""


def _fk(m: QMonomial):
    """Factor key (phase, exp) of 1 - m."""
    return (m.phase, m.exp)


def _mono(v: FactoredRational | QPoly, m: QMonomial) -> FactoredRational:
    """Multiply by the monomial m."""
    if isinstance(v, QPoly):
        v = FactoredRational(v)
    return v * m.to_qpoly()


def _ratio(num_factors, den_factors) -> FactoredRational:
    """prod (1 - x) / prod (1 - y) over monomials."""
    v = FactoredRational.one()
    for y in den_factors:
        if y.is_one():
            raise SkipCase("zero factor (1 - 1) in a denominator")
        v = v.div_factor(*_fk(y))
    for x in num_factors:
        v = v.mul_factor(*_fk(x))
    return v


def _pr(num_specs, den_specs) -> FactoredRational:
    """poch_ratio that treats a zero denominator factor as off-domain.

    poch_ratio cancels equal factor keys across numerator and denominator;
    on a concrete grid two different parameters can accidentally produce the
    same zero factor (1 - q^0), turning an off-domain 0/0 into a silent 1.
    Catch the zero before cancellation can hide it.
    """
    for a, n, b in den_specs:
        b = Fraction(b)
        rng = range(n) if n >= 0 else []
        if a.phase == 0:
            for j in rng:
                if a.exp + j * b == 0:
                    raise SkipCase("zero pochhammer factor in a denominator")
    for a, n, b in num_specs:
        # negative-length numerators land in the denominator
        if n < 0 and a.phase == 0:
            b = Fraction(b)
            for j in range(1, -n + 1):
                if a.exp - j * b == 0:
                    raise SkipCase("zero pochhammer factor in a denominator")
    return poch_ratio(num_specs, den_specs)


def _nterms(base, *exps) -> int:
    """Intended term count of a series with designated terminators q^e."""
    best = None
    for e in exps:
        s = Fraction(-e) / Fraction(base)
        if s.denominator == 1 and s >= 0 and (best is None or s < best):
            best = int(s)
    return best + 1


def _guard(*values):
    for v in values:
        for (ph, e) in v.den:
            if ph == 0 and e == 0:
                raise SkipCase("zero denominator factor")


@dataclass(frozen=True)
class SeriesIdentity:
    name: str
    kind: str  # "summation" | "transformation"
    description: str
    params: tuple[str, ...]
    check: Callable  # check(n, **params) -> (lhs, rhs)
    phases: dict = field(default_factory=dict)  # param -> phase tuple
    exps: tuple = (-2, -1, 0, 1, 2)
    n_max: int = 6
    max_cases: int = 200


# ---------------------------------------------------------------------------
# summations
# ---------------------------------------------------------------------------


def _chk_qbthm(n, z):
    lhs = phi([Q(-n)], [], 1, z, terms=n + 1)
    rhs = _pr([(z * Q(-n), n, 1)], [])
    return lhs, rhs


def _chk_qgauss(n, a, c):
    lhs = phi([a, Q(-n)], [c], 1, c * Q(n) / a, terms=n + 1)
    rhs = _pr([(c / a, n, 1)], [(c, n, 1)])
    return lhs, rhs


def _chk_phi21sum(n, a):
    lhs = phi([Q(-n), Q(1 - n)], [a * Q(1)], 2, a * Q(2 * n), terms=_nterms(2, -n, 1 - n))
    rhs = _pr([(a, n, 2)], [(a, n, 1)])
    return lhs, rhs


def _chk_phi32sum(n, a, b):
    lhs = phi([a / b, Q(-n), Q(1 - n)], [a * Q(1), Q(2 - 2 * n) / b], 2, Q(2), terms=_nterms(2, -n, 1 - n))
    rhs = _pr([(b, n, 1), (a, n, 2)], [(a, n, 1), (b, n, 2)])
    return lhs, rhs


def _chk_qps(n, a, b, d):
    lhs = phi([a, b, Q(-n)], [d, a * b * Q(1 - n) / d], 1, Q(1), terms=n + 1)
    rhs = _pr([(d / a, n, 1), (d / b, n, 1)],
                     [(d, n, 1), (d / (a * b), n, 1)])
    return lhs, rhs


def _chk_phi43sum(n, a):
    lhs = phi([a * Q(1), a * Q(3), Q(-2 * n), Q(2 - 2 * n)],
              [a * a * Q(2), -Q(3 - 2 * n), -Q(5 - 2 * n)], 4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    rhs = _mono(_pr([(-Q(1), n, 1), (-a, n, 2)],
                           [(-Q(-1), n, 2), (-a, n, 1)]), Q(-n))
    return lhs, rhs


def _chk_phi43sumb(n, a):
    lhs = phi([a * Q(-1), a * Q(1), Q(-2 * n), Q(2 - 2 * n)],
              [a * a * Q(2), -Q(1 - 2 * n), -Q(3 - 2 * n)], 4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    rhs = _pr([(-Q(1), n, 1), (-a, n, 2)],
                     [(-Q(1), n, 2), (-a, n, 1)])
    return lhs, rhs


def _chk_a17(n, a, c):
    h = a * Q(1 + Fraction(-n, 2))
    lhs = phi([a * a * Q(1), c, -c, Q(-n)], [c * c, h, -h], 1, Q(1), terms=n + 1)
    if n % 2:
        return lhs, FactoredRational.zero()
    k = n // 2
    rhs = _pr([(Q(1), k, 2), (c * c / (a * a), k, 2)],
                     [(c * c * Q(1), k, 2), ((a * a) ** -1, k, 2)])
    return lhs, rhs


def _chk_phi54(n, a, b, c):
    h = a * Q(1 + Fraction(-n, 2))
    lhs = phi([a * a, b * Q(1), c, -c, Q(-n)], [c * c, b, h, -h], 1, Q(1), terms=n + 1)
    if n % 2 == 0:
        k = n // 2
        rhs = _pr([(Q(1), k, 2), (c * c / (a * a), k, 2)],
                         [(c * c * Q(1), k, 2), ((a * a) ** -1, k, 2)])
        rhs = rhs * _ratio([a * a, b * Q(n)], [a * a * Q(n), b])
    else:
        k = (n - 1) // 2
        rhs = _pr([(Q(1), k, 2), (c * c * Q(1) / (a * a), k, 2)],
                         [(c * c * Q(1), k, 2), (Q(1) / (a * a), k, 2)])
        # (1-q^n)/(1-a^2 q^n) * (a^2-b)/(1-b)
        rhs = _mono(rhs, a * a)
        rhs = rhs * _ratio([Q(n), b / (a * a)], [a * a * Q(n), b])
    return lhs, rhs


def _chk_phi54p(n, b, c):
    h = QMonomial(Fraction(3, 2) - n, QUARTER)
    lhs = phi([c, -c, b * Q(1), Q(-n), -Q(-n)],
              [c * c * Q(1), b, h, -h], 1, Q(2), terms=n + 1)
    if n % 2 == 0:
        k = n // 2
        rhs = _pr([(Q(2), k, 4), (-(c * c * Q(-1)), n, 2)],
                         [(c ** 4 * Q(2), k, 4), (-Q(-1), n, 2)])
    else:
        k = (n - 1) // 2
        rhs = _pr([(Q(6), k, 4), (-(c * c * Q(1)), n - 1, 2)],
                         [(c ** 4 * Q(6), k, 4), (-Q(1), n - 1, 2)])
        rhs = _mono(rhs, c * c)
        rhs = rhs * _ratio([Q(1), b / (c * c)], [c * c * Q(1), b])
    return lhs, rhs


def _chk_phi43p(n, a, c):
    h = a * Q(1 + Fraction(-n, 2))
    lhs = phi([a * a, c, -c, Q(-n)], [c * c * Q(1), h, -h], 1, Q(2), terms=n + 1)
    if n % 2 == 0:
        k = n // 2
        rhs = _pr([(Q(1), k, 2), (c * c * Q(2) / (a * a), k - 1, 2)],
                         [(c * c * Q(1), k, 2), (Q(2) / (a * a), k - 1, 2)])
        rhs = _mono(rhs, c * c)
        rhs = rhs * _ratio([a * a * Q(n) / (c * c)], [a * a * Q(n)])
    else:
        k = (n - 1) // 2
        rhs = _pr([(Q(1), k + 1, 2), (c * c * Q(1) / (a * a), k, 2)],
                         [(c * c * Q(1), k + 1, 2), (Q(1) / (a * a), k, 2)])
        rhs = rhs * _ratio([a * a * c * c * Q(n)], [a * a * Q(n)])
    return lhs, rhs


def _chk_phi54b(n, a, b, c):
    h = a * Q(1 + Fraction(-n, 2))
    lhs = phi([a * a * Q(1), b * Q(1), c, -c, Q(-n)],
              [c * c * Q(1), b, h, -h], 1, Q(1), terms=n + 1)
    if n % 2 == 0:
        k = n // 2
        rhs = _pr([(Q(1), k, 2), (c * c / (a * a), k, 2)],
                         [(c * c * Q(1), k, 2), ((a * a) ** -1, k, 2)])
    else:
        k = (n + 1) // 2
        rhs = _pr([(Q(1), k, 2), (c * c * Q(-1) / (a * a), k, 2)],
                         [(c * c * Q(1), k, 2), (Q(-1) / (a * a), k, 2)])
        # (c^2-b)/(1-b) * (1-a^2 q)/(c^2-a^2 q)
        rhs = rhs * _ratio([b / (c * c), a * a * Q(1)],
                           [b, a * a * Q(1) / (c * c)])
    return lhs, rhs


def _chk_cor43(n, a, c):
    h = a * Q(Fraction(-n, 2))
    lhs = phi([a * a, c, -c, Q(-n)], [c * c * Q(1), h, -h], 1, Q(1), terms=n + 1)
    if n % 2 == 0:
        k = n // 2
        rhs = _pr([(Q(1), k, 2), (c * c * Q(2) / (a * a), k, 2)],
                         [(c * c * Q(1), k, 2), (Q(2) / (a * a), k, 2)])
    else:
        k = (n + 1) // 2
        rhs = _pr([(Q(1), k, 2), (c * c * Q(1) / (a * a), k, 2)],
                         [(c * c * Q(1), k, 2), (Q(1) / (a * a), k, 2)])
    return lhs, rhs


def _chk_phi43new(n, a):
    lhs = phi([I_ * Q(-H), -(I_ * Q(-H)), Q(-n), -Q(-n)],
              [-Q(1), a, Q(1 - 2 * n) / a], 1, Q(2), terms=n + 1)
    rhs = _pr([(-(a * a * Q(-1)), n, 4)], [(a, 2 * n, 1)])
    rhs = rhs * _ratio([-(a * a * Q(2 * n - 1))], [-(a * a * Q(-1))])
    return lhs, rhs


def _chk_qbinsum(n, a, b):
    lhs = phi([b, Q(1) / b, Q(-n), -Q(-n)],
              [-Q(1), a, Q(1 - 2 * n) / a], 1, Q(1), terms=n + 1)
    rhs = _pr([(a * b, n, 2), (a * Q(1) / b, n, 2)], [(a, 2 * n, 1)])
    return lhs, rhs


def _chk_phi21del(n, a):
    lhs = phi([a, Q(-2 * n)], [a * Q(2 - 2 * n)], 2, Q(2), terms=n + 1)
    rhs = FactoredRational.one() if n == 0 else FactoredRational.zero()
    return lhs, rhs


def _chk_del(n, b):
    total = FactoredRational.zero()
    for r in range(n + 1):
        t = _pr([(b, r, 3), (Q(-n), r, 1)],
                       [(Q(1), r, 1), (b * Q(3 - n), r, 3)])
        t = _mono(t, Q(r)) * _ratio([b * Q(2 * r)], [b])
        total = total + t
    rhs = FactoredRational.one() if n == 0 else FactoredRational.zero()
    return total, rhs


def _chk_gs432(n, c):
    total = FactoredRational.zero()
    for r in range(n + 1):
        t = _pr([(c, 2 * r, 1), (Q(-n), r, 1)],
                       [(Q(1), r, 1), (c, r, 1), (c * Q(2 - n), r, 3)])
        total = total + _mono(t, Q(r))
    if n % 3:
        return total, FactoredRational.zero()
    k = n // 3
    rhs = _pr([(Q(1), k, 3), (Q(2), k, 3)],
                     [(Q(1) / c, k, 3), (c * Q(2), k, 3)])
    return total, rhs


def _chk_p32(n, b):
    lhs = phi([b, -b, Q(-n)], [-Q(1), b * b * Q(2 - n)], 1, Q(2), terms=n + 1)
    rhs = _mono(_pr([(Q(-2) / (b * b), n, 2)],
                           [(-Q(1), n, 1), (Q(-1) / (b * b), n, 1)]), Q(n))
    return lhs, rhs


def _chk_phi18(n, a):
    lhs = phi([a, Q(-2 * n)], [Q(-2 * n) / a], 2, Q(1) / a, terms=n + 1)
    rhs = _pr([(-Q(1), n, 1), (a * Q(1), n, 1)], [(a * Q(2), n, 2)])
    return lhs, rhs


def _chk_phi21sumb(n, a):
    lhs = phi([a * Q(1), Q(-2 * n)], [Q(3 - 2 * n) / a], 2, Q(2) / a, terms=n + 1)
    rhs = _mono(_pr([(-Q(1), n, 1), (a, n, 1)], [(a * Q(-1), n, 2)]),
                Q(-n))
    return lhs, rhs


def _chk_phi32odd(n, a, b):
    lhs = phi([a, b * Q(2), Q(-2 * n)], [b, Q(2 - 2 * n) / a], 2, Q(1) / a, terms=n + 1)
    rhs = _mono(_pr([(-Q(1), n, 1), (a, n, 1)], [(a, n, 2)]), Q(-n))
    rhs = rhs * _ratio([b * Q(n)], [b])
    return lhs, rhs


def _chk_qpartid(n, j):
    total = QPoly.ZERO
    for k in range(n + 1):
        total = total + (qbinom(k + j - 1, k, 2) * qbinom(n - k + j, j, 2)
                         ).times_qpow(k)
    return FactoredRational(total), FactoredRational(qbinom(n + 2 * j, n))


def _chk_vj13s(n, a, b):
    lhs = phi([a * Q(1) / b, a * Q(2) / b, a * a * Q(2 * n), Q(-2 * n)],
              [a * Q(1), a * Q(2), a * a * Q(2) / (b * b)], 2, Q(2), terms=n + 1)
    rhs = _pr([(-Q(1), n, 1), (b, n, 1)],
                     [(a, n, 1), (-(a * Q(1) / b), n, 1)])
    rhs = _mono(rhs, (a * Q(1) / b) ** n) * _ratio([a], [a * Q(2 * n)])
    return lhs, rhs


def _chk_vj15s(n, a):
    sa = (a * Q(1)).root(2)
    lhs = phi([a * Q(1), a * Q(2), a * Q(3), a ** 3 * Q(3 * n), Q(-3 * n)],
              [sa ** 3, -(sa ** 3), a.root(2) * a * Q(3),
               -(a.root(2) * a * Q(3))], 3, Q(3), terms=n + 1)
    rhs = _pr([(Q(3), n, 3), (a * Q(1), n - 1, 1)],
                     [(Q(1), n, 1), (a ** 3 * Q(3), n - 1, 3)])
    rhs = _mono(rhs, (a * Q(1)) ** n)
    rhs = rhs * _ratio([a * Q(2 * n)], [a ** 3 * Q(6 * n)])
    return lhs, rhs


def _chk_bl4bl0s(n, a):
    h = a * Q(1 + Fraction(-n, 2))
    lhs = phi([I_ * Q(-H), -(I_ * Q(-H)), a * a * Q(1), Q(-n)],
              [-Q(1), h, -h], 1, Q(2), terms=n + 1)
    if n % 2:
        return lhs, FactoredRational.zero()
    k = n // 2
    rhs = _pr([(Q(1), k, 2), (-(Q(1) / (a * a)), k, 2)],
                     [(-Q(2), k, 2), ((a * a) ** -1, k, 2)])
    # (1 + a^2 q^(n+1)) / (a^2 q + q^n)
    rhs = _mono(rhs, (a * a * Q(1)) ** -1)
    rhs = rhs * _ratio([-(a * a * Q(n + 1))], [-(Q(n - 1) / (a * a))])
    return lhs, rhs


SUMMATIONS: dict[str, SeriesIdentity] = {
    "qbthm": SeriesIdentity(
        "qbthm", "summation", "q-binomial theorem, terminating",
        ("z",), _chk_qbthm, phases={"z": ZETA12}, n_max=8),
    "qgauss": SeriesIdentity(
        "qgauss", "summation", "q-Gauss sum, terminating form",
        ("a", "c"), _chk_qgauss, phases={"a": PM_I}),
    "phi21sum": SeriesIdentity(
        "phi21sum", "summation",
        "quadratic-argument 2phi1 evaluation (a;q^2)_n/(a;q)_n",
        ("a",), _chk_phi21sum, n_max=8),
    "phi32sum": SeriesIdentity(
        "phi32sum", "summation",
        "balanced 3phi2 at base q^2 with mixed-base product value",
        ("a", "b"), _chk_phi32sum),
    "qps": SeriesIdentity(
        "qps", "summation", "q-Pfaff-Saalschutz sum, terminating form",
        ("a", "b", "d"), _chk_qps, phases={"b": PM_I}),
    "phi43sum": SeriesIdentity(
        "phi43sum", "summation", "quartic-base balanced 4phi3 evaluation",
        ("a",), _chk_phi43sum),
    "phi43sumb": SeriesIdentity(
        "phi43sumb", "summation",
        "companion quartic-base 4phi3 evaluation", ("a",), _chk_phi43sumb),
    "a17": SeriesIdentity(
        "a17", "summation",
        "Andrews' q-analogue of Watson's 3F2 sum",
        ("a", "c"), _chk_a17, phases={"c": PM_I}),
    "phi54": SeriesIdentity(
        "phi54", "summation",
        "balanced 5phi4 extension of the q-Watson sum (even/odd cases)",
        ("a", "b", "c"), _chk_phi54, exps=(-1, 0, 1, 2)),
    "phi54p": SeriesIdentity(
        "phi54p", "summation",
        "5phi4 with argument q^2 and imaginary denominator parameters",
        ("b", "c"), _chk_phi54p, phases={"c": PM_I}),
    "phi43p": SeriesIdentity(
        "phi43p", "summation", "4phi3 with argument q^2 (even/odd cases)",
        ("a", "c"), _chk_phi43p),
    "phi54b": SeriesIdentity(
        "phi54b", "summation",
        "second balanced 5phi4 extension of the q-Watson sum",
        ("a", "b", "c"), _chk_phi54b, exps=(-1, 0, 1, 2)),
    "cor43": SeriesIdentity(
        "cor43", "summation",
        "balanced 4phi3 from the second 5phi4 at b = a^2 q",
        ("a", "c"), _chk_cor43),
    "phi43new": SeriesIdentity(
        "phi43new", "summation",
        "4phi3 with +-i q^(-1/2) numerators and quartic-base value",
        ("a",), _chk_phi43new, n_max=8),
    "qbinsum": SeriesIdentity(
        "qbinsum", "summation",
        "4phi3 with b, q/b numerator pair and (ab,aq/b;q^2)_n value",
        ("a", "b"), _chk_qbinsum),
    "phi21del": SeriesIdentity(
        "phi21del", "summation", "2phi1 collapsing to delta(n,0)",
        ("a",), _chk_phi21del, n_max=8),
    "del": SeriesIdentity(
        "del", "summation",
        "mixed-base Bressoud-Gasper sum collapsing to delta(n,0)",
        ("b",), _chk_del, n_max=8),
    "gs432": SeriesIdentity(
        "gs432", "summation",
        "Gessel-Stanton cubic-base sum, support on n = 0 mod 3",
        ("c",), _chk_gs432, n_max=9),
    "p32": SeriesIdentity(
        "p32", "summation", "3phi2 with argument q^2 and +-b numerators",
        ("b",), _chk_p32, phases={"b": PM_I}, n_max=8),
    "phi18": SeriesIdentity(
        "phi18", "summation",
        "2phi1 with argument q/a and odd/even split value",
        ("a",), _chk_phi18, n_max=8),
    "phi21sumb": SeriesIdentity(
        "phi21sumb", "summation", "order-reversed companion of phi18",
        ("a",), _chk_phi21sumb, n_max=8),
    "phi32odd": SeriesIdentity(
        "phi32odd", "summation", "3phi2 extension of phi18 with free b",
        ("a", "b"), _chk_phi32odd),
    "qpartid": SeriesIdentity(
        "qpartid", "summation",
        "odd/even part-count convolution of q-binomial coefficients",
        ("j",), _chk_qpartid, n_max=10),
    "vj13s": SeriesIdentity(
        "vj13s", "summation",
        "singular case of the quadratic W-transformation",
        ("a", "b"), _chk_vj13s),
    "vj15s": SeriesIdentity(
        "vj15s", "summation",
        "singular case of the cubic W-transformation",
        ("a",), _chk_vj15s, n_max=5),
    "bl4bl0s": SeriesIdentity(
        "bl4bl0s", "summation",
        "singular case of the quartic-lemma transformation",
        ("a",), _chk_bl4bl0s, n_max=8),
}

# The spec for "qpartid" uses an integer j rather than a monomial; encode
# the grid by treating j as exponent-only with phase 0 and j = exp >= 1.


# ---------------------------------------------------------------------------
# transformations
# ---------------------------------------------------------------------------


def _chk_sears(n, a, c, d, e, f):
    g = a * Q(1 - n) * c * d / (e * f)
    lhs = phi([a, Q(-n), c, d], [e, f, g], 1, Q(1), terms=n + 1)
    pref = inf_poch_ratio(
        [Q(1) / f, a * Q(1 - n) / f, a * c * d * Q(1) / (e * f),
         c * d * Q(1 - n) / (e * f)],
        [a * Q(1) / f, Q(1 - n) / f, c * d * Q(1) / (e * f),
         a * c * d * Q(1 - n) / (e * f)], 1)
    rhs = pref * phi([a, Q(-n), e / c, e / d],
                     [e, a * Q(1 - n) / f, e * f / (c * d)], 1, Q(1), terms=n + 1)
    return lhs, rhs


def _chk_singh(n, a, b, c):
    d = Q(-n)
    lhs = phi([a * a, b * b, c, d],
              [a * b * Q(H), -(a * b * Q(H)), -(c * d)], 1, Q(1), terms=n + 1)
    rhs = phi([a * a, b * b, c * c, d * d],
              [a * a * b * b * Q(1), -(c * d), -(c * d * Q(1))], 2, Q(2), terms=n + 1)
    return lhs, rhs


def _chk_trafo23(n, a):
    b2 = Q(-2 * n)
    lhs = phi([a, a * Q(1), b2, b2 * OMEGA, b2 * OMEGA2],
              [a ** 2, -(a ** 2), -(a ** 2 * Q(1)), Q(2 - 6 * n) / a ** 4],
              2, Q(2), terms=n + 1)
    pref = (inf_poch_ratio([a ** 4 * Q(6 * n)], [a ** 4], 2)
            * inf_poch_ratio([a ** 3], [a ** 3 * Q(6 * n)], 3)
            * inf_poch_ratio([a ** 6 * Q(3)], [a ** 6 * Q(3 + 6 * n)], 6))
    rhs = pref * phi(
        [a ** 2, a ** 2 * Q(1), a ** 2 * Q(2), Q(-3 * n), -Q(-3 * n)],
        [a ** 3, a ** 3 * Q(Fraction(3, 2)), -(a ** 3 * Q(Fraction(3, 2))),
         Q(3 - 6 * n) / a ** 3], 3, Q(3), terms=n + 1)
    return lhs, rhs


def _chk_trafo1(n, a, b, c):
    lhs = phi([b, c, -c, Q(-n)], [a, c * c, -(b * Q(1 - n) / a)], 1, Q(1), terms=n + 1)
    pref = _pr([(a * a / b, n, 1), (c * c, n, 2)],
                      [(a, n, 1), (c * c, n, 1), (-(a / b), n, 1)])
    rhs = pref * phi(
        [a * a / (b * b), a * a / (c * c), Q(-n), Q(1 - n)],
        [a * a / b, a * a * Q(1) / b, Q(2 - 2 * n) / (c * c)], 2, Q(2),
        terms=_nterms(2, -n, 1 - n))
    return lhs, rhs


def _chk_quartic(n, a, b):
    sb = b.root(2)
    lhs = phi([sb, -sb, Q(-n), -Q(-n)], [a, b, Q(1 - 2 * n) / a], 1, Q(1), terms=n + 1)
    pref = _pr([(-(a * a * Q(-1)), n, 4)], [(a, 2 * n, 1)])
    pref = pref * _ratio([-(a * a * Q(2 * n - 1))], [-(a * a * Q(-1))])
    rhs = pref * phi(
        [-(b * Q(1)), -(b * Q(3)), Q(-2 * n), Q(2 - 2 * n)],
        [-(a * a * Q(3)), b * b * Q(2), -(Q(5 - 4 * n) / (a * a))], 4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    return lhs, rhs


def _chk_quartic2(n, a, b):
    sb = b.root(2)
    lhs = phi([sb, -sb, Q(-n), -Q(-n)], [a, -a, b], 1, -(a * a * Q(2 * n)), terms=n + 1)
    pref = _pr([(-(a * a * Q(1)), n, 2)], [(a * a, n, 2)])
    rhs = pref * phi(
        [-(b * Q(1)), -(b * Q(3)), Q(-2 * n), Q(2 - 2 * n)],
        [-(a * a * Q(1)), -(a * a * Q(3)), b * b * Q(2)], 4,
        a ** 4 * Q(4 * n), terms=_nterms(4, -2 * n, 2 - 2 * n))
    return lhs, rhs


def _chk_eqfail(n, a, b):
    sb = b.root(2)
    lhs = phi([sb, -sb, Q(-n), -Q(-n)], [a, b, Q(1 - 2 * n) / a], 1, Q(1), terms=n + 1)
    pref = _pr([(-(a * a * Q(1)), n, 2), (b * b, n, 4)],
                      [(a, 2 * n, 1), (b * b, n, 2)])
    rhs = pref * phi(
        [a * a / b, a * a * Q(2) / b, Q(-2 * n), Q(2 - 2 * n)],
        [-(a * a * Q(1)), -(a * a * Q(3)), Q(4 - 4 * n) / (b * b)], 4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    return lhs, rhs


def _chk_tr4p(n, a):
    lhs = phi([I_ * Q(1), -(I_ * Q(1)), Q(-n), Q(1 - n)],
              [-Q(2), a * Q(1), -(Q(2 - 2 * n) / a)], 2, Q(2), terms=_nterms(2, -n, 1 - n))
    pref = _pr([(-a, n, 1), (-Q(1), n, 2)],
                      [(-Q(1), n, 1), (-a, n, 2)])
    rhs = pref * phi([I_ * a, -(I_ * a), Q(-2 * n), Q(2 - 2 * n)],
                     [a * a * Q(2), -Q(1 - 2 * n), -Q(3 - 2 * n)], 4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    return lhs, rhs


def _chk_tr4(n, a):
    lhs = phi([I_ * Q(-1), -(I_ * Q(-1)), Q(-n), Q(1 - n)],
              [-Q(2), a * Q(1), -(Q(2 - 2 * n) / a)], 2, Q(4), terms=_nterms(2, -n, 1 - n))
    pref = _mono(_pr([(-Q(-1), n, 2), (-a, n, 1)],
                            [(-Q(1), n, 1), (-a, n, 2)]), Q(n))
    rhs = pref * phi(
        [I_ * a, -(I_ * a), -(a * a * Q(4)), Q(-2 * n), Q(2 - 2 * n)],
        [-(a * a), a * a * Q(2), -Q(3 - 2 * n), -Q(5 - 2 * n)], 4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    return lhs, rhs


def _chk_comp(n, a, b):
    lhs = phi([b, Q(2) / b, Q(-n), Q(1 - n)],
              [-Q(2), a * Q(1), -(Q(2 - 2 * n) / a)], 2, Q(2), terms=_nterms(2, -n, 1 - n))
    pref = _pr([(-a, n, 1), (-Q(1), n, 2)],
                      [(-Q(1), n, 1), (-a, n, 2)])
    rhs = pref * phi([a * Q(1) / b, a * b * Q(-1), Q(-2 * n), Q(2 - 2 * n)],
                     [a * a * Q(2), -Q(1 - 2 * n), -Q(3 - 2 * n)], 4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    return lhs, rhs


def _chk_fail1(n, a):
    lhs = phi([I_ * Q(H), -(I_ * Q(H)), Q(-n)], [-Q(1), a], 1, -(a * Q(n)), terms=n + 1)
    pref = _pr([(-Q(1), n, 2)], [(-Q(1), n, 1), (a, n, 1)])
    rhs = pref * phi([-(a * a * Q(-1)), Q(-2 * n), Q(2 - 2 * n)],
                     [-Q(1 - 2 * n), -Q(3 - 2 * n)], 4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    return lhs, rhs


def _chk_fail2(n, a):
    lhs = phi([I_ * Q(-H), -(I_ * Q(-H)), Q(-n)], [-Q(1), a],
              1, -(a * Q(n + 1)), terms=n + 1)
    pref = _mono(_pr([(-Q(-1), n, 2)], [(-Q(1), n, 1), (a, n, 1)]),
                 Q(n))
    rhs = pref * phi([-(a * a * Q(3)), Q(-2 * n), Q(2 - 2 * n)],
                     [-Q(3 - 2 * n), -Q(5 - 2 * n)], 4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    return lhs, rhs


def _chk_tr1p(n, a, b):
    sa, sb = a.root(2), b.root(2)
    lhs = phi([I_ * Q(H), -(I_ * Q(H)), sb, -sb, Q(-n)],
              [-Q(1), sa, -sa, -(b * Q(1 - n) / a)], 1, Q(1), terms=n + 1)
    pref = _pr([(-Q(1), n, 2), (a * a / b, n, 2)],
                      [(-Q(1), n, 1), (-(a / b), n, 1), (a, n, 2)])
    rhs = pref * phi(
        [a * a / (b * b), -(a * Q(-1)), -(a * Q(1)), Q(-2 * n), Q(2 - 2 * n)],
        [a * a / b, a * a * Q(2) / b, -Q(1 - 2 * n), -Q(3 - 2 * n)], 4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    return lhs, rhs


def _chk_tr1(n, a, b):
    sa, sb = a.root(2), b.root(2)
    lhs = phi([I_ * Q(-H), -(I_ * Q(-H)), sb, -sb, Q(-n)],
              [-Q(1), sa, -sa, -(b * Q(1 - n) / a)], 1, Q(2), terms=n + 1)
    pref = _mono(_pr([(-Q(-1), n, 2), (a * a / b, n, 2)],
                            [(-Q(1), n, 1), (-(a / b), n, 1), (a, n, 2)]),
                 Q(n))
    rhs = pref * phi(
        [a * a / (b * b), -(a * Q(1)), -(a * Q(3)), Q(-2 * n), Q(2 - 2 * n)],
        [a * a / b, a * a * Q(2) / b, -Q(3 - 2 * n), -Q(5 - 2 * n)], 4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    return lhs, rhs


def _chk_eq352(n, b, x, y):
    lhs = phi([b * x, -(b * x), b * y, -(b * y), Q(-n)],
              [-Q(1), b * x * y, -(b * x * y), b * b * Q(-n)], 1, Q(1), terms=n + 1)
    pref = _pr([(Q(2) / (b * b), n, 2)],
                      [(-Q(1), n, 1), (Q(1) / (b * b), n, 1)])
    rhs = pref * phi([x * x, y * y, Q(-2 * n)],
                     [b * b * x * x * y * y, b * b * Q(-2 * n)],
                     2, b * b * Q(1), terms=n + 1)
    return lhs, rhs


def _chk_var352(n, b, x, y):
    lhs = phi([b * x, -(b * x), b * y, -(b * y), Q(-n)],
              [-Q(1), b * x * y, -(b * x * y), b * b * Q(2 - n)], 1, Q(2), terms=n + 1)
    pref = _mono(_pr([(Q(-2) / (b * b), n, 2)],
                            [(-Q(1), n, 1), (Q(-1) / (b * b), n, 1)]), Q(n))
    rhs = pref * phi([x * x, y * y, Q(-2 * n)],
                     [b * b * x * x * y * y, b * b * Q(4 - 2 * n)],
                     2, b * b * Q(3), terms=n + 1)
    return lhs, rhs


def _chk_fin54(n, a, b):
    lhs = phi([a, a * Q(2), b * b, Q(-2 * n), Q(2 - 2 * n)],
              [a * b * Q(1), a * b * Q(3), Q(1 - 2 * n), Q(3 - 2 * n)],
              4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    pref = _pr([(a * Q(1), n, 2), (b * Q(1), n, 2)],
                      [(Q(1), n, 2), (a * b * Q(1), n, 2)])
    rhs = pref * phi([a, b, Q(-2 * n)], [a * Q(1), Q(1 - 2 * n) / b],
                     2, -(Q(2) / b), terms=n + 1)
    return lhs, rhs


def _chk_phi54phi32(n, a, b):
    lhs = phi([a, a * Q(2), b * b, Q(-2 * n), Q(2 - 2 * n)],
              [a * b * Q(-1), a * b * Q(1), Q(3 - 2 * n), Q(5 - 2 * n)],
              4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    pref = _pr([(a * Q(-1), n, 2), (b * Q(-1), n, 2)],
                      [(Q(-1), n, 2), (a * b * Q(-1), n, 2)])
    rhs = pref * phi([a, b, Q(-2 * n)], [a * Q(-1), Q(3 - 2 * n) / b],
                     2, -(Q(2) / b), terms=n + 1)
    return lhs, rhs


def _chk_sextic1(n, a):
    sa = a.root(2)
    lhs = phi([sa, -sa, Q(-n), OMEGA * Q(-n), OMEGA2 * Q(-n)],
              [a, a * Q(H), -(a * Q(H)), Q(-3 * n) / (a * a)], 1, Q(1), terms=n + 1)
    pref = _pr([(a ** 3, n, 6), (-(a ** 3 * Q(3)), n, 3)],
                      [(a * a * Q(1), 3 * n, 1)])
    pref = pref * _ratio([a ** 3 * Q(3 * n)], [a ** 3])
    rhs = pref * phi(
        [a ** 2 * Q(2), a ** 2 * Q(4), a ** 2 * Q(6), Q(-3 * n), Q(3 - 3 * n)],
        [-(a ** 3 * Q(3)), a ** 3 * Q(6), -(a ** 3 * Q(6)),
         Q(6 - 6 * n) / a ** 3], 6, Q(6), terms=_nterms(6, -3 * n, 3 - 3 * n))
    return lhs, rhs


def _chk_sextic2(n, a):
    ta = (a * a).root(3)
    lhs = phi([ta, ta * OMEGA, ta * OMEGA2, Q(-n), -Q(-n)],
              [a, -a, a * Q(H), Q(H - 2 * n) / a], 1, Q(1), terms=n + 1)
    pref = _pr([(a ** 4, n, 6)],
                      [(a * Q(H), 2 * n, 1), (a * a * Q(2), n, 2)])
    pref = pref * _ratio([a ** 4 * Q(4 * n)], [a ** 4])
    rhs = pref * phi(
        [a * Q(Fraction(3, 2)), a * Q(Fraction(9, 2)), Q(-2 * n),
         Q(2 - 2 * n), Q(4 - 2 * n)],
        [a ** 2 * Q(3), -(a ** 2 * Q(3)), -(a ** 2 * Q(6)),
         Q(6 - 6 * n) / a ** 4], 6, Q(6), terms=_nterms(6, -2 * n, 2 - 2 * n, 4 - 2 * n))
    return lhs, rhs


def _chk_q9(n, a):
    ta = (a * a).root(3)
    lhs = phi([ta, ta * OMEGA, ta * OMEGA2,
               Q(-n), OMEGA * Q(-n), OMEGA2 * Q(-n)],
              [a, -a, a * Q(H), -(a * Q(H)), Q(-3 * n) / (a * a)], 1, Q(1), terms=n + 1)
    pref = _pr([(a ** 6, n, 9)], [(a * a * Q(1), 3 * n, 1)])
    pref = pref * _ratio([a ** 6 * Q(6 * n)], [a ** 6])
    rhs = pref * phi(
        [a ** 2 * Q(3), a ** 2 * Q(6), a ** 2 * Q(9), Q(-3 * n),
         Q(3 - 3 * n), Q(6 - 3 * n)],
        [a ** 3 * Q(Fraction(9, 2)), -(a ** 3 * Q(Fraction(9, 2))),
         a ** 3 * Q(9), -(a ** 3 * Q(9)), Q(9 - 9 * n) / a ** 6], 9, Q(9), terms=_nterms(9, -3 * n, 3 - 3 * n, 6 - 3 * n))
    return lhs, rhs


def _chk_q12(n, a):
    sa = a.root(2)
    lhs = phi([I_ * Q(-H), -(I_ * Q(-H)),
               Q(-n), OMEGA * Q(-n), OMEGA2 * Q(-n)],
              [-Q(1), sa, -sa, Q(1 - 3 * n) / a], 1, Q(2), terms=n + 1)
    pref = _mono(_pr([(-Q(-3), n, 6), (a ** 3 * Q(3), n, 6)],
                            [(-Q(3), n, 3), (a, 3 * n, 1)]), Q(3 * n))
    rhs = pref * phi(
        [a ** 2 * Q(2), a ** 2 * Q(6), a ** 2 * Q(10), Q(-6 * n),
         Q(6 - 6 * n)],
        [a ** 3 * Q(3), a ** 3 * Q(9), -Q(9 - 6 * n), -Q(15 - 6 * n)],
        12, Q(12), terms=_nterms(12, -6 * n, 6 - 6 * n))
    return lhs, rhs


def _chk_watson(n, a, b, c, d, e):
    lhs = wseries(a, [b, c, d, e, Q(-n)], 1,
                  a * a * Q(2 + n) / (b * c * d * e)).eval(terms=n + 1)
    pref = inf_poch_ratio(
        [a * Q(1), a * Q(1) / (d * e), a * Q(1 + n) / d, a * Q(1 + n) / e],
        [a * Q(1) / d, a * Q(1) / e, a * Q(1 + n),
         a * Q(1 + n) / (d * e)], 1)
    rhs = pref * phi([a * Q(1) / (b * c), d, e, Q(-n)],
                     [a * Q(1) / b, a * Q(1) / c, d * e * Q(-n) / a], 1, Q(1), terms=n + 1)
    return lhs, rhs


def _chk_vj13(n, a, b, sc, sd):
    c, d = sc * sc, sd * sd
    lhs = wseries(a, [b, sc, -sc, sd, -sd, Q(-n), -Q(-n)], 1,
                  -(a ** 3 * Q(3 + 2 * n) / (b * c * d))).eval(terms=n + 1)
    aa = a * a * Q(2)
    pref = inf_poch_ratio(
        [aa, aa / (c * d), aa * Q(2 * n) / c, aa * Q(2 * n) / d],
        [aa / c, aa / d, aa * Q(2 * n), aa * Q(2 * n) / (c * d)], 2)
    rhs = pref * phi(
        [-(a * Q(1) / b), -(a * Q(2) / b), c, d, Q(-2 * n)],
        [-(a * Q(1)), -(a * Q(2)), a * a * Q(2) / (b * b),
         c * d * Q(-2 * n) / (a * a)], 2, Q(2), terms=n + 1)
    return lhs, rhs


def _chk_vj14(n, a, b, c, d):
    lhs = wseries(a, [a * Q(1) / b, c, c * Q(1), d, d * Q(1),
                      Q(-n), Q(1 - n)], 2,
                  a * a * b * Q(2 + 2 * n) / (c * c * d * d)).eval(terms=_nterms(2, -n, 1 - n))
    pref = inf_poch_ratio(
        [a * Q(1), a * Q(1) / (c * d), a * Q(1 + n) / c, a * Q(1 + n) / d],
        [a * Q(1) / c, a * Q(1) / d, a * Q(1 + n),
         a * Q(1 + n) / (c * d)], 1)
    sb, sq = b.root(2), (a * Q(1)).root(2)
    rhs = pref * phi([sb, -sb, c, d, Q(-n)],
                     [sq, -sq, b, c * d * Q(-n) / a], 1, Q(1), terms=n + 1)
    return lhs, rhs


def _chk_vj15(n, a, tb, tc):
    b, c = tb ** 3, tc ** 3
    lhs = wseries(a, [tb, tb * OMEGA, tb * OMEGA2, tc, tc * OMEGA,
                      tc * OMEGA2, Q(-n), OMEGA * Q(-n), OMEGA2 * Q(-n)],
                  1, a ** 4 * Q(4 + 3 * n) / (b * c)).eval(terms=n + 1)
    a3 = a ** 3 * Q(3)
    pref = inf_poch_ratio(
        [a3, a3 / (b * c), a3 * Q(3 * n) / b, a3 * Q(3 * n) / c],
        [a3 / b, a3 / c, a3 * Q(3 * n), a3 * Q(3 * n) / (b * c)], 3)
    s = (a * Q(1)).root(2)
    rhs = pref * phi(
        [a * Q(1), a * Q(2), a * Q(3), b, c, Q(-3 * n)],
        [s ** 3, -(s ** 3), a.root(2) * a * Q(3), -(a.root(2) * a * Q(3)),
         b * c * Q(-3 * n) / a ** 3], 3, Q(3), terms=n + 1)
    return lhs, rhs


def _chk_vj16(n, a, b, c):
    lhs = wseries(a, [b, b * Q(1), b * Q(2), c, c * Q(1), c * Q(2),
                      Q(-n), Q(1 - n), Q(2 - n)], 3,
                  a ** 4 * Q(3 + 3 * n) / (b ** 3 * c ** 3)).eval(terms=_nterms(3, -n, 1 - n, 2 - n))
    pref = inf_poch_ratio(
        [a * Q(1), a * Q(1) / (b * c), a * Q(1 + n) / b, a * Q(1 + n) / c],
        [a * Q(1) / b, a * Q(1) / c, a * Q(1 + n),
         a * Q(1 + n) / (b * c)], 1)
    ta, sa, sq = a.root(3), a.root(2), (a * Q(1)).root(2)
    rhs = pref * phi([ta, ta * OMEGA, ta * OMEGA2, b, c, Q(-n)],
                     [sa, -sa, sq, -sq, b * c * Q(-n) / a], 1, Q(1), terms=n + 1)
    return lhs, rhs


def _chk_bl4bl0(n, a, b, c):
    d = Q(-n)
    total = FactoredRational.zero()
    arg = -(a * a * Q(1 + 2 * n) / (b * b * c * c))
    for k in range(n // 2 + 1):
        t = _pr(
            [(a * a, k, 4), (b, 2 * k, 1), (c, 2 * k, 1), (d, 2 * k, 1)],
            [(Q(4), k, 4), (a * Q(1) / b, 2 * k, 1), (a * Q(1) / c, 2 * k, 1),
             (a * Q(1) / d, 2 * k, 1)])
        t = _mono(t, arg ** k) * _ratio([a * a * Q(8 * k)], [a * a])
        total = total + t
    pref = inf_poch_ratio(
        [a * Q(1), a * Q(1) / (b * c), a * Q(1 + n) / b, a * Q(1 + n) / c],
        [a * Q(1) / b, a * Q(1) / c, a * Q(1 + n),
         a * Q(1 + n) / (b * c)], 1)
    sq = (a * Q(1)).root(2)
    rhs = pref * phi([I_ * Q(-H), -(I_ * Q(-H)), b, c, d],
                     [-Q(1), sq, -sq, b * c * Q(-n) / a], 1, Q(2), terms=n + 1)
    return total, rhs


def _chk_bl0bl4(n, a, b, c):
    total = FactoredRational.zero()
    arg = -(a * a * Q(2 * n + 3) / (b * c))
    for k in range(n // 2 + 1):
        t = _pr(
            [(a * a, k, 4), (b, k, 4), (c, k, 4), (Q(-n), 2 * k, 1)],
            [(Q(4), k, 4), (a * a * Q(4) / b, k, 4), (a * a * Q(4) / c, k, 4),
             (a * Q(n + 1), 2 * k, 1)])
        t = _mono(t, arg ** k) * _ratio([a * a * Q(8 * k)], [a * a])
        total = total + t
    pref = _mono(_pr([(-Q(-1), n, 2), (a * Q(1), n, 1)],
                            [(-Q(1), n, 1), (a * Q(1), n, 2)]), Q(n))
    rhs = pref * phi(
        [a * a * Q(4) / (b * c), -(a * Q(2)), -(a * Q(4)),
         Q(-2 * n), Q(2 - 2 * n)],
        [a * a * Q(4) / b, a * a * Q(4) / c, -Q(3 - 2 * n), -Q(5 - 2 * n)],
        4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    return total, rhs


def _chk_bl0bl4p(n, a, sb, sc):
    b, c = sb * sb, sc * sc
    lhs = wseries(a, [-a, sb, -sb, sc, -sc, Q(-n), Q(1 - n)], 2,
                  -(a * a * Q(2 * n + 5) / (b * c))).eval(terms=_nterms(2, -n, 1 - n))
    pref = _pr([(-Q(1), n, 2), (a * Q(1), n, 1)],
                      [(-Q(1), n, 1), (a * Q(1), n, 2)])
    rhs = pref * phi(
        [a * a * Q(4) / (b * c), -a, -(a * Q(2)), Q(-2 * n), Q(2 - 2 * n)],
        [a * a * Q(4) / b, a * a * Q(4) / c, -Q(1 - 2 * n), -Q(3 - 2 * n)],
        4, Q(4), terms=_nterms(4, -2 * n, 2 - 2 * n))
    return lhs, rhs


TRANSFORMATIONS: dict[str, SeriesIdentity] = {
    "sears": SeriesIdentity(
        "sears", "transformation", "Sears' 4phi3 transformation",
        ("a", "c", "d", "e", "f"), _chk_sears, exps=(-1, 0, 1, 2),
        n_max=5, max_cases=150),
    "singh": SeriesIdentity(
        "singh", "transformation", "Singh's quadratic transformation",
        ("a", "b", "c"), _chk_singh, phases={"c": PM_I}, n_max=5),
    "trafo23": SeriesIdentity(
        "trafo23", "transformation",
        "balanced transformation between bases q^2 and q^3",
        ("a",), _chk_trafo23, n_max=4),
    "trafo1": SeriesIdentity(
        "trafo1", "transformation",
        "quadratic 4phi3 transformation with +-c numerators",
        ("a", "b", "c"), _chk_trafo1, phases={"c": PM_I}, n_max=5),
    "quartic": SeriesIdentity(
        "quartic", "transformation", "quartic 4phi3 transformation",
        ("a", "b"), _chk_quartic, n_max=5),
    "quartic2": SeriesIdentity(
        "quartic2", "transformation",
        "quartic transformation with argument -a^2 q^(2n)",
        ("a", "b"), _chk_quartic2, n_max=5),
    "eqfail": SeriesIdentity(
        "eqfail", "transformation",
        "quartic companion via Sears' transformation",
        ("a", "b"), _chk_eqfail, n_max=5),
    "tr4p": SeriesIdentity(
        "tr4p", "transformation",
        "quadratic-to-quartic 4phi3 transformation (+iq numerators)",
        ("a",), _chk_tr4p, n_max=6),
    "tr4": SeriesIdentity(
        "tr4", "transformation",
        "quadratic-to-quartic 4phi3-to-5phi4 transformation",
        ("a",), _chk_tr4, n_max=6),
    "comp": SeriesIdentity(
        "comp", "transformation",
        "generalized quartic transformation with b, q^2/b pair",
        ("a", "b"), _chk_comp, phases={"b": PM_I}, n_max=5),
    "fail1": SeriesIdentity(
        "fail1", "transformation",
        "3phi2 quartic transformation (+iq^(1/2) numerators)",
        ("a",), _chk_fail1, n_max=6),
    "fail2": SeriesIdentity(
        "fail2", "transformation",
        "3phi2 quartic transformation (+iq^(-1/2) numerators)",
        ("a",), _chk_fail2, n_max=6),
    "tr1p": SeriesIdentity(
        "tr1p", "transformation",
        "5phi4 quartic transformation with argument q",
        ("a", "b"), _chk_tr1p, n_max=5),
    "tr1": SeriesIdentity(
        "tr1", "transformation",
        "5phi4 quartic transformation with argument q^2",
        ("a", "b"), _chk_tr1, n_max=5),
    "eq352": SeriesIdentity(
        "eq352", "transformation",
        "5phi4-to-3phi2 quadratic reduction, argument q",
        ("b", "x", "y"), _chk_eq352,
        phases={"x": PM_I, "y": PM_I}, exps=(-1, 0, 1), n_max=5),
    "var352": SeriesIdentity(
        "var352", "transformation",
        "5phi4-to-3phi2 quadratic reduction, argument q^2",
        ("b", "x", "y"), _chk_var352,
        phases={"x": PM_I, "y": PM_I}, exps=(-1, 0, 1), n_max=5),
    "fin54": SeriesIdentity(
        "fin54", "transformation",
        "quartic 5phi4 to quadratic 3phi2 with argument -q^2/b",
        ("a", "b"), _chk_fin54, n_max=5),
    "phi54phi32": SeriesIdentity(
        "phi54phi32", "transformation",
        "companion quartic 5phi4 to quadratic 3phi2",
        ("a", "b"), _chk_phi54phi32, n_max=5),
    "sextic1": SeriesIdentity(
        "sextic1", "transformation", "sextic transformation, first kind",
        ("a",), _chk_sextic1, n_max=3),
    "sextic2": SeriesIdentity(
        "sextic2", "transformation", "sextic transformation, second kind",
        ("a",), _chk_sextic2, n_max=3),
    "q9": SeriesIdentity(
        "q9", "transformation", "base change q to q^9",
        ("a",), _chk_q9, n_max=2),
    "q12": SeriesIdentity(
        "q12", "transformation", "base change q to q^12",
        ("a",), _chk_q12, n_max=2),
    "watson": SeriesIdentity(
        "watson", "transformation",
        "Watson's transformation of a very-well-poised 8W7",
        ("a", "b", "c", "d", "e"), _chk_watson, exps=(-1, 0, 1, 2),
        n_max=4, max_cases=150),
    "vj13": SeriesIdentity(
        "vj13", "transformation",
        "quadratic very-well-poised 10W9 transformation",
        ("a", "b", "sc", "sd"), _chk_vj13, exps=(-1, 0, 1),
        n_max=4, max_cases=120),
    "vj14": SeriesIdentity(
        "vj14", "transformation",
        "second quadratic very-well-poised 10W9 transformation",
        ("a", "b", "c", "d"), _chk_vj14, exps=(-1, 0, 1),
        n_max=4, max_cases=120),
    "vj15": SeriesIdentity(
        "vj15", "transformation",
        "cubic very-well-poised 12W11 transformation",
        ("a", "tb", "tc"), _chk_vj15, exps=(-1, 0, 1),
        n_max=3, max_cases=80),
    "vj16": SeriesIdentity(
        "vj16", "transformation",
        "second cubic very-well-poised 12W11 transformation",
        ("a", "b", "c"), _chk_vj16, exps=(-1, 0, 1),
        n_max=3, max_cases=80),
    "bl4bl0": SeriesIdentity(
        "bl4bl0", "transformation",
        "quartic-lemma series to 5phi4 with argument q^2",
        ("a", "b", "c"), _chk_bl4bl0, exps=(-1, 0, 1),
        n_max=4, max_cases=120),
    "bl0bl4": SeriesIdentity(
        "bl0bl4", "transformation",
        "quartic-base series generalizing the first quartic evaluation",
        ("a", "b", "c"), _chk_bl0bl4, exps=(-1, 0, 1),
        n_max=4, max_cases=120),
    "bl0bl4p": SeriesIdentity(
        "bl0bl4p", "transformation",
        "10W9 at base q^2 generalizing the companion quartic evaluation",
        ("a", "sb", "sc"), _chk_bl0bl4p, exps=(-1, 0, 1),
        n_max=4, max_cases=120),
}


# ---------------------------------------------------------------------------
# grid verification
# ---------------------------------------------------------------------------


def _grid_values(ident: SeriesIdentity, exp_max=None):
    exps = ident.exps
    if exp_max is not None:
        exps = tuple(e for e in range(-exp_max, exp_max + 1))
    per_param = []
    for p in ident.params:
        if p == "j":  # positive integer parameter
            per_param.append([j for j in exps if j >= 1] or [1, 2])
            continue
        phases = ident.phases.get(p, PM)
        per_param.append([QMonomial(e, ph) for ph in phases for e in exps])
    cases = list(itertools.product(*per_param))
    if len(cases) > ident.max_cases:
        rng = random.Random(0x5EED ^ hash(ident.name) & 0xFFFF)
        cases = rng.sample(cases, ident.max_cases)
    return cases


def verify_identity(ident: SeriesIdentity, n_max=None, exp_max=None,
                    ) -> VerificationReport:
    rep = VerificationReport(name=f"{ident.kind}:{ident.name}")
    n_hi = ident.n_max if n_max is None else n_max
    skipped = 0
    with Stopwatch() as sw:
        for vals in _grid_values(ident, exp_max):
            kw = dict(zip(ident.params, vals))
            for n in range(n_hi + 1):
                where = (("n", n),) + tuple(
                    (k, repr(v)) for k, v in kw.items())
                try:
                    lhs, rhs = ident.check(n, **kw)
                    _guard(lhs, rhs)
                except (SkipCase, ParameterPole, InfinitePole,
                        ZeroDivisionError):
                    skipped += 1
                    continue
                rep.record(where, lhs == rhs)
    rep.seconds = sw.elapsed
    rep.params = {"n_max": n_hi, "skipped": skipped,
                  "description": ident.description}
    return rep


def verify_catalog(kind=None, n_max=None, exp_max=None) -> list:
    """Verify every catalog entry (or just one kind) on default grids."""
    entries = {}
    if kind in (None, "summation"):
        entries.update(SUMMATIONS)
    if kind in (None, "transformation"):
        entries.update(TRANSFORMATIONS)
    return [verify_identity(e, n_max=n_max, exp_max=exp_max)
            for e in entries.values()]
