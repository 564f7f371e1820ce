"""The q-binomial transformation kernels.

Each kernel is a family F_{L,r}(q) such that summing F_{L,r} against a
q-binomial with lower entry (r - j)/2 collapses to a single q-binomial in j,
possibly in a changed base.  Three shapes occur:

  sym:   sum_{r=j(2)} F_{L,r}(q) [r, (r-j)/2]_q     = q^{g j^2/8} [L, (L-j)/2]_{q^k}
  sym2:  sum_{r=j(2)} F_{L,r}(q) [r, (r-j)/2]_{q^k} = q^{g j^2/4} [2L, L-j]_q
  cubic: sum_{r=j(2), 3r<=L} F_{L,r}(q) [r, (r-j)/2]_{q^3} = q^{3j^2/4} [L, (L-3j)/2]_q

Two kernels ("t2c", "t4b") deviate from sym2 by a j-dependent side factor on
the right; the side factor is part of the kernel record.  Kernels are
evaluated at base q^b for rational b, which is what the relation catalog
needs (relations mix evaluations at q, q^2, q^3, q^4).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..qcomb import binom2, poch_poly, poch_ratio, pochhammer, qbinom
from ..qpoly import FactoredRational, QMonomial, QPoly
from ..report import Stopwatch, VerificationReport

HALF = Fraction(1, 2)


def _qp(exp) -> QPoly:
    return QPoly.qpow(exp)


def _f_qt1(L, r, b):
    return poch_ratio(
        [(QMonomial.qpow(b), L, b)],
        [(QMonomial.qpow(b), (L - r) // 2, b), (QMonomial.qpow(b), r, b)],
    )


def _f_qt2(L, r, b):
    return poch_ratio(
        [(QMonomial.qpow(b), L, b)],
        [
            (QMonomial.qpow(b), (L - r) // 2, b),
            (QMonomial.neg_qpow(b * Fraction(r + 1, 2)), (L - r) // 2, b),
            (QMonomial.qpow(b), r, b),
        ],
    )


def _f_qt3(L, r, b):
    return poch_ratio(
        [(QMonomial.qpow(b), L, b)],
        [(QMonomial.qpow(2 * b), (L - r) // 2, 2 * b), (QMonomial.qpow(b), r, b)],
    )


def _f_qt4(L, r, b):
    return poch_ratio(
        [
            (QMonomial.qpow(b * Fraction(r + 1, 2)), L - r, b),
            (QMonomial.qpow(b), L, b),
        ],
        [
            (QMonomial.qpow(2 * b), (L - r) // 2, 2 * b),
            (QMonomial.qpow(b * (r + 1)), (L - r) // 2, 2 * b),
            (QMonomial.qpow(b), r, b),
        ],
    )


def _f_qt5(L, r, b):
    return poch_ratio(
        [(QMonomial.qpow(b), (3 * L - r) // 2, b)],
        [(QMonomial.qpow(3 * b), (L - r) // 2, 3 * b), (QMonomial.qpow(b), r, b)],
    )


def _f_t2(L, r, b):
    return FactoredRational.from_qpoly(
        poch_poly(QMonomial.neg_qpow(b), L - r, b) * qbinom(L, r, 2 * b)
    )


def _f_t2dual(L, r, b):
    p = poch_poly(QMonomial.neg_qpow(b), L - r, b) * qbinom(L, r, 2 * b)
    return FactoredRational.from_qpoly(p.times_qpow(b * binom2(L - r)))


def _f_t2b(L, r, b):
    head = QPoly.binomial_factor(HALF, b * L) * qbinom(L, r, b)
    return pochhammer(QMonomial.neg_qpow(b * (r + 2)), L - r - 1, 2 * b) * (
        FactoredRational.from_qpoly(head)
    )


def _f_t2c(L, r, b):
    p = poch_poly(QMonomial.neg_qpow(b * (r + 1)), L - r, 2 * b) * qbinom(L, r, b)
    return FactoredRational.from_qpoly(p).div_factor(HALF, b * r)


def _f_t4(L, r, b):
    p = poch_poly(QMonomial.neg_qpow(-b), L - r, 2 * b) * qbinom(L, r, 2 * b)
    return FactoredRational.from_qpoly(p.times_qpow(b * (L - r)))


def _f_t4b(L, r, b):
    p = poch_poly(QMonomial.neg_qpow(b), L - r, 2 * b) * qbinom(L, r, 2 * b)
    return FactoredRational.from_qpoly(p).div_factor(HALF, 2 * b * r)


def _f_t3(L, r, b):
    if L == 0 and r == 0:
        return FactoredRational.one()
    core = poch_ratio(
        [(QMonomial.qpow(3 * b), (L - r - 2) // 2, 3 * b)],
        [
            (QMonomial.qpow(3 * b), r, 3 * b),
            (QMonomial.qpow(b), (L - 3 * r) // 2, b),
        ],
    )
    return core * FactoredRational.from_qpoly(QPoly.binomial_factor(0, b * L))


def _f_w(L, r, b):
    s = QPoly.ZERO
    for n in range(L - r + 1):
        s = s + qbinom(L - r, n, b).times_qpow(b * n * (n + r))
    return FactoredRational.from_qpoly(qbinom(L, r, b) * s)


def _f_wdual(L, r, b):
    s = QPoly.ZERO
    for n in range(L - r + 1):
        s = s + qbinom(L - r, n, b).times_qpow(b * L * n)
    return FactoredRational.from_qpoly(qbinom(L, r, b) * s)


@dataclass(frozen=True)
class Kernel:
    tag: str
    shape: str  # "sym" | "sym2" | "cubic"
    weight: Fraction  # exponent of q in the r-weight is weight * r^2
    k: int  # base-change factor
    positive: bool
    f: callable
    side: str | None = None  # "half-shifted" (t2c) or "quarter" (t4b)
    parity_locked: bool = False  # r = L (mod 2) required for F to make sense


KERNELS: dict[str, Kernel] = {
    k.tag: k
    for k in [
        Kernel("qt1", "sym", Fraction(1, 4), 1, False, _f_qt1, parity_locked=True),
        Kernel("qt2", "sym", Fraction(1, 8), 1, False, _f_qt2, parity_locked=True),
        Kernel("qt3", "sym", Fraction(1, 4), 2, False, _f_qt3, parity_locked=True),
        Kernel("qt4", "sym", Fraction(1, 8), 2, False, _f_qt4, parity_locked=True),
        Kernel("qt5", "sym", Fraction(1, 4), 3, False, _f_qt5, parity_locked=True),
        Kernel("t2", "sym2", Fraction(1, 2), 2, True, _f_t2),
        Kernel("t2dual", "sym2", Fraction(0), 2, True, _f_t2dual),
        Kernel("t2b", "sym2", Fraction(1, 4), 2, True, _f_t2b),
        Kernel("t2c", "sym2", Fraction(1, 4), 2, True, _f_t2c, side="half-shifted"),
        Kernel("t4", "sym2", Fraction(0), 4, True, _f_t4),
        Kernel("t4b", "sym2", Fraction(0), 4, True, _f_t4b, side="quarter"),
        Kernel("t3", "cubic", Fraction(3, 4), 3, True, _f_t3, parity_locked=True),
        Kernel("w", "sym2", Fraction(1, 2), 1, True, _f_w),
        Kernel("wdual", "sym2", Fraction(1, 4), 1, True, _f_wdual),
    ]
}


def in_support(tag: str, L: int, r: int) -> bool:
    ker = KERNELS[tag]
    if r < 0 or r > L:
        return False
    if ker.shape == "cubic" and 3 * r > L:
        return False
    if ker.parity_locked and (L - r) % 2:
        return False
    return True


def kernel_eval(tag: str, L: int, r: int, base=1) -> FactoredRational:
    """F_{L,r}(q^base) for the named kernel; zero outside its support."""
    ker = KERNELS[tag]
    b = Fraction(base)
    if not in_support(tag, L, r):
        return FactoredRational.zero()
    out = ker.f(L, r, b)
    if ker.side == "half-shifted":
        # the extra q^{r/2} of the r(r+2)/4 weight
        out = out * FactoredRational.from_qpoly(_qp(b * Fraction(r, 2)))
    elif ker.side == "quarter":
        out = out * FactoredRational.from_qpoly(_qp(b * r))
    if ker.weight:
        out = out * FactoredRational.from_qpoly(_qp(b * ker.weight * r * r))
    return out


def inner_base(tag: str, base=1) -> Fraction:
    """Base of the q-binomial the kernel is summed against."""
    ker = KERNELS[tag]
    b = Fraction(base)
    if ker.shape == "sym":
        return b
    if ker.shape == "cubic":
        return 3 * b
    return ker.k * b


def rhs_eval(tag: str, L: int, j: int, base=1) -> FactoredRational:
    """Right-hand side of the kernel's defining identity, as a function of j."""
    ker = KERNELS[tag]
    b = Fraction(base)
    if ker.shape == "sym":
        if (L - j) % 2:
            return FactoredRational.zero()
        p = qbinom(L, (L - j) // 2, ker.k * b).times_qpow(b * ker.weight * j * j)
        return FactoredRational.from_qpoly(p)
    if ker.shape == "cubic":
        if (L - j) % 2:
            return FactoredRational.zero()
        p = qbinom(L, (L - 3 * j) // 2, b).times_qpow(b * ker.weight * j * j)
        return FactoredRational.from_qpoly(p)
    p = qbinom(2 * L, L - j, b)
    if ker.side == "half-shifted":
        p = p.times_qpow(b * Fraction(j * (j + 2), 4))
        return FactoredRational.from_qpoly(p).div_factor(HALF, b * j)
    if ker.side == "quarter":
        p = p.times_qpow(b * j)
        return FactoredRational.from_qpoly(p).div_factor(HALF, 2 * b * j)
    return FactoredRational.from_qpoly(p.times_qpow(b * ker.weight * j * j))


def _tree_sum(terms: list[FactoredRational]) -> FactoredRational:
    """Balanced pairwise sum; keeps cross-multiplied denominators small."""
    if not terms:
        return FactoredRational.zero()
    while len(terms) > 1:
        terms = [
            terms[i] + terms[i + 1] if i + 1 < len(terms) else terms[i]
            for i in range(0, len(terms), 2)
        ]
    return terms[0]


def lhs_eval(tag: str, L: int, j: int, base=1) -> FactoredRational:
    """Left-hand side sum of the kernel's defining identity."""
    ker = KERNELS[tag]
    b = Fraction(base)
    ib = inner_base(tag, b)
    top = L // 3 if ker.shape == "cubic" else L
    terms = []
    poly_total = QPoly.ZERO
    start = abs(j)
    for r in range(start, top + 1, 2):
        F = kernel_eval(tag, L, r, b)
        if F.is_zero():
            continue
        binom = qbinom(r, (r - j) // 2, ib)
        if binom.is_zero():
            continue
        term = F * FactoredRational.from_qpoly(binom)
        if ker.side is None:
            # each individual term is a polynomial for these kernels
            poly_total = poly_total + term.to_qpoly()
        else:
            terms.append(term)
    if ker.side is None:
        return FactoredRational.from_qpoly(poly_total)
    return _tree_sum(terms)


def kernel_row(tag: str, L: int, base=1) -> list:
    """All (r, F_{L,r}) with nonzero F, with F flattened to QPoly when it is one."""
    ker = KERNELS[tag]
    b = Fraction(base)
    top = L // 3 if ker.shape == "cubic" else L
    row = []
    for r in range(top + 1):
        F = kernel_eval(tag, L, r, b)
        if F.is_zero():
            continue
        row.append((r, F.to_qpoly() if ker.side is None else F))
    return row


def verify_kernel_lemma(tag: str, L_max: int) -> VerificationReport:
    """Check the kernel's defining identity for all |j| <= L <= L_max."""
    report = VerificationReport(f"kernel-{tag}", params={"L_max": L_max})
    ker = KERNELS[tag]
    ib = inner_base(tag)
    with Stopwatch() as sw:
        for L in range(L_max + 1):
            row = kernel_row(tag, L)
            for j in range(-L, L + 1):
                if ker.parity_locked and (L - j) % 2:
                    continue
                if ker.side is None:
                    lhs_p = QPoly.ZERO
                    for r, F in row:
                        if (r - j) % 2:
                            continue
                        binom = qbinom(r, (r - j) // 2, ib)
                        if binom:
                            lhs_p = lhs_p + F * binom
                    lhs = FactoredRational.from_qpoly(lhs_p)
                else:
                    terms = []
                    for r, F in row:
                        if (r - j) % 2:
                            continue
                        binom = qbinom(r, (r - j) // 2, ib)
                        if binom:
                            terms.append(F * FactoredRational.from_qpoly(binom))
                    lhs = _tree_sum(terms)
                diff = lhs - rhs_eval(tag, L, j)
                ok = diff.num.is_zero()
                report.record((L, j), ok, None if ok else diff)
                if not ok:
                    report.seconds = getattr(sw, "elapsed", 0.0)
                    return report
    report.seconds = sw.elapsed
    return report
