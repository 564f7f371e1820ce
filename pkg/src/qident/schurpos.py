"""Partition combinatorics and positivity of (1-q^k)/(1-q^d) * s_lambda(1,q,...,q^(d-1)).

Everything here is exact.  Partitions are tuples of weakly decreasing
positive integers; the empty partition is ().  The main objects:

* i-cores, computed two independent ways (rim-hook removal on the diagram
  and the beta-number / abacus method) which are cross-checked against
  each other on every call;
* the principal specialization s_lambda(1, q, ..., q^(d-1)) via the
  hook-content product, as an exact QPoly;
* the quotients A_{n,j,k} = (1-q^k)/(1-q^n) * qbinom(n,j) and
  B_{lam,d,k} = (1-q^k)/(1-q^d) * s_lam(q^delta), which are reciprocal
  nonnegative polynomials of known degree whenever k is a multiple of
  gcd(n,j) resp. gcd(d,|lam|);
* a positivity certificate for the cubic-kernel coefficient
  f_{L,r} = (q^3;q^3)_{(L-r-2)/2} (1-q^L) / ((q^3;q^3)_r (q;q)_{(L-3r)/2})
  obtained by factoring it into three manifestly nonnegative pieces.
"""

from fractions import Fraction
from math import gcd

from .cyclotomic import phase_to_coeff
from .qcomb import poch_poly, qbinom
from .qpoly import NotDivisible, QMonomial, QPoly
from .report import Stopwatch, VerificationReport

Partition = tuple


def partition(parts) -> Partition:
    """Normalize to a tuple, dropping trailing zeros; validate shape."""
    lam = tuple(int(p) for p in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(p <= 0 for p in lam):
        raise ValueError("parts must be positive: %r" % (parts,))
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("parts must be weakly decreasing: %r" % (parts,))
    return lam


def parse_partition(s: str) -> Partition:
    s = s.strip()
    if not s:
        return ()
    return partition(int(t) for t in s.split(","))


def format_partition(lam) -> str:
    return ",".join(str(p) for p in lam)


def conjugate(lam) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def weight(lam) -> int:
    return sum(lam)


def n_stat(lam) -> int:
    """n(lam) = sum over rows of (i-1)*lam_i, rows numbered from 1."""
    return sum(i * p for i, p in enumerate(lam))


def cells(lam):
    """Yield (i, j, hook, content) over the diagram, rows/cols from 1."""
    conj = conjugate(lam)
    for i, p in enumerate(lam, start=1):
        for j in range(1, p + 1):
            yield i, j, p + conj[j - 1] - i - j + 1, j - i


def hook_lengths(lam) -> list:
    return [h for _, _, h, _ in cells(lam)]


def contents(lam) -> list:
    return [c for _, _, _, c in cells(lam)]


# ---------------------------------------------------------------------------
# i-cores


def _trace_strip(lam, i, r):
    """Follow the rim from the last cell of row r for i cells.

    Returns the row lengths left behind if this is a removable border
    strip (the remaining shape is a partition), otherwise None.  In an
    intermediate row t the strip occupies columns lam[t+1] .. lam[t]
    before dropping into row t+1; in its final row it may stop early,
    but not so early that the row falls below the one beneath it.
    """
    ell = len(lam)
    need = i
    t = r
    col = lam[r]
    new = {}
    while True:
        below = lam[t + 1] if t + 1 < ell else 0
        if need <= col - below:
            new[t] = col - need
            return new
        if t + 1 >= ell:
            return None  # rim exhausted before i cells were collected
        need -= col - below + 1
        if need == 0:
            return None  # would end at column lam[t+1], leaving a non-shape
        new[t] = below - 1
        t += 1
        col = below


def _core_by_strips(lam, i):
    """i-core by repeated rim-hook removal, with a fixed strategy:
    always take the strip whose head sits in the lowest-index row."""
    cur = partition(lam)
    steps = [cur]
    while True:
        for r in range(len(cur)):
            new = _trace_strip(cur, i, r)
            if new is not None:
                rows = list(cur)
                for t, v in new.items():
                    rows[t] = v
                cur = partition(sorted((v for v in rows if v > 0),
                                       reverse=True))
                steps.append(cur)
                break
        else:
            return cur, steps


def _core_by_abacus(lam, i):
    """i-core from beta numbers: repeatedly slide beads down by i."""
    m = max(len(lam), 1)
    beta = set(lam[j] + m - 1 - j for j in range(len(lam)))
    beta.update(range(m - len(lam)))
    moved = True
    while moved:
        moved = False
        for b in sorted(beta):
            if b - i >= 0 and b - i not in beta:
                beta.remove(b)
                beta.add(b - i)
                moved = True
    out = sorted(beta, reverse=True)
    return partition(sorted((b - (m - 1 - j) for j, b in enumerate(out)
                             if b - (m - 1 - j) > 0), reverse=True))


def i_core(lam, i) -> Partition:
    """The i-core of lam.

    Computed by canonical rim-hook removal and, independently, on the
    abacus; the two must agree (order-independence of the core is a
    classical fact, but it is cheap to check rather than assume).
    """
    if i < 1:
        raise ValueError("i must be positive")
    lam = partition(lam)
    if i == 1:
        return ()
    by_strips, _ = _core_by_strips(lam, i)
    by_abacus = _core_by_abacus(lam, i)
    if by_strips != by_abacus:
        raise AssertionError(
            "core mismatch for lam=%r i=%d: strips=%r abacus=%r"
            % (lam, i, by_strips, by_abacus))
    return by_strips


def core_removal_steps(lam, i):
    """The partitions visited by canonical strip removal, core last."""
    _, steps = _core_by_strips(partition(lam), i)
    return steps


# ---------------------------------------------------------------------------
# principal specialization and the two quotient families


class NotPolynomial:
    """Returned when a quotient fails to be a polynomial.

    Carries the numerator that survived partial cancellation and the
    exponent d of the cyclotomic-free denominator 1 - q^d it refuses to
    absorb.
    """

    def __init__(self, numerator: QPoly, den_exp: int):
        self.numerator = numerator
        self.den_exp = den_exp

    def __repr__(self):
        return "NotPolynomial(den_exp=%d)" % self.den_exp


def schur_principal(lam, d: int) -> QPoly:
    """s_lam(1, q, ..., q^(d-1)) as an exact polynomial.

    Hook-content product: q^n(lam) * prod (1-q^(d+c)) / (1-q^h).
    Zero when the partition has more than d rows.
    """
    lam = partition(lam)
    if d < 1:
        raise ValueError("d must be positive")
    if len(lam) > d:
        return QPoly({})
    num_exps = []
    den_exps = []
    for _, _, h, c in cells(lam):
        num_exps.append(d + c)
        den_exps.append(h)
    # cancel equal factors before any polynomial division
    den_left = []
    num_count = {}
    for e in num_exps:
        num_count[e] = num_count.get(e, 0) + 1
    for e in den_exps:
        if num_count.get(e, 0) > 0:
            num_count[e] -= 1
        else:
            den_left.append(e)
    out = QPoly.qpow(n_stat(lam))
    for e, mult in sorted(num_count.items()):
        for _ in range(mult):
            out = out * QPoly.binomial_factor(Fraction(0), e)
    for e in sorted(den_left, reverse=True):
        out = out.exact_div(QPoly.binomial_factor(Fraction(0), e))
    return out


def schur_at_root(lam, d: int, i: int):
    """s_lam(omega^(d-1), ..., omega, 1) for omega a primitive i-th
    root of unity, exact in Z[omega]."""
    p = schur_principal(lam, d)
    total = 0
    for e, c in p.terms.items():
        exp = Fraction(e, p.d)
        if exp.denominator != 1:
            raise ArithmeticError("fractional exponent in Schur polynomial")
        total = total + c * phase_to_coeff(Fraction(exp.numerator, i) % 1)
    return total


def a_poly(n: int, j: int, k: int):
    """(1-q^k)/(1-q^n) * qbinom(n, j); QPoly or NotPolynomial."""
    if n < 1 or k < 1 or not 0 <= j <= n:
        raise ValueError("need n,k >= 1 and 0 <= j <= n")
    num = QPoly.binomial_factor(Fraction(0), k) * qbinom(n, j)
    try:
        return num.exact_div(QPoly.binomial_factor(Fraction(0), n))
    except NotDivisible:
        return NotPolynomial(num, n)


def b_poly(lam, d: int, k: int):
    """(1-q^k)/(1-q^d) * s_lam(1,q,...,q^(d-1)); QPoly or NotPolynomial."""
    if d < 1 or k < 1:
        raise ValueError("need d, k >= 1")
    num = QPoly.binomial_factor(Fraction(0), k) * schur_principal(lam, d)
    try:
        return num.exact_div(QPoly.binomial_factor(Fraction(0), d))
    except NotDivisible:
        return NotPolynomial(num, d)


def is_reciprocal(p: QPoly) -> bool:
    if p.is_zero():
        return True
    # work directly on the scaled exponent keys to stay in integers
    keys = p.terms
    lo_k = min(keys)
    hi_k = max(keys)
    return all(keys.get(lo_k + hi_k - e) == c for e, c in keys.items())


def is_unimodal(p: QPoly) -> bool:
    if p.is_zero():
        return True
    lo = min(p.terms)
    hi = max(p.terms)
    seq = [p.terms.get(e, 0) for e in range(lo, hi + 1)]
    rising = True
    prev = seq[0]
    for c in seq[1:]:
        if rising and c < prev:
            rising = False
        if not rising and c > prev:
            return False
        prev = c
    return True


# ---------------------------------------------------------------------------
# sweeps


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of n, largest part first, lexicographically."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_up_to(n: int):
    for m in range(n + 1):
        yield from partitions_of(m)


def verify_core_counts(size_max: int = 12, i_max: int = 6) -> VerificationReport:
    """Each strip removal drops the number of hooks divisible by i and
    the number of contents divisible by i both by exactly one."""
    rep = VerificationReport("core-removal-counts",
                             params={"size_max": size_max, "i_max": i_max})
    with Stopwatch() as sw:
        for lam in partitions_up_to(size_max):
            for i in range(2, i_max + 1):
                steps = core_removal_steps(lam, i)
                for a, b in zip(steps, steps[1:]):
                    dh = (sum(1 for h in hook_lengths(a) if h % i == 0)
                          - sum(1 for h in hook_lengths(b) if h % i == 0))
                    dc = (sum(1 for c in contents(a) if c % i == 0)
                          - sum(1 for c in contents(b) if c % i == 0))
                    rep.record((lam, i, b), dh == 1 and dc == 1,
                               "hooks %+d contents %+d" % (dh, dc))
                # and the core itself is hook-free mod i
                core = steps[-1]
                rep.record((lam, i, "core"),
                           all(h % i for h in hook_lengths(core)))
    rep.seconds = sw.elapsed
    return rep


def verify_root_vanishing(size_max: int = 14, i_max: int = 6,
                          d_max: int = 12) -> VerificationReport:
    """s_lam at a primitive i-th root of unity (i | d) vanishes exactly
    when the i-core of lam is non-empty; exact in Z[omega]."""
    rep = VerificationReport("schur-root-vanishing",
                             params={"size_max": size_max, "i_max": i_max,
                                     "d_max": d_max})
    with Stopwatch() as sw:
        for lam in partitions_up_to(size_max):
            for i in range(2, i_max + 1):
                empty = i_core(lam, i) == ()
                for d in range(i, d_max + 1, i):
                    if len(lam) > d:
                        continue
                    val = schur_at_root(lam, d, i)
                    ok = (val == 0) == (not empty)
                    rep.record((lam, i, d), ok,
                               "core empty=%s value zero=%s"
                               % (empty, val == 0))
    rep.seconds = sw.elapsed
    return rep


def verify_schur_shape(size_max: int = 10, d_max: int = 6) -> VerificationReport:
    """The principal specialization, shifted down by q^n(lam), is a
    reciprocal unimodal polynomial with nonnegative coefficients.

    A unimodality failure here means broken arithmetic, not new
    mathematics, so it raises rather than being recorded.
    """
    rep = VerificationReport("schur-shape",
                             params={"size_max": size_max, "d_max": d_max})
    with Stopwatch() as sw:
        for lam in partitions_up_to(size_max):
            for d in range(max(len(lam), 1), d_max + 1):
                p = schur_principal(lam, d)
                shifted = p.times_qpow(-n_stat(lam))
                if not (shifted.is_nonneg() and is_unimodal(shifted)):
                    raise AssertionError(
                        "specialization not unimodal/nonnegative: "
                        "lam=%r d=%d" % (lam, d))
                rep.record((lam, d), is_reciprocal(shifted))
    rep.seconds = sw.elapsed
    return rep


def verify_a_family(n_max: int = 24) -> VerificationReport:
    """Theorem on A_{n,j,k}: for k a multiple of gcd(n,j), k <= 2n, the
    quotient is reciprocal, nonnegative, of degree j(n-j)+k-n; and for
    k not a multiple it is never a polynomial."""
    rep = VerificationReport("a-family", params={"n_max": n_max})
    with Stopwatch() as sw:
        for n in range(1, n_max + 1):
            for j in range(0, n + 1):
                g = gcd(n, j)
                for k in range(1, 2 * n + 1):
                    a = a_poly(n, j, k)
                    if k % g == 0:
                        ok = (isinstance(a, QPoly)
                              and a.is_nonneg()
                              and is_reciprocal(a)
                              and a.degree() == j * (n - j) + k - n
                              and a.valuation() == 0)
                        rep.record((n, j, k), ok)
                    else:
                        rep.record((n, j, k), isinstance(a, NotPolynomial),
                                   "expected non-polynomial")
    rep.seconds = sw.elapsed
    return rep


def verify_b_family(size_max: int = 12, d_max: int = 8,
                    k_max: int | None = None) -> VerificationReport:
    """Theorem on B_{lam,d,k} in the regime k = 0 mod gcd(d, |lam|):
    polynomial, reciprocal, nonnegative, degree k - d + sum (d-i) lam_i."""
    rep = VerificationReport("b-family",
                             params={"size_max": size_max, "d_max": d_max})
    with Stopwatch() as sw:
        for lam in partitions_up_to(size_max):
            for d in range(max(len(lam), 1), d_max + 1):
                g = gcd(d, sum(lam)) if lam else d
                top = 2 * d if k_max is None else k_max
                for k in range(g, top + 1, g):
                    b = b_poly(lam, d, k)
                    deg = k - d + sum((d - i) * p
                                      for i, p in enumerate(lam, start=1))
                    ok = (isinstance(b, QPoly)
                          and b.is_nonneg()
                          and is_reciprocal(b)
                          and b.degree() == deg)
                    rep.record((lam, d, k), ok)
    rep.seconds = sw.elapsed
    return rep


def scan_b_polynomiality(size_max: int = 10, d_max: int = 8,
                         k_max: int = 8) -> VerificationReport:
    """Conjectured criterion, reported but never asserted: B_{lam,d,k}
    is a polynomial exactly when every i > 1 dividing d but not k
    leaves lam with a non-empty i-core.  Failures are counted as
    counterexample flags in the report, not as errors."""
    rep = VerificationReport("b-polynomiality-scan",
                             params={"size_max": size_max, "d_max": d_max,
                                     "k_max": k_max})
    with Stopwatch() as sw:
        for lam in partitions_up_to(size_max):
            for d in range(max(len(lam), 1), d_max + 1):
                for k in range(1, k_max + 1):
                    predicted = all(
                        i_core(lam, i) != ()
                        for i in range(2, d + 1)
                        if d % i == 0 and k % i != 0)
                    actual = isinstance(b_poly(lam, d, k), QPoly)
                    rep.record((lam, d, k), predicted == actual,
                               "predicted=%s actual=%s" % (predicted, actual))
    rep.seconds = sw.elapsed
    return rep


# ---------------------------------------------------------------------------
# the cubic-kernel coefficient


def _fcubic(L: int, r: int) -> QPoly:
    """(q^3;q^3)_{(L-r-2)/2} (1-q^L) / ((q^3;q^3)_r (q;q)_{(L-3r)/2}),
    with the r = L = 0 value taken to be 1."""
    if L == 0 and r == 0:
        return QPoly.const(1)
    num = poch_poly(QMonomial.qpow(3), (L - r - 2) // 2, base=3)
    num = num * QPoly.binomial_factor(Fraction(0), L)
    num = num.exact_div(poch_poly(QMonomial.qpow(3), r, base=3))
    return num.exact_div(poch_poly(QMonomial.qpow(1), (L - 3 * r) // 2))


def cubic_kernel_positivity(L: int, r: int) -> VerificationReport:
    """Certify nonnegativity of the cubic-kernel coefficient f_{L,r}.

    For 0 < 3r < L it is rebuilt from the three-factor decomposition
        f_{L,r} = [(1-q^k)(q^3;q^3)_m / ((1-q^(3k))(q;q)_m)]
                  * [(1-q^L)/(1-q^k)] * A_{(L-r)/2, r, k}(q^3)
    with m = (L-3r)/2 and k = gcd((L-r)/2, r); each factor is checked
    nonnegative and the product is checked equal to the direct value.
    The boundary cases 3r = L and r = 0 use their closed forms.
    """
    if not (0 <= 3 * r <= L) or (L - r) % 2:
        raise ValueError("need 0 <= 3r <= L with r = L mod 2")
    rep = VerificationReport("cubic-kernel-positivity",
                             params={"L": L, "r": r})
    with Stopwatch() as sw:
        f = _fcubic(L, r)
        rep.record((L, r, "nonneg"), f.is_nonneg())
        if 3 * r == L:
            rep.record((L, r, "boundary"), f == QPoly.const(1))
        elif r == 0:
            half = L // 2
            closed = QPoly.binomial_factor(Fraction(1, 2), half)
            closed = closed * poch_poly(QMonomial.qpow(3), half - 1, base=3)
            closed = closed.exact_div(
                poch_poly(QMonomial.qpow(1), half - 1))
            rep.record((L, r, "boundary"), f == closed)
            rep.record((L, r, "boundary-nonneg"), closed.is_nonneg())
        else:
            k = gcd((L - r) // 2, r)
            m = (L - 3 * r) // 2
            first = QPoly.binomial_factor(Fraction(0), k)
            first = first * poch_poly(QMonomial.qpow(3), m, base=3)
            first = first.exact_div(QPoly.binomial_factor(Fraction(0), 3 * k))
            first = first.exact_div(poch_poly(QMonomial.qpow(1), m))
            second = QPoly.binomial_factor(Fraction(0), L)
            second = second.exact_div(QPoly.binomial_factor(Fraction(0), k))
            third = a_poly((L - r) // 2, r, k)
            rep.record((L, r, "factor-A-poly"), isinstance(third, QPoly))
            if isinstance(third, QPoly):
                third = third.substitute(3)
                allpos = (first.is_nonneg() and second.is_nonneg()
                          and third.is_nonneg())
                rep.record((L, r, "factors-nonneg"), allpos)
                rep.record((L, r, "product"), first * second * third == f)
    rep.seconds = sw.elapsed
    return rep


def verify_cubic_positivity(L_max: int = 60) -> VerificationReport:
    rep = VerificationReport("cubic-kernel-positivity-sweep",
                             params={"L_max": L_max})
    with Stopwatch() as sw:
        for L in range(L_max + 1):
            for r in range(L % 2, L // 3 + 1, 2):
                rep.merge(cubic_kernel_positivity(L, r))
    rep.seconds = sw.elapsed
    rep.params = {"L_max": L_max}
    return rep
