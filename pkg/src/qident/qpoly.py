"""Laurent polynomials in fractional powers of q, with exact coefficients.

The universal value type of the whole engine. A QPoly stores a per-polynomial
exponent denominator D and a sparse map {k: c} meaning sum c * q^(k/D).
Coefficients are plain Python ints, or CycInt when a genuine root of unity is
involved. Everything is exact; there is no floating point anywhere.

Also defined here:

* QMonomial       -- c * q^e with c a root of unity and e rational
* FactoredRational -- QPoly numerator over a multiset of binomial factors
                      (1 - zeta * q^e), with exact multiset cancellation
* TruncSeries     -- truncated formal power series with exact inversion
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import gcd

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - gmpy2 is a hard dependency
    mpz = int

from .cyclotomic import CycInt, phase_to_coeff


class NotDivisible(ArithmeticError):
    """Exact division failed; a polynomiality claim does not hold."""


class NonRationalCoefficient(TypeError):
    """A coefficient outside the plain-integer subring where ints are required."""


class InfinitePole(ZeroDivisionError):
    """A value with an uncancelled zero denominator factor."""


class NonUnitConstantTerm(ArithmeticError):
    """Series inversion requires a unit constant term."""


def _unify(a: "QPoly", b: "QPoly"):
    """Common exponent denominator for two polynomials."""
    if a.d == b.d:
        return a.d, a.terms, b.terms
    d = a.d * b.d // gcd(a.d, b.d)
    fa, fb = d // a.d, d // b.d
    ta = a.terms if fa == 1 else {k * fa: c for k, c in a.terms.items()}
    tb = b.terms if fb == 1 else {k * fb: c for k, c in b.terms.items()}
    return d, ta, tb


def _kron_mul(t1: dict, t2: dict) -> dict:
    """Multiply two integer-coefficient dicts by Kronecker substitution.

    Pack each polynomial densely into a big integer (fixed-width signed
    digits), multiply with gmpy2, and read the product digits back with
    balanced extraction. Exact for any signs.
    """
    lo1, hi1 = min(t1), max(t1)
    lo2, hi2 = min(t2), max(t2)
    n1, n2 = hi1 - lo1 + 1, hi2 - lo2 + 1
    m1 = max(abs(c) for c in t1.values())
    m2 = max(abs(c) for c in t2.values())
    bits = m1.bit_length() + m2.bit_length() + min(len(t1), len(t2)).bit_length() + 2
    w = (bits + 7) // 8 + 1  # bytes per digit, headroom for balanced digits
    base = 1 << (8 * w)
    half = base >> 1

    def pack(t, lo, n):
        pos = bytearray(n * w)
        neg = bytearray(n * w)
        for k, c in t.items():
            off = (k - lo) * w
            if c > 0:
                pos[off:off + w] = c.to_bytes(w, "little")
            else:
                neg[off:off + w] = (-c).to_bytes(w, "little")
        return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")

    z = int(mpz(pack(t1, lo1, n1)) * mpz(pack(t2, lo2, n2)))
    sign = 1
    if z < 0:
        sign, z = -1, -z
    nout = n1 + n2 - 1
    data = z.to_bytes(nout * w + w, "little")
    out = {}
    carry = 0
    off0 = lo1 + lo2
    for i in range(nout + 1):
        v = int.from_bytes(data[i * w:(i + 1) * w], "little") + carry
        if v >= half:
            v -= base
            carry = 1
        else:
            carry = 0
        if v:
            out[off0 + i] = sign * v
    return out


class QPoly:
    """Sparse exact Laurent polynomial in q^(1/D). Immutable."""

    __slots__ = ("d", "terms", "_hash")

    def __init__(self, terms: dict, d: int = 1, _canonical: bool = False):
        if not _canonical:
            terms = {k: c for k, c in terms.items() if c != 0 and not (isinstance(c, CycInt) and not c)}
            if terms and d > 1:
                g = d
                for k in terms:
                    g = gcd(g, k)
                    if g == 1:
                        break
                if g > 1:
                    terms = {k // g: c for k, c in terms.items()}
                    d //= g
            if not terms:
                d = 1
        self.d = d
        self.terms = terms
        self._hash = None

    # -- constructors ---------------------------------------------------------

    ZERO: "QPoly"
    ONE: "QPoly"

    @staticmethod
    def const(c) -> "QPoly":
        if not c:
            return QPoly.ZERO
        return QPoly({0: c}, 1, _canonical=True)

    @staticmethod
    def monomial(c, exp) -> "QPoly":
        """c * q^exp with exp an int or Fraction."""
        if not c:
            return QPoly.ZERO
        exp = Fraction(exp)
        return QPoly({exp.numerator: c}, exp.denominator)

    @staticmethod
    def qpow(exp) -> "QPoly":
        return QPoly.monomial(1, exp)

    @staticmethod
    def binomial_factor(phase: Fraction, exp) -> "QPoly":
        """The polynomial 1 - zeta * q^exp with zeta = e^(2 pi i phase)."""
        exp = Fraction(exp)
        c = phase_to_coeff(phase)
        if exp == 0:
            return QPoly.const(1 - c)
        return QPoly({0: 1, exp.numerator: -c}, exp.denominator)

    # -- basic protocol ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        if self.d != other.d or len(self.terms) != len(other.terms):
            return False
        for k, c in self.terms.items():
            oc = other.terms.get(k)
            if oc is None:
                return False
            if c != oc:
                return False
        return True

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.d, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        d, ta, tb = _unify(self, other)
        out = dict(ta)
        for k, c in tb.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return QPoly(out, d)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({k: -c for k, c in self.terms.items()}, self.d, _canonical=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, CycInt)):
            if not other:
                return QPoly.ZERO
            return QPoly({k: c * other for k, c in self.terms.items()}, self.d)
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return QPoly.ZERO
        d, ta, tb = _unify(self, other)
        n1, n2 = len(ta), len(tb)
        if n1 == 1:
            (k1, c1), = ta.items()
            return QPoly({k1 + k: c1 * c for k, c in tb.items()}, d)
        if n2 == 1:
            (k2, c2), = tb.items()
            return QPoly({k2 + k: c * c2 for k, c in ta.items()}, d)
        if n1 * n2 > 512:
            allint = all(type(c) is int for c in ta.values()) and all(
                type(c) is int for c in tb.values()
            )
            if allint:
                span = (max(ta) - min(ta)) + (max(tb) - min(tb)) + 2
                if n1 * n2 > 3 * span:
                    return QPoly(_kron_mul(ta, tb), d)
        if n2 < n1:
            ta, tb = tb, ta
        out = {}
        get = out.get
        for k1, c1 in ta.items():
            for k2, c2 in tb.items():
                k = k1 + k2
                v = get(k)
                if v is None:
                    out[k] = c1 * c2
                else:
                    v = v + c1 * c2
                    if v:
                        out[k] = v
                    else:
                        del out[k]
        return QPoly(out, d)

    __rmul__ = __mul__

    def times_qpow(self, exp) -> "QPoly":
        """Multiply by q^exp."""
        exp = Fraction(exp)
        if exp == 0:
            return self
        d = self.d * exp.denominator // gcd(self.d, exp.denominator)
        f = d // self.d
        shift = exp.numerator * (d // exp.denominator)
        return QPoly({k * f + shift: c for k, c in self.terms.items()}, d)

    # -- substitution -----------------------------------------------------------

    def substitute(self, s) -> "QPoly":
        """Exact exponent map q -> q^s for rational s != 0 (s = -1 is q -> 1/q)."""
        s = Fraction(s)
        if s == 0:
            raise ValueError("substitution exponent must be nonzero")
        if s == 1:
            return self
        d = self.d * s.denominator
        num = s.numerator
        terms = {k * num: c for k, c in self.terms.items()}
        return QPoly(terms, d)

    # -- structure --------------------------------------------------------------

    def degree(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return Fraction(max(self.terms), self.d)

    def valuation(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no valuation")
        return Fraction(min(self.terms), self.d)

    def coeff(self, exp) -> object:
        exp = Fraction(exp)
        if self.d % exp.denominator:
            return 0
        return self.terms.get(exp.numerator * (self.d // exp.denominator), 0)

    def sorted_terms(self):
        for k in sorted(self.terms):
            yield Fraction(k, self.d), self.terms[k]

    def eval_at_one(self):
        """Total coefficient mass, i.e. the value at q = 1."""
        s = 0
        for c in self.terms.values():
            s = s + c
        return s

    # -- division ------------------------------------------------------------------

    def exact_div(self, den: "QPoly") -> "QPoly":
        """Quotient in the Laurent ring; raises NotDivisible if not exact."""
        if not den.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return QPoly.ZERO
        d, ta, tb = _unify(self, den)
        rem = dict(ta)
        dkeys = sorted(tb, reverse=True)
        dlead = dkeys[0]
        clead = tb[dlead]
        lead_int = type(clead) is int
        out = {}
        while rem:
            k = max(rem)
            c = rem[k]
            if lead_int and type(c) is int:
                qc, rr = divmod(c, clead)
                if rr:
                    raise NotDivisible(f"coefficient {c} not divisible by {clead}")
            else:
                qc = _coeff_div(c, clead)
            ke = k - dlead
            out[ke] = qc
            for dk in dkeys:
                kk = ke + dk
                v = rem.get(kk)
                nv = (v if v is not None else 0) - qc * tb[dk]
                if nv:
                    rem[kk] = nv
                elif v is not None:
                    del rem[kk]
            if len(out) > len(ta) + len(tb) + 10000:  # pragma: no cover - safety net
                raise NotDivisible("quotient does not terminate")
        return QPoly(out, d)

    def divisible_by(self, den: "QPoly") -> bool:
        try:
            self.exact_div(den)
            return True
        except NotDivisible:
            return False

    def div_const_exact(self, c) -> "QPoly":
        """Divide every coefficient exactly by the constant c."""
        if isinstance(c, int):
            out = {}
            for k, v in self.terms.items():
                if isinstance(v, int):
                    q, r = divmod(v, c)
                    if r:
                        raise NotDivisible(f"{v} not divisible by {c}")
                else:
                    q = _coeff_div(v, c)
                out[k] = q
            return QPoly(out, self.d, _canonical=True)
        return QPoly({k: _coeff_div(v, c) for k, v in self.terms.items()}, self.d)

    # -- positivity -------------------------------------------------------------------

    def nonneg_check(self):
        """None if all coefficients nonnegative; else (exponent, coefficient)
        of the least offending exponent. Integer coefficients required."""
        neg = None
        for k, c in self.terms.items():
            if type(c) is not int:
                raise NonRationalCoefficient(f"non-integer coefficient at q^({Fraction(k, self.d)})")
            if c < 0 and (neg is None or k < neg):
                neg = k
        if neg is None:
            return None
        return (Fraction(neg, self.d), self.terms[neg])

    def is_nonneg(self) -> bool:
        return self.nonneg_check() is None

    # -- text form -----------------------------------------------------------------------

    def __str__(self):
        return format_qpoly(self)

    def __repr__(self):
        return f"QPoly({format_qpoly(self)!r})"


QPoly.ZERO = QPoly({}, 1, _canonical=True)
QPoly.ONE = QPoly({0: 1}, 1, _canonical=True)


def _coeff_div(num, den):
    """Exact division of cyclotomic-integer coefficients."""
    if isinstance(num, int):
        if isinstance(den, int):
            q, r = divmod(num, den)
            if r:
                raise NotDivisible(f"{num} not divisible by {den}")
            return q
        num = CycInt.from_int(den.n, num)
    if isinstance(den, int):
        out = []
        for x in num.c:
            q, r = divmod(x, den)
            if r:
                raise NotDivisible(f"coefficient {num} not divisible by {den}")
            out.append(q)
        return CycInt.make(num.n, out)
    inv = den.inverse_rational()
    if inv is None:
        raise ZeroDivisionError("division by zero cyclotomic integer")
    m = num.n * den.n // gcd(num.n, den.n)
    a = num.embed(m) if num.n != m else num
    d_elt = den.embed(m) if den.n != m else den
    inv = d_elt.inverse_rational()
    # multiply a by inv (Fraction coords) in Q(zeta_m)
    from .cyclotomic import _power_table, _phi  # local import to avoid cycle noise

    deg = _phi(m)
    table = _power_table(m)
    tmp = [Fraction(0)] * (2 * deg - 1)
    for i, x in enumerate(a.c):
        if x:
            for j, y in enumerate(inv):
                if y:
                    tmp[i + j] += x * y
    out = list(tmp[:deg])
    for k in range(deg, len(tmp)):
        v = tmp[k]
        if v:
            row = table[k % m]
            for j in range(deg):
                out[j] += v * row[j]
    ints = []
    for v in out:
        if v.denominator != 1:
            raise NotDivisible("cyclotomic coefficient division not exact")
        ints.append(int(v))
    return CycInt.make(m, ints)


# ---------------------------------------------------------------------------
# Canonical text form and round-trip parser
# ---------------------------------------------------------------------------


def _format_coeff(c) -> str:
    if isinstance(c, int):
        return str(c)
    c = c.reduce()
    if isinstance(c, int):
        return str(c)
    parts = []
    for i, v in enumerate(c.c):
        if v == 0:
            continue
        if i == 0:
            parts.append(str(v))
        else:
            zp = f"z{c.n}" if i == 1 else f"z{c.n}^{i}"
            if v == 1:
                parts.append(zp)
            elif v == -1:
                parts.append(f"-{zp}")
            else:
                parts.append(f"{v}*{zp}")
    body = parts[0]
    for p in parts[1:]:
        body += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return f"({body})"


def format_qpoly(p: QPoly) -> str:
    """Canonical text form: ascending exponents, reduced-fraction powers."""
    if not p.terms:
        return "0"
    chunks = []
    for exp, c in p.sorted_terms():
        cs = _format_coeff(c)
        neg = cs.startswith("-") and not cs.startswith("(")
        mag = cs[1:] if neg else cs
        if exp == 0:
            body = mag
        else:
            if exp == 1:
                qs = "q"
            elif exp.denominator == 1:
                qs = f"q^{exp.numerator}"
            else:
                qs = f"q^({exp.numerator}/{exp.denominator})"
            body = qs if mag == "1" else f"{mag}*{qs}"
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f" - {body}" if neg else f" + {body}")
    return "".join(chunks)


import re as _re

_TERM_RE = _re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coeff>\((?P<cyc>[^()]*)\)|\d+)?
        \s*\*?\s*
        (?P<qpart>q(\^(?P<exp>-?\d+|\(-?\d+/\d+\)))?)?\s*""",
    _re.VERBOSE,
)

_CYCTERM_RE = _re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<int>\d+)\s*\*?\s*)?(?:z(?P<n>\d+)(?:\^(?P<pow>\d+))?)?\s*"
)


def _parse_cyc(body: str):
    pos = 0
    total = 0
    n_seen = None
    while pos < len(body):
        m = _CYCTERM_RE.match(body, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse cyclotomic coefficient {body!r}")
        sign = -1 if m.group("sign") == "-" else 1
        iv = int(m.group("int")) if m.group("int") else 1
        if m.group("n"):
            n = int(m.group("n"))
            k = int(m.group("pow") or 1)
            from .cyclotomic import zeta_power

            total = total + sign * iv * zeta_power(n, k)
        else:
            if m.group("int") is None:
                raise ValueError(f"cannot parse cyclotomic coefficient {body!r}")
            total = total + sign * iv
        pos = m.end()
    return total


def parse_qpoly(s: str) -> QPoly:
    """Parse the canonical text form back into a QPoly (bit-exact round trip)."""
    s = s.strip()
    if s == "0":
        return QPoly.ZERO
    out = QPoly.ZERO
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (m.group("coeff") is None and m.group("qpart") is None):
            raise ValueError(f"cannot parse {s!r} at position {pos}")
        sign = -1 if m.group("sign") == "-" else 1
        cg = m.group("coeff")
        if cg is None:
            c = 1
        elif cg.startswith("("):
            c = _parse_cyc(m.group("cyc"))
        else:
            c = int(cg)
        exp = Fraction(0)
        if m.group("qpart"):
            eg = m.group("exp")
            if eg is None:
                exp = Fraction(1)
            elif eg.startswith("("):
                exp = Fraction(eg[1:-1])
            else:
                exp = Fraction(int(eg))
        out = out + QPoly.monomial(sign * c if sign == -1 else c, exp)
        pos = m.end()
    return out


# ---------------------------------------------------------------------------
# Monomials c * q^e with root-of-unity phase
# ---------------------------------------------------------------------------


class QMonomial:
    """c * q^e where c = e^(2 pi i phase) is a root of unity, e rational."""

    __slots__ = ("phase", "exp")

    def __init__(self, exp=0, phase=0):
        self.exp = Fraction(exp)
        self.phase = Fraction(phase) % 1

    @staticmethod
    def qpow(exp) -> "QMonomial":
        return QMonomial(exp)

    @staticmethod
    def neg_qpow(exp) -> "QMonomial":
        return QMonomial(exp, Fraction(1, 2))

    def coeff(self):
        """The phase as an exact cyclotomic integer (int for +-1)."""
        return phase_to_coeff(self.phase)

    def __mul__(self, other):
        if not isinstance(other, QMonomial):
            return NotImplemented
        return QMonomial(self.exp + other.exp, self.phase + other.phase)

    def __truediv__(self, other):
        if not isinstance(other, QMonomial):
            return NotImplemented
        return QMonomial(self.exp - other.exp, self.phase - other.phase)

    def __pow__(self, n: int):
        return QMonomial(self.exp * n, self.phase * n)

    def root(self, n: int) -> "QMonomial":
        """A distinguished n-th root (principal phase branch)."""
        return QMonomial(self.exp / n, self.phase / n)

    def __neg__(self):
        return QMonomial(self.exp, self.phase + Fraction(1, 2))

    def __eq__(self, other):
        if not isinstance(other, QMonomial):
            return NotImplemented
        return self.exp == other.exp and self.phase == other.phase

    def __hash__(self):
        return hash((self.exp, self.phase))

    def is_one(self):
        return self.exp == 0 and self.phase == 0

    def to_qpoly(self) -> QPoly:
        return QPoly.monomial(self.coeff(), self.exp)

    def __repr__(self):
        return f"QMonomial(exp={self.exp}, phase={self.phase})"


ONE_M = QMonomial(0)


# ---------------------------------------------------------------------------
# Factored rationals: QPoly / prod (1 - zeta q^e)
# ---------------------------------------------------------------------------


def factor_poly(f) -> QPoly:
    """(phase, exp) -> 1 - zeta * q^exp as a QPoly."""
    return QPoly.binomial_factor(f[0], f[1])


def _den_poly(den: Counter) -> QPoly:
    out = QPoly.ONE
    for f, mult in den.items():
        fp = factor_poly(f)
        for _ in range(mult):
            out = out * fp
    return out


class FactoredRational:
    """num / prod (1 - zeta q^e); exact, cancellation by multiset ops."""

    __slots__ = ("num", "den")

    def __init__(self, num: QPoly, den: Counter | None = None):
        self.num = num
        self.den = Counter() if den is None else den
        if not num.terms:
            self.den = Counter()

    @staticmethod
    def from_qpoly(p: QPoly) -> "FactoredRational":
        return FactoredRational(p)

    @staticmethod
    def one() -> "FactoredRational":
        return FactoredRational(QPoly.ONE)

    @staticmethod
    def zero() -> "FactoredRational":
        return FactoredRational(QPoly.ZERO)

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __mul__(self, other):
        if isinstance(other, QPoly):
            other = FactoredRational(other)
        if isinstance(other, (int, CycInt)):
            return FactoredRational(self.num * other, Counter(self.den))
        if not isinstance(other, FactoredRational):
            return NotImplemented
        if not self.num.terms or not other.num.terms:
            return FactoredRational.zero()
        return FactoredRational(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def __neg__(self):
        return FactoredRational(-self.num, Counter(self.den))

    def __add__(self, other):
        if isinstance(other, QPoly):
            other = FactoredRational(other)
        if isinstance(other, int):
            other = FactoredRational(QPoly.const(other))
        if not isinstance(other, FactoredRational):
            return NotImplemented
        if not self.num.terms:
            return other
        if not other.num.terms:
            return self
        common = self.den & other.den
        e1 = self.den - common
        e2 = other.den - common
        num = self.num * _den_poly(e2) + other.num * _den_poly(e1)
        return FactoredRational(num, common + e1 + e2)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (QPoly, int)):
            other = FactoredRational(other if isinstance(other, QPoly) else QPoly.const(other))
        return self.__add__(-other)

    def div_factor(self, phase, exp, mult: int = 1) -> "FactoredRational":
        """Divide by (1 - zeta q^exp)^mult."""
        den = Counter(self.den)
        den[(Fraction(phase) % 1, Fraction(exp))] += mult
        return FactoredRational(self.num, den)

    def mul_factor(self, phase, exp, mult: int = 1) -> "FactoredRational":
        """Multiply by (1 - zeta q^exp)^mult, cancelling against den first."""
        key = (Fraction(phase) % 1, Fraction(exp))
        den = Counter(self.den)
        num = self.num
        while mult and den.get(key):
            den[key] -= 1
            if not den[key]:
                del den[key]
            mult -= 1
        if mult:
            fp = factor_poly(key)
            for _ in range(mult):
                num = num * fp
        return FactoredRational(num, den)

    def substitute(self, s) -> "FactoredRational":
        s = Fraction(s)
        num = self.num.substitute(s)
        den = Counter()
        for (ph, e), m in self.den.items():
            den[(ph, e * s)] += m
        return FactoredRational(num, den)

    def normalize(self) -> "FactoredRational":
        """Cancel denominator factors that exactly divide the numerator."""
        num = self.num
        den = Counter()
        for f, mult in sorted(self.den.items()):
            fp = factor_poly(f)
            if not fp.terms:
                den[f] += mult  # a genuine zero factor; keep, it is a pole
                continue
            for _ in range(mult):
                if len(fp.terms) == 1:
                    # constant factor (1 - zeta), zeta != 1
                    try:
                        num = num.div_const_exact(next(iter(fp.terms.values())))
                    except NotDivisible:
                        den[f] += 1
                    continue
                try:
                    num = num.exact_div(fp)
                except NotDivisible:
                    den[f] += 1
        return FactoredRational(num, den)

    def to_qpoly(self) -> QPoly:
        """Collapse to a polynomial; NotDivisible if any factor survives,
        InfinitePole if a zero factor is present with nonzero numerator."""
        if not self.num.terms:
            if any(not factor_poly(f).terms for f in self.den):
                raise InfinitePole("0/0 encountered")
            return QPoly.ZERO
        r = self.normalize()
        if r.den:
            if any(not factor_poly(f).terms for f in r.den):
                raise InfinitePole("uncancelled zero denominator factor")
            raise NotDivisible(f"denominator does not cancel: {dict(r.den)}")
        return r.num

    def __eq__(self, other):
        if isinstance(other, (QPoly, int)):
            other = FactoredRational(other if isinstance(other, QPoly) else QPoly.const(other))
        if not isinstance(other, FactoredRational):
            return NotImplemented
        common = self.den & other.den
        e1 = self.den - common
        e2 = other.den - common
        return self.num * _den_poly(e2) == other.num * _den_poly(e1)

    def __repr__(self):
        if not self.den:
            return f"FR({format_qpoly(self.num)})"
        return f"FR({format_qpoly(self.num)} / {dict(self.den)})"


# ---------------------------------------------------------------------------
# Truncated formal power series
# ---------------------------------------------------------------------------


class TruncSeries:
    """Power series kept exactly up to (strictly below) a rational order."""

    __slots__ = ("poly", "order")

    def __init__(self, poly: QPoly, order):
        order = Fraction(order)
        kept = {k: c for k, c in poly.terms.items() if Fraction(k, poly.d) < order}
        self.poly = QPoly(kept, poly.d)
        self.order = order

    @staticmethod
    def one(order) -> "TruncSeries":
        return TruncSeries(QPoly.ONE, order)

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncSeries(QPoly.const(other), self.order)
        o = min(self.order, other.order)
        return TruncSeries(self.poly + other.poly, o)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(-self.poly, self.order)

    def __sub__(self, other):
        if isinstance(other, int):
            other = TruncSeries(QPoly.const(other), self.order)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QPoly):
            other = TruncSeries(other, self.order)
        if isinstance(other, int):
            return TruncSeries(self.poly * other, self.order)
        o = min(self.order, other.order)
        return TruncSeries(self.poly * other.poly, o)

    __rmul__ = __mul__

    def invert(self) -> "TruncSeries":
        """Newton inversion; requires a unit (+-1) constant term."""
        c0 = self.poly.coeff(0)
        if self.poly.terms and self.poly.valuation() < 0:
            raise NonUnitConstantTerm("series has negative valuation")
        if c0 not in (1, -1):
            raise NonUnitConstantTerm(f"constant term {c0} is not a unit")
        inv = TruncSeries(QPoly.const(c0), self.order)
        prec = Fraction(1, self.poly.d)
        while prec < self.order:
            prec = min(prec * 2, self.order)
            clipped = TruncSeries(self.poly, prec)
            inv = TruncSeries((2 - clipped.poly * inv.poly) * inv.poly, prec)
        return TruncSeries(inv.poly, self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        o = min(self.order, other.order)
        return TruncSeries(self.poly, o).poly == TruncSeries(other.poly, o).poly

    def __repr__(self):
        return f"TruncSeries({format_qpoly(self.poly)} + O(q^{self.order}))"
