"""Exact arithmetic in rings of cyclotomic integers Z[zeta_N].

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) where z is a
primitive N-th root of unity, reduced modulo the N-th cyclotomic polynomial.
Plain Python ints are the conductor-1 degenerate case; every operation
normalizes back to int whenever the result lies in the rational integers, so
downstream code only ever sees a CycInt when a genuine root of unity is
involved.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial.

    Computed by exact division of x^n - 1 by the product of the lower
    cyclotomic polynomials, the classical recursion.
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    # numerator x^n - 1
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    for d in range(1, n):
        if n % d == 0:
            num = _polydiv_exact(num, list(cyclotomic_coeffs(d)))
    return tuple(num)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    dd = len(den) - 1
    lead = den[dd]
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("division not exact")
        out[i - dd] = q
        for j, dj in enumerate(den):
            num[i - dd + j] -= q * dj
    if any(num[:dd]):
        raise ArithmeticError("division not exact")
    return out


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    return len(cyclotomic_coeffs(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of z^k in the power basis, for k = 0 .. n-1."""
    deg = _phi(n)
    cyc = cyclotomic_coeffs(n)
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z
        carry = cur[deg - 1]
        nxt = [0] + cur[: deg - 1]
        if carry:
            # z^deg = -sum cyc[i] z^i (cyc is monic)
            for i in range(deg):
                nxt[i] -= carry * cyc[i]
        cur = nxt
    return tuple(rows)


class CycInt:
    """An element of Z[zeta_n] in the power basis. Immutable."""

    __slots__ = ("n", "c", "_hash")

    def __init__(self, n: int, coords):
        self.n = n
        c = list(coords)
        deg = _phi(n)
        if len(c) != deg:
            raise ValueError("coordinate vector has wrong length")
        self.c = tuple(c)
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def make(n: int, coords) -> "CycInt | int":
        """Build an element, collapsing to a plain int when possible."""
        c = list(coords)
        if all(x == 0 for x in c[1:]):
            return c[0] if c else 0
        return CycInt(n, c)

    @staticmethod
    def from_int(n: int, v: int) -> "CycInt":
        c = [0] * _phi(n)
        c[0] = v
        return CycInt(n, c)

    # -- conductor handling ----------------------------------------------------

    def embed(self, m: int) -> "CycInt":
        """Embed into Z[zeta_m]; requires n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError("target conductor must be a multiple")
        k = m // self.n
        table = _power_table(m)
        deg = _phi(m)
        out = [0] * deg
        for i, a in enumerate(self.c):
            if a:
                row = table[(i * k) % m]
                for j in range(deg):
                    out[j] += a * row[j]
        return CycInt(m, out)

    # -- ring operations --------------------------------------------------------

    def _pair(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(self.n, other)
        if not isinstance(other, CycInt):
            return NotImplemented, NotImplemented
        if self.n == other.n:
            return self, other
        m = self.n * other.n // gcd(self.n, other.n)
        return self.embed(m), other.embed(m)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return CycInt.make(a.n, [x + y for x, y in zip(a.c, b.c)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.n, [-x for x in self.c])

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return CycInt.make(a.n, [x - y for x, y in zip(a.c, b.c)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return 0
            return CycInt(self.n, [x * other for x in self.c])
        if not isinstance(other, CycInt):
            return NotImplemented
        a, b = self._pair(other)
        n, deg = a.n, len(a.c)
        table = _power_table(n)
        # schoolbook product in the power basis, then reduce the overflow
        tmp = [0] * (2 * deg - 1)
        for i, x in enumerate(a.c):
            if x:
                for j, y in enumerate(b.c):
                    if y:
                        tmp[i + j] += x * y
        out = tmp[:deg] + [0] * max(0, deg - len(tmp))
        for k in range(deg, len(tmp)):
            v = tmp[k]
            if v:
                row = table[k % n]
                for j in range(deg):
                    out[j] += v * row[j]
        return CycInt.make(n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return False  # make() guarantees rational integers are plain ints
        if not isinstance(other, CycInt):
            return NotImplemented
        a, b = self._pair(other)
        return a.c == b.c

    def __hash__(self):
        if self._hash is None:
            m = self.reduce()
            if isinstance(m, int):
                self._hash = hash(m)
            else:
                self._hash = hash((m.n, m.c))
        return self._hash

    def __bool__(self):
        return any(self.c)

    # -- canonicalization --------------------------------------------------------

    def reduce(self) -> "CycInt | int":
        """Rewrite over the smallest conductor d | n containing the element."""
        n = self.n
        for d in sorted(_divisors(n)):
            if d == n:
                return self
            sol = _solve_subring(n, d, self.c)
            if sol is not None:
                return CycInt.make(d, sol)
        return self

    def conjugates_are_real_check(self):  # pragma: no cover - debugging aid
        raise NotImplementedError

    def inverse_rational(self):
        """Inverse in Q(zeta_n) as Fraction coordinates, or None if zero."""
        n, deg = self.n, len(self.c)
        table = _power_table(n)
        # Solve (self * x) = 1 as a linear system over Q.
        cols = []
        for i in range(deg):
            # column = coords of self * z^i
            col = [Fraction(0)] * deg
            for j, a in enumerate(self.c):
                if a:
                    k = i + j
                    if k < deg:
                        col[k] += a
                    else:
                        row = table[k % n]
                        for t in range(deg):
                            col[t] += a * row[t]
            cols.append(col)
        rhs = [Fraction(1)] + [Fraction(0)] * (deg - 1)
        sol = _solve_linear(cols, rhs)
        return sol

    def __repr__(self):
        return f"CycInt({self.n}, {list(self.c)})"


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@lru_cache(maxsize=None)
def _subring_basis(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates in Z[zeta_n] of the power basis of Z[zeta_d]."""
    k = n // d
    table = _power_table(n)
    return tuple(table[(i * k) % n] for i in range(_phi(d)))


def _solve_subring(n: int, d: int, target) -> list[int] | None:
    basis = _subring_basis(n, d)
    cols = [[Fraction(x) for x in b] for b in basis]
    rhs = [Fraction(x) for x in target]
    sol = _solve_linear(cols, rhs)
    if sol is None:
        return None
    out = []
    for v in sol:
        if v.denominator != 1:
            return None
        out.append(int(v))
    return out


def _solve_linear(cols, rhs):
    """Solve sum_j x_j * cols[j] = rhs over Fractions; None if inconsistent."""
    m = len(rhs)
    k = len(cols)
    # build augmented matrix rows
    a = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(rhs[i])] for i in range(m)]
    piv_cols = []
    row = 0
    for col in range(k):
        piv = None
        for r in range(row, m):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        pv = a[row][col]
        a[row] = [x / pv for x in a[row]]
        for r in range(m):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        piv_cols.append(col)
        row += 1
        if row == m:
            break
    # consistency
    for r in range(row, m):
        if a[r][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for r, col in enumerate(piv_cols):
        sol[col] = a[r][k]
    return sol


def zeta_power(n: int, k: int) -> "CycInt | int":
    """The root of unity zeta_n^k as a CycInt (or int for +-1)."""
    k %= n
    return CycInt.make(n, _power_table(n)[k])


def phase_to_coeff(phase: Fraction) -> "CycInt | int":
    """e^(2 pi i phase) for a rational phase, as an exact cyclotomic integer."""
    phase = Fraction(phase) % 1
    return zeta_power(phase.denominator, phase.numerator)
