"""Exact arithmetic in the cyclotomic fields ``Q(zeta_N) = Q[s]/(Phi_N(s))``.

``zeta_N`` is ``exp(2 pi i / N)``. Numbers of different levels are compared
and combined by embedding both into the lcm level via ``zeta_N = zeta_M^(M/N)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import lattice


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Integer polynomial division by a monic divisor (ascending coefficients)."""
    num = list(num)
    dn = len(den) - 1
    q = [0] * max(len(num) - dn, 1)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            q[k - dn] = c
            for t in range(dn + 1):
                num[k - dn + t] -= c * den[t]
    rem = num[:dn] or [0]
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """``Phi_n`` as ascending integer coefficients."""
    if n < 1:
        raise ValueError("level must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """``s^k mod Phi_n`` for ``0 <= k < 2*phi(n)`` (and at least ``n``)."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg else []
    for _ in range(max(2 * deg, n + 1)):
        rows.append(tuple(cur))
        # multiply by s and reduce
        shifted = [0] + cur
        top = shifted[deg] if deg else 0
        shifted = [a - top * b for a, b in zip(shifted[:deg], phi[:deg])]
        cur = shifted
    return tuple(rows)


def degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class CycloNumber:
    """Element of ``Q(zeta_level)`` with rational coefficients on ``1, s, ..., s^(phi-1)``."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs: Sequence):
        d = degree(level)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > d:
            cs = _reduce(level, cs)
        cs += [Fraction(0)] * (d - len(cs))
        self.level = level
        self.coeffs = tuple(cs)

    # construction -------------------------------------------------------
    @classmethod
    def rational(cls, q, level: int = 1) -> "CycloNumber":
        return cls(level, [Fraction(q)])

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycloNumber":
        """``zeta_n^k``."""
        k %= n
        return cls(n, [Fraction(c) for c in _power_table(n)[k]])

    @classmethod
    def root_of_unity(cls, q: Fraction) -> "CycloNumber":
        """``exp(2 pi i q)`` for rational ``q``."""
        q = Fraction(q)
        return cls.zeta(q.denominator, q.numerator)

    @classmethod
    def gaussian(cls, re, im) -> "CycloNumber":
        """``re + im*i`` at level 4."""
        return cls(4, [Fraction(re), Fraction(im)])

    # level handling -----------------------------------------------------
    def embed(self, level: int) -> "CycloNumber":
        if level == self.level:
            return self
        if level % self.level:
            raise ValueError(f"cannot embed level {self.level} into level {level}")
        step = level // self.level
        table = _power_table(level)
        out = [Fraction(0)] * degree(level)
        for k, c in enumerate(self.coeffs):
            if c:
                for t, v in enumerate(table[(k * step) % level]):
                    if v:
                        out[t] += c * v
        return CycloNumber(level, out)

    def _common(self, other) -> tuple["CycloNumber", "CycloNumber"]:
        if not isinstance(other, CycloNumber):
            other = CycloNumber.rational(other)
        if other.level == self.level:
            return self, other
        n = lattice.lcm(self.level, other.level)
        return self.embed(n), other.embed(n)

    def minimal_level(self) -> "CycloNumber":
        """Same number at the smallest level that contains it."""
        for d in sorted(d for d in range(1, self.level + 1) if self.level % d == 0):
            if d == self.level:
                return self
            cand = _restrict(self, d)
            if cand is not None:
                return cand
        return self

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        a, b = self._common(other)
        return CycloNumber(a.level, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.level, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, CycloNumber) else CycloNumber.rational(-Fraction(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CycloNumber):
            q = Fraction(other)
            return CycloNumber(self.level, [q * x for x in self.coeffs])
        a, b = self._common(other)
        d = len(a.coeffs)
        prod = [Fraction(0)] * max(2 * d - 1, 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycloNumber(a.level, _reduce(a.level, prod))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloNumber.rational(1, self.level)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "CycloNumber":
        """Solve ``self * y = 1`` as a linear system over ``Q``."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        d = len(self.coeffs)
        cols = []
        for k in range(d):
            basis = CycloNumber(self.level, [int(t == k) for t in range(d)])
            cols.append((self * basis).coeffs)
        mat = [[cols[k][r] for k in range(d)] for r in range(d)]
        inv = lattice.inverse(mat)
        return CycloNumber(self.level, [row[0] for row in inv])

    def __truediv__(self, other):
        if not isinstance(other, CycloNumber):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (CycloNumber, int, Fraction)):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # equality crosses levels

    def as_rational(self) -> Fraction | None:
        """The rational value if this number lies in ``Q``."""
        m = self.minimal_level()
        if m.level <= 2:
            return m.coeffs[0]
        return None

    def to_complex(self) -> complex:
        import cmath
        z = cmath.exp(2j * cmath.pi / self.level)
        return sum(float(c) * z ** k for k, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"CycloNumber({self.level}, {[str(c) for c in self.coeffs]})"


def _reduce(level: int, coeffs: Sequence[Fraction]) -> list[Fraction]:
    d = degree(level)
    table = _power_table(level)
    out = [Fraction(0)] * d
    for k, c in enumerate(coeffs):
        if c:
            if k < len(table):
                row = table[k]
            else:
                row = table[k % level]
            for t, v in enumerate(row):
                if v:
                    out[t] += c * v
    return out


def _restrict(x: CycloNumber, d: int) -> CycloNumber | None:
    """``x`` written at level ``d`` if it lies in ``Q(zeta_d)``."""
    deg_d = degree(d)
    images = [CycloNumber.zeta(d, k).embed(x.level).coeffs for k in range(deg_d)]
    # solve sum_k y_k images[k] = x.coeffs (overdetermined, consistent or not)
    rows = [[images[k][r] for k in range(deg_d)] + [x.coeffs[r]] for r in range(len(x.coeffs))]
    # Gaussian elimination on the augmented system
    ncol = deg_d
    r = 0
    pivots = []
    for col in range(ncol):
        p = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(all(v == 0 for v in row[:ncol]) and row[ncol] != 0 for row in rows):
        return None
    y = [Fraction(0)] * ncol
    for i, col in enumerate(pivots):
        y[col] = rows[i][ncol]
    return CycloNumber(d, y)


def product_linear_factors(roots: Sequence[CycloNumber]) -> list[CycloNumber]:
    """Ascending coefficients of ``prod (t - r)``."""
    poly = [CycloNumber.rational(1)]
    for r in roots:
        nxt = [CycloNumber.rational(0)] * (len(poly) + 1)
        for k, c in enumerate(poly):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - c * r
        poly = nxt
    return poly

