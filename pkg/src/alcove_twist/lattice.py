"""Integer-lattice utilities: Smith normal form and congruence solving.

Every lattice question in the package is phrased as ``M y = b (mod Z^m)``
with ``M`` an integer matrix and ``b`` rational, and answered here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]

MAX_COMPONENTS = 100_000


class ShapeError(ValueError):
    pass


def frac(x) -> Fraction:
    """Parse an int, Fraction or a ``"p/q"`` literal."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def parse_vector(text: str) -> tuple[Fraction, ...]:
    """``"1/2, 1/2,0"`` -> tuple of Fractions."""
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if not parts:
        raise ValueError(f"empty vector literal: {text!r}")
    return tuple(Fraction(p) for p in parts)


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        v = abs(int(v))
        if v:
            out = out * v // gcd(out, v)
    return out


def common_denominator(vec: Sequence[Fraction]) -> int:
    return lcm(*(Fraction(v).denominator for v in vec))


def mod1(q: Fraction) -> Fraction:
    """Representative of ``q`` in ``[0, 1)``."""
    return q - (q.numerator // q.denominator)


def reduce_mod1(vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(mod1(Fraction(v)) for v in vec)


def is_integral(vec: Sequence[Fraction]) -> bool:
    return all(Fraction(v).denominator == 1 for v in vec)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(m: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse of a square rational matrix (Gauss-Jordan)."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _int_rank(rows: list[list[int]]) -> int:
    """Fraction-free elimination; rows are divided by their content to stay small."""
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f:
                new = [x * p[col] - f * y for x, y in zip(rows[i], p)]
                g = gcd(*new)
                rows[i] = [x // g for x in new] if g > 1 else new
        r += 1
        if r == len(rows):
            break
    return r


def rank(m: Sequence[Sequence]) -> int:
    """Rank over Q."""
    if m and all(isinstance(x, int) for row in m for x in row):
        return _int_rank([list(row) for row in m])
    rows = [[Fraction(x) for x in row] for row in m]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


@dataclass(frozen=True)
class SmithForm:
    """``U * M * V = D`` with ``U``, ``V`` unimodular and ``D`` diagonal.

    ``diagonal`` holds the nonzero invariant factors ``d_1 | d_2 | ...``
    (all positive); ``Vinv`` is kept so solutions can be mapped back.
    """

    U: Matrix
    V: Matrix
    Vinv: Matrix
    diagonal: tuple[int, ...]
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithForm:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(map(int, row)) for row in m]
    if any(len(row) != cols for row in a):
        raise ShapeError("ragged matrix")
    U = identity(rows)
    V = identity(cols)
    Vinv = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, k):  # col_dst += k * col_src
        for row in a:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]
        # inverse update: row_src -= k * row_dst
        Vinv[src] = [x - k * y for x, y in zip(Vinv[src], Vinv[dst])]

    diag: list[int] = []
    t = 0
    while t < min(rows, cols):
        entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility: pull in an offending row and redo
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        diag.append(a[t][t])
        t += 1
    return SmithForm(U=U, V=V, Vinv=Vinv, diagonal=tuple(diag), shape=(rows, cols))


@dataclass(frozen=True)
class CongruenceSolution:
    """Solution set of ``M y = b (mod Z^rows)`` inside ``R^cols / Z^cols``.

    When solvable, the set is the disjoint union of the translates
    ``torsion[k] + span_R(kernel_basis)`` (mod ``Z^cols``).
    """

    solvable: bool
    particular: tuple[Fraction, ...] | None
    kernel_basis: tuple[tuple[int, ...], ...]
    torsion: tuple[tuple[Fraction, ...], ...]
    smith: SmithForm = field(repr=False)
    failed_rows: tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.kernel_basis)

    def component_of(self, y: Sequence[Fraction]) -> int | None:
        """Index into ``torsion`` of the component containing ``y``, if any."""
        if not self.solvable:
            return None
        z = matvec(self.smith.Vinv, [Fraction(v) for v in y])
        r = self.smith.rank
        key = reduce_mod1(z[:r])
        for k, rep in enumerate(self.torsion):
            zr = matvec(self.smith.Vinv, rep)
            if reduce_mod1(zr[:r]) == key:
                return k
        return None


def smith_solve(m: Sequence[Sequence[int]], b: Sequence) -> CongruenceSolution:
    """Describe all real ``y`` with ``M y = b (mod Z^rows)``."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if len(b) != rows:
        raise ShapeError(f"matrix has {rows} rows but right-hand side has {len(b)} entries")
    bq = [frac(x) for x in b]
    sf = smith_normal_form(m)
    c = matvec(sf.U, bq)
    r = sf.rank
    failed = tuple(i for i in range(r, rows) if c[i].denominator != 1)
    if failed:
        return CongruenceSolution(False, None, (), (), sf, failed)
    kernel = tuple(tuple(row[j] for row in sf.V) for j in range(r, cols))
    z0 = [c[i] / sf.diagonal[i] for i in range(r)] + [Fraction(0)] * (cols - r)
    particular = tuple(matvec(sf.V, z0))
    count = 1
    for d in sf.diagonal:
        count *= d
    if count > MAX_COMPONENTS:
        raise ValueError(f"{count} torsion components exceeds the limit {MAX_COMPONENTS}")
    torsion = []
    for shifts in itertools.product(*(range(d) for d in sf.diagonal)):
        z = [(c[i] + shifts[i]) / sf.diagonal[i] for i in range(r)] + [Fraction(0)] * (cols - r)
        torsion.append(reduce_mod1(matvec(sf.V, z)))
    torsion.sort()
    return CongruenceSolution(True, particular, kernel, tuple(torsion), sf)


def congruence_solvable(m: Sequence[Sequence[int]], b: Sequence) -> bool:
    """Whether ``M y = b (mod Z^rows)`` has a real solution, without listing components."""
    if len(b) != len(m):
        raise ShapeError(f"matrix has {len(m)} rows but right-hand side has {len(b)} entries")
    sf = smith_normal_form(m)
    c = matvec(sf.U, [frac(x) for x in b])
    return all(c[i].denominator == 1 for i in range(sf.rank, len(m)))
