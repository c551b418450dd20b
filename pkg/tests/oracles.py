"""Independent reference computations used only by the tests.

Nothing here calls into the package: the values come from textbook tables,
sympy/numpy, or brute force.
"""

from __future__ import annotations

import cmath
import functools
import itertools
from fractions import Fraction
from math import factorial, gcd

import numpy as np
import sympy

# Bourbaki tables: number of roots, det of the Cartan matrix, highest-root marks.
ROOT_COUNT = {"A": lambda l: l * (l + 1), "B": lambda l: 2 * l * l, "C": lambda l: 2 * l * l,
              "D": lambda l: 2 * l * (l - 1)}
EXCEPTIONAL_ROOTS = {"E6": 72, "E7": 126, "E8": 240, "F4": 48, "G2": 12}
DETERMINANT = {"A": lambda l: l + 1, "B": lambda l: 2, "C": lambda l: 2, "D": lambda l: 4}
EXCEPTIONAL_DET = {"E6": 3, "E7": 2, "E8": 1, "F4": 1, "G2": 1}
MARKS = {
    "G2": (3, 2), "F4": (2, 3, 4, 2), "E6": (1, 2, 2, 3, 2, 1),
    "E7": (2, 2, 3, 4, 3, 2, 1), "E8": (2, 3, 4, 6, 5, 4, 3, 2),
    "B3": (1, 2, 2), "C3": (2, 2, 1), "D4": (1, 2, 1, 1), "A3": (1, 1, 1),
}
# number of conjugacy classes of W
CLASS_COUNT = {"A1": 2, "A2": 3, "A3": 5, "A4": 7, "A5": 11, "B2": 5, "B3": 10, "B4": 20,
               "C3": 10, "D4": 13, "G2": 6, "F4": 25}


def root_count(kind: str) -> int:
    if kind in EXCEPTIONAL_ROOTS:
        return EXCEPTIONAL_ROOTS[kind]
    return ROOT_COUNT[kind[0]](int(kind[1:]))


def cartan_det(kind: str) -> int:
    if kind in EXCEPTIONAL_DET:
        return EXCEPTIONAL_DET[kind]
    return DETERMINANT[kind[0]](int(kind[1:]))


def weyl_order(kind: str) -> int:
    letter, l = kind[0], int(kind[1:])
    if letter == "A":
        return factorial(l + 1)
    if letter in "BC":
        return 2 ** l * factorial(l)
    if letter == "D":
        return 2 ** (l - 1) * factorial(l)
    return {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}[kind]


def charpoly(matrix) -> tuple[int, ...]:
    """Ascending integer coefficients of det(t - M) via sympy."""
    t = sympy.Symbol("t")
    p = sympy.Matrix(matrix).charpoly(t)
    return tuple(int(c) for c in reversed(p.all_coeffs()))


def divides_power(poly: tuple[int, ...], order: int, l: int) -> bool:
    t = sympy.Symbol("t")
    p = sum(c * t ** k for k, c in enumerate(poly))
    q, r = sympy.div(sympy.expand((t ** order - 1) ** l), p, t)
    return sympy.expand(r) == 0


def cyclotomic(n: int) -> tuple[int, ...]:
    t = sympy.Symbol("t")
    p = sympy.Poly(sympy.cyclotomic_poly(n, t), t)
    return tuple(int(c) for c in reversed(p.all_coeffs()))


def eigenvalue_angles(matrix) -> list[Fraction]:
    """Eigenvalues of a finite-order integer matrix as fractions of a turn in [0,1)."""
    vals = np.linalg.eigvals(np.array(matrix, dtype=float))
    out = []
    for v in vals:
        a = (cmath.phase(v) / (2 * cmath.pi)) % 1.0
        out.append(Fraction(a).limit_denominator(200) % 1)
    return sorted(out)


@functools.lru_cache(maxsize=None)
def _grid(n: int, max_denom: int) -> frozenset:
    return frozenset(tuple(Fraction(k, d) for k in ks)
                     for d in range(1, max_denom + 1)
                     for ks in itertools.product(range(d), repeat=n))


def brute_congruence(m, b, max_denom: int = 12) -> set[tuple[Fraction, ...]]:
    """All y in [0,1)^n with common denominator <= max_denom and M y = b mod Z."""
    sols = set()
    for y in _grid(len(m[0]), max_denom):
        if all((sum(Fraction(a) * v for a, v in zip(row, y)) - Fraction(bb)).denominator == 1
               for row, bb in zip(m, b)):
            sols.add(y)
    return sols


def common_denominator_at_most(vec, bound: int) -> bool:
    d = 1
    for v in vec:
        q = Fraction(v).denominator
        d = d * q // gcd(d, q)
    return d <= bound


def lower_hull_slopes(orders) -> list[Fraction]:
    """Root orders of a monic polynomial from the lower hull, by brute force.

    For each unit step [k, k+1] the hull value is the minimum over all chords
    through points on either side.
    """
    n = len(orders)
    pts = [(i, Fraction(v)) for i, v in enumerate(orders) if v is not None] + [(n, Fraction(0))]

    def hull(x: Fraction) -> Fraction:
        best = None
        for (x1, y1), (x2, y2) in itertools.combinations(pts, 2):
            if x1 <= x <= x2 and x1 != x2:
                y = y1 + (y2 - y1) * (x - x1) / (x2 - x1)
                best = y if best is None or y < best else best
            elif x1 == x:
                best = y1 if best is None or y1 < best else best
        return best

    values = [hull(Fraction(k)) for k in range(n + 1)]
    return sorted(values[k] - values[k + 1] for k in range(n))


def gl_cycle_counts(n: int, k: int) -> tuple[int, ...]:
    """Cycle type of the k-th power of an n-cycle."""
    g = gcd(n, k)
    return tuple([n // g] * g)
