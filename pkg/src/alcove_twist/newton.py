"""Newton points, their Levi subsystems, and the twist ``w(nu) = psi_M(nu)``.

Newton points are rational cocharacters in ambient coordinates. For
``GL_n`` the polygon front-end produces ``nu`` from coefficient orders:
each root of order ``r`` contributes the coordinate ``r``, listed in
descending order so that ``nu`` is dominant. Witnesses then satisfy
``ord lambda(a) = <lambda, nu>``, i.e. ``val lambda(a) = -<lambda, nu>`` with
``val(eps) = -1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import lattice
from .alcove import psi
from .rootsys import AmbientLattice, CentralClass, RootSystem, root_system_from_cartan
from .weyl import DEFAULT_CAP, WeylElement, char_poly, from_word


class NotDominantError(ValueError):
    def __init__(self, pairings: Sequence[Fraction]):
        bad = [i + 1 for i, p in enumerate(pairings) if p < 0]
        super().__init__(
            f"nu is not dominant: <alpha_i, nu> < 0 for i in {bad}; "
            "apply a Weyl element to make it dominant first")
        self.pairings = tuple(pairings)


class NotInLatticeError(ValueError):
    """``nu`` is not the projection of an integral cocharacter."""


@dataclass(frozen=True)
class NewtonPoint:
    rs: RootSystem
    ambient: AmbientLattice
    nu: tuple[Fraction, ...]
    levi: tuple[int, ...]

    @property
    def pairings(self) -> tuple[Fraction, ...]:
        return self.ambient.root_pairings(self.nu)

    def is_central(self) -> bool:
        return len(self.levi) == self.rs.l


def levi_of(rs: RootSystem, ambient: AmbientLattice, nu: Sequence) -> NewtonPoint:
    nu = tuple(Fraction(v) for v in nu)
    if len(nu) != ambient.n:
        raise lattice.ShapeError(f"{ambient.name} needs {ambient.n} coordinates, got {len(nu)}")
    pairings = ambient.root_pairings(nu)
    if any(p < 0 for p in pairings):
        raise NotDominantError(pairings)
    levi = tuple(i + 1 for i, p in enumerate(pairings) if p == 0)
    return NewtonPoint(rs, ambient, nu, levi)


def levi_components(rs: RootSystem, levi: Sequence[int]) -> list[tuple[int, ...]]:
    """Connected components of the Dynkin subdiagram on ``levi`` (1-based labels)."""
    remaining = sorted(levi)
    comps = []
    while remaining:
        stack = [remaining.pop(0)]
        comp = set(stack)
        while stack:
            i = stack.pop()
            for j in list(remaining):
                if rs.cartan[i - 1][j - 1]:
                    remaining.remove(j)
                    comp.add(j)
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


def sub_cartan(rs: RootSystem, labels: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(rs.cartan[i - 1][j - 1] for j in labels) for i in labels)


@dataclass(frozen=True)
class LeviClass:
    """Class of ``nu`` in ``P(R_M^vee)/Q(R_M^vee)``, one factor per Levi component."""

    components: tuple[tuple[int, ...], ...]
    classes: tuple[CentralClass, ...]
    lift: tuple[int, ...]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.classes)

    @property
    def order(self) -> int:
        return lattice.lcm(1, *(c.order for c in self.classes))


def _integral_lifts(np: NewtonPoint) -> list[tuple[int, ...]]:
    """Integral ``x`` with ``x - nu`` in the span of the Levi coroots."""
    amb = np.ambient
    if not np.levi:
        if not lattice.is_integral(np.nu):
            raise NotInLatticeError(f"nu = {_fmt(np.nu)} is not integral and M is the torus")
        return [tuple(int(v) for v in np.nu)]
    emb = [[amb.coroot_embed[k][i - 1] for i in np.levi] for k in range(amb.n)]
    sol = lattice.smith_solve(emb, [-v for v in np.nu])
    if not sol.solvable:
        raise NotInLatticeError(
            f"nu = {_fmt(np.nu)} is not in the image of the cocharacter lattice "
            f"(congruence fails in rows {sol.failed_rows})")
    lifts = []
    # different torsion representatives give genuinely different lifts
    for t in sol.torsion[:4]:
        x = [v + s for v, s in zip(np.nu, lattice.matvec(emb, t))]
        if not lattice.is_integral(x):
            raise AssertionError(f"lift {x} of nu is not integral")
        lifts.append(tuple(int(v) for v in x))
    return lifts


def _class_of_lift(np: NewtonPoint, x: Sequence[int], comps) -> tuple[CentralClass, ...]:
    pair = np.ambient.root_pairings(x)
    out = []
    for comp in comps:
        sub = root_system_from_cartan(sub_cartan(np.rs, comp))
        a = [pair[i - 1] for i in comp]
        # sum_i a_i bar-omega_i^M in the coroot coordinates of M
        rep = [sum((sub.inv_cartan[i][k] * a[i] for i in range(len(comp))), Fraction(0))
               for k in range(len(comp))]
        out.append(CentralClass.from_vector(sub, rep))
    return tuple(out)


def mu_class(np: NewtonPoint) -> LeviClass:
    comps = levi_components(np.rs, np.levi)
    lifts = _integral_lifts(np)
    first = _class_of_lift(np, lifts[0], comps)
    for other in lifts[1:]:
        if _class_of_lift(np, other, comps) != first:
            raise AssertionError(f"lifts {lifts[0]} and {other} of nu give different classes")
    return LeviClass(tuple(comps), first, lifts[0])


@dataclass(frozen=True)
class NewtonTwist:
    element: WeylElement
    ambient_matrix: tuple[tuple[int, ...], ...]
    char_poly: tuple[int, ...]
    order: int
    cycle_type: tuple[int, ...] | None
    mu: LeviClass

    @property
    def label(self) -> str:
        return "A^{w(nu)}"


def _embed_word(local: WeylElement, comp: Sequence[int]) -> tuple[int, ...]:
    return tuple(comp[k - 1] for k in local.word)


def ambient_matrix(ambient: AmbientLattice, word: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    m = lattice.identity(ambient.n)
    for i in word:
        m = lattice.matmul(m, ambient.reflection(i))
    return tuple(tuple(int(v) for v in row) for row in m)


def permutation_cycle_type(m: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """Cycle lengths (descending) if ``m`` is a permutation matrix."""
    n = len(m)
    image = {}
    for r in range(n):
        nz = [c for c in range(n) if m[r][c]]
        if len(nz) != 1 or m[r][nz[0]] != 1:
            return None
        image[nz[0]] = r
    if len(image) != n:
        return None
    seen = set()
    lengths = []
    for s in range(n):
        if s in seen:
            continue
        k, cur = 0, s
        while cur not in seen:
            seen.add(cur)
            cur = image[cur]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def newton_twist(np: NewtonPoint, cap: int = DEFAULT_CAP) -> NewtonTwist:
    mu = mu_class(np)
    word: tuple[int, ...] = ()
    for comp, cls in zip(mu.components, mu.classes):
        local = psi(cls.rs, cls, cap)
        word += _embed_word(local, comp)
        glob = from_word(np.rs, _embed_word(local, comp))
        # the Levi copy must act on its own coroots exactly as the local element
        restricted = tuple(tuple(glob.matrix[r - 1][c - 1] for c in comp) for r in comp)
        if restricted != local.matrix:
            raise AssertionError(f"Levi embedding mismatch on component {comp}")
    w = from_word(np.rs, word)
    amb = ambient_matrix(np.ambient, word)
    ctype = permutation_cycle_type(amb) if np.ambient.name.startswith("GL") else None
    return NewtonTwist(w, amb, char_poly(w), w.order, ctype, mu)


@dataclass(frozen=True)
class NewtonPolygon:
    """Blocks ``(root order, size)`` sorted by order."""

    blocks: tuple[tuple[Fraction, int], ...]
    n: int

    def __post_init__(self):
        if sum(d for _, d in self.blocks) != self.n:
            raise ValueError("block sizes do not add up to n")
        for s, d in self.blocks:
            if (s * d).denominator != 1:
                raise ValueError(f"block ({s}, {d}) does not end at a lattice point")

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(s for s, d in self.blocks for _ in range(d))

    def nu(self) -> tuple[Fraction, ...]:
        """Dominant ``nu``: the root orders in descending order."""
        return tuple(reversed(self.slopes))


def _is_infinite(v) -> bool:
    return v is None or (isinstance(v, float) and math.isinf(v))


def gl_newton_polygon(orders: Sequence) -> NewtonPolygon:
    """Lower hull of ``(i, ord c_i)`` and ``(n, 0)`` for a monic degree-``n`` polynomial.

    ``orders[i]`` is the order of ``c_i``; ``None`` (or ``inf``) marks a zero
    coefficient.
    """
    n = len(orders)
    if n == 0:
        raise ValueError("polynomial must have positive degree")
    if _is_infinite(orders[0]):
        raise ValueError("constant term must be nonzero")
    pts = [(i, Fraction(v)) for i, v in enumerate(orders) if not _is_infinite(v)]
    pts.append((n, Fraction(0)))
    hull: list[tuple[int, Fraction]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it lies strictly below the chord
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    blocks = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        blocks.append((-(y2 - y1) / (x2 - x1), x2 - x1))
    blocks.sort()
    return NewtonPolygon(tuple(blocks), n)


def gl_cycle_type(poly: NewtonPolygon) -> tuple[int, ...]:
    """Block of order ``p/q`` and size ``d`` gives ``d/q`` cycles of length ``q``."""
    lengths = []
    for s, d in poly.blocks:
        q = s.denominator
        lengths += [q] * (d // q)
    return tuple(sorted(lengths, reverse=True))


def m_nu(rs: RootSystem, ambient: AmbientLattice, nu: Sequence) -> Fraction:
    """``sum over roots of max(0, <alpha, nu>)``."""
    simple = ambient.root_pairings(nu)
    total = Fraction(0)
    for root in rs.roots:
        v = sum((k * p for k, p in zip(root, simple)), Fraction(0))
        if v > 0:
            total += v
    return total


def two_rho_pairing(rs: RootSystem, ambient: AmbientLattice, nu: Sequence) -> Fraction:
    simple = ambient.root_pairings(nu)
    return sum((k * p for k, p in zip(rs.two_rho, simple)), Fraction(0))


def _fmt(v: Sequence[Fraction]) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"
