"""Twisted fixed points ``g(u) = x u`` on the maximal torus.

Torus points are torsion points written as rational vectors in
simple-coroot coordinates modulo ``Z^l``; the point ``y`` stands for
``Exp(y)``, i.e. ``varpi(Exp(y)) = exp(2 pi i <varpi, y>)``. The central
element ``x`` with class ``mu`` acts by ``y -> y - rep(mu)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import lattice
from .alcove import barycenter, psi
from .cyclotomic import CycloNumber, product_linear_factors
from .rootsys import CentralClass, RootSystem
from .weyl import WeylElement, act, char_poly, conjugacy_class

DEFAULT_DENOM_BOUND = 60
DEFAULT_SAMPLES = 100


@dataclass(frozen=True)
class TorusPoint:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", lattice.reduce_mod1(self.coords))

    @classmethod
    def of(cls, values: Sequence) -> "TorusPoint":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def denominator(self) -> int:
        return lattice.common_denominator(self.coords)


def exp_point(rs: RootSystem, y: Sequence) -> TorusPoint:
    """``Exp`` of an alcove point."""
    if len(y) != rs.l:
        raise lattice.ShapeError(f"expected {rs.l} coordinates")
    return TorusPoint.of(y)


def barycenter_point(rs: RootSystem) -> TorusPoint:
    return TorusPoint(barycenter(rs).coords)


@dataclass(frozen=True)
class TwistedFixedSet:
    """``A(w, x)``: components are ``components[k] + span(kernel_basis)``."""

    solvable: bool
    dim: int
    particular: TorusPoint | None
    components: tuple[TorusPoint, ...]
    kernel_basis: tuple[tuple[int, ...], ...]
    rank_defect: int

    def __len__(self) -> int:
        return len(self.components)


def is_regular(rs: RootSystem, u: TorusPoint | Sequence) -> bool:
    """No root takes the value 1 at ``u``: every ``<alpha, u>`` is non-integral."""
    coords = u.coords if isinstance(u, TorusPoint) else tuple(Fraction(v) for v in u)
    for f in rs.root_functionals:
        if sum((c * v for c, v in zip(f, coords) if c), Fraction(0)).denominator == 1:
            return False
    return True


def center_translate(x: CentralClass, u: TorusPoint) -> TorusPoint:
    return TorusPoint(tuple(a - b for a, b in zip(u.coords, x.rep)))


def apply(w: WeylElement, u: TorusPoint) -> TorusPoint:
    return TorusPoint(act(w, u.coords))


def solves(w: WeylElement, x: CentralClass, u: TorusPoint) -> bool:
    return apply(w, u) == center_translate(x, u)


def _twist_matrix(w: WeylElement) -> list[list[int]]:
    l = w.rank
    return [[w.matrix[i][j] - int(i == j) for j in range(l)] for i in range(l)]


def solve_twisted(rs: RootSystem, w: WeylElement, x: CentralClass) -> TwistedFixedSet:
    """Solve ``(M_w - 1) y = -rep(x) (mod Z^l)``."""
    sol = lattice.smith_solve(_twist_matrix(w), [-c for c in x.rep])
    if not sol.solvable:
        return TwistedFixedSet(False, 0, None, (), (), sol.smith.rank)
    comps = tuple(TorusPoint(t) for t in sol.torsion)
    for p in comps:
        if not solves(w, x, p):
            raise AssertionError(f"component {p} does not solve the twisted equation")
    return TwistedFixedSet(
        solvable=True,
        dim=sol.dim,
        particular=TorusPoint(sol.particular),
        components=comps,
        kernel_basis=sol.kernel_basis,
        rank_defect=sol.smith.rank,
    )


def is_solvable(w: WeylElement, x: CentralClass) -> bool:
    """``A(w, x)`` is nonempty."""
    if fixed_space_dim(w) == 0:
        # M_w - 1 is invertible over Q
        return True
    return lattice.congruence_solvable(_twist_matrix(w), [-c for c in x.rep])


@lru_cache(maxsize=200_000)
def _fixed_dim(matrix) -> int:
    l = len(matrix)
    return l - lattice.rank([[matrix[i][j] - int(i == j) for j in range(l)] for i in range(l)])


def fixed_space_dim(w: WeylElement) -> int:
    return _fixed_dim(w.matrix)


def a_of(rs: RootSystem, x: CentralClass) -> int:
    """Number of fundamental weights trivial on ``x``.

    ``<varpi_i, y>`` is the ``i``-th coroot coordinate of ``y``.
    """
    return sum(1 for c in x.rep if c.denominator == 1)


def regular_twist_set(rs: RootSystem, x: CentralClass, group: Sequence[WeylElement]) -> list[WeylElement]:
    """``{w : A(w, x) nonempty of dimension a(x)}``."""
    target = a_of(rs, x)
    return [w for w in group if fixed_space_dim(w) == target and is_solvable(w, x)]


def component_has_regular_point(rs: RootSystem, base: Sequence[Fraction],
                                kernel_basis: Sequence[Sequence[int]]) -> bool:
    """Exact test on one component ``base + span(kernel_basis)``.

    A root is identically 1 on the component iff it kills the kernel and is
    integral at ``base``; otherwise its locus is a proper closed subset.
    """
    for f in rs.root_functionals:
        if any(sum(c * k for c, k in zip(f, kv)) for kv in kernel_basis):
            continue
        if sum((c * b for c, b in zip(f, base)), Fraction(0)).denominator == 1:
            return False
    return True


class CriterionMismatch(ValueError):
    """Raised when the regular-point search is run where ``dim != a(x)``."""


def find_regular_solution(rs: RootSystem, w: WeylElement, x: CentralClass,
                          denom_bound: int = DEFAULT_DENOM_BOUND,
                          samples: int = DEFAULT_SAMPLES,
                          seed: int = 0,
                          strict: bool = False) -> TorusPoint | None:
    """Look for a regular point of ``A(w, x)``.

    Zero-dimensional sets are checked exhaustively. Otherwise up to
    ``samples`` rational points with denominators ``<= denom_bound`` are
    drawn from the components (seeded). With ``strict`` a ``dim != a(x)``
    instance raises :class:`CriterionMismatch` instead of searching.
    """
    tfs = solve_twisted(rs, w, x)
    if not tfs.solvable:
        raise ValueError(f"A(w, x) is empty for w={w.matrix}, x={x}")
    if strict and tfs.dim != a_of(rs, x):
        raise CriterionMismatch(f"dim A(w, x) = {tfs.dim} but a(x) = {a_of(rs, x)}")
    if tfs.dim == 0:
        for p in tfs.components:
            if is_regular(rs, p):
                return p
        return None
    rng = random.Random(seed)
    for k in range(samples):
        base = tfs.components[k % len(tfs.components)].coords
        point = list(base)
        for vec in tfs.kernel_basis:
            t = Fraction(rng.randrange(denom_bound), rng.randint(1, denom_bound))
            point = [p + t * v for p, v in zip(point, vec)]
        cand = TorusPoint(tuple(point))
        if not solves(w, x, cand):
            raise AssertionError("sampled point left the solution set")
        if is_regular(rs, cand):
            return cand
    return None


def pairing_mod1(rs: RootSystem, x: CentralClass) -> tuple[Fraction, ...]:
    """``<varpi_i, rep(x)> mod 1``."""
    return lattice.reduce_mod1(x.rep)


def varpi_at_center(rs: RootSystem, x: CentralClass) -> list[CycloNumber]:
    """``varpi_i(x) = exp(-2 pi i <varpi_i, rep(x)>)``."""
    return [CycloNumber.root_of_unity(-c) for c in x.rep]


def eigenvalue_sides(rs: RootSystem, x: CentralClass) -> tuple[tuple[int, ...], list[CycloNumber]]:
    """(char poly of ``psi(x)``, coefficients of ``prod_i (t - varpi_i(x)^{-1})``)."""
    g = psi(rs, x)
    lhs = char_poly(g)
    n = x.order
    roots = [CycloNumber.zeta(n, int(c * n)) for c in pairing_mod1(rs, x)]
    return lhs, product_linear_factors(roots)


def eigenvalue_check(rs: RootSystem, x: CentralClass) -> bool:
    lhs, rhs = eigenvalue_sides(rs, x)
    if len(lhs) != len(rhs):
        return False
    return all(r == c for c, r in zip(lhs, rhs))


def weight_orbit(rs: RootSystem, i: int) -> tuple[tuple[int, ...], ...]:
    """``W varpi_i`` in fundamental-weight coordinates (1-based ``i``)."""
    l = rs.l
    start = tuple(int(k == i - 1) for k in range(l))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for j in range(l):
                if m[j]:
                    # s_j(lambda) = lambda - <lambda, alpha_j^vee> alpha_j
                    m2 = tuple(m[k] - m[j] * rs.cartan[k][j] for k in range(l))
                    if m2 not in seen:
                        seen.add(m2)
                        nxt.append(m2)
        frontier = nxt
    return tuple(sorted(seen))


def chevalley_c(rs: RootSystem, u: TorusPoint) -> list[CycloNumber]:
    """``c_i(u) = sum over W varpi_i of exp(2 pi i <lambda, u>)``."""
    n = u.denominator
    out = []
    for i in range(1, rs.l + 1):
        total = CycloNumber.rational(0, n)
        for lam in weight_orbit(rs, i):
            q = sum((m * c for m, c in zip(lam, u.coords)), Fraction(0))
            total = total + CycloNumber.zeta(n, int(lattice.mod1(q) * n))
        out.append(total)
    return out


def dilation_holds(rs: RootSystem, x: CentralClass, u: TorusPoint) -> bool:
    """``c_i(x u) = varpi_i(x) c_i(u)`` for every ``i``."""
    lhs = chevalley_c(rs, center_translate(x, u))
    rhs = [v * c for v, c in zip(varpi_at_center(rs, x), chevalley_c(rs, u))]
    return all(a == b for a, b in zip(lhs, rhs))


def c_criterion(rs: RootSystem, x: CentralClass, u: TorusPoint) -> bool:
    """Each ``c_i(u)`` vanishes or ``varpi_i(x) = 1``."""
    cs = chevalley_c(rs, u)
    return all(c.is_zero() or r.denominator == 1 for c, r in zip(cs, x.rep))


def twisted_by_some(rs: RootSystem, x: CentralClass, u: TorusPoint,
                    group: Sequence[WeylElement]) -> WeylElement | None:
    target = center_translate(x, u)
    for g in group:
        if apply(g, u) == target:
            return g
    return None


def barycenter_identity(rs: RootSystem, x: CentralClass) -> bool:
    """``psi(mu_x)(u) = x u`` at ``u = Exp(e)``."""
    u = barycenter_point(rs)
    return apply(psi(rs, x), u) == center_translate(x, u)


def psi_class(rs: RootSystem, x: CentralClass) -> set:
    return conjugacy_class(rs, psi(rs, x))
