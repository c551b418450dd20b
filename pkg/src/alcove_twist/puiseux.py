"""Finite Puiseux series over cyclotomic rationals and Newton-stratum witnesses.

A series is a finite map ``exponent -> coefficient`` standing for
``sum c_q eps^q``. ``val`` follows the valuation sign ``val(eps) = -1``;
``order`` is the usual minimum exponent. Witnesses for a Newton point
``nu`` satisfy ``order(lambda(a)) = <lambda, nu>``. ``sigma`` is the Galois generator
``eps^q -> exp(2 pi i q) eps^q``.

Torus points ``a`` are tuples of series, one per ambient cocharacter
coordinate; an integer matrix ``G`` on cocharacters acts by
``g(a)_j = prod_k a_k^{G[j][k]}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import lattice
from .alcove import barycenter
from .cyclotomic import CycloNumber
from .newton import (NewtonPolygon, NewtonTwist, levi_of, m_nu, newton_twist,
                     permutation_cycle_type)
from .rootsys import AmbientLattice, RootSystem
from .weyl import WeylElement, are_conjugate, enumerate_group

NEG_INF = -math.inf


class PuiseuxSeries:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Fraction, CycloNumber] = {}
        for q, c in items:
            q = Fraction(q)
            c = c if isinstance(c, CycloNumber) else CycloNumber.rational(c)
            out[q] = out[q] + c if q in out else c
        self.terms = {q: c for q, c in sorted(out.items()) if not c.is_zero()}

    @classmethod
    def monomial(cls, coeff, exponent=0) -> "PuiseuxSeries":
        return cls([(exponent, coeff)])

    @classmethod
    def eps(cls, exponent=1) -> "PuiseuxSeries":
        return cls.monomial(1, exponent)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def order(self) -> Fraction | float:
        """Smallest exponent; ``inf`` for zero."""
        return min(self.terms) if self.terms else math.inf

    def val(self) -> Fraction | float:
        return -min(self.terms) if self.terms else NEG_INF

    def leading(self) -> tuple[Fraction, CycloNumber]:
        q = min(self.terms)
        return q, self.terms[q]

    def constant_term(self) -> CycloNumber:
        return self.terms.get(Fraction(0), CycloNumber.rational(0))

    # arithmetic ---------------------------------------------------------
    def __add__(self, other) -> "PuiseuxSeries":
        other = _coerce(other)
        return PuiseuxSeries(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "PuiseuxSeries":
        return PuiseuxSeries({q: -c for q, c in self.terms.items()})

    def __sub__(self, other) -> "PuiseuxSeries":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "PuiseuxSeries":
        return _coerce(other) - self

    def __mul__(self, other) -> "PuiseuxSeries":
        other = _coerce(other)
        prod = [(p + q, a * b) for p, a in self.terms.items() for q, b in other.terms.items()]
        return PuiseuxSeries(prod)

    __rmul__ = __mul__

    def invert(self) -> "PuiseuxSeries":
        """Inverse of a monomial ``c eps^q``; general units are not supported."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero series")
        if not self.is_monomial():
            raise NotImplementedError("only monomials can be inverted in finite-support arithmetic")
        q, c = self.leading()
        return PuiseuxSeries.monomial(c.inverse(), -q)

    def __truediv__(self, other) -> "PuiseuxSeries":
        return self * _coerce(other).invert()

    def __pow__(self, k: int) -> "PuiseuxSeries":
        if k < 0:
            return self.invert() ** (-k)
        out = PuiseuxSeries.monomial(1)
        for _ in range(k):
            out = out * self
        return out

    def sigma(self, power: int = 1) -> "PuiseuxSeries":
        return PuiseuxSeries({q: c * CycloNumber.root_of_unity(q * power)
                              for q, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, (PuiseuxSeries, int, Fraction, CycloNumber)):
            return NotImplemented
        other = _coerce(other)
        if self.terms.keys() != other.terms.keys():
            return False
        return all(c == other.terms[q] for q, c in self.terms.items())

    __hash__ = None

    def to_json(self) -> list:
        out = []
        for q, c in self.terms.items():
            m = c.minimal_level()
            out.append([str(q), m.level, [str(v) for v in m.coeffs]])
        return out

    def __repr__(self) -> str:
        inner = " + ".join(f"{c.minimal_level()!r}*eps^{q}" for q, c in self.terms.items())
        return f"PuiseuxSeries({inner or '0'})"


def _coerce(x) -> PuiseuxSeries:
    if isinstance(x, PuiseuxSeries):
        return x
    return PuiseuxSeries.monomial(x)


def character_value(point: Sequence[PuiseuxSeries], weight: Sequence[int]) -> PuiseuxSeries:
    """``lambda(a) = prod_j a_j^{lambda_j}`` for ``lambda`` in ambient dual coordinates."""
    out = PuiseuxSeries.monomial(1)
    for a, k in zip(point, weight):
        if k:
            out = out * (a ** k)
    return out


def act_on_point(g: Sequence[Sequence[int]], point: Sequence[PuiseuxSeries]) -> tuple[PuiseuxSeries, ...]:
    return tuple(character_value(point, row) for row in g)


def root_characters(rs: RootSystem, ambient: AmbientLattice) -> list[tuple[int, ...]]:
    """Every root of ``rs`` in ambient dual coordinates."""
    return [ambient.weight_to_ambient(r) for r in rs.roots]


def discriminant_valuation(rs: RootSystem, ambient: AmbientLattice,
                           point: Sequence[PuiseuxSeries]) -> Fraction | float:
    """``val`` of ``prod over roots of (1 - alpha(a))``, as a sum of factor valuations."""
    total: Fraction | float = Fraction(0)
    for chi in root_characters(rs, ambient):
        total += (1 - character_value(point, chi)).val()
    return total


def is_regular_point(rs: RootSystem, ambient: AmbientLattice, point: Sequence[PuiseuxSeries]) -> bool:
    one = PuiseuxSeries.monomial(1)
    return all(character_value(point, chi) != one for chi in root_characters(rs, ambient))


def _coroot_coordinates(ambient: AmbientLattice, h: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Matrix ``Y`` with ``E Y = H E`` where ``E`` holds the simple coroots."""
    e = ambient.coroot_embed
    et = lattice.transpose(e)
    gram_inv = lattice.inverse(lattice.matmul(et, e))
    he = lattice.matmul(h, e)
    y = lattice.matmul(gram_inv, lattice.matmul(et, he))
    if lattice.matmul(e, y) != [[Fraction(v) for v in row] for row in he] or \
            not all(lattice.is_integral(row) for row in y):
        raise ValueError("matrix does not preserve the coroot lattice")
    return tuple(tuple(int(v) for v in row) for row in y)


class RegularityError(ValueError):
    def __init__(self, i: int, j: int):
        super().__init__(f"witness coordinates {i} and {j} coincide; choose different constants")
        self.pair = (i, j)


@dataclass
class WitnessReport:
    group: str
    nu: tuple[Fraction, ...]
    coords: tuple[PuiseuxSeries, ...]
    h_ambient: tuple[tuple[int, ...], ...]
    h: WeylElement
    twist: NewtonTwist
    rs: RootSystem = field(repr=False)
    ambient: AmbientLattice = field(repr=False)
    checks: dict[str, bool] = field(default_factory=dict)

    def recheck(self) -> dict[str, bool]:
        """Recompute every check from the stored coordinates."""
        rs, amb, a = self.rs, self.ambient, self.coords
        target = m_nu(rs, amb, self.nu)
        checks = {
            "galois_twist": tuple(s.sigma() for s in a) == act_on_point(self.h_ambient, a),
            "valuations": all(s.order() == v for s, v in zip(a, self.nu)),
            "regular": is_regular_point(rs, amb, a),
            "discriminant": discriminant_valuation(rs, amb, a) == target,
            "twist_conjugate": are_conjugate(rs, self.h, self.twist.element, enumerate_group(rs)),
        }
        if amb.name.startswith("GL"):
            checks["distinct_entries"] = all(a[i] != a[j] for i in range(len(a)) for j in range(i))
        return checks

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    @property
    def cycle_type(self) -> tuple[int, ...] | None:
        if not self.ambient.name.startswith("GL"):
            return None
        return permutation_cycle_type(self.h_ambient)


def _coprime_level(qs: Iterable[int], count: int) -> int:
    """Smallest prime above ``count`` that divides none of ``qs``."""
    qs = list(qs)
    n = max(count, 1) + 1
    while True:
        if all(n % p for p in range(2, math.isqrt(n) + 1)) and all(q % n for q in qs):
            return n
        n += 1


def default_constants(poly: NewtonPolygon) -> list[list[CycloNumber]]:
    counts = [d // s.denominator for s, d in poly.blocks]
    level = _coprime_level([s.denominator for s, _ in poly.blocks], max(counts))
    return [[CycloNumber.zeta(level, m) for m in range(c)] for c in counts]


def _gl_group(n: int):
    from .rootsys import parse_group
    return parse_group(f"GL{n}")


def build_witness_gl(poly: NewtonPolygon,
                     constants: Sequence[Sequence[CycloNumber]] | None = None) -> WitnessReport:
    """Diagonal ``a`` with entries ``c_m zeta_q^j eps^{p/q}`` per block.

    ``constants[b]`` lists the ``d/q`` unit constants of block ``b``.
    """
    rs, amb = _gl_group(poly.n)
    if constants is None:
        constants = default_constants(poly)
    if len(constants) != len(poly.blocks):
        raise ValueError("need one list of constants per polygon block")
    coords: list[PuiseuxSeries] = []
    # highest order first, matching the dominant nu
    for (s, d), consts in reversed(list(zip(poly.blocks, constants))):
        q = s.denominator
        if len(consts) != d // q:
            raise ValueError(f"block of order {s} and size {d} needs {d // q} constants")
        for c in consts:
            for j in range(q):
                coords.append(PuiseuxSeries.monomial(c * CycloNumber.zeta(q, j), s))
    for i in range(len(coords)):
        for j in range(i):
            if coords[i] == coords[j]:
                raise RegularityError(j, i)
    nu = poly.nu()
    sig = [s.sigma() for s in coords]
    h_amb = []
    for r in range(poly.n):
        hits = [k for k in range(poly.n) if coords[k] == sig[r]]
        if len(hits) != 1:
            raise AssertionError(f"sigma(a)_{r} matches coordinates {hits}")
        h_amb.append(tuple(int(k == hits[0]) for k in range(poly.n)))
    h_amb = tuple(h_amb)
    twist = newton_twist(levi_of(rs, amb, nu))
    report = WitnessReport(f"GL{poly.n}", nu, tuple(coords), h_amb,
                           WeylElement(_coroot_coordinates(amb, h_amb)), twist, rs, amb)
    report.checks = report.recheck()
    return report


def build_witness_central(rs: RootSystem, ambient: AmbientLattice, nu: Sequence) -> WitnessReport:
    """Witness for a central ``nu``: ``omega_i(a) = eps^{m_i} varpi_i(u)`` at the barycenter."""
    np = levi_of(rs, ambient, nu)
    if not np.is_central():
        raise ValueError(f"nu = {tuple(str(v) for v in np.nu)} is not central")
    twist = newton_twist(np)
    l = rs.l
    omega = ambient.omega_basis
    e = barycenter(rs).coords
    values = []
    for i, w in enumerate(omega):
        m = sum((Fraction(a) * b for a, b in zip(w, np.nu)), Fraction(0))
        unit = CycloNumber.root_of_unity(e[i]) if i < l else CycloNumber.rational(1)
        values.append(PuiseuxSeries.monomial(unit, m))
    # e_j^* = sum_i B[i][j] omega_i with B the inverse of the omega matrix
    omat = [[omega[i][j] for i in range(ambient.n)] for j in range(ambient.n)]
    b = lattice.inverse(omat)
    coords = []
    for j in range(ambient.n):
        exps = [b[i][j] for i in range(ambient.n)]
        if not lattice.is_integral(exps):
            raise AssertionError("omega basis is not unimodular")
        coords.append(character_value(values, [int(v) for v in exps]))
    report = WitnessReport(ambient.name, np.nu, tuple(coords), twist.ambient_matrix,
                           twist.element, twist, rs, ambient)
    report.checks = report.recheck()
    return report
