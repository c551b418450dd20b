"""Fundamental alcove, its barycenter, and the homomorphism ``psi``.

The affine space ``E`` is identified with the coweight space through the
base vertex (the functional vanishing on every simple root), so the affine
wall ``alpha_0`` reads ``1 - <highest root, p>`` and all maps are affine in
simple-coroot coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .lattice import common_denominator, is_integral
from .rootsys import CentralClass, RootSystem
from .weyl import DEFAULT_CAP, WeylElement, act, enumerate_group, identity


class PsiNotFoundError(RuntimeError):
    pass


@dataclass(frozen=True)
class AlcovePoint:
    coords: tuple[Fraction, ...]

    def walls(self, rs: RootSystem) -> tuple[Fraction, ...]:
        """Values of the ``l + 1`` wall functionals ``alpha_0, alpha_1, ..., alpha_l``."""
        simple = rs.simple_pairings(self.coords)
        top = rs.pair(rs.highest_root, self.coords)
        return (1 - top,) + simple

    def in_closure(self, rs: RootSystem) -> bool:
        return all(v >= 0 for v in self.walls(rs))

    def is_interior(self, rs: RootSystem) -> bool:
        return all(v > 0 for v in self.walls(rs))


@dataclass(frozen=True)
class AffineMap:
    """``p -> linear(p) + translation``; an element of ``P(R^vee) x| W``."""

    linear: WeylElement
    translation: tuple[Fraction, ...]

    def __call__(self, p: Sequence) -> tuple[Fraction, ...]:
        return tuple(Fraction(a) + t for a, t in zip(act(self.linear, p), self.translation))

    def __mul__(self, other: "AffineMap") -> "AffineMap":
        shifted = act(self.linear, other.translation)
        return AffineMap(self.linear * other.linear,
                         tuple(Fraction(t) + s for t, s in zip(self.translation, shifted)))

    @classmethod
    def identity(cls, l: int) -> "AffineMap":
        return cls(identity(l), tuple(Fraction(0) for _ in range(l)))

    def in_coweight_lattice(self, rs: RootSystem) -> bool:
        return is_integral(rs.simple_pairings(self.translation))


def fundamental_alcove_vertices(rs: RootSystem) -> list[AlcovePoint]:
    l = rs.l
    verts = [AlcovePoint(tuple(Fraction(0) for _ in range(l)))]
    for i in range(1, l + 1):
        verts.append(AlcovePoint(tuple(c / rs.marks[i] for c in rs.coweight(i))))
    return verts


def barycenter(rs: RootSystem) -> AlcovePoint:
    verts = fundamental_alcove_vertices(rs)
    n = len(verts)
    return AlcovePoint(tuple(sum((v.coords[k] for v in verts), Fraction(0)) / n for k in range(rs.l)))


@lru_cache(maxsize=None)
def _psi_table(rs: RootSystem, cap: int) -> dict[int, WeylElement]:
    e = barycenter(rs).coords
    scale = common_denominator(e + tuple(x for j in rs.J for x in rs.coweight(j)))
    e_int = tuple(int(x * scale) for x in e)
    targets = {}
    for j in (0,) + rs.J:
        targets[tuple(int((a - b) * scale) for a, b in zip(e, rs.coweight(j)))] = j
    found: dict[int, WeylElement] = {}
    for w in enumerate_group(rs, cap):
        img = tuple(sum(x * y for x, y in zip(row, e_int)) for row in w.matrix)
        j = targets.get(img)
        if j is not None:
            if j in found:
                raise PsiNotFoundError(f"{rs.kind}: two Weyl elements move e to e - omega_{j}")
            found[j] = w
    missing = [j for j in targets.values() if j not in found]
    if missing:
        raise PsiNotFoundError(f"{rs.kind}: no Weyl element sends e to e - omega_j for j in {missing}")
    return found


def psi(rs: RootSystem, mu: CentralClass, cap: int = DEFAULT_CAP) -> WeylElement:
    """The unique ``w`` with ``w(e) = e - bar-omega_j``."""
    if mu.rs is not rs:
        raise ValueError(f"class of {mu.rs.kind} used with {rs.kind}")
    return _psi_table(rs, cap)[mu.j]


def alcove_automorphism(rs: RootSystem, mu: CentralClass) -> AffineMap:
    """``t_{omega_j} o psi(mu)``, the element of the alcove stabilizer over ``mu``."""
    return AffineMap(psi(rs, mu), mu.rep)


def validate_alcove_automorphism(rs: RootSystem, mu: CentralClass) -> bool:
    """Check that ``t_{omega_j} o psi(mu)`` permutes the vertices of ``C`` and fixes ``e``."""
    g = alcove_automorphism(rs, mu)
    verts = {v.coords for v in fundamental_alcove_vertices(rs)}
    images = {g(v) for v in verts}
    e = barycenter(rs).coords
    return images == verts and g(e) == e and g.in_coweight_lattice(rs)


def vertex_permutation(rs: RootSystem, mu: CentralClass) -> tuple[int, ...]:
    """Image index of each vertex (``0`` is the base vertex, ``i`` is ``omega_i / delta_i``)."""
    g = alcove_automorphism(rs, mu)
    verts = [v.coords for v in fundamental_alcove_vertices(rs)]
    index = {v: k for k, v in enumerate(verts)}
    return tuple(index[g(v)] for v in verts)
