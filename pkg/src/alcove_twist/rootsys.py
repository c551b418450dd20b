"""Root-system data for the irreducible reduced types, ambient lattices, and
classes in ``P(R^vee)/Q(R^vee)``.

Conventions (used everywhere in the package):

* weight-side vectors (roots, weights) are written in the simple-root basis;
* coweight-side vectors (coroots, coweights, torus points, alcove points) are
  written in the simple-coroot basis, so ``Q(R^vee) = Z^l``;
* ``cartan[i][j] = <alpha_j, alpha_i^vee>``, hence the pairing of a weight
  ``x`` with a coweight ``y`` is ``y^T * cartan * x``.

Labels ``1..l`` follow Bourbaki; index ``0`` is the affine node (``delta_0``,
``omega_0 = 0``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial
from typing import Sequence

from . import lattice

SUPPORTED_RANKS = {
    "A": range(1, 9),
    "B": range(2, 7),
    "C": range(2, 7),
    "D": range(4, 7),
    "E": range(6, 9),
    "F": range(4, 5),
    "G": range(2, 3),
}

#: Types with |W| <= 51840, i.e. everything the group-theoretic checks sweep.
ENUMERABLE_KINDS = (
    "A1", "A2", "A3", "A4", "A5", "A6", "A7",
    "B2", "B3", "B4", "B5", "B6",
    "C2", "C3", "C4", "C5", "C6",
    "D4", "D5", "D6",
    "E6", "F4", "G2",
)

#: All shipped types; E7 and E8 are data only (no group enumeration by default).
SUPPORTED_KINDS = ENUMERABLE_KINDS + ("A8", "E7", "E8")


class UnknownTypeError(ValueError):
    pass


def _parse_kind(kind: str) -> tuple[str, int]:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", kind)
    if not m:
        raise UnknownTypeError(f"unknown root system type {kind!r}")
    letter, rank = m.group(1).upper(), int(m.group(2))
    if letter not in SUPPORTED_RANKS:
        raise UnknownTypeError(f"unknown root system type {kind!r}")
    if rank not in SUPPORTED_RANKS[letter]:
        r = SUPPORTED_RANKS[letter]
        raise UnknownTypeError(
            f"rank {rank} outside supported range {r.start}..{r.stop - 1} for type {letter}")
    return letter, rank


def _unit(n: int, i: int, scale=1) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(scale)
    return v


def _euclidean_simple_roots(letter: str, l: int) -> list[list[Fraction]]:
    """Bourbaki simple roots as Euclidean vectors."""
    half = Fraction(1, 2)
    if letter == "A":
        return [[Fraction(int(k == i) - int(k == i + 1)) for k in range(l + 1)] for i in range(l)]
    chain = [[Fraction(int(k == i) - int(k == i + 1)) for k in range(l)] for i in range(l - 1)]
    if letter == "B":
        return chain + [_unit(l, l - 1)]
    if letter == "C":
        return chain + [_unit(l, l - 1, 2)]
    if letter == "D":
        last = _unit(l, l - 2)
        last[l - 1] = Fraction(1)
        return chain + [last]
    if letter == "G":
        return [[Fraction(1), Fraction(-1), Fraction(0)], [Fraction(-2), Fraction(1), Fraction(1)]]
    if letter == "F":
        return [
            [Fraction(0), Fraction(1), Fraction(-1), Fraction(0)],
            [Fraction(0), Fraction(0), Fraction(1), Fraction(-1)],
            [Fraction(0), Fraction(0), Fraction(0), Fraction(1)],
            [half, -half, -half, -half],
        ]
    if letter == "E":
        e8 = [[half, -half, -half, -half, -half, -half, -half, half],
              [Fraction(1), Fraction(1)] + [Fraction(0)] * 6]
        for i in range(6):
            v = [Fraction(0)] * 8
            v[i], v[i + 1] = Fraction(-1), Fraction(1)
            e8.append(v)
        return e8[:l]
    raise UnknownTypeError(letter)


def cartan_matrix(kind: str) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with ``entry(i, j) = <alpha_j, alpha_i^vee>``."""
    letter, l = _parse_kind(kind)
    simple = _euclidean_simple_roots(letter, l)

    def dot(u, v):
        return sum(a * b for a, b in zip(u, v))

    rows = []
    for ai in simple:
        rows.append(tuple(int(2 * dot(aj, ai) / dot(ai, ai)) for aj in simple))
    return tuple(rows)


def classical_weyl_order(kind: str) -> int:
    letter, l = _parse_kind(kind)
    if letter == "A":
        return factorial(l + 1)
    if letter in "BC":
        return 2 ** l * factorial(l)
    if letter == "D":
        return 2 ** (l - 1) * factorial(l)
    return {"G2": 12, "F4": 1152, "E6": 51840, "E7": 2903040, "E8": 696729600}[f"{letter}{l}"]


def classical_root_count(kind: str) -> int:
    letter, l = _parse_kind(kind)
    if letter == "A":
        return l * (l + 1)
    if letter in "BC":
        return 2 * l * l
    if letter == "D":
        return 2 * l * (l - 1)
    return {"G2": 12, "F4": 48, "E6": 72, "E7": 126, "E8": 240}[f"{letter}{l}"]


def _closure(cartan: Sequence[Sequence[int]]):
    """All (root, coroot) pairs generated from the simple ones."""
    l = len(cartan)
    start = []
    for i in range(l):
        e = tuple(int(k == i) for k in range(l))
        start.append((e, e))
    seen = {r: c for r, c in start}
    frontier = list(start)
    while frontier:
        nxt = []
        for root, coroot in frontier:
            for i in range(l):
                # <alpha, alpha_i^vee> and <alpha_i, alpha^vee>
                p = sum(cartan[i][k] * root[k] for k in range(l))
                q = sum(coroot[k] * cartan[k][i] for k in range(l))
                if p == 0:
                    continue
                r2 = tuple(x - p * int(k == i) for k, x in enumerate(root))
                c2 = tuple(x - q * int(k == i) for k, x in enumerate(coroot))
                if r2 not in seen:
                    seen[r2] = c2
                    nxt.append((r2, c2))
        frontier = nxt
    return seen


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Combinatorial datum of a reduced irreducible root system.

    ``roots``/``coroots`` are aligned (``coroots[k]`` is the coroot of
    ``roots[k]``); positive roots come first, ordered by height.
    """

    kind: str
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[tuple[int, ...], ...]
    coroots: tuple[tuple[int, ...], ...]
    inv_cartan: tuple[tuple[Fraction, ...], ...]
    highest_root: tuple[int, ...]
    marks: tuple[int, ...]
    J: tuple[int, ...]
    fund_coweights: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def l(self) -> int:
        return len(self.cartan)

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        return self.roots[: len(self.roots) // 2]

    @cached_property
    def root_functionals(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots as integer functionals on coroot coordinates."""
        l = self.l
        return tuple(
            tuple(sum(self.cartan[i][k] * x[k] for k in range(l)) for i in range(l))
            for x in self.positive_roots
        )

    @cached_property
    def all_root_functionals(self) -> tuple[tuple[int, ...], ...]:
        l = self.l
        return tuple(
            tuple(sum(self.cartan[i][k] * x[k] for k in range(l)) for i in range(l))
            for x in self.roots
        )

    @cached_property
    def fund_weights(self) -> tuple[tuple[Fraction, ...], ...]:
        """``varpi_i`` in the simple-root basis (column ``i`` of the inverse Cartan)."""
        return tuple(tuple(self.inv_cartan[k][i] for k in range(self.l)) for i in range(self.l))

    @cached_property
    def determinant(self) -> int:
        return lattice.determinant(self.cartan)

    @cached_property
    def two_rho(self) -> tuple[int, ...]:
        """Sum of positive roots, simple-root basis."""
        return tuple(sum(col) for col in zip(*self.positive_roots))

    def pair(self, weight: Sequence, coweight: Sequence) -> Fraction:
        """``<weight, coweight>`` (simple-root / simple-coroot coordinates)."""
        return sum(
            (Fraction(coweight[i]) * self.cartan[i][k] * weight[k]
             for i in range(self.l) for k in range(self.l) if self.cartan[i][k] and weight[k]),
            Fraction(0),
        )

    def simple_pairings(self, coweight: Sequence) -> tuple[Fraction, ...]:
        """``(<alpha_i, y>)_i``."""
        return tuple(
            sum((Fraction(coweight[k]) * self.cartan[k][i] for k in range(self.l)), Fraction(0))
            for i in range(self.l)
        )

    def coweight(self, j: int) -> tuple[Fraction, ...]:
        """``bar-omega_j`` for ``j`` in ``0..l`` (``j = 0`` is the zero vector)."""
        return self.fund_coweights[j]

    def __repr__(self) -> str:
        return f"RootSystem({self.kind!r})"


def _recognize(cartan: Sequence[Sequence[int]], nroots: int) -> str:
    l = len(cartan)
    symmetric = all(cartan[i][j] == cartan[j][i] for i in range(l) for j in range(l))
    if any(cartan[i][j] == -3 for i in range(l) for j in range(l)):
        return "G2"
    if symmetric:
        if nroots == l * (l + 1):
            return f"A{l}"
        if nroots == 2 * l * (l - 1):
            return f"D{l}"
        return f"E{l}"
    if l == 4 and nroots == 48:
        # B4/C4 also have 32 roots; 48 only for F4
        return "F4"
    if l == 2:
        return "B2"
    # the -2 sits in the row of the short root next to the double bond;
    # that node is a leaf in B_l and interior in C_l
    short = next(i for i in range(l) if -2 in cartan[i])
    degree = sum(1 for j in range(l) if j != short and cartan[short][j])
    return f"B{l}" if degree == 1 else f"C{l}"


def root_system_from_cartan(cartan: Sequence[Sequence[int]], kind: str | None = None) -> RootSystem:
    """Build the full datum from a connected Cartan matrix."""
    cartan = tuple(tuple(int(x) for x in row) for row in cartan)
    return _from_cartan_cached(cartan, kind)


@lru_cache(maxsize=None)
def _from_cartan_cached(cartan, kind):
    l = len(cartan)
    pairs = _closure(cartan)
    pos = sorted((r for r in pairs if sum(r) > 0), key=lambda r: (sum(r), r))
    neg = [tuple(-x for x in r) for r in pos]
    roots = tuple(pos + neg)
    coroots = tuple(pairs[r] for r in roots)
    highest = max(pos, key=sum)
    if any(sum(r) == sum(highest) and r != highest for r in pos):
        raise ValueError("Cartan matrix is not connected: highest root is not unique")
    inv = tuple(tuple(row) for row in lattice.inverse(cartan))
    inv_t = [[inv[j][i] for j in range(l)] for i in range(l)]
    coweights = [tuple(Fraction(0) for _ in range(l))]
    # bar-omega_j = column j of the transpose-inverse Cartan
    coweights += [tuple(inv_t[k][j] for k in range(l)) for j in range(l)]
    marks = (1,) + tuple(highest)
    J = tuple(i for i in range(1, l + 1) if marks[i] == 1)
    if kind is None:
        kind = _recognize(cartan, len(roots))
    return RootSystem(
        kind=kind,
        cartan=cartan,
        roots=roots,
        coroots=coroots,
        inv_cartan=inv,
        highest_root=tuple(highest),
        marks=marks,
        J=J,
        fund_coweights=tuple(coweights),
    )


@lru_cache(maxsize=None)
def build_root_system(kind: str) -> RootSystem:
    letter, rank = _parse_kind(kind)
    name = f"{letter}{rank}"
    rs = root_system_from_cartan(cartan_matrix(name), name)
    if len(rs.roots) != classical_root_count(name):
        raise AssertionError(f"{name}: generated {len(rs.roots)} roots")
    return rs


def coset_representatives(rs: RootSystem) -> list["CentralClass"]:
    """``{bar-omega_j : j in J + {0}}``, one per coset of ``P(R^vee)/Q(R^vee)``."""
    return [CentralClass(rs, j) for j in (0,) + rs.J]


@dataclass(frozen=True)
class CentralClass:
    """Element of ``P(R^vee)/Q(R^vee)``, stored by its canonical index ``j``.

    The representative is ``bar-omega_j`` with ``j in J + {0}``.
    """

    rs: RootSystem
    j: int

    def __post_init__(self):
        if self.j != 0 and self.j not in self.rs.J:
            raise ValueError(f"{self.j} is not a minuscule label of {self.rs.kind} (J={self.rs.J})")

    @property
    def rep(self) -> tuple[Fraction, ...]:
        return self.rs.coweight(self.j)

    @classmethod
    def from_vector(cls, rs: RootSystem, y: Sequence) -> "CentralClass":
        """Class of a coweight ``y`` (coroot coordinates)."""
        y = tuple(Fraction(v) for v in y)
        if len(y) != rs.l:
            raise lattice.ShapeError(f"expected {rs.l} coordinates, got {len(y)}")
        if not lattice.is_integral(rs.simple_pairings(y)):
            raise ValueError(f"{y} is not in the coweight lattice of {rs.kind}")
        hits = [j for j in (0,) + rs.J
                if lattice.is_integral([a - b for a, b in zip(y, rs.coweight(j))])]
        if len(hits) != 1:
            raise AssertionError(f"coset representatives are not a transversal at {y}: {hits}")
        return cls(rs, hits[0])

    def __add__(self, other: "CentralClass") -> "CentralClass":
        if other.rs is not self.rs:
            raise ValueError("classes of different root systems")
        return CentralClass.from_vector(self.rs, [a + b for a, b in zip(self.rep, other.rep)])

    def __neg__(self) -> "CentralClass":
        return CentralClass.from_vector(self.rs, [-a for a in self.rep])

    def __mul__(self, k: int) -> "CentralClass":
        return CentralClass.from_vector(self.rs, [k * a for a in self.rep])

    __rmul__ = __mul__

    @property
    def order(self) -> int:
        return lattice.common_denominator(self.rep)

    def is_zero(self) -> bool:
        return self.j == 0

    def __repr__(self) -> str:
        return f"CentralClass({self.rs.kind}, omega_{self.j})"


@dataclass(frozen=True)
class AmbientLattice:
    """Cocharacter lattice ``X_*(A)`` in ambient coordinates.

    ``basis`` generates ``X_*(A)`` (columns; unimodular, so ``X_*(A) = Z^n``),
    ``coroot_embed`` holds the simple coroots (columns) and ``root_embed`` the
    simple roots in the dual coordinates of ``X^*(A)``.
    """

    name: str
    n: int
    basis: tuple[tuple[int, ...], ...]
    coroot_embed: tuple[tuple[int, ...], ...]
    root_embed: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if abs(lattice.determinant(self.basis)) != 1:
            raise ValueError("ambient basis must be unimodular")

    def check(self, rs: RootSystem) -> None:
        prod = lattice.matmul(lattice.transpose(self.coroot_embed), self.root_embed)
        if tuple(map(tuple, prod)) != rs.cartan:
            raise ValueError(f"ambient embedding of {self.name} is inconsistent with the Cartan matrix")

    def root_pairings(self, nu: Sequence) -> tuple[Fraction, ...]:
        """``(<alpha_i, nu>)_i`` for an ambient cocharacter ``nu``."""
        return tuple(
            sum((Fraction(nu[k]) * self.root_embed[k][i] for k in range(self.n)), Fraction(0))
            for i in range(len(self.root_embed[0]))
        )

    def weight_to_ambient(self, x: Sequence[int]) -> tuple[int, ...]:
        """Root-basis weight in ``Q(R)`` -> ambient dual coordinates."""
        return tuple(sum(self.root_embed[k][i] * x[i] for i in range(len(x))) for k in range(self.n))

    def coweight_to_ambient(self, y: Sequence) -> tuple:
        return tuple(sum(self.coroot_embed[k][i] * y[i] for i in range(len(y))) for k in range(self.n))

    def reflection(self, i: int) -> list[list[int]]:
        """Ambient matrix of ``s_i`` (1-based) on cocharacters."""
        a = [self.root_embed[k][i - 1] for k in range(self.n)]
        c = [self.coroot_embed[k][i - 1] for k in range(self.n)]
        return [[int(r == s) - c[r] * a[s] for s in range(self.n)] for r in range(self.n)]

    @cached_property
    def omega_basis(self) -> tuple[tuple[int, ...], ...]:
        """Basis ``omega_1..omega_n`` of ``X^*(A)`` (ambient dual coordinates).

        The first ``l`` restrict to the fundamental weights, the rest span the
        kernel of restriction to the derived torus.
        """
        l = len(self.coroot_embed[0])
        res = lattice.transpose(self.coroot_embed)  # l x n
        sf = lattice.smith_normal_form(res)
        if sf.diagonal != (1,) * l:
            raise ValueError("derived group is not simply connected for this ambient lattice")
        out = []
        for i in range(l):
            ue = [sf.U[k][i] for k in range(l)] + [0] * (self.n - l)
            out.append(tuple(lattice.matvec(sf.V, ue)))
        for k in range(l, self.n):
            out.append(tuple(row[k] for row in sf.V))
        return tuple(out)


def simply_connected_lattice(rs: RootSystem) -> AmbientLattice:
    """Preset with ``X_*(A) = Q(R^vee)``; characters are in fundamental-weight coordinates."""
    l = rs.l
    eye = tuple(tuple(int(i == j) for j in range(l)) for i in range(l))
    return AmbientLattice(name=f"{rs.kind}(sc)", n=l, basis=eye, coroot_embed=eye, root_embed=rs.cartan)


def gl_lattice(n: int) -> AmbientLattice:
    eye = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    emb = tuple(tuple(int(k == i) - int(k == i + 1) for i in range(n - 1)) for k in range(n))
    return AmbientLattice(name=f"GL{n}", n=n, basis=eye, coroot_embed=emb, root_embed=emb)


def parse_group(kind: str) -> tuple[RootSystem, AmbientLattice]:
    """``"GL4"`` -> (A3, GL_4 lattice); ``"B3"`` -> (B3, simply connected preset)."""
    m = re.fullmatch(r"\s*GL\s*(\d+)\s*", kind, flags=re.IGNORECASE)
    if m:
        n = int(m.group(1))
        if not 2 <= n <= 9:
            raise UnknownTypeError(f"GL{n}: n must be between 2 and 9")
        rs = build_root_system(f"A{n - 1}")
        amb = gl_lattice(n)
    else:
        rs = build_root_system(kind)
        amb = simply_connected_lattice(rs)
    amb.check(rs)
    return rs, amb
