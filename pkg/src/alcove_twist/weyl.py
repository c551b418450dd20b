"""Weyl group elements as integer matrices on simple-coroot coordinates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .rootsys import RootSystem, classical_weyl_order

DEFAULT_CAP = 60_000

IntMatrix = tuple[tuple[int, ...], ...]


class GroupTooLargeError(RuntimeError):
    def __init__(self, kind: str, partial: int, expected: int, cap: int):
        super().__init__(
            f"{kind}: enumeration stopped after {partial} elements (cap {cap}); "
            f"classical order is {expected}")
        self.kind = kind
        self.partial = partial
        self.expected = expected
        self.cap = cap


class NotInGroupError(ValueError):
    pass


@dataclass(frozen=True)
class WeylElement:
    """``matrix`` acts on column vectors of simple-coroot coordinates.

    ``word`` lists simple-reflection labels (1-based), leftmost factor first.
    It is carried along but does not take part in equality.
    """

    matrix: IntMatrix
    word: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        a, b = self.matrix, other.matrix
        cols = list(zip(*b))
        m = tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(m, word)

    def __pow__(self, k: int) -> "WeylElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = identity(self.rank)
        for _ in range(k):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return all(self.matrix[i][j] == int(i == j) for i in range(self.rank) for j in range(self.rank))

    @property
    def order(self) -> int:
        k, cur = 1, self
        while not cur.is_identity():
            cur = cur * self
            k += 1
        return k

    def inverse(self) -> "WeylElement":
        out = self ** (self.order - 1)
        word = tuple(reversed(self.word)) if self.word is not None else None
        return WeylElement(out.matrix, word)

    def __call__(self, v: Sequence) -> tuple:
        return act(self, v)


def identity(l: int) -> WeylElement:
    return WeylElement(tuple(tuple(int(i == j) for j in range(l)) for i in range(l)), ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """``s_i`` for label ``i`` in ``1..l``: ``alpha_k^vee -> alpha_k^vee - <alpha_i, alpha_k^vee> alpha_i^vee``."""
    l = rs.l
    if not 1 <= i <= l:
        raise ValueError(f"simple reflection label {i} out of range 1..{l}")
    c = rs.cartan
    m = tuple(
        tuple(int(r == k) - (c[k][i - 1] if r == i - 1 else 0) for k in range(l))
        for r in range(l)
    )
    return WeylElement(m, (i,))


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    out = identity(rs.l)
    for i in word:
        out = out * simple_reflection(rs, i)
    return out


def act(w: WeylElement, v: Sequence) -> tuple:
    if len(v) != w.rank:
        raise ValueError(f"vector of length {len(v)} for a rank-{w.rank} element")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in w.matrix)


def _left_reflect(cartan, i: int, m: IntMatrix, col=None) -> IntMatrix:
    """``s_i * m``; only row ``i`` changes.

    ``col`` optionally lists the nonzero ``(k, cartan[k][i])``.
    """
    if col is None:
        col = [(k, cartan[k][i]) for k in range(len(m)) if cartan[k][i]]
    row = list(m[i])
    n = len(row)
    for k, c in col:
        mk = m[k]
        for j in range(n):
            row[j] -= c * mk[j]
    return m[:i] + (tuple(row),) + m[i + 1:]


def _right_reflect(cartan, i: int, m: IntMatrix) -> IntMatrix:
    """``m * s_i``; column ``c`` loses ``cartan[c][i]`` times column ``i``."""
    l = len(m)
    coeffs = [cartan[c][i] for c in range(l)]
    return tuple(
        tuple(row[c] - coeffs[c] * row[i] if coeffs[c] else row[c] for c in range(l))
        for row in m
    )


def conjugate_by_simple(rs: RootSystem, w: WeylElement, i: int) -> WeylElement:
    """``s_i w s_i`` (label ``i`` is 1-based)."""
    m = _right_reflect(rs.cartan, i - 1, _left_reflect(rs.cartan, i - 1, w.matrix))
    word = (i,) + w.word + (i,) if w.word is not None else None
    return WeylElement(m, word)


_GROUPS: dict[int, tuple[RootSystem, tuple[WeylElement, ...]]] = {}


def enumerate_group(rs: RootSystem, cap: int = DEFAULT_CAP) -> tuple[WeylElement, ...]:
    """All of ``W``, breadth-first by word length (ties: discovery order by label).

    Elements are told apart by their image of the regular vector ``2 rho^vee``.
    """
    hit = _GROUPS.get(id(rs))
    if hit is not None and hit[0] is rs and len(hit[1]) <= cap:
        return hit[1]
    l = rs.l
    cartan = rs.cartan
    expected = classical_weyl_order(rs.kind) if rs.kind[0] in "ABCDEFG" and rs.kind[1:].isdigit() else None
    start = tuple(sum(col) for col in zip(*rs.coroots[: len(rs.coroots) // 2]))
    # nonzero entries of each Cartan column: <alpha_i, y> = sum_k y_k cartan[k][i]
    cols = [tuple((k, cartan[k][i]) for k in range(l) if cartan[k][i]) for i in range(l)]
    one = identity(l)
    seen = {start}
    elements = [one]
    queue = deque([(start, one)])
    while queue:
        vec, w = queue.popleft()
        for i in range(l):
            p = 0
            for k, c in cols[i]:
                p += vec[k] * c
            if p < 0:  # s_i w is shorter, already found
                continue
            v2 = vec[:i] + (vec[i] - p,) + vec[i + 1:]
            if v2 in seen:
                continue
            seen.add(v2)
            if len(elements) >= cap:
                raise GroupTooLargeError(rs.kind, len(elements), expected or -1, cap)
            w2 = WeylElement(_left_reflect(cartan, i, w.matrix, cols[i]), (i + 1,) + w.word)
            elements.append(w2)
            queue.append((v2, w2))
    result = tuple(elements)
    if expected is not None and len(result) != expected:
        raise AssertionError(f"{rs.kind}: enumerated {len(result)} elements, expected {expected}")
    _GROUPS[id(rs)] = (rs, result)
    return result


def char_poly(w: WeylElement) -> tuple[int, ...]:
    """``det(t - M)`` as ascending integer coefficients (Faddeev-LeVerrier)."""
    a = w.matrix
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[n - k + 1]
        mk = prod
        tr = sum(sum(a[i][t] * mk[t][i] for t in range(n)) for i in range(n))
        if tr % k:
            raise ArithmeticError("non-integral characteristic polynomial")
        coeffs[n - k] = -tr // k
    return tuple(coeffs)


def poly_to_str(coeffs: Sequence[int], var: str = "t") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{'*' + mono if mono else ''}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def conjugacy_class(rs: RootSystem, w: WeylElement) -> set[IntMatrix]:
    """Orbit of ``w`` under conjugation by the simple reflections."""
    seen = {w.matrix}
    frontier = [w]
    while frontier:
        nxt = []
        for g in frontier:
            for i in range(1, rs.l + 1):
                h = conjugate_by_simple(rs, WeylElement(g.matrix, ()), i)
                if h.matrix not in seen:
                    seen.add(h.matrix)
                    nxt.append(h)
        frontier = nxt
    return seen


def are_conjugate(rs: RootSystem, w1: WeylElement, w2: WeylElement,
                  group: Sequence[WeylElement]) -> bool:
    members = {g.matrix for g in group}
    for w in (w1, w2):
        if w.matrix not in members:
            raise NotInGroupError(f"{w.matrix} is not an element of the supplied group")
    return w2.matrix in conjugacy_class(rs, w1)


def conjugacy_classes(rs: RootSystem, group: Sequence[WeylElement]) -> list[set[IntMatrix]]:
    remaining = {g.matrix for g in group}
    classes = []
    for g in group:
        if g.matrix in remaining:
            cls = conjugacy_class(rs, g)
            classes.append(cls)
            remaining -= cls
    return classes


def permutes_roots(rs: RootSystem, w: WeylElement) -> bool:
    coroots = set(rs.coroots)
    return all(tuple(act(w, c)) in coroots for c in rs.coroots)
