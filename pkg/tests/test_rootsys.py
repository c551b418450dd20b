from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from alcove_twist import lattice
from alcove_twist.rootsys import (ENUMERABLE_KINDS, SUPPORTED_KINDS, CentralClass, UnknownTypeError,
                                  build_root_system, coset_representatives, gl_lattice, parse_group,
                                  root_system_from_cartan)
from alcove_twist.weyl import simple_reflection, act
import oracles

kinds = st.sampled_from(SUPPORTED_KINDS)


def test_a1():
    rs = build_root_system("A1")
    assert len(rs.roots) == 2
    assert rs.cartan == ((2,),)
    assert rs.marks[1:] == (1,)
    assert rs.J == (1,)


def test_a3_all_nodes_minuscule():
    assert build_root_system("A3").J == (1, 2, 3)


def test_g2_marks():
    rs = build_root_system("G2")
    assert sorted(rs.marks[1:]) == [2, 3]
    assert rs.marks[1:] == (3, 2)
    assert rs.J == ()


@pytest.mark.parametrize("kind,size", [("A2", 3), ("G2", 1), ("A1", 2)])
def test_coset_representative_counts(kind, size):
    rs = build_root_system(kind)
    reps = coset_representatives(rs)
    assert len(reps) == size
    assert reps[0].is_zero()


def test_a2_cosets_are_distinct_mod_coroots():
    rs = build_root_system("A2")
    reps = coset_representatives(rs)
    assert [r.rep for r in reps] == [(0, 0), (F(2, 3), F(1, 3)), (F(1, 3), F(2, 3))]
    for a in reps:
        for b in reps:
            diff = [x - y for x, y in zip(a.rep, b.rep)]
            assert lattice.is_integral(diff) == (a == b)


def test_unknown_types():
    for bad in ("A0", "B1", "D3", "E5", "E9", "F3", "G3", "H3", "X", ""):
        with pytest.raises(UnknownTypeError):
            build_root_system(bad)
    with pytest.raises(UnknownTypeError):
        parse_group("GL1")


@pytest.mark.parametrize("kind", SUPPORTED_KINDS)
def test_tables(kind):
    rs = build_root_system(kind)
    assert len(rs.roots) == oracles.root_count(kind)
    assert rs.determinant == oracles.cartan_det(kind)
    if kind in oracles.MARKS:
        assert rs.marks[1:] == oracles.MARKS[kind]
    # Coxeter number two ways
    assert 1 + sum(rs.marks[1:]) == len(rs.roots) // rs.l


@given(kinds)
def test_det_equals_number_of_cosets(kind):
    rs = build_root_system(kind)
    assert rs.determinant == len(coset_representatives(rs))
    assert rs.J == tuple(i for i in range(1, rs.l + 1) if rs.marks[i] == 1)


@given(kinds, st.data())
def test_closure_under_simple_reflections(kind, data):
    rs = build_root_system(kind)
    coroots = set(rs.coroots)
    i = data.draw(st.integers(1, rs.l))
    s = simple_reflection(rs, i)
    assert {act(s, c) for c in rs.coroots} == coroots
    # the same reflection on roots, written in the root basis
    roots = set(rs.roots)
    for r in rs.roots:
        p = sum(rs.cartan[i - 1][k] * r[k] for k in range(rs.l))
        img = tuple(r[k] - (p if k == i - 1 else 0) for k in range(rs.l))
        assert img in roots


@given(kinds)
def test_pairing_duality(kind):
    rs = build_root_system(kind)
    for j in range(1, rs.l + 1):
        assert rs.simple_pairings(rs.coweight(j)) == tuple(F(int(i == j)) for i in range(1, rs.l + 1))
    for i in range(rs.l):
        unit = [int(k == i) for k in range(rs.l)]
        for j in range(rs.l):
            alpha_j = [int(k == j) for k in range(rs.l)]
            assert rs.pair(alpha_j, unit) == rs.cartan[i][j]


@given(kinds)
def test_roots_and_coroots_aligned(kind):
    rs = build_root_system(kind)
    for r, c in zip(rs.roots, rs.coroots):
        # <alpha, alpha^vee> = 2
        assert rs.pair(r, c) == 2
    top = max(rs.positive_roots, key=sum)
    assert rs.highest_root == top
    assert tuple(rs.marks[1:]) == top


@given(st.sampled_from([k for k in SUPPORTED_KINDS if build_root_system(k).determinant > 1]), st.data())
def test_center_group_law(kind, data):
    rs = build_root_system(kind)
    reps = coset_representatives(rs)
    a, b, c = (data.draw(st.sampled_from(reps)) for _ in range(3))
    zero = reps[0]
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + zero == a
    assert a + (-a) == zero
    assert a * a.order == zero
    assert rs.determinant % a.order == 0


def test_from_vector_rejects_non_coweights():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        CentralClass.from_vector(rs, [F(1, 2), 0])
    with pytest.raises(lattice.ShapeError):
        CentralClass.from_vector(rs, [0])
    assert CentralClass.from_vector(rs, [F(5, 3), F(-2, 3)]) == CentralClass(rs, 1)
    with pytest.raises(ValueError):
        CentralClass(rs, 3)


def test_root_system_from_cartan_recognizes_type():
    a2 = build_root_system("A2")
    assert root_system_from_cartan(a2.cartan).kind == "A2"
    assert root_system_from_cartan(((2,),)).kind == "A1"


def test_parse_group_presets():
    rs, amb = parse_group("GL4")
    assert rs.kind == "A3" and amb.n == 4
    assert amb.root_pairings((1, 1, 0, 0)) == (0, 1, 0)
    rs, amb = parse_group("B3")
    assert rs.kind == "B3" and amb.n == 3
    assert amb.root_pairings((1, 0, 0)) == tuple(F(x) for x in rs.cartan[0])


@pytest.mark.parametrize("n", range(2, 9))
def test_gl_omega_basis_is_unimodular(n):
    amb = gl_lattice(n)
    om = amb.omega_basis
    assert abs(lattice.determinant(om)) == 1
    # first n-1 restrict to fundamental weights: <omega_i, alpha_j^vee> = delta_ij
    for i in range(n - 1):
        for j in range(n - 1):
            assert sum(om[i][k] * amb.coroot_embed[k][j] for k in range(n)) == int(i == j)


def test_enumerable_is_subset():
    assert set(ENUMERABLE_KINDS) < set(SUPPORTED_KINDS)
    assert all(oracles.weyl_order(k) <= 51840 for k in ENUMERABLE_KINDS)
    assert all(oracles.weyl_order(k) > 51840 for k in set(SUPPORTED_KINDS) - set(ENUMERABLE_KINDS))
