from __future__ import annotations

import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from alcove_twist.cyclotomic import CycloNumber
from alcove_twist.newton import NewtonPolygon, gl_cycle_type, gl_newton_polygon, m_nu
from alcove_twist.puiseux import (PuiseuxSeries, RegularityError, build_witness_central, build_witness_gl,
                                  character_value, discriminant_valuation, root_characters)
from alcove_twist.rootsys import parse_group

eps = PuiseuxSeries.eps
mono = PuiseuxSeries.monomial


def test_val_examples():
    assert eps().val() == -1
    assert eps(F(1, 2)).val() == F(-1, 2)
    assert eps(F(1, 2)).order() == F(1, 2)
    assert PuiseuxSeries().val() == -math.inf
    assert (mono(3) + eps(2)).val() == 0


def test_sigma_examples():
    assert eps().sigma() == eps()
    assert eps(F(1, 2)).sigma() == -eps(F(1, 2))
    assert eps(F(1, 3)).sigma() == mono(CycloNumber.zeta(3), F(1, 3))
    assert eps(F(1, 6)).sigma(6) == eps(F(1, 6))


def test_invert_and_errors():
    a = mono(CycloNumber.zeta(5, 2), F(-3, 4))
    assert a * a.invert() == mono(1)
    with pytest.raises(ZeroDivisionError):
        PuiseuxSeries().invert()
    with pytest.raises(NotImplementedError):
        (mono(1) + eps()).invert()
    assert (eps(2) / eps(F(1, 2))) == eps(F(3, 2))
    assert eps(F(1, 3)) ** 3 == eps()
    assert eps(F(1, 3)) ** -3 == eps(-1)


def series():
    level = st.sampled_from([1, 2, 3, 4, 6])
    coef = level.flatmap(lambda n: st.lists(st.integers(-2, 2), min_size=1, max_size=3)
                         .map(lambda cs: CycloNumber(n, cs)))
    expo = st.fractions(min_value=-2, max_value=3, max_denominator=6)
    return st.lists(st.tuples(expo, coef), max_size=4).map(PuiseuxSeries)


@given(series(), series())
def test_sigma_is_a_ring_automorphism(a, b):
    assert (a + b).sigma() == a.sigma() + b.sigma()
    assert (a * b).sigma() == a.sigma() * b.sigma()
    assert mono(1).sigma() == mono(1)


@given(series(), series())
def test_valuation_rules(a, b):
    if a.is_zero() or b.is_zero():
        return
    assert (a * b).val() == a.val() + b.val()
    s = a + b
    if not s.is_zero():
        assert s.val() <= max(a.val(), b.val())


@given(st.lists(st.tuples(st.integers(-3, 5), st.fractions(-3, 3, max_denominator=5)), max_size=4))
def test_sigma_fixes_integral_rational_series(terms):
    f = PuiseuxSeries(terms)
    assert f.sigma() == f


def test_gl2_half_witness():
    rep = build_witness_gl(gl_newton_polygon([1, None]))
    assert rep.coords == (eps(F(1, 2)), -eps(F(1, 2)))
    assert rep.h_ambient == ((0, 1), (1, 0))
    assert rep.cycle_type == (2,)
    assert rep.ok


def test_gl2_split_witness():
    poly = gl_newton_polygon([1, 0])
    units = [[CycloNumber.rational(2)], [CycloNumber.rational(3)]]
    rep = build_witness_gl(poly, units)
    assert rep.coords == (mono(3, 1), mono(2))
    assert rep.h_ambient == ((1, 0), (0, 1))
    assert rep.h.is_identity()
    assert rep.ok


def test_gl6_third_witness():
    rep = build_witness_gl(NewtonPolygon(((F(1, 3), 6),), 6))
    assert rep.cycle_type == (3, 3)
    assert rep.checks["twist_conjugate"]
    assert rep.ok


def test_colliding_constants_rejected():
    poly = NewtonPolygon(((F(0), 2),), 2)
    with pytest.raises(RegularityError) as err:
        build_witness_gl(poly, [[CycloNumber.rational(1), CycloNumber.rational(1)]])
    assert err.value.pair == (0, 1)
    with pytest.raises(ValueError):
        build_witness_gl(poly, [[CycloNumber.rational(1)]])


def test_recheck_detects_tampering():
    rep = build_witness_gl(gl_newton_polygon([1, None]))
    rep.coords = (eps(F(1, 2)), eps(F(1, 2)))
    checks = rep.recheck()
    assert not checks["distinct_entries"] and not checks["regular"]


def charpoly_of_diagonal(coords):
    """Ascending coefficients of prod (t - a_i)."""
    poly = [mono(1)]
    for a in coords:
        nxt = [PuiseuxSeries() for _ in range(len(poly) + 1)]
        for k, c in enumerate(poly):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - c * a
        poly = nxt
    return poly


@pytest.mark.parametrize("orders", [[1, None], [1, 0], [3, None, None], [5, 2, None, 4], [2, None, 1, None, 0],
                                    [7, None, None, 3, None, 1], [4, 3, 9, None, 0, 2, None, 1]])
def test_witness_round_trip(orders):
    poly = gl_newton_polygon(orders)
    rep = build_witness_gl(poly)
    assert rep.ok
    coeffs = charpoly_of_diagonal(rep.coords)[:-1]
    # the characteristic polynomial is defined over the base field
    for c in coeffs:
        assert c.sigma() == c
        assert all(q.denominator == 1 for q in c.terms)
    back = gl_newton_polygon([None if c.is_zero() else c.order() for c in coeffs])
    assert back == poly
    assert rep.cycle_type == gl_cycle_type(poly)


@pytest.mark.parametrize("kind,nu", [
    ("GL2", (F(1, 2), F(1, 2))), ("GL3", (F(1, 3),) * 3), ("GL4", (F(-3, 4),) * 4),
    ("GL5", (F(2, 5),) * 5), ("GL3", (2, 2, 2)), ("B3", (0, 0, 0)), ("E6", (0,) * 6), ("G2", (0, 0)),
])
def test_central_witness(kind, nu):
    rs, amb = parse_group(kind)
    rep = build_witness_central(rs, amb, nu)
    assert rep.ok, rep.checks
    assert discriminant_valuation(rs, amb, rep.coords) == 0


def test_central_gl3_twist_is_a_three_cycle():
    rs, amb = parse_group("GL3")
    rep = build_witness_central(rs, amb, (F(1, 3),) * 3)
    assert rep.cycle_type == (3,)


def test_central_rejects_non_central():
    rs, amb = parse_group("GL2")
    with pytest.raises(ValueError):
        build_witness_central(rs, amb, (1, 0))


def test_central_and_gl_witnesses_differ_by_a_central_constant():
    rs, amb = parse_group("GL2")
    central = build_witness_central(rs, amb, (F(1, 2), F(1, 2)))
    gl = build_witness_gl(gl_newton_polygon([1, None]))
    ratios = [a / b for a, b in zip(central.coords, gl.coords)]
    assert ratios[0] == ratios[1]
    assert ratios[0].is_monomial() and ratios[0].order() == 0


def test_discriminant_bound_on_perturbed_points():
    # diagonal points with the prescribed root orders: val Omega <= m_nu, equality when regular
    rng = random.Random(3)
    for n in range(2, 6):
        rs, amb = parse_group(f"GL{n}")
        for _ in range(10):
            orders = sorted((F(rng.randint(0, 3)) for _ in range(n)), reverse=True)
            coords = tuple(mono(CycloNumber.zeta(4, rng.randint(0, 1)) * rng.randint(1, 2), o) for o in orders)
            val = discriminant_valuation(rs, amb, coords)
            bound = m_nu(rs, amb, orders)
            assert val <= bound or val == math.inf
            if all(coords[i] != coords[j] for i in range(n) for j in range(i)):
                assert val == bound


def test_character_values():
    rs, amb = parse_group("GL3")
    a = (eps(2), eps(1), mono(5))
    roots = root_characters(rs, amb)
    assert len(roots) == 6
    assert character_value(a, (1, -1, 0)) == eps(1)
    assert character_value(a, (0, 1, -1)) == mono(F(1, 5), 1)


def test_to_json_shape():
    s = mono(CycloNumber.zeta(4), F(1, 2)) + mono(3, 2)
    assert s.to_json() == [["1/2", 4, ["0", "1"]], ["2", 1, ["3"]]]
