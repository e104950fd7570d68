"""Tests for maps of projective space in homogeneous coordinates."""

import pytest

from birat.cremona import (
    CremonaMap,
    chart_from_polys,
    from_chart,
    map_str,
    max_degree,
    parse_map,
    standard_involution,
)
from birat.errors import (
    ChartDegenerateError,
    DegreeMismatchError,
    EmptyFamilyError,
    IndeterminateAtPointError,
    NotHomogeneousError,
    ZeroMapError,
)
from birat.linear import ProjLinear, parse_matrix, parse_point
from birat.poly import Polynomial, RationalFunction, parse_poly
from birat.scalars import GF, QQ


def mp(text, field=QQ):
    return parse_map(text, field)


def poly3(text, field=QQ):
    return parse_poly(text, field, 3)


SIGMA = "P^2: [x1*x2 : x0*x2 : x0*x1]"


def test_standard_involution():
    s = standard_involution(QQ)
    assert s == mp(SIGMA)
    assert s.degree == 2
    assert s.compose(s) == CremonaMap.identity(QQ, 2)


def test_involution_higher_dimension():
    s = standard_involution(QQ, 3)
    assert s.degree == 3
    assert s.compose(s) == CremonaMap.identity(QQ, 3)


def test_common_factors_removed():
    f = CremonaMap([poly3("x0^2*x1"), poly3("x0*x1^2"), poly3("x0*x1*x2")])
    assert f.degree == 1
    assert f == mp("P^2: [x0 : x1 : x2]")


def test_scaling_normalized():
    f = CremonaMap([poly3("2*x1*x2"), poly3("2*x0*x2"), poly3("2*x0*x1")])
    assert f == mp(SIGMA)


def test_construction_rejects():
    with pytest.raises(NotHomogeneousError):
        CremonaMap([poly3("x0 + x1^2"), poly3("x1"), poly3("x2")])
    with pytest.raises(DegreeMismatchError):
        CremonaMap([poly3("x0^2"), poly3("x1"), poly3("x2")])
    with pytest.raises(ZeroMapError):
        zero = Polynomial.zero(QQ, 3)
        CremonaMap([zero, zero, zero])
    with pytest.raises(ZeroMapError):
        CremonaMap([Polynomial.one(QQ, 3)] * 3)


def test_apply():
    s = mp(SIGMA)
    assert s.apply(parse_point("[1:2:3]", QQ)) == parse_point("[6:3:2]", QQ)
    assert s.is_indeterminate_at(parse_point("[1:0:0]", QQ))
    with pytest.raises(IndeterminateAtPointError):
        s.apply(parse_point("[1:0:0]", QQ))


def test_fixed_point():
    s = mp(SIGMA)
    assert s.is_fixed_point(parse_point("[1:1:1]", QQ))
    assert not s.is_fixed_point(parse_point("[1:2:3]", QQ))


def test_compose_order():
    # compose(f, g) applies g first
    f = mp("P^2: [x0 : x1 : x1 + x2]")
    g = mp("P^2: [x0 : x0 + x1 : x2]")
    fg = f.compose(g)
    p = parse_point("[1:1:1]", QQ)
    assert fg.apply(p) == f.apply(g.apply(p))


def test_compose_degree_drops():
    s = mp(SIGMA)
    assert s.compose(s).degree == 1


def test_compose_associative():
    s = mp(SIGMA)
    g = mp("P^2: [x2 : x0 : x1]")
    h = mp("P^2: [x0 : x1 : x0 + x2]")
    assert s.compose(g).compose(h) == s.compose(g.compose(h))


def test_identity_composition():
    s = mp(SIGMA)
    ident = CremonaMap.identity(QQ, 2)
    assert s.compose(ident) == s
    assert ident.compose(s) == s


def test_from_proj_linear():
    m = ProjLinear(QQ, parse_matrix("[[1,1,0],[0,1,0],[0,0,2]]", QQ))
    f = CremonaMap.from_proj_linear(m)
    assert f.degree == 1
    p = parse_point("[1:2:3]", QQ)
    assert f.apply(p) == m.apply(p)


def test_chart_of_involution():
    s = mp(SIGMA)
    chart = s.to_chart()
    x, y = parse_poly("x0", QQ, 2), parse_poly("x1", QQ, 2)
    one = Polynomial.one(QQ, 2)
    assert chart.fractions() == [RationalFunction(one, x), RationalFunction(one, y)]


def test_chart_round_trip():
    for text in (SIGMA, "P^2: [x0^2 : x0*x2 : x0*x1 + x2^2]", "P^2: [x0 : x2 : x1]"):
        f = mp(text)
        assert from_chart(f.to_chart()) == f


def test_chart_degenerate():
    f = CremonaMap([Polynomial.zero(QQ, 3), poly3("x0^2"), poly3("x1^2")])
    with pytest.raises(ChartDegenerateError):
        f.to_chart()


def test_chart_from_polys():
    fs = [RationalFunction(parse_poly("x1", QQ, 2)),
          RationalFunction(parse_poly("x0^2 + x1", QQ, 2))]
    dec = chart_from_polys([f.num for f in fs])
    assert dec.fractions() == fs


def test_local_isomorphism():
    s = mp(SIGMA)
    assert s.is_local_isomorphism(parse_point("[1:1:1]", QQ))
    assert not s.is_local_isomorphism(parse_point("[1:0:0]", QQ))
    w = mp("P^2: [x0^2 : x0*x1 : x1*x2]")
    assert not w.is_local_isomorphism(parse_point("[1:0:0]", QQ))
    lin = mp("P^2: [x0 : x1 + x2 : x2]")
    assert lin.is_local_isomorphism(parse_point("[1:0:0]", QQ))


def test_max_degree():
    assert max_degree([mp(SIGMA), CremonaMap.identity(QQ, 2)]) == 2
    with pytest.raises(EmptyFamilyError):
        max_degree([])


def test_parse_round_trip():
    for text in (SIGMA, "P^2: [x0^2 : x0*x1 : x2^2]", "P^3: [x1*x2*x3 : x0*x2*x3 : x0*x1*x3 : x0*x1*x2]"):
        f = mp(text)
        assert mp(map_str(f)) == f


def test_finite_field_involution():
    F5 = GF(5)
    s = standard_involution(F5)
    assert s.compose(s) == CremonaMap.identity(F5, 2)
