"""Tests for polynomial automorphisms of affine space."""

import pytest

from birat.affine import (
    PolyAuto,
    affine_auto,
    affine_lemma_suite,
    auto_str,
    centralizes,
    elementary_auto,
    embed_lower_linear,
    identity_auto,
    is_diagonal_linear,
    is_monomial_auto,
    linear_auto,
    normalizes_torus,
    parse_auto,
    permutation_auto,
    to_cremona,
    torus_auto,
    translation_auto,
)
from birat.cremona import parse_map
from birat.errors import (
    InverseCheckError,
    PreconditionError,
    SingularLinearPartError,
)
from birat.poly import Polynomial, parse_poly
from birat.scalars import GF, QQ


def chart_poly(text, d=2):
    return parse_poly(text, QQ, d, offset=1)


HENON_AUTO = PolyAuto(
    [chart_poly("x2"), chart_poly("x1 + x2^2")],
    [chart_poly("x2 - x1^2"), chart_poly("x1")],
)


def test_inverse_verified_on_construction():
    x1, x2 = chart_poly("x1"), chart_poly("x2")
    with pytest.raises(InverseCheckError):
        PolyAuto([x1 + x2, x2], [x1 + x2, x2])


def test_apply_and_invert():
    vals = [QQ.from_int(3), QQ.from_int(2)]
    image = HENON_AUTO.apply(vals)
    assert [str(v) for v in image] == ["2", "7"]
    assert HENON_AUTO.inverted().apply(image) == vals


def test_degree():
    assert HENON_AUTO.degree == 2
    assert identity_auto(QQ, 3).degree == 1


def test_compose_order():
    t = translation_auto(QQ, [1, 0])
    vals = [QQ.zero(), QQ.from_int(2)]
    # compose applies the right factor first
    assert HENON_AUTO.compose(t).apply(vals) == HENON_AUTO.apply(t.apply(vals))


def test_compose_inverse():
    c = HENON_AUTO.compose(HENON_AUTO.inverted())
    assert c == identity_auto(QQ, 2)


def test_linear_auto_rejects_singular():
    with pytest.raises(SingularLinearPartError):
        linear_auto(QQ, [[1, 1], [1, 1]])
    with pytest.raises(SingularLinearPartError):
        torus_auto(QQ, [1, 0])


def test_affine_auto():
    g = affine_auto(QQ, [[2, 0], [0, 1]], [5, -1])
    vals = [QQ.one(), QQ.one()]
    assert [str(v) for v in g.apply(vals)] == ["7", "0"]
    assert g.compose(g.inverted()) == identity_auto(QQ, 2)


def test_permutation_auto():
    g = permutation_auto(QQ, [1, 2, 0])
    vals = [QQ.from_int(k) for k in (4, 5, 6)]
    assert g.compose(g).compose(g) == identity_auto(QQ, 3)
    with pytest.raises(PreconditionError):
        permutation_auto(QQ, [0, 0, 1])


def test_elementary_auto():
    g = elementary_auto(QQ, 2, 1, chart_poly("x2^3"))
    assert g.inverted() == elementary_auto(QQ, 2, 1, -chart_poly("x2^3"))
    with pytest.raises(PreconditionError):
        elementary_auto(QQ, 2, 1, chart_poly("x1"))


def test_embed_lower_linear():
    g = embed_lower_linear(QQ, [[2, 1], [1, 1]], 3)
    vals = [QQ.from_int(9), QQ.one(), QQ.one()]
    assert [str(v) for v in g.apply(vals)] == ["9", "3", "2"]


def test_to_cremona():
    f = to_cremona(HENON_AUTO)
    assert f == parse_map("P^2: [x0^2 : x0*x2 : x0*x1 + x2^2]", QQ)
    assert to_cremona(identity_auto(QQ, 2)).degree == 1


def test_monomial_recognition():
    assert is_monomial_auto(permutation_auto(QQ, [1, 0]))
    assert is_monomial_auto(torus_auto(QQ, [2, 3]))
    assert is_diagonal_linear(torus_auto(QQ, [2, 3]))
    assert not is_diagonal_linear(permutation_auto(QQ, [1, 0]))
    assert not is_monomial_auto(HENON_AUTO)


def test_normalizes_torus():
    assert normalizes_torus(permutation_auto(QQ, [1, 0]).compose(torus_auto(QQ, [5, 7])))
    shear = elementary_auto(QQ, 2, 1, chart_poly("x2"))
    assert not normalizes_torus(shear)
    assert not normalizes_torus(translation_auto(QQ, [1, 0]))


def test_centralizes():
    block = embed_lower_linear(QQ, [[2, 1], [1, 1]], 3)
    shift = translation_auto(QQ, [1, 0, 0])
    stretch = torus_auto(QQ, [2, 1, 1])
    assert centralizes(shift, [block])
    assert not centralizes(shift, [stretch])
    assert not centralizes(shift, [block, stretch])


def test_lemma_suite():
    report = affine_lemma_suite(QQ, 2)
    assert report.all_passed
    assert len(report.checks) == 40
    names = {name for name, _, _ in report.checks}
    assert names == {"conjugate_squares", "commutes_with_shear"}


def test_lemma_suite_char2():
    report = affine_lemma_suite(GF(2), 3)
    assert report.all_passed
    names = {name for name, _, _ in report.checks}
    assert names == {"square_is_identity", "commutes_with_shear"}


def test_lemma_suite_needs_dimension():
    with pytest.raises(PreconditionError):
        affine_lemma_suite(QQ, 1)


def test_parse_round_trip():
    text = "A^2: (x2; x1 + x2^2) inv (x2 - x1^2; x1)"
    g = parse_auto(text, QQ)
    assert g == HENON_AUTO
    assert parse_auto(auto_str(g), QQ) == g
    with pytest.raises(InverseCheckError):
        parse_auto("A^2: (x2; x1) inv (x1; x1)", QQ)
