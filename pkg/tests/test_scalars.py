"""Tests for exact field arithmetic and field automorphisms."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from birat.errors import (
    BadModulusError,
    DivisionByZeroError,
    FieldMismatchError,
    ParseError,
)
from birat.poly import parse_scalar
from birat.scalars import (
    GF,
    QI,
    QQ,
    conjugation,
    frobenius,
    identity_automorphism,
    parse_field,
)

F5 = GF(5)

fractions = st.fractions(min_value=-12, max_value=12, max_denominator=8)


def any_scalar(field):
    if field == QI:
        return st.tuples(fractions, fractions).map(lambda t: field.from_pair(*t))
    return fractions.map(lambda q: field.from_fraction(q) if field == QQ else field.from_int(q.numerator))


fields = st.sampled_from([QQ, QI, F5])


@given(fields.flatmap(lambda k: st.tuples(any_scalar(k), any_scalar(k), any_scalar(k))))
def test_field_axioms(abc):
    a, b, c = abc
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + a.field.zero() == a
    assert a * a.field.one() == a
    assert a - a == a.field.zero()


@given(fields.flatmap(any_scalar))
def test_inverse(a):
    if a:
        assert a * a.inverse() == a.field.one()
        assert a / a == a.field.one()
        assert a ** -2 == (a.inverse()) ** 2


def test_division_by_zero():
    with pytest.raises(DivisionByZeroError):
        QQ.zero().inverse()
    with pytest.raises(DivisionByZeroError):
        F5.from_int(0).inverse()


def test_int_coercion():
    a = QQ.from_fraction(Fraction(3))
    assert a == 3
    assert a + 1 == 4
    assert 2 * a == 6
    assert 1 - a == -2
    assert 6 / a == 2
    assert hash(a) == hash(3)


def test_mixed_fields_refuse():
    with pytest.raises(FieldMismatchError):
        QQ.one() + F5.one()


def test_prime_field():
    a = F5.from_int(7)
    assert a == F5.from_int(2)
    assert str(a) == "2"
    assert F5.from_fraction(1, 2) == F5.from_int(3)
    assert F5.characteristic == 5
    with pytest.raises(BadModulusError):
        GF(4)
    with pytest.raises(BadModulusError):
        GF(1)


def test_gaussian_arithmetic():
    i = QI.from_pair(0, 1)
    assert i * i == -1
    assert (1 + i) * (1 - i) == 2
    assert i.inverse() == -i
    assert str(i) == "i"
    assert str(1 - i) == "1-i"
    assert str(QI.from_pair(0, 2)) == "2i"
    assert str(QI.from_pair(Fraction(1, 2), 0)) == "1/2"


def test_conjugation():
    conj = conjugation(QI)
    i = QI.from_pair(0, 1)
    assert conj(i) == -i
    assert conj(conj(i)) == i
    assert conj(QI.from_int(3)) == 3
    assert not conj.is_identity_action
    assert conj.compose(conj).is_identity_action
    with pytest.raises(FieldMismatchError):
        conjugation(QQ)


@given(st.integers(-30, 30))
def test_frobenius_fixes_prime_field(n):
    fr = frobenius(F5)
    a = F5.from_int(n)
    assert fr(a) == a
    assert fr.is_identity_action


def test_frobenius_composition():
    fr = frobenius(F5)
    assert fr.compose(fr) == frobenius(F5, 2)
    with pytest.raises(FieldMismatchError):
        frobenius(QQ)


def test_identity_automorphism():
    ident = identity_automorphism(QI)
    i = QI.from_pair(0, 1)
    assert ident(i) == i
    assert ident.is_identity_action


def test_parse_field():
    assert parse_field("Q") == QQ
    assert parse_field("Qi") == QI
    assert parse_field("Fp:5") == F5
    with pytest.raises(ParseError):
        parse_field("R")
    with pytest.raises(BadModulusError):
        parse_field("Fp:6")


def test_parse_scalar():
    assert parse_scalar("-3/2", QQ) == QQ.from_fraction(Fraction(-3, 2))
    assert parse_scalar("1+i", QI) == QI.from_pair(1, 1)
    assert parse_scalar("2", F5) == F5.from_int(2)
    with pytest.raises(ParseError):
        parse_scalar("i", QQ)


@given(fields.flatmap(any_scalar))
def test_str_round_trip(a):
    assert parse_scalar(str(a), a.field) == a
