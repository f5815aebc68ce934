import pytest
from hypothesis import given, strategies as st

from lrpuzzles.rings import (Poly, eq_weight_ht, eq_weight_kt, format_coeff, kt_factor_to_ht, parse_coeff,
                             specialize_to_ordinary, t_var, y_var)


def _polys(var):
    lo = 0 if var == "y" else -2
    exps = st.lists(st.integers(lo, 2), min_size=0, max_size=3).map(tuple)
    return st.dictionaries(exps, st.integers(-5, 5), max_size=4).map(lambda d: Poly(var, d))


y_polys = _polys("y")
t_polys = _polys("t")


@given(y_polys, y_polys, y_polys)
def test_ring_axioms_y(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(t_polys, t_polys)
def test_ring_axioms_t(a, b):
    assert a * b == b * a
    assert (a + b) * 1 == a + b
    assert -(-a) == a


@given(y_polys)
def test_format_parse_roundtrip_y(a):
    assert parse_coeff(format_coeff(a)) == a


@given(t_polys)
def test_format_parse_roundtrip_t(a):
    back = parse_coeff(format_coeff(a))
    assert back == a or (not a and back == 0)


def test_small_identities():
    assert (y_var(3) - y_var(2)) + (y_var(2) - y_var(3)) == 0
    assert (1 - t_var(2) * t_var(3, -1)) * t_var(3) == t_var(3) - t_var(2)
    assert len(((y_var(3) - y_var(2)) * (y_var(4) - y_var(1))).terms) == 4


def test_specialize():
    assert specialize_to_ordinary(y_var(3) - y_var(2)) == 0
    assert specialize_to_ordinary(1 - t_var(2) * t_var(3, -1)) == 0
    assert specialize_to_ordinary(2) == 2
    assert specialize_to_ordinary(Poly.const("y", 5)) == 5


def test_weights():
    assert eq_weight_ht(2, 3) == y_var(3) - y_var(2)
    assert eq_weight_kt(2, 3) == 1 - t_var(2) * t_var(3, -1)


def test_kt_factor_to_ht():
    assert kt_factor_to_ht(eq_weight_kt(2, 3)) == y_var(3) - y_var(2)
    assert kt_factor_to_ht(eq_weight_kt(1, 2)) == y_var(2) - y_var(1)
    assert not kt_factor_to_ht(eq_weight_kt(2, 2))
    with pytest.raises(ValueError):
        kt_factor_to_ht(t_var(1))
    with pytest.raises(ValueError):
        kt_factor_to_ht(y_var(1))


def test_format_examples():
    assert format_coeff(y_var(3) - y_var(2)) == "y3 - y2"
    assert format_coeff(t_var(2) * t_var(3, -1)) == "t2*t3^-1"
    assert format_coeff(1 - t_var(2) * t_var(3, -1)) == "1 - t2*t3^-1"
    assert format_coeff(-3) == "-3"
    assert parse_coeff("7") == 7


def test_mixing_variables_is_an_error():
    with pytest.raises(TypeError):
        y_var(1) + t_var(1)
    with pytest.raises(ValueError):
        Poly("y", {(-1,): 1})
    with pytest.raises(ValueError):
        parse_coeff("y1*t2")
