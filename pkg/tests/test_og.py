from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lrpuzzles.og import OGIndex, associated_partition, discrepancy, og_codim, parse_og, typeB_from_typeC


def test_associated_partition():
    assert associated_partition((6, 4), 6) == (5, 4, 3, 1)
    assert associated_partition((), 4) == (3, 2, 1, 0)
    assert associated_partition((3,), 4) == (3, 2, 0)


@given(st.integers(1, 9).flatmap(lambda m: st.tuples(
    st.just(m), st.sets(st.integers(1, m)).map(lambda s: tuple(sorted(s, reverse=True))))))
def test_associated_has_the_right_length(case):
    m, lam = case
    tilde = associated_partition(lam, m)
    assert len(tilde) == m - len(lam)
    assert all(a > b for a, b in zip(tilde, tilde[1:]))


def test_discrepancy():
    assert discrepancy((6, 4), (), 2, 6) == 8
    assert og_codim((6, 4), (), 2, 6) == 18
    # mu empty: only the (m-k)s term survives
    assert discrepancy((3,), (), 1, 4) == 3


def test_maximal_isotropic_forces_mu():
    for m in range(1, 6):
        for lam in ((), (m,), (m, 1) if m > 1 else (m,)):
            tilde = associated_partition(lam, m)
            assert discrepancy(lam, tilde, m, m) == 0


def test_discrepancy_errors():
    with pytest.raises(ValueError, match="sub-partition"):
        discrepancy((6, 4), (4, 2), 4, 6)
    with pytest.raises(ValueError, match="parts"):
        discrepancy((6, 4), (5,), 4, 6)
    with pytest.raises(ValueError, match="strictly"):
        discrepancy((4, 4), (), 2, 6)


def test_og_index():
    x = OGIndex(3, 13, (6, 4), (3,))
    assert x.m == 6 and not x.even and x.s == 2
    assert x.associated == (5, 4, 3, 1)
    assert x.codim == 17
    assert str(x) == "6,4|3"
    assert parse_og("6,4|3", 3, 13) == x
    assert OGIndex(2, 12, (6, 4), ()).even
    with pytest.raises(ValueError):
        OGIndex(7, 13, (), ())
    with pytest.raises(ValueError):
        parse_og("6,4", 3, 13)


def test_type_b_from_type_c():
    assert typeB_from_typeC(5, 0, 0, 0) == 5
    assert typeB_from_typeC(4, 1, 1, 0) == 1
    assert typeB_from_typeC(1, 0, 0, 2) == 4
    assert typeB_from_typeC(1, 1, 0, 0) == Fraction(1, 2)
    with pytest.raises(ValueError):
        typeB_from_typeC(1, -1, 0, 0)
