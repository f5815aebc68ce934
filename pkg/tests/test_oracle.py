import itertools

import pytest
from hypothesis import given, strategies as st

from lrpuzzles.core import FlagString, SchubertIndex, flag_strings, grassmannian_strings
from lrpuzzles.oracle import (_partitions_in_box, flag_product_table, flag_structure_constants, giambelli_expand,
                              giambelli_product, grassmannian_oracle, lr_expand, lr_tableaux, pieri_multiply)


def test_basic_coefficients():
    assert lr_tableaux((1,), (1,), (2,), 2, 4) == 1
    assert lr_tableaux((1,), (1,), (1, 1), 2, 4) == 1
    assert lr_expand((1,), (1,), 2, 4) == {(2, 0): 1, (1, 1): 1}


def test_s21_squared():
    assert lr_tableaux((2, 1), (2, 1), (3, 3), 3, 6) == 1
    assert lr_tableaux((2, 1), (2, 1), (3, 2, 1), 3, 6) == 2
    assert lr_tableaux((2, 1), (2, 1), (2, 2, 2), 3, 6) == 1
    assert lr_expand((2, 1), (2, 1), 3, 6) == {(3, 3, 0): 1, (3, 2, 1): 2, (2, 2, 2): 1}


def test_unit():
    for k, n in ((2, 4), (3, 6), (2, 5)):
        for lam in _partitions_in_box(k, n):
            assert lr_expand((), lam, k, n) == {lam: 1}
            assert lr_tableaux((), lam, lam, k, n) == 1


def test_pieri():
    assert pieri_multiply(1, (1,), 2, 4) == {(2, 0): 1, (1, 1): 1}
    assert pieri_multiply(0, (2, 1), 3, 6) == {(2, 1, 0): 1}
    with pytest.raises(ValueError):
        pieri_multiply(4, (), 2, 4)


def test_pieri_matches_lr():
    for k, n in ((2, 5), (3, 6), (3, 7)):
        for p in range(n - k + 1):
            for mu in _partitions_in_box(k, n):
                assert pieri_multiply(p, mu, k, n) == lr_expand((p,), mu, k, n)


def test_giambelli():
    assert giambelli_expand((1, 1), 2, 4) == {(1, 1): 1}
    assert giambelli_expand((2, 1), 3, 6) == {(2, 1, 0): 1}
    for k, n in ((2, 5), (3, 6)):
        for lam in _partitions_in_box(k, n):
            assert giambelli_expand(lam, k, n) == {lam: 1}


def test_giambelli_matches_lr():
    for k, n in ((2, 5), (3, 6), (4, 8)):
        box = _partitions_in_box(k, n)
        for lam, mu in itertools.product(box, repeat=2):
            assert giambelli_product(lam, mu, k, n) == lr_expand(lam, mu, k, n)


def test_flag_oracle_on_grassmannians():
    # Schubert polynomials give an independent route to the same numbers
    for k, n in ((1, 3), (2, 4), (2, 5), (3, 6)):
        classes = grassmannian_strings(k, n)
        table = flag_product_table((k,), n, classes)
        for a, b in itertools.product(classes, repeat=2):
            assert table[(a, b)] == grassmannian_oracle(a, b)


def test_flag_structure_constants_identity():
    classes = flag_strings((1, 3), 4)
    e = FlagString(4, (1, 3), classes[0])
    assert e.digits == "0112"
    for s in classes:
        assert flag_structure_constants(e, FlagString(4, (1, 3), s)) == {s: 1}


def test_flag_structure_constants_errors():
    with pytest.raises(TypeError):
        flag_structure_constants("0012", "0012")
    with pytest.raises(ValueError):
        flag_structure_constants(FlagString(4, (1, 3), "0112"), FlagString(4, (1, 2), "0012"))


def test_commutative_and_symmetric():
    for k, n in ((2, 5), (3, 6)):
        box = _partitions_in_box(k, n)
        top = tuple([n - k] * k)
        for lam, mu in itertools.combinations(box, 2):
            assert lr_expand(lam, mu, k, n) == lr_expand(mu, lam, k, n)
        # c^{top}_{lam, mu} = 1 exactly when mu is the complement of lam
        for lam in box:
            dual = SchubertIndex(k, n, lam).dual().lam
            assert lr_expand(lam, dual, k, n) == {top: 1}


@given(st.sampled_from(_partitions_in_box(3, 7)), st.sampled_from(_partitions_in_box(3, 7)),
       st.sampled_from(_partitions_in_box(3, 7)))
def test_associativity(a, b, c):
    def times(left, right):
        out = {}
        for nu, x in left.items():
            for rho, y in lr_expand(nu, right, 3, 7).items():
                out[rho] = out.get(rho, 0) + x * y
        return out
    assert times(lr_expand(a, b, 3, 7), c) == times(lr_expand(b, c, 3, 7), a)


def test_box_errors():
    with pytest.raises(ValueError):
        lr_tableaux((3,), (1,), (3, 1), 2, 4)
    with pytest.raises(ValueError):
        grassmannian_oracle("0101", "01010")
