import itertools

import pytest

from lrpuzzles.core import FlagString, flag_strings, grassmannian_strings, string_to_partition
from lrpuzzles.mondrian import (EMPTY, MondrianError, Square, check_admissible, init_product, play, play_tree,
                                quantum_tableau, step, to_partition, trace_lines)
from lrpuzzles.oracle import lr_expand


def test_squares():
    a, b = Square(1, 3), Square(3, 5)
    assert a.side == 3 and a.meets(b) and a.touches(b)
    assert Square(1, 2).touches(Square(3, 4)) and not Square(1, 2).meets(Square(3, 4))
    assert not Square(1, 2).touches(Square(4, 5))
    assert Square(1, 5).contains(Square(2, 3))
    assert a.shift(2) == Square(3, 5)
    with pytest.raises(MondrianError):
        Square(3, 2)


def test_s21_squared():
    assert play((2, 1), (2, 1), 3, 6) == {(3, 3, 0): 1, (3, 2, 1): 2, (2, 2, 2): 1}


def test_s21_first_move_has_two_children():
    t = init_product((2, 1), (2, 1), 3, 6)
    assert len(step(t)) == 2


def test_s1_squared():
    assert play((1,), (1,), 2, 4) == {(2, 0): 1, (1, 1): 1}
    terminals = [t for _, t in play_tree((1,), (1,), 2, 4) if t.terminal]
    assert sorted(to_partition(t) for t in terminals) == [(1, 1), (2, 0)]


def test_os_rule_outer_square():
    t = init_product((2, 1, 1), (1, 1, 1), 3, 6)
    assert t.m == 4


def test_must_meet_failure():
    assert init_product((2, 2), (2, 2), 2, 4) is EMPTY
    assert play((2, 2), (2, 2), 2, 4) == {}


def test_dual_pair_is_a_point():
    for k, n in ((2, 4), (2, 5), (3, 6)):
        for s in grassmannian_strings(k, n):
            lam = string_to_partition(s)
            top = tuple([n - k] * k)
            assert play(lam.lam, lam.dual().lam, k, n) == {top: 1}


def test_every_node_is_admissible():
    for k, n in ((2, 5), (3, 6)):
        for a, b in itertools.product(grassmannian_strings(k, n), repeat=2):
            lam, mu = string_to_partition(a).lam, string_to_partition(b).lam
            for _, t in play_tree(lam, mu, k, n):
                check_admissible(t)
                assert len(t.d) <= k - 1


def test_play_matches_lr_tableaux():
    for n in range(1, 8):
        for k in range(1, min(3, n) + 1):
            for a, b in itertools.product(grassmannian_strings(k, n), repeat=2):
                lam, mu = string_to_partition(a).lam, string_to_partition(b).lam
                assert play(lam, mu, k, n) == lr_expand(lam, mu, k, n), (k, n, lam, mu)


def test_terminal_moves_and_errors():
    t = [t for _, t in play_tree((1,), (1,), 2, 4) if t.terminal][0]
    with pytest.raises(MondrianError):
        step(t)
    nonterminal = init_product((1,), (1,), 2, 4)
    with pytest.raises(MondrianError):
        to_partition(nonterminal)
    with pytest.raises(MondrianError):
        init_product((), (), 0, 3)
    assert play((), (), 0, 3) == {(): 1}


def test_trace_lines():
    lines = trace_lines((1,), (1,), 2, 4)
    assert lines[0].startswith("0\tO:[1,")
    assert sum("=>" in line for line in lines) == 2
    assert str(init_product((1,), (1,), 2, 4)).startswith("O:")


def test_quantum_tableau_examples():
    assert quantum_tableau((3, 2, 1), 3, 6, 1).digits == "102021"
    assert quantum_tableau((3, 2), 3, 6, 2).digits == "101112"
    t = quantum_tableau((2, 1), 3, 6, 1)
    assert t == FlagString(6, (2, 4), "010212")


def test_quantum_tableau_degree_zero():
    # no added squares: both subspaces jump where the partition does
    for s in grassmannian_strings(2, 5):
        lam = string_to_partition(s).lam
        t = quantum_tableau(lam, 2, 5, 0)
        assert t.steps == (2, 2)
        assert t.digits.replace("2", "1") == s


def test_quantum_tableau_lands_in_two_step_classes():
    for k, n in ((2, 5), (3, 6)):
        for d in range(0, k + 1):
            if k + d > n:
                continue
            valid = set(flag_strings((k - d, k + d), n)) if 0 < k - d else None
            for s in grassmannian_strings(k, n):
                t = quantum_tableau(string_to_partition(s).lam, k, n, d)
                if valid is not None:
                    assert t.digits in valid


def test_quantum_tableau_range():
    with pytest.raises(MondrianError):
        quantum_tableau((1,), 2, 4, 3)
    with pytest.raises(MondrianError):
        quantum_tableau((1,), 3, 4, 2)
