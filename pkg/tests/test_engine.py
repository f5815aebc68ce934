import itertools

import pytest
from hypothesis import given, settings, strategies as st

from bruteforce import brute_expand
from lrpuzzles.core import grassmannian_strings, flag_strings, string_codim
from lrpuzzles.engine import PuzzleInputError, coefficient, count_fillings, enumerate_fillings, expand_product, render
from lrpuzzles.pieces import pieces_for
from lrpuzzles.rings import parse_coeff

H = pieces_for("h")


def _grass(nmax):
    for n in range(1, nmax + 1):
        for k in range(n + 1):
            yield grassmannian_strings(k, n)


def test_basic_expansion():
    fillings = enumerate_fillings(4, "0101", "0101", H)
    assert sorted(f.gamma for f in fillings) == ["0110", "1001"]


def test_filter_and_count():
    assert len(enumerate_fillings(6, "010101", "010101", H, "101010")) == 2
    assert count_fillings("1", "1", H) == 1
    assert coefficient("0101", "0101", "0110", H) == 1
    # G(1,2): "01" is the unit and "10" the point class
    assert coefficient("01", "01", "01", H) == 1
    assert coefficient("01", "01", "10", H) == 0
    assert coefficient("10", "01", "10", H) == 1
    assert coefficient("0101", "0101", "1100", H) == 0


def test_equivariant_and_k_examples():
    assert coefficient("010", "010", "010", pieces_for("ht")) == parse_coeff("y3 - y2")
    assert expand_product("0101", "0101", pieces_for("k")) == {"0110": 1, "1001": 1, "1010": -1}
    kt = expand_product("101", "101", pieces_for("kt"))
    assert kt == {"110": parse_coeff("t1*t2^-1"), "101": parse_coeff("1 - t1*t2^-1")}


def test_boundary_of_every_filling():
    for classes in _grass(5):
        for a, b in itertools.product(classes, repeat=2):
            for f in enumerate_fillings(len(a), a, b, H):
                n = f.n
                assert "".join(f.up(n + 1 - p, 1).left for p in range(1, n + 1)) == a
                assert "".join(f.up(p, p).right for p in range(1, n + 1)) == b
                assert "".join(f.up(n, c).bottom for c in range(1, n + 1)) == f.gamma


def test_fillings_are_distinct_and_match_expansion():
    for theory in ("h", "ht", "k", "kt", "h2"):
        pieces = pieces_for(theory)
        for n in range(1, 5):
            classes = ([grassmannian_strings(k, n) for k in range(n + 1)] if theory != "h2"
                       else [flag_strings(s, n) for s in itertools.combinations(range(1, n), 2)])
            for cl in classes:
                for a, b in itertools.product(cl, repeat=2):
                    fs = enumerate_fillings(n, a, b, pieces)
                    assert len({f.signature() for f in fs}) == len(fs)
                    total = {}
                    for f in fs:
                        total[f.gamma] = total.get(f.gamma, 0) + f.coefficient
                    assert {g: c for g, c in total.items() if c} == expand_product(a, b, pieces)


@pytest.mark.parametrize("theory", ["h", "k", "k-alt", "ht"])
def test_matches_brute_force(theory):
    pieces = pieces_for(theory)
    for classes in _grass(4):
        for a, b in itertools.product(classes, repeat=2):
            assert expand_product(a, b, pieces) == brute_expand(a, b, pieces), (a, b)


def test_two_step_matches_brute_force():
    pieces = pieces_for("h2")
    for n in range(3, 5):
        for steps in itertools.combinations(range(1, n), 2):
            cl = flag_strings(steps, n)
            for a, b in itertools.product(cl, repeat=2):
                assert expand_product(a, b, pieces) == brute_expand(a, b, pieces), (a, b)


def test_identity_class():
    for classes in _grass(6):
        e = classes[0]
        for b in classes:
            assert expand_product(e, b, H) == {b: 1}
            assert expand_product(b, e, H) == {b: 1}


def test_commutative_and_degree():
    for classes in _grass(6):
        for a, b in itertools.combinations(classes, 2):
            got = expand_product(a, b, H)
            assert got == expand_product(b, a, H)
            assert all(string_codim(g) == string_codim(a) + string_codim(b) for g in got)


def test_no_equivariant_piece_at_top_degree():
    ht = pieces_for("ht")
    for classes in _grass(5):
        for a, b in itertools.product(classes, repeat=2):
            for f in enumerate_fillings(len(a), a, b, ht):
                if string_codim(f.gamma) == string_codim(a) + string_codim(b):
                    assert not f.equivariant_rhombi()


@settings(max_examples=40)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))).flatmap(
    lambda nk: st.tuples(st.sampled_from(grassmannian_strings(nk[1], nk[0])),
                         st.sampled_from(grassmannian_strings(nk[1], nk[0])))))
def test_k_variants_agree(pair):
    a, b = pair
    assert expand_product(a, b, pieces_for("k")) == expand_product(a, b, pieces_for("k-alt"))


def test_input_errors():
    with pytest.raises(PuzzleInputError, match="lengths"):
        expand_product("01", "010", H)
    with pytest.raises(PuzzleInputError, match="alphabet"):
        expand_product("02", "01", H)
    with pytest.raises(PuzzleInputError):
        expand_product("", "", H)
    with pytest.raises(PuzzleInputError):
        coefficient("01", "01", "1", H)
    with pytest.raises(PuzzleInputError):
        enumerate_fillings(3, "01", "01", H)


def test_render():
    fs = enumerate_fillings(4, "0101", "0101", H)
    texts = [render(f) for f in fs]
    assert texts[0] != texts[1]
    one = render(enumerate_fillings(1, "1", "1", H)[0])
    assert one.count("^") == 1
    with pytest.raises(ValueError):
        render(fs[0], "png")


def test_render_kt_gash():
    fs = enumerate_fillings(3, "010", "010", pieces_for("kt"))
    gashed = [f for f in fs if any(t.gash for row in f.rows for t in row)]
    assert len(gashed) == 1
    f = gashed[0]
    assert len(f.equivariant_rhombi()) == 1
    assert "#" in render(f)
    assert render(f, "svg").startswith("<?xml")
