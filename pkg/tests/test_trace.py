import itertools
import random

import pytest

from lrpuzzles.core import flag_strings, grassmannian_strings
from lrpuzzles.engine import enumerate_fillings
from lrpuzzles.pieces import pieces_for
from lrpuzzles.trace import (PartialPuzzle, ReadingRuleError, check_stage_graph, read, read_alpha, read_beta,
                             stage_cells, stage_count, trace_filling, trace_tsv, truncate)

ALPHA_FIG = ("nw h lead h h ne ne", ["0", "1", "10", "0", "10", "0", "0"])
BETA_FIG = ("nw h lead h h ne ne", ["0", "10", "10", "0", "1", "1", "1"])


def test_figure_readers():
    assert read_alpha(PartialPuzzle.from_labels(5, *ALPHA_FIG)) == "01001"
    assert read_beta(PartialPuzzle.from_labels(5, *BETA_FIG)) == "00011"


def test_leading_edge():
    p = PartialPuzzle.from_labels(5, *ALPHA_FIG)
    assert p.leading_edge == "10"
    with pytest.raises(ValueError):
        PartialPuzzle.from_labels(2, "lead lead ne", ["0", "0", "1"])
    with pytest.raises(ValueError):
        PartialPuzzle.from_labels(2, "nw", ["0"])


def test_stage_shapes():
    for n in range(1, 7):
        shapes = [stage_cells(n, s) for s in range(stage_count(n))]
        assert len(shapes) == n * (n - 1) // 2 + 1
        assert shapes[-1] == {(k, r, c) for r in range(1, n + 1) for c in range(1, r + 1)
                              for k in ("U", "D") if k == "U" or c < r}
        assert all(a < b for a, b in zip(shapes, shapes[1:]))
    with pytest.raises(ValueError):
        stage_cells(3, 4)


def test_basic_traces():
    fs = enumerate_fillings(4, "0101", "0101", pieces_for("h"))
    ends = sorted(trace_filling(f)[-1][1:] for f in fs)
    assert ends == [("0110", "0110"), ("1001", "1001")]
    for f in fs:
        t = trace_filling(f)
        assert len(t) == 7
        assert t[0][1:] == ("0101", "0101")


def test_single_cell():
    (f,) = enumerate_fillings(1, "1", "1", pieces_for("h"))
    assert trace_filling(f) == [(0, "1", "1")]
    assert trace_tsv(trace_filling(f)) == "0\t1\t1\n"


def test_complete_puzzle_reads_gamma():
    for f in enumerate_fillings(5, "01010", "00101", pieces_for("h")):
        p = truncate(f, stage_count(5) - 1)
        assert read(p) == (f.gamma, f.gamma)


def test_cohomology_children_have_multiplicity_one():
    h = pieces_for("h")
    fs = []
    for n in range(1, 6):
        for k in range(n + 1):
            for a, b in itertools.product(grassmannian_strings(k, n), repeat=2):
                fs.extend(enumerate_fillings(n, a, b, h))
    assert check_stage_graph(fs) == []


def test_kt_gashed_reading():
    # the gashed puzzle of s_010^2 after one stage: the gash turns beta's middle 1 into 0
    fs = enumerate_fillings(3, "010", "010", pieces_for("kt"))
    gashed = [f for f in fs if any(t.gash for row in f.rows for t in row)]
    assert len(gashed) == 1
    assert trace_filling(gashed[0], "kt")[1] == (1, "010", "100")


def test_unknown_labels_raise():
    p = PartialPuzzle.from_labels(2, "nw lead ne ne", ["0", "Ka", "1", "1"])
    with pytest.raises(ReadingRuleError):
        read(p)
    p = PartialPuzzle.from_labels(3, "nw h lead ne ne", ["0", "1", "2(10)", "0", "1"])
    with pytest.raises(ReadingRuleError):
        read(p, "h")


def test_random_fillings_end_diagonal():
    rng = random.Random(7)
    theories = {"h": None, "ht": None, "kt": None, "k-alt": None, "h2": 2, "ht2": 2, "h3": 3}
    for theory, r in theories.items():
        pieces = pieces_for(theory)
        for _ in range(40):
            n = rng.randint(max(2, (r or 1) + 1), 6 if theory not in ("h3", "ht2") else 5)
            if r is None:
                cl = grassmannian_strings(rng.randint(0, n), n)
            else:
                cl = flag_strings(tuple(sorted(rng.sample(range(1, n), r))), n)
            a, b = rng.choice(cl), rng.choice(cl)
            for f in enumerate_fillings(n, a, b, pieces)[:5]:
                t = trace_filling(f)
                assert t[0][1:] == (a, b)
                assert t[-1][1:] == (f.gamma, f.gamma)
