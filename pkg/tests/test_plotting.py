import os

import pytest

from lrpuzzles.engine import enumerate_fillings
from lrpuzzles.mondrian import init_product
from lrpuzzles.parallel import pmap, workers
from lrpuzzles.pieces import pieces_for
from lrpuzzles.plotting import filling_svg, mondrian_svg, mondrian_tree_svgs, partial_svg
from lrpuzzles.trace import truncate


def test_filling_svg_is_deterministic():
    f = enumerate_fillings(4, "0101", "0101", pieces_for("h"))[0]
    a, b = filling_svg(f), filling_svg(f)
    assert a == b
    assert a.startswith("<?xml") and "<dc:date>" not in a


def test_distinct_fillings_draw_differently():
    fs = enumerate_fillings(4, "0101", "0101", pieces_for("h"))
    assert filling_svg(fs[0]) != filling_svg(fs[1])


def test_partial_and_mondrian_svgs():
    f = enumerate_fillings(5, "01001", "01001", pieces_for("h"))[0]
    assert partial_svg(truncate(f, 4)) == partial_svg(truncate(f, 4))
    t = init_product((2, 1), (2, 1), 3, 6)
    assert mondrian_svg(t) == mondrian_svg(t)


def test_mondrian_tree_files(tmp_path):
    paths = mondrian_tree_svgs((2, 1), (2, 1), 3, 6, tmp_path)
    assert paths
    assert all(os.path.basename(p).startswith("2-1_2-1_") for p in paths)
    assert sorted(os.listdir(tmp_path)) == sorted(os.path.basename(p) for p in paths)


def test_workers(monkeypatch):
    monkeypatch.setenv("LRPUZZLES_THREADS", "3")
    assert workers() == 3
    assert pmap(lambda x: x * x, range(10)) == [x * x for x in range(10)]
    monkeypatch.setenv("LRPUZZLES_THREADS", "0")
    with pytest.raises(ValueError):
        workers()
    monkeypatch.setenv("LRPUZZLES_THREADS", "many")
    with pytest.raises(ValueError):
        workers()
    monkeypatch.delenv("LRPUZZLES_THREADS")
    assert workers() >= 1
