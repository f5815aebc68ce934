"""Puzzle filling on the size-n triangular grid.

Rows are numbered 1..n from the apex.  Row r holds up-triangles U(r,1..r)
and down-triangles D(r,1..r-1), interleaved as U D U D ... U.  Shared edges:

* D(r,c).top   = U(r-1,c).bottom   (horizontal)
* D(r,c).left  = U(r,c).right      ("\\")
* D(r,c).right = U(r,c+1).left     ("/")

alpha is read up the NW side from the SW corner, so alpha_p sits on the left
edge of U(n+1-p,1); beta is read down the NE side, so beta_p is the right
edge of U(p,p); gamma is the row of bottom edges of U(n,1..n).

Every piece is stored as one or more oriented unit tiles.  Composite pieces
(rhombi, the size-two K piece) are split into tiles glued by private labels
that occur nowhere else, which makes the split exact.  The equivariant
K-theory pieces have gashes: edges whose two sides disagree.  Inside a row
this is handled by the tile labels themselves (they record what the
neighbour sees); a gash that dangles into the next row is carried to it as a
mark in the transfer state.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field

from .rings import Poly, eq_weight_ht, eq_weight_kt, format_coeff

__all__ = ["Tile", "Piece", "PieceSet", "Filling", "PuzzleInputError", "enumerate_fillings",
           "expand_product", "coefficient", "count_fillings", "render", "row_major_cells"]


class PuzzleInputError(ValueError):
    pass


@dataclass(frozen=True)
class Tile:
    """One oriented unit triangle.

    ``labels`` runs clockwise: (left, right, bottom) for an up tile and
    (top, right, left) for a down tile.  They are the labels the neighbouring
    cell sees; ``inner`` differs only across a gash.
    """

    up: bool
    labels: tuple
    piece: str
    coeff: int = 1
    eq: bool = False
    predicate: str | None = None
    gash: str | None = None
    inner: tuple | None = None

    @property
    def left(self):
        return self.labels[0] if self.up else self.labels[2]

    @property
    def right(self):
        return self.labels[1]

    @property
    def bottom(self):
        if not self.up:
            raise AttributeError("down tiles have no bottom edge")
        return self.labels[2]

    @property
    def top(self):
        if self.up:
            raise AttributeError("up tiles have no top edge")
        return self.labels[0]


@dataclass(frozen=True)
class Piece:
    name: str
    shape: str  # single-up | single-down | free-triangle | vertical-rhombus | horizontal-rhombus | k-triangle | gashed
    tiles: tuple
    coeff: int = 1
    rotation: str = "fixed"
    predicate: str | None = None
    eqvar: bool = False

    def as_json(self):
        return {
            "name": self.name,
            "shape": self.shape,
            "rotation": self.rotation,
            "coefficient": "EQVAR(i,j)" if self.eqvar else self.coeff,
            "predicate": self.predicate,
            "tiles": [
                {"orientation": "up" if t.up else "down",
                 "edges": dict(zip(("left", "right", "bottom") if t.up else ("top", "right", "left"), t.labels)),
                 **({"inner": dict(zip(("left", "right", "bottom") if t.up else ("top", "right", "left"), t.inner))}
                    if t.inner else {}),
                 **({"gash": t.gash} if t.gash else {})}
                for t in self.tiles
            ],
        }


@dataclass(frozen=True)
class RowFill:
    bottoms: tuple
    tiles: tuple
    marks: tuple


class PieceSet:
    """Catalog of pieces for one theory.

    ``ring`` is ``"int"``, ``"ht"`` (polynomials in y) or ``"kt"`` (Laurent
    polynomials in t).
    """

    def __init__(self, name, pieces, boundary, ring="int", steps=1):
        self.name = name
        self.pieces = tuple(pieces)
        self.boundary = tuple(boundary)
        self.ring = ring
        self.steps = steps
        self.tiles = tuple(t for p in self.pieces for t in p.tiles)
        labels = []
        for t in self.tiles:
            for lab in t.labels + (t.inner or ()):
                if lab not in labels:
                    labels.append(lab)
        self.alphabet = tuple(labels)
        self._up_by_left = defaultdict(list)
        self._down_by_top_left = defaultdict(list)
        for t in self.tiles:
            if t.up:
                self._up_by_left[t.left].append(t)
            else:
                self._down_by_top_left[(t.top, t.left)].append(t)
        self._row_cache = {}
        self._weight_cache = {}
        missing = [b for b in self.boundary if b not in self.alphabet]
        if missing:
            raise ValueError(f"boundary labels {missing} appear on no piece")

    def __repr__(self):
        return f"PieceSet({self.name!r}, {len(self.pieces)} pieces, {len(self.tiles)} tiles)"

    def up_tiles(self, left):
        return self._up_by_left.get(left, ())

    def down_tiles(self, top, left):
        return self._down_by_top_left.get((top, left), ())

    def to_json(self):
        return json.dumps({"name": self.name, "ring": self.ring, "boundary": list(self.boundary),
                           "alphabet": list(self.alphabet),
                           "pieces": [p.as_json() for p in self.pieces]}, indent=2)

    def one(self):
        return 1 if self.ring == "int" else Poly.const("y" if self.ring == "ht" else "t", 1)

    def zero(self):
        return 0 if self.ring == "int" else Poly("y" if self.ring == "ht" else "t")

    def eq_weight(self, n, r, c):
        i, j = c, n - r + c
        if self.ring == "ht":
            return eq_weight_ht(i, j)
        if self.ring == "kt":
            return eq_weight_kt(i, j)
        raise ValueError(f"piece set {self.name} has no equivariant ring")

    # -- row transfer --------------------------------------------------

    def fill_row(self, r, tops, marks, a, b):
        """All ways to fill row r given the labels above it and the two
        boundary labels, as RowFill records in catalog order."""
        key = (r, tops, marks, a, b)
        hit = self._row_cache.get(key)
        if hit is not None:
            return hit
        out = []
        se = {pos for kind, pos in marks if kind == "se"}
        sw = {pos for kind, pos in marks if kind == "sw"}
        bottoms, tiles, new_marks = [], [], []

        def up(c, x):
            for t in self.up_tiles(x):
                if c == r and t.right != b:
                    continue
                bottoms.append(t.bottom)
                tiles.append(t)
                if c == r:
                    out.append(RowFill(tuple(bottoms), tuple(tiles), tuple(sorted(new_marks))))
                else:
                    y = t.right
                    if c in se:
                        if y != "0":
                            bottoms.pop()
                            tiles.pop()
                            continue
                        y = "1"
                    down(c, y)
                bottoms.pop()
                tiles.pop()

        def down(c, x):
            for t in self.down_tiles(tops[c - 1], x):
                if t.predicate and not self._predicate(t.predicate, tiles, tops, c, b):
                    continue
                added = None
                if t.gash:
                    added = ("sw", c) if t.gash == "sw" else ("se", c + 1)
                    new_marks.append(added)
                tiles.append(t)
                y = t.right
                ok = True
                if c in sw:
                    ok = y == "0"
                    y = "1"
                if ok:
                    up(c + 1, y)
                tiles.pop()
                if added:
                    new_marks.pop()

        up(1, a)
        out = tuple(out)
        self._row_cache[key] = out
        return out

    @staticmethod
    def _predicate(name, tiles, tops, c, b):
        if name == "after_eq":
            return tiles[-1].eq
        if name == "zeros_then_one":
            for lab in tuple(tops[c:]) + (b,):
                if lab != "0":
                    return lab == "1"
            return False
        raise ValueError(f"unknown predicate {name}")

    def row_weight(self, n, r, fill):
        key = (n, r, fill.tiles)
        w = self._weight_cache.get(key)
        if w is None:
            w = self.one()
            for idx, t in enumerate(fill.tiles):
                if t.coeff != 1:
                    w = w * t.coeff
                if t.eq:
                    w = w * self.eq_weight(n, r, idx // 2 + 1)
            self._weight_cache[key] = w
        return w


@dataclass(frozen=True)
class Filling:
    n: int
    alpha: str
    beta: str
    gamma: str
    rows: tuple  # rows[r-1] = (U(r,1), D(r,1), ..., U(r,r))
    coefficient: object = field(compare=False)
    pieces: str = field(default="", compare=False)

    def up(self, r, c):
        return self.rows[r - 1][2 * (c - 1)]

    def down(self, r, c):
        return self.rows[r - 1][2 * (c - 1) + 1]

    def cell(self, kind, r, c):
        return self.up(r, c) if kind == "U" else self.down(r, c)

    def equivariant_rhombi(self):
        return [(r, c) for r in range(1, self.n + 1) for c in range(1, r + 1) if self.up(r, c).eq]

    def count_tiles(self, piece):
        return sum(1 for row in self.rows for t in row if t.piece == piece)

    def signature(self):
        return tuple(t.labels for row in self.rows for t in row)


def row_major_cells(n):
    for r in range(1, n + 1):
        for c in range(1, r + 1):
            yield ("U", r, c)
            if c < r:
                yield ("D", r, c)


def _check(alpha, beta, pieces):
    if len(alpha) != len(beta):
        raise PuzzleInputError(f"alpha and beta have different lengths ({len(alpha)} vs {len(beta)})")
    if not alpha:
        raise PuzzleInputError("empty boundary")
    for s in (alpha, beta):
        bad = [ch for ch in s if ch not in pieces.boundary]
        if bad:
            raise PuzzleInputError(f"labels {bad} of {s!r} are not in the boundary alphabet {pieces.boundary}")


def _boundary(alpha, beta, r):
    n = len(alpha)
    return alpha[n - r], beta[r - 1]


def enumerate_fillings(n, alpha, beta, pieces, gamma_filter=None):
    """All fillings with the given NW and NE boundary, in row-major catalog order."""
    if len(alpha) != n:
        raise PuzzleInputError(f"alpha has length {len(alpha)}, expected {n}")
    _check(alpha, beta, pieces)
    if gamma_filter is not None and len(gamma_filter) != n:
        raise PuzzleInputError(f"gamma has length {len(gamma_filter)}, expected {n}")
    out = []
    rows = []

    def rec(r, tops, marks, coef):
        if r > n:
            if marks or any(lab not in pieces.boundary for lab in tops):
                return
            gamma = "".join(tops)
            if gamma_filter is None or gamma == gamma_filter:
                out.append(Filling(n, alpha, beta, gamma, tuple(rows), coef, pieces.name))
            return
        a, b = _boundary(alpha, beta, r)
        for fill in pieces.fill_row(r, tops, marks, a, b):
            rows.append(fill.tiles)
            rec(r + 1, fill.bottoms, fill.marks, coef * pieces.row_weight(n, r, fill))
            rows.pop()

    rec(1, (), (), pieces.one())
    return out


def expand_product(alpha, beta, pieces):
    """gamma -> sum of filling coefficients, zero entries dropped.

    Uses the row transfer directly rather than listing fillings.
    """
    _check(alpha, beta, pieces)
    n = len(alpha)
    states = {((), ()): pieces.one()}
    for r in range(1, n + 1):
        a, b = _boundary(alpha, beta, r)
        nxt = {}
        for (tops, marks), coef in states.items():
            for fill in pieces.fill_row(r, tops, marks, a, b):
                key = (fill.bottoms, fill.marks)
                w = coef * pieces.row_weight(n, r, fill)
                nxt[key] = nxt[key] + w if key in nxt else w
        states = nxt
    out = {}
    for (bottoms, marks), coef in states.items():
        if marks or not coef or any(lab not in pieces.boundary for lab in bottoms):
            continue
        out["".join(bottoms)] = coef
    return dict(sorted(out.items()))


def coefficient(alpha, beta, gamma, pieces):
    if len(gamma) != len(alpha):
        raise PuzzleInputError("gamma has the wrong length")
    return expand_product(alpha, beta, pieces).get(gamma, pieces.zero())


def count_fillings(alpha, beta, pieces, gamma=None):
    return len(enumerate_fillings(len(alpha), alpha, beta, pieces, gamma))


def render(f, fmt="ascii"):
    if fmt == "ascii":
        return _ascii(f)
    if fmt == "svg":
        from .plotting import filling_svg
        return filling_svg(f)
    raise ValueError(f"unknown format {fmt!r}")


def _ascii(f):
    """One text line per cell row; '/' '\\' '_' mark the edge directions."""
    n = f.n
    width = max(len(lab) for row in f.rows for t in row for lab in t.labels)
    lines = [f"alpha={f.alpha} beta={f.beta} gamma={f.gamma} coeff={format_coeff(f.coefficient)}"]
    for r in range(1, n + 1):
        cells = []
        for c in range(1, r + 1):
            u = f.up(r, c)
            cells.append(f"/{u.left:>{width}}^{u.right:<{width}}\\_{u.bottom}_")
            if c < r:
                d = f.down(r, c)
                mark = "#" if d.predicate else ""
                cells.append(f"v{d.top}{mark}")
        lines.append(" " * (n - r) * (width + 2) + " ".join(cells))
    return "\n".join(lines) + "\n"
