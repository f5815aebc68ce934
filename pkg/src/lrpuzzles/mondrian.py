"""The Grassmannian Mondrian tableau game.

Every square is centred on the anti-diagonal, so it is stored as the
interval of anti-diagonal cells it covers.  Coordinates are local to the
outer square, which always occupies ``[1, m]``; deleting rows and columns
renumbers the survivors.  "Anti-diagonally up by one unit" is a shift by +1.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, replace
from math import comb

from .core import FlagString, SchubertIndex

__all__ = ["Square", "MondrianTableau", "MondrianError", "EMPTY", "init_product", "step", "play",
           "play_tree", "trace_lines", "check_admissible", "quantum_tableau", "to_partition"]


class MondrianError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Square:
    lo: int
    hi: int

    def __post_init__(self):
        if not 1 <= self.lo <= self.hi:
            raise MondrianError(f"bad square [{self.lo},{self.hi}]")

    @property
    def side(self):
        return self.hi - self.lo + 1

    def contains(self, other):
        return self.lo <= other.lo and other.hi <= self.hi

    def meets(self, other):
        return max(self.lo, other.lo) <= min(self.hi, other.hi)

    def touches(self, other):
        """Adjacent along the diagonal or overlapping (a shared square or corner)."""
        return max(self.lo, other.lo) <= min(self.hi, other.hi) + 1

    def shift(self, s):
        return Square(self.lo + s, self.hi + s)

    def __str__(self):
        return f"[{self.lo},{self.hi}]"


def _span(*squares):
    return Square(min(s.lo for s in squares), max(s.hi for s in squares))


def _meet(a, b):
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    return Square(lo, hi) if lo <= hi else None


@dataclass(frozen=True)
class MondrianTableau:
    """An admissible tableau.

    ``a`` maps i..k-1 to the A squares below the outer square and ``b``
    maps 1..k-i to the B squares; A_k = B_k is the outer square ``[1, m]``.
    ``d`` lists D_1, ..., D_{i-1}.
    """

    k: int
    n: int
    m: int
    a: tuple  # ((index, Square), ...) ascending
    b: tuple
    d: tuple = ()

    @property
    def i(self):
        return len(self.d) + 1

    @property
    def outer(self):
        return Square(1, self.m)

    def A(self, j):
        return self.outer if j == self.k else dict(self.a)[j]

    def B(self, j):
        return self.outer if j == self.k else dict(self.b)[j]

    def unnested(self):
        """Index j of the unnested D square, or None."""
        for j in range(2, len(self.d) + 1):
            if not all(self.d[j - 1].contains(self.d[h - 1]) for h in range(1, j)):
                return j
        return None

    @property
    def terminal(self):
        return not self.a and not self.b and self.unnested() is None

    def squares(self):
        """Labelled squares, outer first."""
        out = [("O", self.outer)]
        out += [(f"A{j}", s) for j, s in self.a]
        out += [(f"B{j}", s) for j, s in self.b]
        out += [(f"D{j}", s) for j, s in enumerate(self.d, start=1)]
        return out

    def __str__(self):
        return " ".join(f"{name}:{sq}" for name, sq in self.squares())


EMPTY = None


def to_partition(t):
    """Partition of a terminal tableau: lambda_j = n-k+j - side(D_j), lambda_k = n-m."""
    if not t.terminal:
        raise MondrianError("tableau is not terminal")
    sides = [s.side for s in t.d] + [t.m]
    return tuple(t.n - t.k + j - s for j, s in enumerate(sides, start=1))


# -- compressing the ambient space ---------------------------------------------

def _restrict(t, keep):
    """Intersect every square with the cells in ``keep`` and renumber."""
    keep = sorted(keep)
    pos = {c: idx for idx, c in enumerate(keep, start=1)}

    def cut(sq):
        cells = [pos[c] for c in range(sq.lo, sq.hi + 1) if c in pos]
        if not cells:
            raise MondrianError(f"square {sq} vanished")
        return Square(cells[0], cells[-1])

    return replace(t, m=len(keep), a=tuple((j, cut(s)) for j, s in t.a),
                   b=tuple((j, cut(s)) for j, s in t.b), d=tuple(cut(s) for s in t.d))


def _apply_span_rule(t):
    while True:
        for j, sa in t.a:
            jb = t.k - j
            if jb < 1:
                continue
            sb = t.B(jb)
            if sa.hi + 1 < sb.lo:
                t = _restrict(t, set(range(1, sa.hi + 1)) | set(range(sb.lo, t.m + 1)))
                break
        else:
            return t


def init_product(lam, mu, k, n):
    """Initial tableau after the MM, OS and S rules, or EMPTY."""
    lam, mu = SchubertIndex(k, n, lam).lam, SchubertIndex(k, n, mu).lam
    if k == 0:
        raise MondrianError("G(0,n) is a point; there is nothing to play")
    A = [Square(1, n - k + j - lam[j - 1]) for j in range(1, k + 1)]
    B = [Square(k - j + 1 + mu[j - 1], n) for j in range(1, k + 1)]
    if any(not A[j - 1].meets(B[k - j]) for j in range(1, k + 1)):
        return EMPTY
    outer = _meet(A[-1], B[-1])
    shift = outer.lo - 1

    def local(sq):
        return Square(max(sq.lo, outer.lo) - shift, min(sq.hi, outer.hi) - shift)

    t = MondrianTableau(k, n, outer.side,
                        tuple((j, local(A[j - 1])) for j in range(1, k)),
                        tuple((j, local(B[j - 1])) for j in range(1, k)))
    t = _apply_span_rule(t)
    check_admissible(t)
    return t


# -- admissibility ------------------------------------------------------------

def check_admissible(t):
    """Raise MondrianError unless ``t`` satisfies admissibility (1)-(5)."""
    k, i, outer = t.k, t.i, t.outer

    def fail(msg):
        raise MondrianError(f"{msg}: {t}")

    if t.m > t.n:
        fail("outer square larger than n")
    a = [s for _, s in t.a] + [outer]
    b = [s for _, s in t.b] + [outer]
    if [j for j, _ in t.a] != list(range(i, k)):
        fail("A squares are not A_i..A_{k-1}")
    if [j for j, _ in t.b] != list(range(1, k - i + 1)):
        fail("B squares are not B_1..B_{k-i}")
    for sq in a + b + list(t.d):
        if not outer.contains(sq):
            fail("square outside the outer square")
    if any(s.lo != 1 for s in a) or any(x.hi >= y.hi for x, y in zip(a, a[1:])):
        fail("A squares not nested, distinct and left aligned")
    if any(s.hi != t.m for s in b) or any(x.lo <= y.lo for x, y in zip(b, b[1:])):
        fail("B squares not nested, distinct and right aligned")
    for s in t.d:
        if not (a[0].contains(s) and a[0] != s):
            fail("A squares do not strictly contain the D squares")
    for j in range(i + 1, k + 1):
        if not t.A(j).meets(t.B(k - j + 1)):
            fail("MM rule")
    for j in range(i, k):
        if not t.A(j).touches(t.B(k - j)):
            fail("S rule")
    if t.b and any(t.B(k - i).contains(s) for s in t.d):
        fail("a D square lies in B_{k-i}")
    d = list(t.d)
    if len(set(d)) != len(d):
        fail("D squares not distinct")
    bad = [j for j in range(2, len(d) + 1) if not all(d[j - 1].contains(d[h]) for h in range(j - 1))]
    if len(bad) > 1:
        fail("more than one unnested D square")
    if bad:
        j = bad[0]
        dj = d[j - 1]
        if any(dj.contains(d[h]) for h in range(j - 1)):
            fail("unnested D square contains a smaller one")
        if any(not d[s].contains(dj) for s in range(j, len(d))):
            fail("unnested D square not inside the larger ones")
        others = [h for h in range(len(d)) if h != j - 1]
        if any(not d[s].contains(d[h]) for h in others for s in others if h < s):
            fail("remaining D squares not nested")
        if any(not (d[h].lo < dj.lo and d[h].hi < dj.hi) for h in range(j - 1)):
            fail("lower D squares not southwest of the unnested one")
        if not d[j - 2].touches(dj):
            fail("D_{j-1} and D_j share no square or corner")
    # condition (5), counted among the D squares; for A and B squares the
    # number of contained squares is not the intersection dimension
    for s1 in d:
        for s2 in d:
            span = _span(s1, s2)
            r = sum(1 for s in d if span.contains(s) and not s1.contains(s))
            if s1.side > span.side - r:
                fail(f"span condition for {s1} and {s2}")


# -- the move -----------------------------------------------------------------

def _move_a(t):
    k, i = t.k, t.i
    ai, bi = t.A(i), t.B(k - i)
    moved = ai.shift(1)
    d = tuple(s.shift(1) if s.lo == ai.lo else s for s in t.d)
    out = []

    # Tableau 1: A_i and B_{k-i} collapse to their new intersection D_i
    new_d = _meet(moved, bi)
    if new_d is None:
        raise MondrianError(f"A_{i} does not meet B_{k - i} after the move: {t}")
    d1 = d + (new_d,)
    if k - i - 1 >= 1:
        target = t.B(k - i - 1)
        s = max(0, target.lo - 1 - new_d.hi)
        d1 = tuple(x.shift(s) for x in d1)
    b1 = tuple((j, s) for j, s in t.b if j != k - i)
    a1 = tuple((j, s) for j, s in t.a if j != i)
    out.append(_restrict(replace(t, a=a1, b=b1, d=d1), range(_span(ai, bi).lo, _span(ai, bi).hi + 1)))

    # Tableau 2: restrict to the new span of A_i and B_{k-i}
    nxt = t.A(i + 1)
    if not (nxt.side == ai.side + 1 or bi.side == t.m - i):
        a2 = tuple((j, moved if j == i else s) for j, s in t.a)
        t2 = replace(t, a=a2, d=d)
        out.append(_restrict(t2, range(2, t.m + 1)))
    return out


def _move_d(t, j):
    d = list(t.d)
    act = d[j - 2]
    moved = [s.shift(1) if (h == j - 2 or (s.lo == act.lo and h != j - 1)) else s for h, s in enumerate(d)]
    new_lo, dj = moved[j - 2], moved[j - 1]
    out = []

    # Tableau 1: the new intersection becomes D_{j-1}, the old span D_j
    inter = _meet(new_lo, dj)
    if inter is None:
        raise MondrianError(f"D_{j - 1} does not meet D_{j} after the move: {t}")
    d1 = list(moved)
    d1[j - 2], d1[j - 1] = inter, _span(act, d[j - 1])
    if j >= 3:
        lower = d1[j - 3]
        s = max(0, inter.lo - 1 - lower.hi)
        for h in range(j - 2):
            d1[h] = d1[h].shift(s)
    out.append(replace(t, d=tuple(d1)))

    # Tableau 2: keep the moved squares
    span = _span(new_lo, dj)
    if not (dj.side > span.side - (j - 1) or new_lo.contains(dj)):
        out.append(replace(t, d=tuple(moved)))
    return out


def step(t):
    """One move: the list of one or two child tableaux."""
    if t.terminal:
        raise MondrianError("terminal tableau has no move")
    check_admissible(t)
    j = t.unnested()
    children = _move_a(t) if j is None else _move_d(t, j)
    for c in children:
        check_admissible(c)
    return children


def play_tree(lam, mu, k, n):
    """Yield (depth, tableau) in breadth-first order."""
    t = init_product(lam, mu, k, n)
    if t is EMPTY:
        return
    limit = n * k * comb(n, 2) + 1
    queue = deque([(0, t)])
    while queue:
        depth, t = queue.popleft()
        if depth > limit:
            raise MondrianError("game did not terminate")
        yield depth, t
        if not t.terminal:
            for c in step(t):
                queue.append((depth + 1, c))


def play(lam, mu, k, n):
    """Multiset {partition: count} of terminal tableaux."""
    if k == 0:
        return {(): 1}
    out = Counter(to_partition(t) for _, t in play_tree(lam, mu, k, n) if t.terminal)
    return dict(sorted(out.items(), reverse=True))


def trace_lines(lam, mu, k, n):
    return [f"{depth}\t{t}" + ("\t=> " + ",".join(map(str, to_partition(t))) if t.terminal else "")
            for depth, t in play_tree(lam, mu, k, n)]


# -- quantum classes ----------------------------------------------------------

def quantum_tableau(lam, k, n, d):
    """Class of the degree-d kernel/span locus in Fl(k-d, k+d; n)."""
    if not 0 <= d <= k or k + d > n:
        raise MondrianError(f"degree {d} out of range for G({k},{n})")
    lam = SchubertIndex(k, n, lam).lam
    p = [n - k + j - lam[j - 1] for j in range(1, k + 1)]
    free = [x for x in range(n, 0, -1) if x not in p][:d]
    v2 = set(p) | set(free)
    v1 = set(p[d:])
    digits = "".join("2" if x in v1 else "1" if x in v2 else "0" for x in range(1, n + 1))
    return FlagString(n, (k - d, k + d), digits)
