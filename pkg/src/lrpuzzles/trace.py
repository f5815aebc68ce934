"""Reading (alpha, beta) off partially filled puzzles.

A puzzle is filled in C(n,2)+1 stages, one per step of the degeneration
order (see ``stage_cells``).  The filled region
is bounded below by a path of edges, the frontier.  Walking it from the
southwest corner to the southeast corner one meets

* NW boundary edges (alpha only),
* horizontal bottoms of filled up-triangles (both strings),
* at most one SW/NE internal edge, the leading edge (alpha only),
* NE boundary edges (beta only).

so alpha and beta each get n letters.  Composite labels are read through
their top-level split ``ab``: the "/" side ``a`` goes to alpha and the
"\\" side ``b`` goes to beta, with the side effects listed in
``_slash_rule`` and ``_backslash_rule``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass

from .engine import PieceSet, enumerate_fillings
from .pieces import TWO_STEP_LABELS, pieces_for, split_label

__all__ = ["ReadingRuleError", "Edge", "PartialPuzzle", "stage_cells", "stage_count", "truncate",
           "read_alpha", "read_beta", "read", "trace_filling", "trace_tsv", "check_stage_graph", "children_multiplicity"]


class ReadingRuleError(ValueError):
    """No reading rule covers a label (or a modification finds no target)."""


@dataclass(frozen=True)
class Edge:
    kind: str  # nw | h | lead | ne
    label: str
    cell: tuple | None = None  # filled cell owning the edge, for drawing


@dataclass(frozen=True)
class PartialPuzzle:
    n: int
    stage: int
    frontier: tuple
    gashes: tuple = ()  # ("sw", alpha position) | ("se", first beta position)
    cells: tuple = ()  # ((kind, r, c), tile) for every filled cell
    theory: str | None = None

    def __post_init__(self):
        a = sum(1 for e in self.frontier if e.kind != "ne")
        b = sum(1 for e in self.frontier if e.kind in ("h", "ne"))
        if a != self.n or b != self.n:
            raise ValueError(f"frontier gives {a} alpha and {b} beta letters, expected {self.n}")
        if sum(1 for e in self.frontier if e.kind == "lead") > 1:
            raise ValueError("more than one leading edge")

    @property
    def leading_edge(self):
        return next((e.label for e in self.frontier if e.kind == "lead"), None)

    @classmethod
    def from_labels(cls, n, kinds, labels, stage=None, gashes=(), theory=None):
        """Build a frontier by hand (kinds like "nw h lead h h ne ne")."""
        if isinstance(kinds, str):
            kinds = kinds.split()
        if len(kinds) != len(labels):
            raise ValueError("kinds and labels differ in length")
        return cls(n, -1 if stage is None else stage, tuple(Edge(k, lab) for k, lab in zip(kinds, labels)),
                   tuple(gashes), (), theory)


def stage_count(n):
    return n * (n - 1) // 2 + 1


def stage_cells(n, stage):
    """Filled cells after ``stage``, as a set of (kind, r, c).

    Stage 0 is empty (for n = 1 it is the whole puzzle).  The stage for
    the pair (r, c) adds U(r,c) and D(r,c); when c = 1 it also closes row
    r-1 with U(r-1,r-1), and the last stage closes row n with U(n,n).
    """
    if not 0 <= stage < stage_count(n):
        raise ValueError(f"stage {stage} out of range for n={n}")
    if n == 1:
        return {("U", 1, 1)}
    cells = set()
    left = stage
    for r in range(2, n + 1):
        for c in range(1, r):
            if not left:
                return cells
            left -= 1
            if c == 1:
                cells.add(("U", r - 1, r - 1))
            cells.add(("U", r, c))
            cells.add(("D", r, c))
    cells.add(("U", n, n))
    return cells


def _frontier(n, filled):
    """Where each alpha and beta letter is read, walking each lane from the
    boundary through filled cells."""
    alpha, beta = [None] * n, [None] * n
    for p in range(1, n + 1):
        r, c = n + 1 - p, 1
        if ("U", r, c) not in filled:
            alpha[p - 1] = ("nw", p)
            continue
        while True:
            if r == n or ("D", r + 1, c) not in filled:
                alpha[p - 1] = ("h", (r, c))
                break
            if ("U", r + 1, c + 1) not in filled:
                alpha[p - 1] = ("lead", (r + 1, c))
                break
            r, c = r + 1, c + 1
    for p in range(1, n + 1):
        r, c = p, p
        if ("U", r, c) not in filled:
            beta[p - 1] = ("ne", p)
            continue
        while r < n and ("D", r + 1, c) in filled:
            r += 1
        beta[p - 1] = ("h", (r, c))
    return alpha, beta


def truncate(f, stage):
    """The partial puzzle of filling ``f`` after ``stage``."""
    n = f.n
    filled = stage_cells(n, stage)
    apos, bpos = _frontier(n, filled)
    edges = []
    # NW edges bottom-up, then the interior edges in alpha order, then NE top-down
    for kind, where in apos:
        if kind == "nw":
            edges.append(Edge("nw", f.alpha[where - 1]))
        elif kind == "h":
            r, c = where
            edges.append(Edge("h", f.up(r, c).bottom, ("U", r, c)))
        else:
            r, c = where
            # labels are read from the unfilled side; a first K_T piece just
            # above leaves a gash here that shows 1 to the south-east
            label = f.down(r, c).right
            if r > 1 and c < r - 1 and f.down(r - 1, c).gash == "sw":
                label = "1"
            edges.append(Edge("lead", label, ("D", r, c)))
    for kind, where in bpos:
        if kind == "ne":
            edges.append(Edge("ne", f.beta[where - 1]))
    # horizontal edges must appear in the same order for both strings
    h_alpha = [w for k, w in apos if k == "h"]
    h_beta = [w for k, w in bpos if k == "h"]
    if h_alpha != h_beta:
        raise AssertionError(f"frontier orders disagree at stage {stage}: {h_alpha} vs {h_beta}")
    gashes = []
    for (kind, r, c) in sorted(filled):
        if kind != "D":
            continue
        t = f.down(r, c)
        if t.gash == "sw" and ("D", r + 1, c) not in filled:
            gashes.append(("sw", c + n - r))
        elif t.gash == "se" and ("U", r + 1, c + 1) not in filled:
            gashes.append(("se", c + 1))
    cells = tuple((cell, f.cell(*cell)) for cell in sorted(filled, key=lambda x: (x[1], x[2], x[0] == "D")))
    return PartialPuzzle(n, stage, tuple(edges), tuple(sorted(gashes)), cells, f.pieces or None)


# -- reading rules -----------------------------------------------------------

# composite labels each theory knows how to read; digits are always readable
_READABLE = {
    "h": {"10"},
    "k-original": {"10"},
    "k-alternate": {"10", "10K"},
    "ht": {"10", "01"},
    "kt": {"10", "01"},
    "h2": set(TWO_STEP_LABELS[3:]),
    "ht2": set(),
    "h3": set(),
}
_ALIASES = {"k": "k-original", "k-alt": "k-alternate"}


def _theory_name(theory):
    if theory is None:
        return None
    if isinstance(theory, PieceSet):
        theory = theory.name
    theory = _ALIASES.get(theory, theory)
    if theory not in _READABLE:
        raise ValueError(f"unknown theory {theory!r}")
    return theory


def _check_label(label, theory):
    if len(label) == 1 and label.isdigit():
        return
    allowed = set().union(*_READABLE.values()) if theory is None else _READABLE[theory]
    if label not in allowed:
        who = "any theory" if theory is None else f"theory {theory}"
        raise ReadingRuleError(f"no reading rule for edge label {label!r} in {who}")


def _slash_rule(a):
    """Alpha letter of a SW/NE edge labelled ``a``, the changes it makes to
    the following letters of beta, and the change (if any) it makes to the
    nearest earlier matching letter of alpha."""
    if len(a) == 1:
        return a, [], None
    if a == "10K":
        return "0", [("1", "0")], None
    if a == "2(10)":
        return "1", [("2", "1"), ("1", "0")], None
    if a == "(21)0":
        # counting only 0 here would drop a 1 from alpha; the 2 that sits in
        # its place to the south-west is read back as that 1
        return "0", [("2", "0")], ("2", "1")
    if len(a) == 2 and a[0] > a[1]:
        return a[1], [(a[0], a[1])], None
    raise ReadingRuleError(f"no reading rule for SW/NE edge {a!r}")


def _backslash_rule(b):
    """Beta letter of a NW/SE edge and the change of the nearest earlier alpha letter."""
    if len(b) == 1:
        return b, None
    if len(b) == 2 and b[0] > b[1]:
        return b[0], (b[1], b[0])
    raise ReadingRuleError(f"no reading rule for NW/SE edge {b!r}")


def _next(s, start, old, new):
    for q in range(start, len(s)):
        if s[q] == old:
            s[q] = new
            return
    raise ReadingRuleError(f"no {old} at or after beta position {start + 1} to turn into {new}")


def _earlier(s, pos, old, new):
    for q in range(pos - 1, -1, -1):
        if s[q] == old:
            s[q] = new
            return
    raise ReadingRuleError(f"no {old} before alpha position {pos + 1} to turn into {new}")


def _read(p, theory=None, want_alpha=True, want_beta=True):
    theory = _theory_name(theory if theory is not None else p.theory)
    n = p.n
    alpha, beta = [], []
    beta_mods = []  # (first position, [(from, to), ...])
    alpha_mods = []  # (position, from, to) on the nearest earlier letter
    swaps = []
    for e in p.frontier:
        if e.kind == "nw":
            alpha.append(e.label)
        elif e.kind == "ne":
            beta.append(e.label)
        elif e.kind == "lead":
            _check_label(e.label, theory)
            letter, mods, change = _slash_rule(e.label)
            if e.label == "10K":
                swaps.append(len(alpha))
            if change:
                alpha_mods.append((len(alpha), *change))
            alpha.append(letter)
            if mods:
                beta_mods.append((len(beta), mods))
        else:
            _check_label(e.label, theory)
            parts = split_label(e.label)
            a, b = (e.label, e.label) if parts is None else parts
            letter, mods, change = _slash_rule(a)
            if change:
                alpha_mods.append((len(alpha), *change))
            if mods:
                beta_mods.append((len(beta) + 1, mods))
            bl, change = _backslash_rule(b)
            if change:
                alpha_mods.append((len(alpha), *change))
            alpha.append(letter)
            beta.append(bl)
    for kind, pos in p.gashes:
        if kind == "se":
            beta_mods.append((pos - 1, [("1", "0")]))
    if want_beta:
        for start, mods in sorted(beta_mods, key=lambda m: m[0]):
            for old, new in mods:
                _next(beta, start, old, new)
    if not want_alpha:
        return None, "".join(beta)
    for kind, pos in p.gashes:
        if kind == "sw":
            if alpha[pos - 1] != "0":
                raise ReadingRuleError(f"gash expects 0 at alpha position {pos}, found {alpha[pos - 1]}")
            alpha[pos - 1] = "1"
    for pos, old, new in sorted(alpha_mods):
        _earlier(alpha, pos, old, new)
    for pos in swaps:
        q = next((q for q in range(pos + 1, n) if alpha[q] == "1"), None)
        if q is None:
            raise ReadingRuleError("no 1 after a 10K leading edge")
        alpha[q - 1], alpha[q] = alpha[q], alpha[q - 1]
    return "".join(alpha), ("".join(beta) if want_beta else None)


def read(p, theory=None):
    """(alpha, beta) of a partial puzzle.  ``theory`` defaults to the one
    recorded on ``p``; with neither, every known rule is allowed."""
    return _read(p, theory)


def read_alpha(p, theory=None):
    return _read(p, theory, want_beta=False)[0]


def read_beta(p, theory=None):
    return _read(p, theory, want_alpha=False)[1]


def trace_filling(f, theory=None, strict=False):
    """[(stage, alpha, beta)] for every stage; None where no rule applies
    (or raise, with ``strict``)."""
    out = []
    for stage in range(stage_count(f.n)):
        try:
            a, b = read(truncate(f, stage), theory)
        except ReadingRuleError:
            if strict:
                raise
            a = b = None
        out.append((stage, a, b))
    return out


def trace_tsv(entries):
    return "".join(f"{i}\t{a or '-'}\t{b or '-'}\n" for i, a, b in entries)


def check_stage_graph(fillings):
    """Consistency of the readings over a collection of fillings.

    Each partial puzzle (the filled cells together with the boundary) has
    one reading.  Two things are checked: distinct partial puzzles that
    extend the same parent read differently ("duplicate-child"), and the
    set of child readings depends only on the parent's (stage, alpha, beta)
    ("reading-not-determined").  Returns a list of violations.
    """
    kids = defaultdict(set)
    reading = {}
    for f in fillings:
        keys = []
        for s in range(stage_count(f.n)):
            p = truncate(f, s)
            key = (s, f.alpha, f.beta, tuple(t for _, t in p.cells))
            if key not in reading:
                reading[key] = read(p)
            keys.append(key)
        for parent, child in zip(keys, keys[1:]):
            kids[parent].add(child)
    bad = []
    by_reading = defaultdict(set)
    for parent, children in sorted(kids.items(), key=lambda kv: kv[0][:3]):
        readings = Counter(reading[k] for k in children)
        dup = sorted(r for r, m in readings.items() if m > 1)
        if dup:
            bad.append(("duplicate-child", parent[0], reading[parent], dup))
        by_reading[(parent[0], reading[parent])].add(frozenset(readings))
    for (s, rd), sets in sorted(by_reading.items()):
        if len(sets) > 1:
            bad.append(("reading-not-determined", s, rd, sorted(sorted(x) for x in sets)))
    return bad


def children_multiplicity(alpha, beta, pieces):
    """check_stage_graph over the fillings with boundary (alpha, beta)."""
    if isinstance(pieces, str):
        pieces = pieces_for(pieces)
    return check_stage_graph(enumerate_fillings(len(alpha), alpha, beta, pieces))
