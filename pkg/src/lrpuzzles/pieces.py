"""Piece catalogs for each theory, and the binary-tree label grammar."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .engine import Piece, PieceSet, Tile

__all__ = ["pieces_cohomology_1step", "pieces_ktheory", "pieces_equivariant_1step",
           "pieces_equivariant_K_1step", "pieces_twostep", "pieces_threestep",
           "pieces_equivariant_twostep", "valid_labels", "grammar_labels", "split_label",
           "is_valid_label", "pieces_for", "orientation_self_test", "THEORIES", "TWO_STEP_LABELS", "THREE_STEP_LABELS"]

TWO_STEP_LABELS = ("0", "1", "2", "10", "20", "21", "2(10)", "(21)0")

THREE_STEP_LABELS = (
    "0", "1", "2", "3", "10", "20", "30", "21", "31", "32", "(21)0", "(31)0", "(32)0", "(32)1",
    "2(10)", "3(10)", "3(20)", "3(21)", "((32)1)0", "3((21)0)", "(3(21))0", "3(2(10))", "(32)(10)",
)

# (left, right, bottom) of the four extra three-step pieces
THREE_STEP_EXTRA = (
    ("3(2(10))", "0", "(3(2(10)))0"),
    ("3(21)", "10", "(3(21))(10)"),
    ("32", "(21)0", "(32)((21)0)"),
    ("3", "((32)1)0", "3(((32)1)0)"),
)

EQUIVARIANT_TWO_STEP = (("0", "1"), ("0", "2"), ("1", "2"), ("10", "2"), ("0", "21"), ("10", "21"))


# -- labels ------------------------------------------------------------------

def _wrap(s):
    return s if len(s) == 1 else f"({s})"


def _trees(digits):
    """Serializations of all binary trees whose leaves read ``digits``."""
    if len(digits) == 1:
        return [digits[0]]
    out = []
    for cut in range(1, len(digits)):
        for left in _trees(digits[:cut]):
            for right in _trees(digits[cut:]):
                out.append(_wrap(left) + _wrap(right))
    return out


def grammar_labels(r):
    """Every tree with strictly decreasing digit leaves from 0..r."""
    out = []
    for size in range(1, r + 2):
        for subset in combinations(range(r, -1, -1), size):
            out.extend(_trees([str(d) for d in subset]))
    return out


def split_label(label):
    """Top-level (left, right) split of a composite label, or None for a digit."""
    if len(label) == 1:
        return None
    depth = 0
    for i, ch in enumerate(label):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0:
            left, right = label[: i + 1], label[i + 1:]
            break
    else:
        raise ValueError(f"unbalanced label {label!r}")
    unwrap = lambda s: s[1:-1] if s.startswith("(") and s.endswith(")") else s
    return unwrap(left), unwrap(right)


def is_valid_label(label, r):
    """Leaves weakly decrease; a repeated digit needs exactly three
    parentheses between its two copies (the three-step repetition rule)."""
    digits = [(i, ch) for i, ch in enumerate(label) if ch.isdigit()]
    if any(int(ch) > r for _, ch in digits):
        return False
    for (i, a), (j, b) in zip(digits, digits[1:]):
        if a < b:
            return False
        if a == b:
            between = label[i + 1:j]
            if r < 3 or len(between) != 3 or set(between) - set("()"):
                return False
    try:
        _check_tree(label)
    except ValueError:
        return False
    return True


def _check_tree(label):
    parts = split_label(label)
    if parts is None:
        if not label.isdigit() or len(label) != 1:
            raise ValueError(label)
        return
    for p in parts:
        _check_tree(p)


def valid_labels(r):
    if r == 1:
        return ["0", "1", "10"]
    if r == 2:
        return list(TWO_STEP_LABELS)
    if r == 3:
        return list(THREE_STEP_LABELS) + [t[2] for t in THREE_STEP_EXTRA]
    raise ValueError("labels are only known for r <= 3")


# -- tile helpers ------------------------------------------------------------

def _rotations(triple):
    x, y, z = triple
    return [(x, y, z), (y, z, x), (z, x, y)]


def _free_piece(name, triple, coeff=1):
    """All 3 up and 3 down orientations of a triangle with clockwise labels."""
    tiles = []
    for up in (True, False):
        seen = set()
        for rot in _rotations(triple):
            if rot not in seen:
                seen.add(rot)
                tiles.append(Tile(up, rot, name, coeff))
    shape = "free-triangle"
    return Piece(name, shape, tuple(tiles), coeff, rotation="free")


def _basic_pieces(labels, r):
    out = [_free_piece(f"{d}/{d}/{d}", (d, d, d)) for d in map(str, range(r + 1))]
    for lab in labels:
        parts = split_label(lab)
        if parts is None:
            continue
        a, b = parts
        out.append(_free_piece(f"{a}/{b}/{lab}", (a, b, lab)))
    return out


def _eq_piece(a, b, name=None):
    """Vertical rhombus U(r,c) + D(r+1,c): NW=a, NE=b, SW=b, SE=a."""
    mid = (a if len(a) == 1 else f"({a})") + (b if len(b) == 1 else f"({b})")
    name = name or f"eq[{a},{b}]"
    top = Tile(True, (a, b, mid), name, eq=True)
    bottom = Tile(False, (mid, a, b), name)
    return Piece(name, "vertical-rhombus", (top, bottom), rotation="fixed", eqvar=True)


# -- catalogs ----------------------------------------------------------------

@lru_cache(maxsize=None)
def pieces_cohomology_1step():
    return PieceSet("h", _basic_pieces(["10"], 1), ("0", "1"))


@lru_cache(maxsize=None)
def pieces_ktheory(variant="original"):
    base = _basic_pieces(["10"], 1)
    if variant == "original":
        # size-two down triangle on D(r,c), U(r,c+1), D(r,c+1), D(r+1,c+1);
        # Ka, Kb, Kc are its internal edges
        name = "K"
        tiles = (
            Tile(False, ("0", "Ka", "1"), name, coeff=-1),
            Tile(True, ("Ka", "Kb", "Kc"), name),
            Tile(False, ("1", "0", "Kb"), name),
            Tile(False, ("Kc", "1", "0"), name),
        )
        extra = [Piece(name, "k-triangle", tiles, -1)]
    elif variant == "alternate":
        # horizontal rhombi U(r,c) + D(r,c) glued along a private label
        extra = []
        for idx, (left, bottom, top, right, coeff) in enumerate(
                (("1", "1", "0", "10K", -1), ("10K", "0", "0", "10K", 1), ("10K", "10", "1", "0", 1)), start=1):
            name = f"K{idx}"
            glue = f"k{idx}"
            tiles = (Tile(True, (left, glue, bottom), name, coeff=coeff),
                     Tile(False, (top, right, glue), name))
            extra.append(Piece(name, "horizontal-rhombus", tiles, coeff))
    else:
        raise ValueError(f"unknown K-theory variant {variant!r}")
    return PieceSet(f"k-{variant}", base + extra, ("0", "1"))


@lru_cache(maxsize=None)
def pieces_equivariant_1step():
    return PieceSet("ht", _basic_pieces(["10"], 1) + [_eq_piece("0", "1", "eq")], ("0", "1"), ring="ht")


@lru_cache(maxsize=None)
def pieces_equivariant_K_1step():
    # Both gashed pieces are down triangles.  Labels are what the
    # neighbours see; ``inner`` records the other side of each gash.
    kt1 = Tile(False, ("1", "0", "1"), "KT1", coeff=-1, predicate="after_eq", gash="sw",
               inner=("1", "1", "1"))
    kt2 = Tile(False, ("0", "0", "1"), "KT2", coeff=-1, predicate="zeros_then_one", gash="se",
               inner=("0", "0", "0"))
    extra = [
        _eq_piece("0", "1", "eq"),
        Piece("KT1", "gashed", (kt1,), -1, predicate="after_eq"),
        Piece("KT2", "gashed", (kt2,), -1, predicate="zeros_then_one"),
    ]
    return PieceSet("kt", _basic_pieces(["10"], 1) + extra, ("0", "1"), ring="kt")


@lru_cache(maxsize=None)
def pieces_twostep():
    return PieceSet("h2", _basic_pieces(TWO_STEP_LABELS, 2), ("0", "1", "2"), steps=2)


@lru_cache(maxsize=None)
def pieces_threestep():
    pieces = _basic_pieces(THREE_STEP_LABELS, 3)
    for left, right, bottom in THREE_STEP_EXTRA:
        pieces.append(_free_piece(f"{left}/{right}/{bottom}", (left, right, bottom)))
    return PieceSet("h3", pieces, ("0", "1", "2", "3"), steps=3)


@lru_cache(maxsize=None)
def pieces_equivariant_twostep():
    pieces = _basic_pieces(TWO_STEP_LABELS, 2) + [_eq_piece(a, b) for a, b in EQUIVARIANT_TWO_STEP]
    return PieceSet("ht2", pieces, ("0", "1", "2"), ring="ht", steps=2)


THEORIES = {
    "h": (1, pieces_cohomology_1step),
    "k": (1, lambda: pieces_ktheory("original")),
    "k-alt": (1, lambda: pieces_ktheory("alternate")),
    "ht": (1, pieces_equivariant_1step),
    "kt": (1, pieces_equivariant_K_1step),
    "h2": (2, pieces_twostep),
    "ht2": (2, pieces_equivariant_twostep),
    "h3": (3, pieces_threestep),
}


def orientation_self_test():
    """Check the boundary orientation against two known products.

    Reading every boundary the other way round (the mirror image) must give
    different numbers, otherwise the check could not catch a flipped
    convention.
    """
    from .engine import expand_product
    h = pieces_cohomology_1step()
    known = (("0101", "0101", {"0110": 1, "1001": 1}), ("010101", "010101", {"101010": 2}))
    for alpha, beta, want in known:
        got = expand_product(alpha, beta, h)
        mirrored = {g[::-1]: c for g, c in expand_product(alpha[::-1], beta[::-1], h).items()}
        if any(got.get(g) != c for g, c in want.items()):
            raise AssertionError(f"puzzle orientation self-test failed on {alpha} * {beta}: {got}")
        if all(mirrored.get(g) == c for g, c in want.items()):
            raise AssertionError(f"orientation self-test cannot tell {alpha} * {beta} from its mirror")
    return True


def pieces_for(theory):
    try:
        return THEORIES[theory][1]()
    except KeyError:
        raise ValueError(f"unknown theory {theory!r}; choose from {', '.join(THEORIES)}") from None


orientation_self_test()
