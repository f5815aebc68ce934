"""Indexing of type A Schubert classes.

Grassmannian classes are partitions in a k x (n-k) box or, equivalently,
0/1 strings of length n.  Classes on partial flag varieties are strings over
the digits 0..r, where a larger digit marks a smaller subspace.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from math import comb

__all__ = [
    "SchubertIndex",
    "FlagString",
    "UpperLowerIndex",
    "DegenerationOrder",
    "partition_to_string",
    "string_to_partition",
    "codim",
    "string_codim",
    "dual",
    "flagstring_from_upperlower",
    "upperlower_from_flagstring",
    "flag_permutation",
    "degeneration_order",
    "grassmannian_strings",
    "flag_strings",
    "parse_partition",
    "format_partition",
    "parse_space",
    "Space",
]


@dataclass(frozen=True)
class SchubertIndex:
    k: int
    n: int
    lam: tuple

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        lam = lam + (0,) * (self.k - len(lam))
        object.__setattr__(self, "lam", lam)
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")
        if len(lam) != self.k:
            raise ValueError(f"partition {lam} has more than k={self.k} parts")
        if any(a < b for a, b in zip(lam, lam[1:])):
            raise ValueError(f"partition {lam} is not weakly decreasing")
        if lam and (lam[0] > self.n - self.k or lam[-1] < 0):
            raise ValueError(f"partition {lam} does not fit a {self.k}x{self.n - self.k} box")

    @property
    def string(self):
        return partition_to_string(self)

    @property
    def size(self):
        return sum(self.lam)

    def dual(self):
        return SchubertIndex(self.k, self.n, tuple(self.n - self.k - x for x in reversed(self.lam)))

    def __str__(self):
        return format_partition(self.lam)


def partition_to_string(idx):
    """0/1 string of a Grassmannian class; the j-th one sits at n-k+j-lambda_j."""
    n, k = idx.n, idx.k
    out = ["0"] * n
    for j, part in enumerate(idx.lam, start=1):
        out[n - k + j - part - 1] = "1"
    return "".join(out)


def string_to_partition(s):
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a 0/1 string: {s!r}")
    n = len(s)
    ones = [i + 1 for i, ch in enumerate(s) if ch == "1"]
    k = len(ones)
    return SchubertIndex(k, n, tuple(n - k + j - p for j, p in enumerate(ones, start=1)))


def codim(idx):
    return sum(idx.lam)


def string_codim(s):
    """Codimension of the class of a digit string: its number of inversions."""
    total = 0
    for i, a in enumerate(s):
        for b in s[i + 1:]:
            if a > b:
                total += 1
    return total


def dual(s):
    """Poincare dual class: the reversed string."""
    if isinstance(s, FlagString):
        return FlagString(s.n, s.steps, s.digits[::-1])
    if isinstance(s, SchubertIndex):
        return s.dual()
    return s[::-1]


@dataclass(frozen=True)
class FlagString:
    """Class on Fl(k_1, ..., k_r; n) as a digit string.

    Degenerate step sequences (repeated steps, k_1 = 0 or k_r = n) are allowed
    so that the quantum reduction can land on them.
    """

    n: int
    steps: tuple
    digits: str

    def __post_init__(self):
        steps = tuple(int(x) for x in self.steps)
        object.__setattr__(self, "steps", steps)
        if len(self.digits) != self.n:
            raise ValueError(f"string {self.digits!r} does not have length {self.n}")
        if any(a > b for a, b in zip(steps, steps[1:])) or (steps and (steps[0] < 0 or steps[-1] > self.n)):
            raise ValueError(f"bad steps {steps} for n={self.n}")
        if self.digits.count("0") + sum(self.digits.count(str(d)) for d in range(1, self.r + 1)) != self.n:
            raise ValueError(f"string {self.digits!r} has digits outside 0..{self.r}")
        if digit_counts(steps, self.n) != tuple(self.digits.count(str(d)) for d in range(self.r + 1)):
            raise ValueError(f"string {self.digits!r} does not match steps {steps}")

    @property
    def r(self):
        return len(self.steps)

    def __str__(self):
        return self.digits


def digit_counts(steps, n):
    """How many times each digit 0..r occurs in a class of Fl(steps; n)."""
    r = len(steps)
    counts = [0] * (r + 1)
    counts[0] = n - (steps[-1] if steps else 0)
    prev = 0
    for i, ki in enumerate(steps, start=1):
        counts[r - i + 1] = ki - prev
        prev = ki
    return tuple(counts)


@dataclass(frozen=True)
class UpperLowerIndex:
    delta: tuple
    lam: tuple

    def __str__(self):
        return ",".join(map(str, self.delta)) + "|" + ",".join(map(str, self.lam))


def flagstring_from_upperlower(u, steps, n):
    steps = tuple(steps)
    r = len(steps)
    kr = steps[-1]
    delta, lam = tuple(u.delta), tuple(u.lam)
    if len(delta) != kr or len(lam) != kr:
        raise ValueError(f"upper and lower index must have length {kr}")
    prev = 0
    for i, ki in enumerate(steps, start=1):
        if delta.count(i) != ki - prev:
            raise ValueError(f"upper index {delta} must contain {ki - prev} copies of {i}")
        prev = ki
    out = ["0"] * n
    last = 0
    for j, (d, part) in enumerate(zip(delta, lam), start=1):
        p = n - kr + j - part
        if p <= last or p > n:
            raise ValueError(f"lower index {lam} gives colliding positions")
        last = p
        out[p - 1] = str(r + 1 - d)
    return FlagString(n, steps, "".join(out))


def upperlower_from_flagstring(f):
    n, r = f.n, f.r
    kr = f.steps[-1] if f.steps else 0
    pos = [i + 1 for i, ch in enumerate(f.digits) if ch != "0"]
    delta = tuple(r + 1 - int(f.digits[p - 1]) for p in pos)
    lam = tuple(n - kr + j - p for j, p in enumerate(pos, start=1))
    return UpperLowerIndex(delta, lam)


def flag_permutation(s, r=None):
    """Permutation (one-line, 1-based) whose Schubert polynomial pulls back the class.

    The values w(1..k_1) are the positions of digit r in the reversed string,
    then those of digit r-1, and so on down to digit 0.
    """
    if isinstance(s, FlagString):
        r, s = s.r, s.digits
    if r is None:
        r = max(int(ch) for ch in s)
    rev = s[::-1]
    w = []
    for d in range(r, -1, -1):
        w.extend(i + 1 for i, ch in enumerate(rev) if ch == str(d))
    return tuple(w)


@dataclass(frozen=True)
class DegenerationOrder:
    n: int
    word: tuple
    perms: tuple

    def __len__(self):
        return len(self.perms)


def _compose_word(word, n):
    perm = list(range(1, n + 1))
    # one-line of s_{a_1} o ... o s_{a_m}: right multiplication swaps positions
    for a in word:
        perm[a - 1], perm[a] = perm[a], perm[a - 1]
    return tuple(perm)


def degeneration_order(n):
    """d_0 = w_0, ..., d_{C(n,2)} = e, the left prefixes of the reduced word
    (e_{n-1} ... e_1)(e_{n-1} ... e_2) ... (e_{n-1})."""
    if n < 1:
        raise ValueError("n must be positive")
    word = tuple(a for lo in range(1, n) for a in range(n - 1, lo - 1, -1))
    m = len(word)
    perms = tuple(_compose_word(word[: m - i], n) for i in range(m + 1))
    return DegenerationOrder(n, word, perms)


def grassmannian_strings(k, n):
    """All 0/1 strings with k ones, in increasing codimension then lexicographic order."""
    out = []
    for ones in combinations(range(n), k):
        s = ["0"] * n
        for i in ones:
            s[i] = "1"
        out.append("".join(s))
    return sorted(out, key=lambda s: (string_codim(s), s))


def flag_strings(steps, n):
    counts = digit_counts(tuple(steps), n)
    out = []

    def rec(prefix, left):
        if len(prefix) == n:
            out.append(prefix)
            return
        for d in range(len(left)):
            if left[d]:
                left[d] -= 1
                rec(prefix + str(d), left)
                left[d] += 1

    rec("", list(counts))
    return sorted(out, key=lambda s: (string_codim(s), s))


def parse_partition(text):
    text = text.strip()
    if text in ("", "0", "()", "-"):
        return ()
    return tuple(int(x) for x in text.strip("()").split(",") if x.strip())


def format_partition(lam):
    lam = tuple(x for x in lam if x)
    return ",".join(map(str, lam)) if lam else "0"


@dataclass(frozen=True)
class Space:
    """A Grassmannian g(k,n) or partial flag variety fl(a,b,...;n)."""

    steps: tuple
    n: int

    @property
    def r(self):
        return len(self.steps)

    @property
    def is_grassmannian(self):
        return self.r == 1

    def classes(self):
        if self.is_grassmannian:
            return grassmannian_strings(self.steps[0], self.n)
        return flag_strings(self.steps, self.n)

    def __str__(self):
        if self.is_grassmannian:
            return f"g({self.steps[0]},{self.n})"
        return "fl(" + ",".join(map(str, self.steps)) + f";{self.n})"


_SPACE_RE = re.compile(r"^\s*(g|fl)\s*\(([\d,\s]+)(?:;\s*(\d+))?\)\s*$", re.I)


def parse_space(text):
    m = _SPACE_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse space {text!r}")
    kind, nums, n = m.group(1).lower(), [int(x) for x in m.group(2).split(",") if x.strip()], m.group(3)
    if kind == "g":
        if n is not None or len(nums) != 2:
            raise ValueError(f"expected g(k,n), got {text!r}")
        k, n = nums
        if not 0 <= k <= n:
            raise ValueError(f"bad Grassmannian {text!r}")
        return Space((k,), n)
    if n is None or not nums:
        raise ValueError(f"expected fl(a,b;n), got {text!r}")
    n = int(n)
    if any(a >= b for a, b in zip(nums, nums[1:])) or nums[0] <= 0 or nums[-1] >= n:
        raise ValueError(f"steps must satisfy 0 < k_1 < ... < k_r < n in {text!r}")
    return Space(tuple(nums), n)


def number_of_steps(n):
    return comb(n, 2)
