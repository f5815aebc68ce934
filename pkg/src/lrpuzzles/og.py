"""Schubert indexing for orthogonal Grassmannians OG(k, n), n = 2m+1 or 2m."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["OGIndex", "associated_partition", "discrepancy", "og_codim", "typeB_from_typeC", "parse_og"]


def _strict(seq, what):
    seq = tuple(int(x) for x in seq)
    if any(a <= b for a, b in zip(seq, seq[1:])):
        raise ValueError(f"{what} {seq} is not strictly decreasing")
    return seq


def associated_partition(lam, m):
    """Remove m - lambda_i from m-1, m-2, ..., 0."""
    lam = _strict(lam, "lambda")
    if lam and (lam[0] > m or lam[-1] <= 0):
        raise ValueError(f"parts of {lam} must lie in 1..{m}")
    gone = {m - x for x in lam}
    return tuple(x for x in range(m - 1, -1, -1) if x not in gone)


def _positions(lam, mu, m):
    """Indices i_j (numbered from s+1) with mu_j = tilde-lambda_{i_j}."""
    tilde = associated_partition(lam, m)
    s = len(lam)
    index = {x: s + 1 + pos for pos, x in enumerate(tilde)}
    mu = _strict(mu, "mu")
    missing = [x for x in mu if x not in index]
    if missing:
        raise ValueError(f"mu {mu} is not a sub-partition of {tilde}: parts {missing} do not occur")
    return [index[x] for x in mu]


def discrepancy(lam, mu, k, m):
    """(m-k)s + sum_{j=s+1..k} (m-k+j-i_j)."""
    lam = _strict(lam, "lambda")
    s = len(lam)
    if len(mu) != k - s:
        raise ValueError(f"mu must have k - s = {k - s} parts, got {len(mu)}")
    pos = _positions(lam, mu, m)
    return (m - k) * s + sum(m - k + j - i for j, i in zip(range(s + 1, k + 1), pos))


def og_codim(lam, mu, k, m):
    return sum(lam) + discrepancy(lam, mu, k, m)


@dataclass(frozen=True)
class OGIndex:
    """A Schubert class of OG(k, n) as the pair (lambda, mu).

    For even n only the parity bookkeeping is kept: m = n // 2 and
    ``even`` records that intersection dimensions have the parity of m.
    """

    k: int
    n: int
    lam: tuple
    mu: tuple

    def __post_init__(self):
        object.__setattr__(self, "lam", _strict(self.lam, "lambda"))
        object.__setattr__(self, "mu", _strict(self.mu, "mu"))
        if not 1 <= self.k <= self.m:
            raise ValueError(f"need 1 <= k <= {self.m} for n={self.n}")
        if len(self.lam) > self.k:
            raise ValueError(f"lambda {self.lam} has more than k={self.k} parts")
        discrepancy(self.lam, self.mu, self.k, self.m)

    @property
    def m(self):
        return self.n // 2

    @property
    def even(self):
        return self.n % 2 == 0

    @property
    def s(self):
        return len(self.lam)

    @property
    def associated(self):
        return associated_partition(self.lam, self.m)

    @property
    def discrepancy(self):
        return discrepancy(self.lam, self.mu, self.k, self.m)

    @property
    def codim(self):
        return sum(self.lam) + self.discrepancy

    def __str__(self):
        return ",".join(map(str, self.lam)) + "|" + ",".join(map(str, self.mu))


def parse_og(text, k, n):
    """Inverse of ``str``: "6,4|" or "3|2,0"."""
    if "|" not in text:
        raise ValueError(f"expected 'lambda|mu', got {text!r}")
    left, right = text.split("|", 1)
    nums = lambda s: tuple(int(x) for x in s.split(",") if x.strip())
    return OGIndex(k, n, nums(left), nums(right))


def typeB_from_typeC(c, s_u, s_v, s_w):
    """b = 2^(s_w - s_u - s_v) c, exact."""
    if min(s_u, s_v, s_w) < 0:
        raise ValueError("sign-change counts must be non-negative")
    e = s_w - s_u - s_v
    value = Fraction(c) * (Fraction(2) ** e)
    return value
