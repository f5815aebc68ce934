"""Three-point Gromov-Witten invariants of G(k,n) and the small quantum product.

A degree-d invariant is an ordinary triple intersection on Fl(k-d, k+d; n)
of the kernel/span classes produced by :func:`mondrian.quantum_tableau`.
Products on the two-step flag variety come from two-step puzzles; for
n <= 6 every product is also recomputed with the Schubert-polynomial oracle.
"""

from __future__ import annotations

from functools import lru_cache

from .core import FlagString, SchubertIndex, dual, format_partition
from .engine import expand_product
from .mondrian import quantum_tableau
from .oracle import _partitions_in_box, flag_structure_constants
from .parallel import pmap
from .pieces import pieces_twostep

__all__ = ["QuantumExpansion", "QuantumError", "CrossCheckError", "degree_condition", "gw_invariant",
           "vanishing_predicate", "quantum_product", "two_step_product", "ORACLE_CHECK_MAX_N"]

ORACLE_CHECK_MAX_N = 6


class QuantumError(ValueError):
    pass


class CrossCheckError(AssertionError):
    """Two-step puzzles and the flag oracle disagree."""


def _size(lam):
    return sum(lam)


def degree_condition(lam, mu, nu, k, n, d):
    return _size(lam) + _size(mu) + _size(nu) == k * (n - k) + d * n


@lru_cache(maxsize=4096)
def two_step_product(a, b, steps, n, check=True):
    """Expansion of two Fl(a,b;n) classes (digit strings) via two-step puzzles."""
    got = expand_product(a, b, pieces_twostep())
    if check and n <= ORACLE_CHECK_MAX_N:
        ref = flag_structure_constants(FlagString(n, steps, a), FlagString(n, steps, b))
        if got != ref:
            raise CrossCheckError(f"two-step product {a} * {b} on Fl{steps};{n}:\n"
                                  f"  puzzles: {got}\n  oracle:  {ref}")
    return got


def gw_invariant(lam, mu, nu, k, n, d, check=True):
    """I_d(sigma_lam, sigma_mu, sigma_nu) on G(k,n)."""
    lam, mu, nu = (SchubertIndex(k, n, p).lam for p in (lam, mu, nu))
    if d < 0 or not degree_condition(lam, mu, nu, k, n, d):
        raise QuantumError(f"|{format_partition(lam)}| + |{format_partition(mu)}| + |{format_partition(nu)}|"
                           f" != k(n-k) + dn for k={k}, n={n}, d={d}")
    if d > k or k + d > n:
        return 0
    x, y, z = (quantum_tableau(p, k, n, d) for p in (lam, mu, nu))
    return two_step_product(x.digits, y.digits, x.steps, n, check).get(dual(z.digits), 0)


def vanishing_predicate(partitions, k, n, d):
    """True when the scroll bound forces the m-point invariant to vanish."""
    parts = [SchubertIndex(k, n, p).lam for p in partitions]
    m = len(parts)
    if m < 3:
        raise QuantumError(f"need at least three classes, got {m}")
    if 2 * k > n:
        raise QuantumError(f"need 2k <= n, got k={k}, n={n}")
    if d < 0 or d + k > n:
        raise QuantumError(f"need 0 <= d and d + k <= n, got d={d}")
    total = sum(map(sum, parts))
    if total != d * n + k * (n - k) + m - 3:
        raise QuantumError(f"sum of parts {total} != dn + k(n-k) + m - 3 = {d * n + k * (n - k) + m - 3}")
    excess = sum(max(x - d, 0) for lam in parts for x in lam)
    return excess > (k + d) * (n - k - d)


class QuantumExpansion(dict):
    """{(d, nu): coefficient} with nonzero entries, sorted by degree then partition."""

    def lines(self):
        return [f"q^{d}\t{format_partition(nu)}\t{c}" for (d, nu), c in self.items()]

    def classical(self):
        return {nu: c for (d, nu), c in self.items() if d == 0}


def _complement(nu, k, n):
    return tuple(n - k - x for x in reversed(nu))


def quantum_product(lam, mu, k, n, check=True):
    lam, mu = SchubertIndex(k, n, lam).lam, SchubertIndex(k, n, mu).lam
    total = _size(lam) + _size(mu)
    cells = [(d, nu) for d in range(0, total // n + 1) if d <= k and k + d <= n
             for nu in _partitions_in_box(k, n, total - d * n)]
    values = pmap(lambda cell: gw_invariant(lam, mu, _complement(cell[1], k, n), k, n, cell[0], check), cells)
    out = QuantumExpansion()
    for (d, nu), c in sorted(zip(cells, values), key=lambda item: (item[0][0], tuple(-x for x in item[0][1]))):
        if c:
            out[(d, nu)] = c
    return out
