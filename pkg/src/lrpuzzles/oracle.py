"""Classical structure-constant computations used to check the puzzle rules.

* ``lr_tableaux``: count Littlewood-Richardson skew tableaux.
* ``pieri_multiply`` and ``giambelli_expand``: products through special classes.
* ``flag_structure_constants``: Schubert polynomials, Monk's rule and
  exact integer linear algebra on H*(Fl(n)).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np
from scipy import sparse

from .core import FlagString, SchubertIndex, flag_permutation, string_to_partition

__all__ = ["lr_tableaux", "lr_expand", "pieri_multiply", "giambelli_expand", "giambelli_product",
           "flag_structure_constants", "schubert_polynomial", "flag_product_table"]


def _pad(lam, k):
    lam = tuple(lam)
    if len(lam) > k:
        if any(lam[k:]):
            raise ValueError(f"partition {lam} has more than {k} parts")
        lam = lam[:k]
    return lam + (0,) * (k - len(lam))


def _fits(lam, k, n):
    return len(lam) == k and all(0 <= x <= n - k for x in lam) and all(a >= b for a, b in zip(lam, lam[1:]))


def lr_tableaux(lam, mu, nu, k, n):
    """Number of LR tableaux of shape nu/lam and content mu."""
    lam, mu, nu = _pad(lam, k), _pad(mu, k), _pad(nu, k)
    for p in (lam, mu, nu):
        if not _fits(p, k, n):
            raise ValueError(f"{p} does not fit the {k}x{n - k} box")
    if sum(nu) != sum(lam) + sum(mu) or any(a < b for a, b in zip(nu, lam)):
        return 0
    rows = [(lam[i], nu[i]) for i in range(k)]
    # fill rows top to bottom, each row right to left (reverse reading word)
    cells = [(i, j) for i in range(k) for j in range(rows[i][1] - 1, rows[i][0] - 1, -1)]
    grid = {}
    count = [0] * (k + 1)

    def rec(idx):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        total = 0
        for v in range(1, k + 1):
            if count[v] >= mu[v - 1]:
                continue
            if v > 1 and count[v] + 1 > count[v - 1]:
                continue
            right = grid.get((i, j + 1))
            if right is not None and right < v:
                continue
            if i > 0 and rows[i - 1][0] <= j < rows[i - 1][1] and grid[(i - 1, j)] >= v:
                continue
            grid[(i, j)] = v
            count[v] += 1
            total += rec(idx + 1)
            count[v] -= 1
            del grid[(i, j)]
        return total

    return rec(0)


def _partitions_in_box(k, n, size=None):
    out = []

    def rec(prefix, bound):
        if len(prefix) == k:
            if size is None or sum(prefix) == size:
                out.append(tuple(prefix))
            return
        for x in range(bound, -1, -1):
            rec(prefix + [x], x)

    rec([], n - k)
    return out


def lr_expand(lam, mu, k, n):
    lam, mu = _pad(lam, k), _pad(mu, k)
    out = {}
    for nu in _partitions_in_box(k, n, sum(lam) + sum(mu)):
        c = lr_tableaux(lam, mu, nu, k, n)
        if c:
            out[nu] = c
    return out


def pieri_multiply(p, mu, k, n):
    """sigma_p * sigma_mu by the Pieri rule, clipped to the box."""
    if not 0 <= p <= n - k:
        raise ValueError(f"special class sigma_{p} does not exist in G({k},{n})")
    mu = _pad(mu, k)
    out = {}

    def rec(i, prefix, left):
        if i == k:
            if left == 0:
                out[tuple(prefix)] = 1
            return
        upper = n - k if i == 0 else mu[i - 1]
        for v in range(mu[i], min(upper, mu[i] + left) + 1):
            rec(i + 1, prefix + [v], left - (v - mu[i]))

    rec(0, [], p)
    return out


def _apply_specials(parts, mu, k, n):
    """sigma_{parts[0]} * sigma_{parts[1]} * ... * sigma_mu by iterated Pieri."""
    current = {_pad(mu, k): 1}
    for p in parts:
        if p < 0 or p > n - k:
            return {}
        nxt = {}
        for lam, c in current.items():
            for nu, d in pieri_multiply(p, lam, k, n).items():
                nxt[nu] = nxt.get(nu, 0) + c * d
        current = {lam: c for lam, c in nxt.items() if c}
    return current


def _perm_sign(perm):
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def giambelli_product(lam, mu, k, n):
    """sigma_lam * sigma_mu with sigma_lam = det(sigma_{lam_i + j - i})."""
    lam = _pad(lam, k)
    length = max((i + 1 for i, x in enumerate(lam) if x), default=0)
    if length == 0:
        return {_pad(mu, k): 1}
    out = {}
    for perm in permutations(range(length)):
        parts = [lam[i] + perm[i] - i for i in range(length)]
        if any(p < 0 for p in parts):
            continue
        sign = _perm_sign(perm)
        for nu, c in _apply_specials([p for p in parts if p], mu, k, n).items():
            out[nu] = out.get(nu, 0) + sign * c
    return {nu: c for nu, c in out.items() if c}


def giambelli_expand(lam, k, n):
    """The Giambelli determinant multiplied out; reduces to {lam: 1}."""
    return giambelli_product(lam, (), k, n)


# -- flag varieties ------------------------------------------------------------

def _ddiff(poly, i):
    """Divided difference d_i (0-based variable index) on a monomial dict."""
    out = {}
    for e, c in poly.items():
        p, q = e[i], e[i + 1]
        if p == q:
            continue
        sign = 1 if p > q else -1
        hi, lo = max(p, q), min(p, q)
        for j in range(hi - lo):
            f = list(e)
            f[i], f[i + 1] = hi - 1 - j, lo + j
            f = tuple(f)
            out[f] = out.get(f, 0) + sign * c
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def _schubert_table(n):
    """Schubert polynomials of S_n by descending divided differences."""
    w0 = tuple(range(n, 0, -1))
    table = {w0: {tuple(range(n - 1, -1, -1)): 1}}
    frontier = [w0]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(n - 1):
                if w[i] > w[i + 1]:
                    v = list(w)
                    v[i], v[i + 1] = v[i + 1], v[i]
                    v = tuple(v)
                    if v not in table:
                        table[v] = _ddiff(table[w], i)
                        nxt.append(v)
        frontier = nxt
    return table


def schubert_polynomial(w):
    """Schubert polynomial of a permutation (one-line, 1-based) as {exponent: coeff}."""
    return dict(_schubert_table(len(w))[tuple(w)])


def _length(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


@lru_cache(maxsize=None)
def _fl_data(n):
    perms = sorted(_schubert_table(n), key=lambda w: (_length(w), w))
    index = {w: i for i, w in enumerate(perms)}
    monos = sorted({e for w in perms for e in _schubert_table(n)[w]}, key=lambda e: (sum(e), e))
    mindex = {e: i for i, e in enumerate(monos)}
    size = len(perms)
    # Monk: sigma_{s_r} sigma_w = sum over a <= r < b of sigma_{w t_ab} with length + 1
    monk = []
    for r in range(1, n):
        rows, cols = [], []
        for w in perms:
            lw = _length(w)
            for a in range(r):
                for b in range(r, n):
                    if w[a] < w[b] and not any(w[a] < w[c] < w[b] for c in range(a + 1, b)):
                        v = list(w)
                        v[a], v[b] = v[b], v[a]
                        rows.append(index[tuple(v)])
                        cols.append(index[w])
        monk.append(sparse.csr_matrix((np.ones(len(rows), dtype=np.int64), (rows, cols)), shape=(size, size)))
    # x_r = sigma_{s_r} - sigma_{s_{r-1}}
    xs = [monk[0]] + [monk[r] - monk[r - 1] for r in range(1, n - 1)]
    mat = np.zeros((size, len(monos)), dtype=np.int64)
    for w in perms:
        for e, c in _schubert_table(n)[w].items():
            mat[index[w], mindex[e]] = c
    return perms, index, monos, xs, mat


@lru_cache(maxsize=16)
def _monomial_actions(n, v):
    """Matrix whose row for monomial x^a is x^a * sigma_v in the Schubert basis."""
    perms, index, monos, xs, _ = _fl_data(n)
    out = np.zeros((len(monos), len(perms)), dtype=np.int64)
    vec = {}
    base = np.zeros(len(perms), dtype=np.int64)
    base[index[v]] = 1
    for row, e in enumerate(monos):
        if sum(e) == 0:
            cur = base
        else:
            i = next(i for i, x in enumerate(e) if x)
            prev = list(e)
            prev[i] -= 1
            cur = xs[i] @ vec[tuple(prev)]
        vec[e] = cur
        out[row] = cur
    return out


def _perm_of(s, r):
    return flag_permutation(s, r)


def flag_structure_constants(a, b):
    """Structure constants of H*(Fl(steps; n)) in the Schubert basis."""
    if not isinstance(a, FlagString) or not isinstance(b, FlagString):
        raise TypeError("expected FlagString arguments")
    if a.n != b.n or a.steps != b.steps:
        raise ValueError("classes live on different flag varieties")
    n, r = a.n, a.r
    perms, index, monos, xs, mat = _fl_data(n)
    u, v = _perm_of(a.digits, r), _perm_of(b.digits, r)
    row = mat[index[u]] @ _monomial_actions(n, v)
    out = {}
    for i in np.nonzero(row)[0]:
        w = perms[i]
        s = _string_of_perm(w, a.steps, n)
        if s is None:
            raise AssertionError(f"product left the partial flag subring at {w}")
        out[s] = int(row[i])
    return dict(sorted(out.items()))


def _string_of_perm(w, steps, n):
    """Inverse of flag_permutation; None if w has a descent outside the steps."""
    r = len(steps)
    bounds = [0] + list(steps) + [n]
    rev = [None] * n
    for block in range(r + 1):
        vals = w[bounds[block]:bounds[block + 1]]
        if any(x > y for x, y in zip(vals, vals[1:])):
            return None
        for x in vals:
            rev[x - 1] = str(r - block)
    return "".join(rev)[::-1]


def flag_product_table(steps, n, classes=None):
    """All products of pairs from ``classes`` (default: every class) at once."""
    from .core import flag_strings
    steps = tuple(steps)
    r = len(steps)
    classes = classes or flag_strings(steps, n)
    perms, index, monos, xs, mat = _fl_data(n)
    rows = np.array([index[_perm_of(s, r)] for s in classes])
    left = mat[rows]
    table = {}
    for t in classes:
        prod = left @ _monomial_actions(n, _perm_of(t, r))
        for s, vec in zip(classes, prod):
            out = {}
            for i in np.nonzero(vec)[0]:
                out[_string_of_perm(perms[i], steps, n)] = int(vec[i])
            table[(s, t)] = dict(sorted(out.items()))
    return table


def grassmannian_oracle(alpha, beta):
    """lr_tableaux expansion keyed by 0/1 strings."""
    a, b = string_to_partition(alpha), string_to_partition(beta)
    if (a.k, a.n) != (b.k, b.n):
        raise ValueError("classes live on different Grassmannians")
    return {SchubertIndex(a.k, a.n, nu).string: c for nu, c in lr_expand(a.lam, b.lam, a.k, a.n).items()}
