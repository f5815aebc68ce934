"""Exact coefficient rings.

Ordinary and K-theoretic coefficients are plain Python ints.  Equivariant
coefficients are sparse integer polynomials in y_1..y_n (cohomology) or
Laurent polynomials in t_1..t_n with t_i standing for exp(y_i) (K-theory).
"""

from __future__ import annotations

import re

__all__ = ["Poly", "y_var", "t_var", "eq_weight_ht", "eq_weight_kt", "specialize_to_ordinary",
           "kt_factor_to_ht", "format_coeff", "parse_coeff", "is_zero"]

IntCoeff = int


def _pad(e, m):
    return e + (0,) * (m - len(e))


class Poly:
    """Sparse polynomial with integer coefficients.

    ``var`` is ``"y"`` for ordinary polynomials or ``"t"`` for Laurent
    polynomials.  Terms with zero coefficient are never stored and exponent
    vectors carry no trailing zeros, so equality is structural.
    """

    __slots__ = ("var", "terms", "_hash")

    def __init__(self, var, terms=None):
        self.var = var
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            while e and e[-1] == 0:
                e = e[:-1]
            if var == "y" and any(x < 0 for x in e):
                raise ValueError("negative exponent in a polynomial in y")
            c = clean.get(e, 0) + c
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        self.terms = clean
        self._hash = None

    @classmethod
    def const(cls, var, c):
        return cls(var, {(): c} if c else {})

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.var != self.var:
                raise TypeError(f"cannot combine {self.var}- and {other.var}-coefficients")
            return other
        if isinstance(other, int):
            return Poly.const(self.var, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.var, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.var, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                m = max(len(e1), len(e2))
                e = tuple(a + b for a, b in zip(_pad(e1, m), _pad(e2, m)))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.var, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly.const(self.var, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(): other} if other else {})
        if isinstance(other, Poly):
            return self.var == other.var and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    @property
    def nvars(self):
        return max((len(e) for e in self.terms), default=0)

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def constant_term(self):
        return self.terms.get((), 0)

    def specialize(self):
        """y_i -> 0 (constant term) or t_i -> 1 (sum of coefficients)."""
        if self.var == "y":
            return self.constant_term()
        return sum(self.terms.values())

    def sorted_terms(self):
        m = self.nvars
        return sorted(self.terms.items(), key=lambda item: _pad(item[0], m))

    def __str__(self):
        return format_coeff(self)

    def __repr__(self):
        return f"Poly({str(self)!r})"


def y_var(i):
    return Poly("y", {(0,) * (i - 1) + (1,): 1})


def t_var(i, power=1):
    return Poly("t", {(0,) * (i - 1) + (power,): 1})


def eq_weight_ht(i, j):
    """Weight y_j - y_i of an equivariant piece."""
    return y_var(j) - y_var(i)


def eq_weight_kt(i, j):
    """Weight 1 - t_i/t_j of an equivariant piece in K_T."""
    return 1 - t_var(i) * t_var(j, -1)


def specialize_to_ordinary(c):
    if isinstance(c, Poly):
        return c.specialize()
    return c


def is_zero(c):
    return not c


def kt_factor_to_ht(f):
    """First-order term of a generator factor 1 - t_i/t_j, namely y_j - y_i."""
    if isinstance(f, int) and f == 0:
        return Poly("y")
    if not isinstance(f, Poly) or f.var != "t":
        raise ValueError("expected a Laurent factor 1 - t_i/t_j")
    if not f:
        return Poly("y")
    terms = dict(f.terms)
    if terms.pop((), None) != 1 or len(terms) != 1:
        raise ValueError(f"{f} is not of the form 1 - t_i/t_j")
    (e, c), = terms.items()
    ups = [k for k, x in enumerate(e, start=1) if x == 1]
    downs = [k for k, x in enumerate(e, start=1) if x == -1]
    if c != -1 or len(ups) != 1 or len(downs) != 1 or sum(abs(x) for x in e) != 2:
        raise ValueError(f"{f} is not of the form 1 - t_i/t_j")
    return eq_weight_ht(ups[0], downs[0])


def _format_monomial(var, e):
    parts = []
    for i, x in enumerate(e, start=1):
        if x == 1:
            parts.append(f"{var}{i}")
        elif x:
            parts.append(f"{var}{i}^{x}")
    return "*".join(parts)


def format_coeff(c):
    """Canonical text: terms sorted by exponent vector, " + "/" - " separators."""
    if isinstance(c, int):
        return str(c)
    if not c:
        return "0"
    out = []
    for idx, (e, coef) in enumerate(c.sorted_terms()):
        mono = _format_monomial(c.var, e)
        mag = abs(coef)
        body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
        if idx == 0:
            out.append(("-" if coef < 0 else "") + body)
        else:
            out.append((" - " if coef < 0 else " + ") + body)
    return "".join(out)


_FACTOR = re.compile(r"^([yt])(\d+)(?:\^(-?\d+))?$")


def parse_coeff(text):
    """Inverse of format_coeff; plain integers come back as int."""
    text = text.strip()
    if re.fullmatch(r"-?\d+", text):
        return int(text)
    tokens = re.split(r"\s+([+-])\s+", text)
    signs = ["+"] + tokens[1::2]
    bodies = tokens[0::2]
    total = None
    for sign, body in zip(signs, bodies):
        coef = 1
        if body.startswith("-"):
            coef, body = -1, body[1:]
        if sign == "-":
            coef = -coef
        exps = {}
        var = None
        for fac in body.split("*"):
            if re.fullmatch(r"\d+", fac):
                coef *= int(fac)
                continue
            m = _FACTOR.match(fac)
            if not m:
                raise ValueError(f"cannot parse coefficient {text!r}")
            if var and var != m.group(1):
                raise ValueError(f"mixed variables in {text!r}")
            var = m.group(1)
            i = int(m.group(2))
            exps[i] = exps.get(i, 0) + int(m.group(3) or 1)
        e = tuple(exps.get(i, 0) for i in range(1, max(exps, default=0) + 1))
        term = (var, e, coef)
        if total is None:
            total = []
        total.append(term)
    var = next((v for v, _, _ in total if v), "y")
    return Poly(var, {}) + sum((Poly(var, {e: c}) for _, e, c in total), Poly(var))
