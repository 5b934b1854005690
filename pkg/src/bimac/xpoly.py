"""Sparse polynomials in x_1..x_N over Q(q,t), plus the variable
actions (permutation, q-shift, exact division, specialization) the
operator algebra is built from.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DivisibilityError
from .qt import QTScalar, qt_monomial

_ZERO = QTScalar.zero()
_ONE = QTScalar.one()


def _grlex_x(e):
    return (sum(e), e)


@dataclass(frozen=True)
class EvalPoint:
    """Per-variable substitution x_i -> q^(a_i) t^(b_i)."""

    coords: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.coords)

    def shifted(self, J):
        """The point with x_i premultiplied by q for i in J (1-based)."""
        return EvalPoint(tuple((a + 1, b) if i + 1 in J else (a, b)
                               for i, (a, b) in enumerate(self.coords)))

    def scalar(self, i):
        """Coordinate i (1-based) as a QTScalar monomial."""
        a, b = self.coords[i - 1]
        return qt_monomial(a, b)


class XPolynomial:
    """Polynomial in x_1..x_N with QTScalar coefficients.

    Terms map exponent tuples (length N, nonnegative) to nonzero
    coefficients.  Instances are immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        t = {}
        if terms:
            for e, c in terms.items():
                if c:
                    t[e] = c
        self.terms = t

    # -- construction -------------------------------------------------
    @staticmethod
    def zero(nvars):
        return XPolynomial(nvars)

    @staticmethod
    def one(nvars):
        return XPolynomial(nvars, {(0,) * nvars: _ONE})

    @staticmethod
    def constant(c, nvars):
        return XPolynomial(nvars, {(0,) * nvars: c})

    @staticmethod
    def variable(i, nvars):
        """x_i, 1-based."""
        e = [0] * nvars
        e[i - 1] = 1
        return XPolynomial(nvars, {tuple(e): _ONE})

    @staticmethod
    def monomial(exponents, coeff=_ONE):
        return XPolynomial(len(exponents), {tuple(exponents): coeff})

    # -- structure ----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, XPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(sorted((e, c.num.key(), c.den.key())
                                              for e, c in self.terms.items()))))

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), _ZERO)

    def _check_shape(self, other):
        if self.nvars != other.nvars:
            raise ValueError(
                f"operand variable counts differ: {self.nvars} vs {other.nvars}")

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        self._check_shape(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        p = XPolynomial.__new__(XPolynomial)
        p.nvars = self.nvars
        p.terms = out
        return p

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        p = XPolynomial.__new__(XPolynomial)
        p.nvars = self.nvars
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __mul__(self, other):
        self._check_shape(other)
        if not self.terms or not other.terms:
            return XPolynomial(self.nvars)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                if e in out:
                    s = out[e] + c
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
                elif not c.is_zero():
                    out[e] = c
        p = XPolynomial.__new__(XPolynomial)
        p.nvars = self.nvars
        p.terms = out
        return p

    def scale(self, c: QTScalar):
        if c.is_zero():
            return XPolynomial(self.nvars)
        if c.is_one():
            return self
        p = XPolynomial.__new__(XPolynomial)
        p.nvars = self.nvars
        p.terms = {e: v * c for e, v in self.terms.items()}
        return p

    def map_coeffs(self, fn):
        return XPolynomial(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    # -- display ------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_x(kv[0]))

    def __str__(self):
        from .render import format_xpoly
        return format_xpoly(self)

    def __repr__(self):
        return f"XPolynomial({self.nvars}, {str(self)!r})"


def xp_arith(f: XPolynomial, g: XPolynomial, op: str) -> XPolynomial:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def permute_vars(f: XPolynomial, sigma) -> XPolynomial:
    """K_sigma f: substitute x_i -> x_sigma(i) (one-line, 1-based)."""
    n = f.nvars
    out = {}
    for e, c in f.terms.items():
        e2 = [0] * n
        for i in range(n):
            e2[sigma[i] - 1] = e[i]
        out[tuple(e2)] = c
    p = XPolynomial.__new__(XPolynomial)
    p.nvars = n
    p.terms = out
    return p


def q_shift(f: XPolynomial, J) -> XPolynomial:
    """tau_J f: x_i -> q x_i for i in J (1-based set)."""
    if not J:
        return f
    idx = [i - 1 for i in J]
    out = {}
    for e, c in f.terms.items():
        k = sum(e[i] for i in idx)
        out[e] = c.mul_monomial(k, 0) if k else c
    p = XPolynomial.__new__(XPolynomial)
    p.nvars = f.nvars
    p.terms = out
    return p


def q_shift_inverse(f: XPolynomial, J) -> XPolynomial:
    """tau_J^(-1) f: x_i -> x_i/q for i in J."""
    if not J:
        return f
    idx = [i - 1 for i in J]
    out = {}
    for e, c in f.terms.items():
        k = sum(e[i] for i in idx)
        out[e] = c.mul_monomial(-k, 0) if k else c
    p = XPolynomial.__new__(XPolynomial)
    p.nvars = f.nvars
    p.terms = out
    return p


def exact_div(f: XPolynomial, g: XPolynomial) -> XPolynomial:
    """Quotient f/g when the division is exact.

    Long division with respect to graded-lex term order; a nonzero
    remainder raises DivisibilityError carrying the remainder, since a
    failed division here falsifies a divisibility claim rather than
    merely signalling bad input.
    """
    f._check_shape(g)
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if not f.terms:
        return XPolynomial(f.nvars)
    lead_g = max(g.terms, key=_grlex_x)
    cg = g.terms[lead_g]
    rem = dict(f.terms)
    out = {}
    while rem:
        e = max(rem, key=_grlex_x)
        qe = tuple(a - b for a, b in zip(e, lead_g))
        if any(a < 0 for a in qe):
            raise DivisibilityError("division is not exact",
                                    XPolynomial(f.nvars, rem))
        qc = rem[e] / cg
        out[qe] = qc
        for e2, c2 in g.terms.items():
            k = tuple(a + b for a, b in zip(qe, e2))
            s = rem.get(k, _ZERO) - qc * c2
            if s.is_zero():
                rem.pop(k, None)
            else:
                rem[k] = s
    return XPolynomial(f.nvars, out)


def divided_difference(f: XPolynomial, i: int) -> XPolynomial:
    """(f - K_(i,i+1) f) / (x_i - x_(i+1)), term by term.

    The quotient of x_i^p x_(i+1)^s - x_i^s x_(i+1)^p by x_i - x_(i+1)
    is a geometric sum, so the division never leaves a remainder.
    """
    n = f.nvars
    out = {}
    for e, c in f.terms.items():
        p, s = e[i - 1], e[i]
        if p == s:
            continue
        sign = 1 if p > s else -1
        lo, hi = min(p, s), max(p, s)
        base = list(e)
        for k in range(lo, hi):
            base[i - 1] = k
            base[i] = hi + lo - 1 - k
            key = tuple(base)
            prev = out.get(key)
            val = c if sign > 0 else -c
            if prev is None:
                out[key] = val
            else:
                tot = prev + val
                if tot.is_zero():
                    del out[key]
                else:
                    out[key] = tot
    p2 = XPolynomial.__new__(XPolynomial)
    p2.nvars = n
    p2.terms = out
    return p2


def specialize(f: XPolynomial, point) -> QTScalar:
    """Substitute x_i -> q^(a_i) t^(b_i) and return the exact value."""
    coords = point.coords if isinstance(point, EvalPoint) else tuple(point)
    if len(coords) != f.nvars:
        raise ValueError("evaluation point length does not match nvars")
    vals = []
    for e, c in f.terms.items():
        a = b = 0
        for k, (da, db) in zip(e, coords):
            if k:
                a += k * da
                b += k * db
        vals.append(c.mul_monomial(a, b))
    return QTScalar.sum(vals)


def elementary_symmetric(r: int, interval, nvars: int) -> XPolynomial:
    """e_r in the variables x_a..x_b of the interval (1-based)."""
    a, b = interval
    width = b - a + 1
    if r < 0 or r > width:
        raise ValueError(f"e_{r} undefined on an interval of {width} variables")
    if r == 0:
        return XPolynomial.one(nvars)
    out = {}
    for subset in combinations(range(a - 1, b), r):
        e = [0] * nvars
        for i in subset:
            e[i] = 1
        out[tuple(e)] = _ONE
    return XPolynomial(nvars, out)


def coefficient_of(f: XPolynomial, exponents) -> QTScalar:
    if len(exponents) != f.nvars:
        raise ValueError("exponent vector length does not match nvars")
    return f.terms.get(tuple(exponents), _ZERO)


def vandermonde(kind: str, I, nvars: int) -> XPolynomial:
    """prod over ordered pairs of I of (x_i - x_j) or (t x_i - x_j)."""
    idx = sorted(I)
    t = qt_monomial(0, 1)
    out = XPolynomial.one(nvars)
    for a, b in combinations(idx, 2):
        xa = XPolynomial.variable(a, nvars)
        xb = XPolynomial.variable(b, nvars)
        if kind == "plain":
            out = out * (xa - xb)
        elif kind == "t_deformed":
            out = out * (xa.scale(t) - xb)
        else:
            raise ValueError(f"unknown Vandermonde kind {kind!r}")
    return out
