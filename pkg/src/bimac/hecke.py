"""The operator algebra acting on XPolynomial: exchange operators K,
Hecke generators T_i (and inverses), the affine generator T_0, the
shift operator omega, Cherednik operators Y_i, and interval
(anti)symmetrizers.

Operator words act right to left, so in Y_i the rightmost inverse
generator hits the polynomial first.
"""

from __future__ import annotations

from itertools import combinations

from .qt import QTScalar, qt_monomial
from .xpoly import (XPolynomial, divided_difference, exact_div, permute_vars,
                    q_shift, q_shift_inverse)

_T = qt_monomial(0, 1)
_TINV = qt_monomial(0, -1)
_Q = qt_monomial(1, 0)
_ONE = QTScalar.one()


def apply_K(i: int, j: int, f: XPolynomial) -> XPolynomial:
    """Exchange x_i and x_j."""
    sigma = list(range(1, f.nvars + 1))
    sigma[i - 1], sigma[j - 1] = j, i
    return permute_vars(f, tuple(sigma))


def apply_T(i: int, f: XPolynomial) -> XPolynomial:
    """T_i f = t f + (t x_i - x_(i+1)) (K_(i,i+1) f - f)/(x_i - x_(i+1)).

    The divided difference is computed term by term, so the division is
    exact by construction.  i = 0 delegates to the affine generator.
    """
    if i == 0:
        return apply_T0(f)
    n = f.nvars
    if not 1 <= i <= n - 1:
        raise ValueError(f"T_{i} undefined for {n} variables")
    dd = divided_difference(f, i)
    if dd.is_zero():
        return f.scale(_T)
    xi = XPolynomial.variable(i, n)
    xi1 = XPolynomial.variable(i + 1, n)
    return f.scale(_T) - (xi.scale(_T) - xi1) * dd


def apply_T_inv(i: int, f: XPolynomial) -> XPolynomial:
    """T_i^(-1) = t^(-1) - 1 + t^(-1) T_i, from the quadratic relation."""
    return f.scale(_TINV - _ONE) + apply_T(i, f).scale(_TINV)


def apply_T0(f: XPolynomial) -> XPolynomial:
    """The affine generator built from K_(1,N) and the q-shift pair."""
    n = f.nvars
    g = permute_vars(q_shift(q_shift_inverse(f, (n,)), (1,)),
                     tuple([n] + list(range(2, n)) + [1]))
    diff = g - f
    xn = XPolynomial.variable(n, n)
    x1 = XPolynomial.variable(1, n)
    if diff.is_zero():
        return f.scale(_T)
    quotient = exact_div(diff, xn.scale(_Q) - x1)
    return f.scale(_T) + (xn.scale(_Q * _T) - x1) * quotient


def apply_omega(f: XPolynomial) -> XPolynomial:
    """omega f (x_1,..,x_N) = f(q x_N, x_1, .., x_(N-1))."""
    n = f.nvars
    out = {}
    for e, c in f.terms.items():
        e2 = e[1:] + (e[0],)
        out[e2] = c.mul_monomial(e[0], 0) if e[0] else c
    p = XPolynomial.__new__(XPolynomial)
    p.nvars = n
    p.terms = out
    return p


def apply_Y(i: int, f: XPolynomial) -> XPolynomial:
    """Cherednik operator Y_i = t^(i-N) T_i..T_(N-1) omega Tbar_1..Tbar_(i-1)."""
    n = f.nvars
    if not 1 <= i <= n:
        raise ValueError(f"Y_{i} undefined for {n} variables")
    g = f
    for j in range(i - 1, 0, -1):
        g = apply_T_inv(j, g)
    g = apply_omega(g)
    for j in range(n - 1, i - 1, -1):
        g = apply_T(j, g)
    return g.scale(qt_monomial(0, i - n))


def symmetrize(kind: str, interval, f: XPolynomial) -> XPolynomial:
    """Sum over the symmetric group of [a,b] of T_sigma, (-1)^l K_sigma
    or (-1/t)^l T_sigma, for kind t_sym, antisym, t_antisym.

    Uses the coset recursion over the factorial chain: the group on
    [a,b] is the union of c_j * S_[a,b-1] with c_j = s_j s_(j+1)..s_(b-1),
    whose lengths add, so each level costs b - a operator applications.
    """
    a, b = interval
    if not 1 <= a <= b <= f.nvars:
        raise ValueError(f"bad symmetrization interval {interval}")
    if kind == "t_sym":
        step, unit = apply_T, _ONE
    elif kind == "antisym":
        step, unit = (lambda i, g: apply_K(i, i + 1, g)), -_ONE
    elif kind == "t_antisym":
        step, unit = apply_T, -_TINV
    else:
        raise ValueError(f"unknown symmetrizer kind {kind!r}")
    out = f
    for top in range(a + 1, b + 1):
        base = out
        chain = base
        factor = _ONE
        for i in range(top - 1, a - 1, -1):
            chain = step(i, chain)
            factor = factor * unit
            out = out + chain.scale(factor)
    return out


def apply_e_of_Y(r: int, interval, f: XPolynomial) -> XPolynomial:
    """e_r(Y_a, .., Y_b) f, expanded into products of distinct Y's."""
    a, b = interval
    width = b - a + 1
    if r < 0 or r > width:
        raise ValueError(f"e_{r} undefined on an interval of {width} operators")
    if r == 0:
        return f
    total = XPolynomial.zero(f.nvars)
    for subset in combinations(range(a, b + 1), r):
        g = f
        for i in reversed(subset):
            g = apply_Y(i, g)
        total = total + g
    return total
