"""Non-symmetric Macdonald polynomials E_eta, bisymmetric Macdonald
polynomials P_Lambda, and expansion of bisymmetric polynomials in the
P basis (the brute-force oracle behind the Pieri rules).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import ConsistencyError, DivisibilityError
from .qt import QTScalar, qt_monomial, t_bracket_factorial
from .sparts import (SuperPartition, compositions_of, eigenvalue,
                     format_spart, perm_length, sorting_permutation,
                     superpartitions)
from .xpoly import XPolynomial, coefficient_of, exact_div, permute_vars, vandermonde
from . import hecke

_ZERO = QTScalar.zero()
_ONE = QTScalar.one()

_lock = threading.Lock()
_YMAT_CACHE: dict = {}
_E_CACHE: dict = {}
_P_CACHE: dict = {}


@dataclass(frozen=True)
class EBasisElement:
    eta: tuple
    poly: XPolynomial
    eigenvalues: tuple


@dataclass(frozen=True)
class PBasisElement:
    lam: SuperPartition
    poly: XPolynomial
    c_lam: QTScalar


def clear_caches():
    with _lock:
        _YMAT_CACHE.clear()
        _E_CACHE.clear()
        _P_CACHE.clear()


# ---------------------------------------------------------------------------
# Bruhat order on compositions (internal: only what the E construction
# and its triangularity check need)
# ---------------------------------------------------------------------------

def _dominates(lam, mu):
    """lam >= mu in dominance order; equal-degree partitions."""
    s1 = s2 = 0
    for a, b in zip(lam, mu):
        s1 += a
        s2 += b
        if s1 < s2:
            return False
    return True


def _perm_bruhat_leq(u, v):
    """u <= v in Bruhat order on the symmetric group (Ehresmann)."""
    n = len(u)
    for i in range(1, n):
        a = sorted(u[:i])
        b = sorted(v[:i])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def _bruhat_less(nu, eta):
    """nu strictly below eta in the Bruhat order on compositions."""
    if nu == eta:
        return False
    nup = tuple(sorted(nu, reverse=True))
    etap = tuple(sorted(eta, reverse=True))
    if nup != etap:
        return _dominates(etap, nup)
    return _perm_bruhat_leq(sorting_permutation(eta), sorting_permutation(nu))


def _order_key(nu):
    """Key of a linear extension of the Bruhat order (ascending)."""
    return (tuple(sorted(nu, reverse=True)), -perm_length(sorting_permutation(nu)))


# ---------------------------------------------------------------------------
# E construction
# ---------------------------------------------------------------------------

def _y_matrices(N, d):
    """Matrices of all Y_i on the degree-d monomial basis, in both
    row-major and column-major form.

    rows[i-1][nu] lists (mu, coeff) with coeff the coefficient of x^nu
    in Y_i x^mu; triangularity means nu is Bruhat-below mu.
    """
    key = (N, d)
    mats = _YMAT_CACHE.get(key)
    if mats is not None:
        return mats
    basis = list(compositions_of(d, N))
    rows = [dict() for _ in range(N)]
    cols = [dict() for _ in range(N)]
    for mu in basis:
        mono = XPolynomial.monomial(mu)
        for i in range(1, N + 1):
            g = hecke.apply_Y(i, mono)
            target = rows[i - 1]
            for nu, c in g.terms.items():
                target.setdefault(nu, []).append((mu, c))
            cols[i - 1][mu] = list(g.terms.items())
    with _lock:
        _YMAT_CACHE[key] = (rows, cols)
    return rows, cols


def nonsym_E(eta) -> EBasisElement:
    """The monic joint eigenfunction of the Cherednik operators.

    Solves the exact linear system stacked from Y_i E = ebar_i E over
    all compositions of the same degree, exploiting the triangular
    action for the elimination order, then verifies every eigenvalue
    equation and the Bruhat triangularity of the support.
    """
    eta = tuple(int(x) for x in eta)
    if any(x < 0 for x in eta):
        raise ValueError("composition entries must be nonnegative")
    cached = _E_CACHE.get(eta)
    if cached is not None:
        return cached
    N = len(eta)
    d = sum(eta)
    rows, cols = _y_matrices(N, d)
    ebar = tuple(eigenvalue(eta, i) for i in range(1, N + 1))
    basis = sorted(compositions_of(d, N), key=_order_key, reverse=True)
    coeffs = {eta: _ONE}
    for nu in basis:
        if nu == eta:
            continue
        i = next(k for k in range(N) if eta[k] != nu[k])
        pivot = ebar[i] - eigenvalue(nu, i + 1)
        if pivot.is_zero():
            raise ConsistencyError(f"coincident eigenvalues for {eta} and {nu}")
        acc = []
        for mu, c in rows[i].get(nu, ()):
            if mu == nu:
                continue
            b = coeffs.get(mu)
            if b is not None:
                acc.append(c * b)
        s = QTScalar.sum(acc)
        if not s.is_zero():
            coeffs[nu] = s / pivot
    support = {nu: c for nu, c in coeffs.items() if not c.is_zero()}
    # every eigenvalue equation must hold, not just the ones eliminated
    # on; accumulating column by column touches only the support
    for i in range(N):
        residual = {}
        for mu, b in support.items():
            for nu, c in cols[i][mu]:
                residual.setdefault(nu, []).append(c * b)
        for nu, acc in residual.items():
            lhs = QTScalar.sum(acc)
            if lhs != ebar[i] * support.get(nu, _ZERO):
                raise ConsistencyError(
                    f"eigenvalue equation Y_{i+1} failed for E_{eta} at {nu}")
        for nu, b in support.items():
            if nu not in residual and not (ebar[i] * b).is_zero():
                raise ConsistencyError(
                    f"eigenvalue equation Y_{i+1} failed for E_{eta} at {nu}")
    for nu in support:
        if nu != eta and not _bruhat_less(nu, eta):
            raise ConsistencyError(
                f"E_{eta} has support at {nu}, not Bruhat-below")
    elem = EBasisElement(eta=eta, poly=XPolynomial(N, support), eigenvalues=ebar)
    with _lock:
        _E_CACHE[eta] = elem
    return elem


# ---------------------------------------------------------------------------
# P construction
# ---------------------------------------------------------------------------

def dominant_exponent(lam: SuperPartition):
    """Exponent of the unit-normalized monomial: (anti - staircase, sym)."""
    m = lam.m
    lead = tuple(lam.anti[i] - (m - 1 - i) for i in range(m)) + lam.sym
    return lead


def bisym_P(lam: SuperPartition) -> PBasisElement:
    """The bisymmetric Macdonald polynomial, normalized so the dominant
    monomial has coefficient one.

    Computed as the t-antisymmetrization (first m variables) of the
    t-symmetrization (last N - m variables) of E over eta_Lambda,
    divided exactly by the t-deformed Vandermonde.  A parallel
    computation with the plain antisymmetrizer and plain Vandermonde
    must give a proportional result; a mismatch raises rather than
    being silently resolved.
    """
    key = (lam.anti, lam.sym, lam.N)
    cached = _P_CACHE.get(key)
    if cached is not None:
        return cached
    m, N = lam.m, lam.N
    E = nonsym_E(lam.eta()).poly
    if m + 1 <= N:
        S = hecke.symmetrize("t_sym", (m + 1, N), E)
    else:
        S = E
    if m >= 2:
        A = hecke.symmetrize("t_antisym", (1, m), S)
        try:
            Q = exact_div(A, vandermonde("t_deformed", range(1, m + 1), N))
        except DivisibilityError as exc:
            raise ConsistencyError(
                f"antisymmetrization of {format_spart(lam)} is not divisible "
                f"by the t-Vandermonde") from exc
    else:
        Q = S
    if Q.is_zero():
        raise ConsistencyError(f"P vanished for {format_spart(lam)}")
    lead = dominant_exponent(lam)
    c = coefficient_of(Q, lead)
    if c.is_zero():
        raise ConsistencyError(
            f"dominant monomial of {format_spart(lam)} is absent")
    P = Q.scale(c.inverse())
    if m >= 2:
        A2 = hecke.symmetrize("antisym", (1, m), S)
        Q2 = exact_div(A2, vandermonde("plain", range(1, m + 1), N))
        c2 = coefficient_of(Q2, lead)
        if c2.is_zero() or Q2.scale(c2.inverse()) != P:
            raise ConsistencyError(
                f"plain and t-deformed constructions disagree for "
                f"{format_spart(lam)}")
    elem = PBasisElement(lam=lam, poly=P, c_lam=c.inverse())
    with _lock:
        _P_CACHE[key] = elem
    return elem


def c_lambda_formula(lam: SuperPartition) -> QTScalar:
    """The closed-form normalization constant, with the padded zeros of
    the symmetric part counted by its multiplicity statistic."""
    m, N = lam.m, lam.N
    mult = {}
    for x in lam.sym:
        mult[x] = mult.get(x, 0) + 1
    prod = _ONE
    for k in mult.values():
        prod = prod * t_bracket_factorial(k, "t_inverse")
    prod = prod * qt_monomial(0, (N - m) * (N - m - 1) // 2)
    return prod.inverse()


# ---------------------------------------------------------------------------
# expansion in the P basis
# ---------------------------------------------------------------------------

def is_bisymmetric(f: XPolynomial, m: int) -> bool:
    for i in list(range(1, m)) + list(range(m + 1, f.nvars)):
        sigma = list(range(1, f.nvars + 1))
        sigma[i - 1], sigma[i] = i + 1, i
        if permute_vars(f, tuple(sigma)) != f:
            return False
    return True


def expand_in_P_basis(f: XPolynomial, m: int):
    """Coefficients c_Omega with f = sum c_Omega P_Omega.

    f must be bisymmetric and homogeneous; candidates are all
    superpartitions of matching degree.  The exact linear system on
    monomial coefficients is solved and the reconstruction is verified
    term by term, so an f outside the span raises.
    """
    if f.is_zero():
        return []
    if not f.is_homogeneous():
        raise ValueError("expansion needs a homogeneous input")
    if not is_bisymmetric(f, m):
        raise ValueError("input is not bisymmetric")
    N = f.nvars
    d = f.total_degree() + m * (m - 1) // 2
    cands = [sp for sp in superpartitions(d, m, N)]
    polys = [bisym_P(sp) for sp in cands]
    # solve on dominant-monomial rows first; they are near-triangular
    order = sorted(range(len(cands)),
                   key=lambda k: tuple(sorted(dominant_exponent(cands[k]),
                                              reverse=True)))
    coeffs = [None] * len(cands)
    residual = f
    progressed = True
    while progressed:
        progressed = False
        for k in order:
            if coeffs[k] is not None:
                continue
            lead = dominant_exponent(cands[k])
            others = [j for j in range(len(cands))
                      if coeffs[j] is None and j != k and
                      not polys[j].poly.coefficient(lead).is_zero()]
            if others:
                continue
            c = residual.coefficient(lead)
            coeffs[k] = c
            if not c.is_zero():
                residual = residual - polys[k].poly.scale(c)
            progressed = True
    if any(c is None for c in coeffs):
        _solve_dense(residual, cands, polys, coeffs)
        residual = f
        for k, c in enumerate(coeffs):
            if not c.is_zero():
                residual = residual - polys[k].poly.scale(c)
    if not residual.is_zero():
        raise ConsistencyError("input is not in the span of the P basis")
    out = [(cands[k], coeffs[k]) for k in range(len(cands))
           if not coeffs[k].is_zero()]
    out.sort(key=lambda kv: (kv[0].anti, kv[0].sym))
    return out


def _solve_dense(residual, cands, polys, coeffs):
    """Gaussian elimination fallback for the unsolved columns."""
    open_cols = [k for k in range(len(cands)) if coeffs[k] is None]
    pivots = []  # (row dict over open col index, rhs, pivot col)
    rows_seen = set()
    monomials = set(residual.terms)
    for k in open_cols:
        monomials.update(polys[k].poly.terms)
    for e in sorted(monomials, key=lambda e: (sum(e), e), reverse=True):
        if len(pivots) == len(open_cols):
            break
        if e in rows_seen:
            continue
        rows_seen.add(e)
        row = {k: polys[k].poly.coefficient(e) for k in open_cols}
        row = {k: v for k, v in row.items() if not v.is_zero()}
        rhs = residual.coefficient(e)
        for prow, prhs, pc in pivots:
            factor = row.get(pc)
            if factor is None or factor.is_zero():
                continue
            for k, v in prow.items():
                nv = row.get(k, _ZERO) - factor * v
                if nv.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = nv
            rhs = rhs - factor * prhs
        if not row:
            if not rhs.is_zero():
                raise ConsistencyError("inconsistent expansion system")
            continue
        pc = min(row)
        inv = row[pc].inverse()
        row = {k: v * inv for k, v in row.items()}
        rhs = rhs * inv
        pivots.append((row, rhs, pc))
    if len(pivots) < len(open_cols):
        raise ConsistencyError("expansion system is underdetermined")
    solved = {}
    for row, rhs, pc in reversed(pivots):
        val = rhs
        for k, v in row.items():
            if k != pc and k in solved:
                val = val - v * solved[k]
        solved[pc] = val
    for k in open_cols:
        coeffs[k] = solved[k]
