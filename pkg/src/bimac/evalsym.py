"""Evaluation maps, the closed-form evaluation formulas, and the
evaluation symmetry of the bisymmetric Macdonald polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateEvaluationError
from .macdonald import bisym_P
from .qt import QTScalar, qt_monomial
from .sparts import (SuperPartition, arm, eval_point, hook_data,
                     lambda_naught, leg)
from .xpoly import XPolynomial, specialize

_ONE = QTScalar.one()


@dataclass(frozen=True)
class EvaluationResult:
    lam: SuperPartition
    sign: str
    value: QTScalar
    via: str


def evaluate(lam: SuperPartition, sign: str, f: XPolynomial) -> QTScalar:
    """f at the positive or negative evaluation point of Lambda."""
    return specialize(f, eval_point(lam, sign))


def eval_formula(lam: SuperPartition, sign: str) -> QTScalar:
    """Closed product formula for the staircase evaluation of P_Lambda.

    Computed purely combinatorially from the diagram of Lambda, with no
    polynomial construction, so coefficient ratios stay cheap.
    """
    m, N = lam.m, lam.N
    hd = hook_data(lam)
    star = lam.star()
    circ = lam.circled()

    num = _ONE
    den = _ONE
    if sign == "minus":
        for (i, j) in hd.s_cells:
            num = num * (_ONE - qt_monomial(j - 1, N - (i - 1)))
        for (i, j) in hd.b_cells:
            den = den * (_ONE - qt_monomial(arm(circ, i, j),
                                            leg(star, i, j) + 1))
        pref = qt_monomial(-((m - 1) * hd.anti_skew_size - hd.n_anti_skew),
                           hd.n_s + hd.n_conj_anti_skew)
    elif sign == "plus":
        for (i, j) in hd.s_cells:
            num = num * (_ONE - qt_monomial(1 - j, i - (N + 1)))
        for (i, j) in hd.b_cells:
            den = den * (_ONE - qt_monomial(-arm(circ, i, j),
                                            -(leg(star, i, j) + 1)))
        pref = qt_monomial(m * hd.anti_skew_size - hd.n_anti_skew,
                           -(hd.n_s + hd.n_conj_anti_skew))
    else:
        raise ValueError(f"unknown sign {sign!r}")
    if den.is_zero():
        raise DegenerateEvaluationError("hook product vanished")
    return pref * num / den


def evaluation(lam: SuperPartition, sign: str, via: str = "formula") -> EvaluationResult:
    """The staircase evaluation of P_Lambda by either route."""
    if via == "formula":
        value = eval_formula(lam, sign)
    elif via == "substitution":
        value = evaluate(lambda_naught(lam.m, lam.N), sign, bisym_P(lam).poly)
    else:
        raise ValueError(f"unknown route {via!r}")
    return EvaluationResult(lam=lam, sign=sign, value=value, via=via)


def symmetry_check(lam: SuperPartition, omg: SuperPartition, sign: str) -> bool:
    """u_Omega(P~_Lambda) = u_Lambda(P~_Omega) with the staircase-
    normalized polynomials, checked exactly."""
    if lam.m != omg.m or lam.N != omg.N:
        raise ValueError("superpartitions must share m and N")
    p_lam = bisym_P(lam).poly
    p_omg = bisym_P(omg).poly
    nought = lambda_naught(lam.m, lam.N)
    norm_lam = evaluate(nought, sign, p_lam)
    norm_omg = evaluate(nought, sign, p_omg)
    if norm_lam.is_zero() or norm_omg.is_zero():
        raise DegenerateEvaluationError("staircase evaluation vanished")
    lhs = evaluate(omg, sign, p_lam) / norm_lam
    rhs = evaluate(lam, sign, p_omg) / norm_omg
    return lhs == rhs
