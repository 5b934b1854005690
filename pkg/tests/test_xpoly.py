import pytest
from hypothesis import given, settings, strategies as st

from bimac.errors import DivisibilityError
from bimac.qt import QTScalar, qt_monomial
from bimac.render import xpoly_from_json, xpoly_to_json
from bimac.xpoly import (EvalPoint, XPolynomial, coefficient_of,
                         divided_difference, elementary_symmetric, exact_div,
                         permute_vars, q_shift, specialize, vandermonde,
                         xp_arith)

ONE = QTScalar.one()
Q = qt_monomial(1, 0)
T = qt_monomial(0, 1)


def x(i, n):
    return XPolynomial.variable(i, n)


@st.composite
def small_polys(draw, nvars=3):
    p = XPolynomial.zero(nvars)
    for _ in range(draw(st.integers(min_value=0, max_value=4))):
        e = tuple(draw(st.integers(min_value=0, max_value=2))
                  for _ in range(nvars))
        c = draw(st.integers(min_value=-4, max_value=4))
        p = p + XPolynomial.monomial(e, QTScalar.from_int(c))
    return p


@st.composite
def perms(draw, n=3):
    return tuple(draw(st.permutations(range(1, n + 1))))


def test_ring_arithmetic():
    n = 2
    assert xp_arith(x(1, n), x(2, n), "add") == x(1, n) + x(2, n)
    prod = (x(1, n) - x(2, n)) * (x(1, n) + x(2, n))
    assert prod == XPolynomial.monomial((2, 0)) - XPolynomial.monomial((0, 2))
    assert (x(1, n) * XPolynomial.zero(n)).is_zero()


def test_shape_mismatch():
    with pytest.raises(ValueError):
        x(1, 2) + x(1, 3)


def test_permute_examples():
    assert permute_vars(x(1, 2), (2, 1)) == x(2, 2)
    f = XPolynomial.monomial((2, 0, 1))
    assert permute_vars(f, (3, 1, 2)) == XPolynomial.monomial((0, 1, 2))


@settings(max_examples=60, deadline=None)
@given(small_polys(), perms())
def test_permute_group_action(f, sigma)  :
    inv = [0] * 3
    for i, v in enumerate(sigma):
        inv[v - 1] = i + 1
    assert permute_vars(permute_vars(f, sigma), tuple(inv)) == f


def test_q_shift():
    n = 2
    assert q_shift(x(1, n), {1}) == x(1, n).scale(Q)
    f = XPolynomial.monomial((1, 2))
    assert q_shift(f, set()) == f
    assert q_shift(f, {1, 2}) == f.scale(Q ** 3)


@settings(max_examples=50, deadline=None)
@given(small_polys())
def test_q_shift_commutes_with_fixing_permutation(f):
    # sigma fixes variable 1, J = {1}
    sigma = (1, 3, 2)
    assert q_shift(permute_vars(f, sigma), {1}) == \
        permute_vars(q_shift(f, {1}), sigma)


def test_exact_div_examples():
    n = 2
    f = XPolynomial.monomial((2, 0)) - XPolynomial.monomial((0, 2))
    assert exact_div(f, x(1, n) - x(2, n)) == x(1, n) + x(2, n)
    assert exact_div(f, XPolynomial.one(n)) == f
    a = x(1, 3).scale(T) - x(2, 3)
    b = x(1, 3).scale(T) - x(3, 3)
    c = x(2, 3).scale(T) - x(3, 3)
    assert exact_div(a * b * c, a) == b * c


def test_exact_div_remainder_error():
    n = 2
    with pytest.raises(DivisibilityError) as err:
        exact_div(x(1, n) + XPolynomial.one(n), x(2, n))
    assert err.value.remainder is not None


@settings(max_examples=40, deadline=None)
@given(small_polys(), small_polys())
def test_exact_div_roundtrip(f, g):
    if g.is_zero():
        return
    assert exact_div(f * g, g) == f


def test_specialize_examples():
    n = 2
    f = x(1, n) + x(2, n)
    assert specialize(f, EvalPoint(((0, 0), (0, 1)))) == ONE + T
    assert specialize(XPolynomial.one(n), EvalPoint(((3, 4), (1, 2)))).is_one()
    assert specialize(x(1, n) * x(2, n),
                      EvalPoint(((1, 0), (0, 1)))) == Q * T


@settings(max_examples=40, deadline=None)
@given(small_polys(), small_polys())
def test_specialize_is_multiplicative(f, g):
    p = EvalPoint(((1, 0), (0, 1), (1, 1)))
    assert specialize(f * g, p) == specialize(f, p) * specialize(g, p)


def test_elementary_symmetric():
    assert elementary_symmetric(0, (1, 3), 3) == XPolynomial.one(3)
    assert elementary_symmetric(1, (2, 3), 3) == x(2, 3) + x(3, 3)
    assert elementary_symmetric(2, (1, 2), 4) == x(1, 4) * x(2, 4)
    with pytest.raises(ValueError):
        elementary_symmetric(3, (1, 2), 4)


def test_coefficient_of():
    f = XPolynomial.monomial((2, 0), QTScalar.from_int(3))
    assert coefficient_of(f, (2, 0)) == QTScalar.from_int(3)
    assert coefficient_of(x(1, 2) + x(2, 2), (0, 0)).is_zero()
    g = (x(1, 2) + x(2, 2)) * (x(1, 2) + x(2, 2))
    assert coefficient_of(g, (1, 1)) == QTScalar.from_int(2)


def test_vandermonde():
    assert vandermonde("plain", [1], 3) == XPolynomial.one(3)
    assert vandermonde("t_deformed", [1, 2], 2) == x(1, 2).scale(T) - x(2, 2)
    assert vandermonde("plain", [1, 3], 3) == x(1, 3) - x(3, 3)


def test_divided_difference_is_exact_quotient():
    f = XPolynomial.monomial((3, 1, 0))
    swapped = permute_vars(f, (2, 1, 3))
    quotient = exact_div(f - swapped, x(1, 3) - x(2, 3))
    assert divided_difference(f, 1) == quotient


@settings(max_examples=40, deadline=None)
@given(small_polys())
def test_json_roundtrip(f):
    assert xpoly_from_json(xpoly_to_json(f)) == f


@settings(max_examples=50, deadline=None)
@given(small_polys(), perms(), perms())
def test_permute_composition_rule(f, sigma, rho):
    # K_sigma K_rho = K_(sigma o rho) with values sigma(rho(i))
    comp = tuple(sigma[rho[i] - 1] for i in range(3))
    assert permute_vars(permute_vars(f, rho), sigma) == \
        permute_vars(f, comp)
