"""Exact arithmetic over the field Q(q,t).

``QTPoly`` is a sparse bivariate polynomial in the parameters q and t
with exact rational coefficients.  ``QTScalar`` is a fraction of two
such polynomials kept in canonical form:

* gcd(num, den) = 1 as polynomials over Q,
* den has integer coefficients, content 1 and a positive leading
  coefficient in graded-lex order (total degree first, then q-degree),

so two mathematically equal scalars are structurally identical and
``==`` / ``hash`` are reliable.  Negative powers of q or t never appear
as stored exponents; they live in the denominator.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd


def _grlex(e):
    return (e[0] + e[1], e[0])


# ---------------------------------------------------------------------------
# univariate integer polynomials in t, dense little-endian lists
# ---------------------------------------------------------------------------

def _t_strip(u):
    while u and u[-1] == 0:
        u.pop()
    return u


def _t_mul(u, v):
    if not u or not v:
        return []
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    out[i + j] += a * b
    return _t_strip(out)


def _t_sub(u, v):
    n = max(len(u), len(v))
    out = [0] * n
    for i, a in enumerate(u):
        out[i] = a
    for i, b in enumerate(v):
        out[i] -= b
    return _t_strip(out)


def _t_scale(u, c):
    return [a * c for a in u] if c else []


def _t_content(u):
    g = 0
    for a in u:
        g = _igcd(g, abs(a))
        if g == 1:
            return 1
    return g


def _t_divexact_int(u, c):
    return [a // c for a in u]


def _t_prem(u, v):
    """Pseudo-remainder of u by v over Z[t]."""
    dv = len(v) - 1
    lv = v[-1]
    r = list(u)
    e = len(u) - len(v) + 1
    while r and len(r) - 1 >= dv:
        lr = r[-1]
        r = _t_scale(r, lv)
        shift = len(r) - 1 - dv
        piece = [0] * shift + _t_scale(v, lr)
        r = _t_sub(r, piece)
        e -= 1
    if e > 0:
        r = _t_scale(r, lv ** e)
    return r


def _t_eval(u, x):
    acc = 0
    for c in reversed(u):
        acc = acc * x + c
    return acc


def _t_digits(n, x):
    """Balanced base-x digits of the integer n, little-endian."""
    out = []
    half = x // 2
    while n:
        c = n % x
        if c > half:
            c -= x
        out.append(c)
        n = (n - c) // x
    return out


def _t_divides(g, f):
    """Whether g divides f over Z[t] (g primitive); both nonzero."""
    if len(g) > len(f):
        return False
    lg = g[-1]
    r = list(f)
    while r and len(r) >= len(g):
        c = r[-1]
        if c % lg:
            return False
        qc = c // lg
        shift = len(r) - len(g)
        piece = [0] * shift + _t_scale(g, qc)
        r = _t_sub(r, piece)
    return not r


def _t_gcd(u, v):
    """Gcd over Z[t], primitive with positive leading coefficient.

    Heuristic evaluate-and-reconstruct first (trial division makes it
    exact), primitive PRS as the fallback.
    """
    u, v = list(u), list(v)
    if not u:
        u, v = v, u
    if not v:
        if not u:
            return []
        return _t_scale(u, -1) if u[-1] < 0 else list(u)
    cu, cv = _t_content(u), _t_content(v)
    c = _igcd(cu, cv)
    u = _t_divexact_int(u, cu)
    v = _t_divexact_int(v, cv)
    if len(u) < len(v):
        u, v = v, u
    if len(v) == 1:
        return [c]
    x = 2 * min(max(abs(a) for a in u), max(abs(a) for a in v)) + 29
    for _ in range(4):
        gval = _igcd(abs(_t_eval(u, x)), abs(_t_eval(v, x)))
        if gval == 0:
            x = x * 2 + 1
            continue
        h = _t_digits(gval, x)
        ch = _t_content(h)
        if ch:
            h = _t_divexact_int(h, ch)
            if h[-1] < 0:
                h = _t_scale(h, -1)
            if _t_divides(h, u) and _t_divides(h, v):
                return _t_scale(h, c)
        x = x * 2 + 1
    while True:
        r = _t_prem(u, v)
        if not r:
            break
        cr = _t_content(r)
        u, v = v, _t_divexact_int(r, cr)
        if len(v) == 1:
            v = [1]
            break
    if v[-1] < 0:
        v = _t_scale(v, -1)
    return _t_scale(v, c)


def _t_divexact(u, v):
    """Exact division over Z[t]; assumes divisibility."""
    if not u:
        return []
    du, dv = len(u) - 1, len(v) - 1
    lv = v[-1]
    r = list(u)
    out = [0] * (du - dv + 1)
    for k in range(du - dv, -1, -1):
        if len(r) - 1 == dv + k and r:
            c = r[-1] // lv
            out[k] = c
            piece = [0] * k + _t_scale(v, c)
            r = _t_sub(r, piece)
    return out


# ---------------------------------------------------------------------------
# bivariate gcd via primitive PRS in q over Z[t]
# ---------------------------------------------------------------------------

def _to_qdense(terms):
    """Integer term dict -> list over q-degree of Z[t] lists."""
    dq = max(a for a, _ in terms)
    rows = [dict() for _ in range(dq + 1)]
    for (a, b), c in terms.items():
        rows[a][b] = c
    out = []
    for row in rows:
        if row:
            u = [0] * (max(row) + 1)
            for b, c in row.items():
                u[b] = c
            out.append(u)
        else:
            out.append([])
    while out and not out[-1]:
        out.pop()
    return out


def _from_qdense(rows):
    terms = {}
    for a, u in enumerate(rows):
        for b, c in enumerate(u):
            if c:
                terms[(a, b)] = c
    return terms


def _q_content(rows):
    g = []
    for u in rows:
        if u:
            g = _t_gcd(g, u)
            if g == [1]:
                return g
    return g


def _q_scale(rows, s):
    return [_t_mul(u, s) for u in rows]


def _q_divexact_t(rows, s):
    return [_t_divexact(u, s) if u else [] for u in rows]


def _q_prem(u, v):
    dv = len(v) - 1
    lv = v[-1]
    r = [list(x) for x in u]
    e = len(u) - len(v) + 1
    while r and len(r) - 1 >= dv:
        dr = len(r) - 1
        lr = r[-1]
        r = [_t_mul(x, lv) for x in r]
        shift = dr - dv
        for i, vi in enumerate(v):
            r[shift + i] = _t_sub(r[shift + i], _t_mul(lr, vi))
        while r and not r[-1]:
            r.pop()
        e -= 1
    if e > 0:
        for _ in range(e):
            r = [_t_mul(x, lv) for x in r]
    return r


def _divides(g, f):
    """Whether integer term dict g exactly divides f (both nonzero)."""
    lead = max(g, key=_grlex)
    gc = g[lead]
    ga, gb = lead
    rem = dict(f)
    while rem:
        e = max(rem, key=_grlex)
        a, b = e
        if a < ga or b < gb:
            return False
        c = rem[e]
        if c % gc:
            return False
        qc = c // gc
        qe = (a - ga, b - gb)
        for (a2, b2), c2 in g.items():
            k = (qe[0] + a2, qe[1] + b2)
            s = rem.get(k, 0) - qc * c2
            if s:
                rem[k] = s
            elif k in rem:
                del rem[k]
    return True


def _eval_q_terms(terms, x):
    """Integer term dict with q evaluated at x, as a dense Z[t] list."""
    db = max(b for _, b in terms)
    out = [0] * (db + 1)
    for (a, b), c in terms.items():
        out[b] += c * x ** a
    return _t_strip(out)


def _gcd_terms_heuristic(f, g):
    """Evaluate q at a big integer, gcd over Z[t], reconstruct by
    balanced digits; exactness comes from trial division."""
    bound = 2 * min(max(abs(c) for c in f.values()),
                    max(abs(c) for c in g.values())) + 29
    x = bound
    for _ in range(4):
        u = _eval_q_terms(f, x)
        v = _eval_q_terms(g, x)
        if u and v:
            h = _t_gcd(u, v)
            cand = {}
            ok = True
            for b, hc in enumerate(h):
                for a, c in enumerate(_t_digits(hc, x)):
                    if c:
                        cand[(a, b)] = c
            if cand:
                cc = 0
                for c in cand.values():
                    cc = _igcd(cc, abs(c))
                if cc > 1:
                    cand = {e: c // cc for e, c in cand.items()}
                if cand[max(cand, key=_grlex)] < 0:
                    cand = {e: -c for e, c in cand.items()}
                if ok and _divides(cand, f) and _divides(cand, g):
                    return cand
        x = x * 2 + 1
    return None


def _gcd_terms(f, g):
    """Gcd of two nonzero integer term dicts, primitive, positive lead."""
    # monomial fast path
    if len(f) == 1 or len(g) == 1:
        amin = min(min(a for a, _ in f), min(a for a, _ in g))
        bmin = min(min(b for _, b in f), min(b for _, b in g))
        c = 0
        for v in f.values():
            c = _igcd(c, abs(v))
        cg = 0
        for v in g.values():
            cg = _igcd(cg, abs(v))
        return {(amin, bmin): _igcd(c, cg)}
    if f == g:
        out = dict(f)
        c = 1
        lead = out[max(out, key=_grlex)]
        if lead < 0:
            out = {e: -v for e, v in out.items()}
        cc = 0
        for v in out.values():
            cc = _igcd(cc, abs(v))
        if cc > 1:
            out = {e: v // cc for e, v in out.items()}
        return out
    small, large = (f, g) if len(f) <= len(g) else (g, f)
    if _divides(small, large):
        out = dict(small)
        if out[max(out, key=_grlex)] < 0:
            out = {e: -v for e, v in out.items()}
        return out
    out = _gcd_terms_heuristic(f, g)
    if out is not None:
        return out
    u = _to_qdense(f)
    v = _to_qdense(g)
    cu, cv = _q_content(u), _q_content(v)
    c = _t_gcd(cu, cv)
    u = _q_divexact_t(u, cu)
    v = _q_divexact_t(v, cv)
    if len(u) < len(v):
        u, v = v, u
    while len(v) > 1:
        r = _q_prem(u, v)
        if not r:
            break
        cr = _q_content(r)
        u, v = v, _q_divexact_t(r, cr)
    if len(v) == 1:
        v = [[1]]
    out = _q_scale(v, c)
    terms = _from_qdense(out)
    lead = terms[max(terms, key=_grlex)]
    if lead < 0:
        terms = {e: -c for e, c in terms.items()}
    return terms


# ---------------------------------------------------------------------------
# QTPoly
# ---------------------------------------------------------------------------

class QTPoly:
    """Sparse polynomial in q, t with exact rational coefficients.

    Exponent keys are pairs (q-degree, t-degree) of nonnegative ints;
    stored coefficients are never zero.  Instances are immutable.
    """

    __slots__ = ("terms", "_key", "_cs")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in terms.items():
                if c:
                    t[e] = c
        self.terms = t
        self._key = None
        self._cs = None
        self._cs = None

    # -- construction -------------------------------------------------
    @staticmethod
    def zero():
        return _P_ZERO

    @staticmethod
    def one():
        return _P_ONE

    @staticmethod
    def const(c):
        return QTPoly({(0, 0): c} if c else {})

    @staticmethod
    def monomial(a, b, c=1):
        if a < 0 or b < 0:
            raise ValueError("QTPoly exponents must be nonnegative")
        return QTPoly({(a, b): c} if c else {})

    # -- structure ----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0, 0): 1}

    def __bool__(self):
        return bool(self.terms)

    def key(self):
        if self._key is None:
            self._key = tuple(sorted((e, Fraction(c)) for e, c in self.terms.items()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def leading(self):
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    def total_degree(self):
        return max((a + b for a, b in self.terms), default=0)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        p = QTPoly.__new__(QTPoly)
        p.terms = out
        p._key = None
        p._cs = None
        return p

    def __sub__(self, other):
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        p = QTPoly.__new__(QTPoly)
        p.terms = out
        p._key = None
        p._cs = None
        return p

    def __neg__(self):
        p = QTPoly.__new__(QTPoly)
        p.terms = {e: -c for e, c in self.terms.items()}
        p._key = None
        p._cs = None
        return p

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return _P_ZERO
        if len(other.terms) == 1:
            ((a, b), c), = other.terms.items()
            return self.mul_term(a, b, c)
        if len(self.terms) == 1:
            ((a, b), c), = self.terms.items()
            return other.mul_term(a, b, c)
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        p = QTPoly.__new__(QTPoly)
        p.terms = out
        p._key = None
        p._cs = None
        return p

    def mul_term(self, a, b, c=1):
        if not c:
            return _P_ZERO
        p = QTPoly.__new__(QTPoly)
        p.terms = {(a1 + a, b1 + b): c1 * c for (a1, b1), c1 in self.terms.items()}
        p._key = None
        p._cs = None
        return p

    def scale(self, c):
        if not c:
            return _P_ZERO
        if c == 1:
            return self
        p = QTPoly.__new__(QTPoly)
        p.terms = {e: v * c for e, v in self.terms.items()}
        p._key = None
        p._cs = None
        return p

    def content_split(self):
        """Return (c, prim) with self = c*prim, prim integer with
        content 1 and positive leading coefficient."""
        if self._cs is not None:
            return self._cs
        if not self.terms:
            return Fraction(0), _P_ZERO
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            f = Fraction(c)
            num_gcd = _igcd(num_gcd, abs(f.numerator))
            den_lcm = den_lcm * f.denominator // _igcd(den_lcm, f.denominator)
        c = Fraction(num_gcd, den_lcm)
        _, lead = self.leading()
        if lead < 0:
            c = -c
        inv = 1 / c
        prim = QTPoly.__new__(QTPoly)
        prim.terms = {e: int(v * inv) for e, v in self.terms.items()}
        prim._key = None
        prim._cs = (Fraction(1), prim)
        self._cs = (c, prim)
        return c, prim

    def exact_div(self, g):
        """Exact polynomial quotient self/g; DivisibilityError otherwise."""
        from .errors import DivisibilityError
        if g.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if g.is_one():
            return self
        if not self.terms:
            return _P_ZERO
        if len(g.terms) == 1:
            ((ga, gb), gc), = g.terms.items()
            out = {}
            for (a, b), c in self.terms.items():
                if a < ga or b < gb:
                    raise DivisibilityError("monomial does not divide", self)
                out[(a - ga, b - gb)] = _exact_coeff(c, gc)
            p = QTPoly.__new__(QTPoly)
            p.terms = out
            p._key = None
            p._cs = None
            return p
        (ga, gb), gc = g.leading()
        rem = dict(self.terms)
        out = {}
        while rem:
            e = max(rem, key=_grlex)
            a, b = e
            if a < ga or b < gb:
                raise DivisibilityError("nonzero polynomial remainder",
                                        QTPoly(rem))
            qe = (a - ga, b - gb)
            qc = _exact_coeff(rem[e], gc)
            out[qe] = qc
            for (a2, b2), c2 in g.terms.items():
                k = (qe[0] + a2, qe[1] + b2)
                s = rem.get(k, 0) - qc * c2
                if s:
                    rem[k] = s
                elif k in rem:
                    del rem[k]
        p = QTPoly.__new__(QTPoly)
        p.terms = out
        p._key = None
        p._cs = None
        return p

    # -- display ------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex(kv[0]))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"QTPoly({format_poly(self)!r})"


def _exact_coeff(c, g):
    q = Fraction(c) / g
    return int(q) if q.denominator == 1 else q


_P_ZERO = QTPoly()
_P_ONE = QTPoly({(0, 0): 1})


_GCD_MEMO: dict = {}


def poly_gcd(f: QTPoly, g: QTPoly) -> QTPoly:
    """Gcd over Q[q,t] (primitive parts only, since fraction reduction
    keeps rational content in the numerator), integer-primitive with a
    positive leading coefficient.  Results are memoized: the same
    denominators recur constantly during eliminations."""
    if f.is_zero():
        return g.content_split()[1] if g else _P_ZERO
    if g.is_zero():
        return f.content_split()[1]
    _, fp = f.content_split()
    _, gp = g.content_split()
    if fp.is_one() or gp.is_one():
        return _P_ONE
    if len(fp.terms) == 1 and len(gp.terms) == 1:
        (fa, fb), = fp.terms
        (ga, gb), = gp.terms
        return QTPoly.monomial(min(fa, ga), min(fb, gb))
    memo_key = (fp.key(), gp.key()) if fp.key() <= gp.key()         else (gp.key(), fp.key())
    hit = _GCD_MEMO.get(memo_key)
    if hit is not None:
        return hit
    out = QTPoly.__new__(QTPoly)
    out.terms = _gcd_terms(fp.terms, gp.terms)
    out._key = None
    out._cs = None
    if out.terms == {(0, 0): 1}:
        out = _P_ONE
    if len(_GCD_MEMO) > 200000:
        _GCD_MEMO.clear()
    _GCD_MEMO[memo_key] = out
    return out


# ---------------------------------------------------------------------------
# QTScalar
# ---------------------------------------------------------------------------

class QTScalar:
    """Canonical fraction in Q(q,t).  Immutable and hashable."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _canonical=False):
        if den is None:
            den = _P_ONE
        if _canonical:
            self.num = num
            self.den = den
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(q,t)")
        if num.is_zero():
            self.num = _P_ZERO
            self.den = _P_ONE
            return
        cn, pn = num.content_split()
        cd, pd = den.content_split()
        g = poly_gcd(pn, pd)
        if not g.is_one():
            pn = pn.exact_div(g)
            pd = pd.exact_div(g)
        self.num = pn.scale(cn / cd)
        self.den = pd

    # -- construction -------------------------------------------------
    @staticmethod
    def zero():
        return _S_ZERO

    @staticmethod
    def one():
        return _S_ONE

    @staticmethod
    def from_int(n):
        if n == 0:
            return _S_ZERO
        if n == 1:
            return _S_ONE
        return QTScalar(QTPoly.const(n), _P_ONE, _canonical=True)

    @staticmethod
    def from_fraction(f):
        f = Fraction(f)
        if f.denominator == 1:
            return QTScalar.from_int(f.numerator)
        return QTScalar(QTPoly.const(f), _P_ONE, _canonical=True)

    # -- structure ----------------------------------------------------
    def is_zero(self):
        return not self.num.terms

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def __bool__(self):
        return bool(self.num.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QTScalar.from_int(other)
        elif not isinstance(other, QTScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num.key(), self.den.key()))

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den == other.den:
            num = self.num + other.num
            if num.is_zero():
                return _S_ZERO
            den = self.den
            if den.is_one():
                return QTScalar(num, _P_ONE, _canonical=True)
            cn, pn = num.content_split()
            g = poly_gcd(pn, den)
            if not g.is_one():
                pn = pn.exact_div(g)
                den = den.exact_div(g)
            return QTScalar(pn.scale(cn), den, _canonical=True)
        d = poly_gcd(self.den, other.den)
        if d.is_one():
            num = self.num * other.den + other.num * self.den
            if num.is_zero():
                return _S_ZERO
            return QTScalar(num, self.den * other.den, _canonical=True)
        da = self.den.exact_div(d)
        db = other.den.exact_div(d)
        num = self.num * db + other.num * da
        if num.is_zero():
            return _S_ZERO
        cn, pn = num.content_split()
        g = poly_gcd(pn, d)
        if g.is_one():
            den = self.den * db
        else:
            pn = pn.exact_div(g)
            den = self.den.exact_div(g) * db
        return QTScalar(pn.scale(cn), den, _canonical=True)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QTScalar(-self.num, self.den, _canonical=True)

    def __mul__(self, other):
        if not self.num.terms or not other.num.terms:
            return _S_ZERO
        c1, p1 = self.num.content_split()
        c2, p2 = other.num.content_split()
        d1, d2 = self.den, other.den
        g1 = poly_gcd(p1, d2)
        if not g1.is_one():
            p1 = p1.exact_div(g1)
            d2 = d2.exact_div(g1)
        g2 = poly_gcd(p2, d1)
        if not g2.is_one():
            p2 = p2.exact_div(g2)
            d1 = d1.exact_div(g2)
        return QTScalar((p1 * p2).scale(c1 * c2), d1 * d2, _canonical=True)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q,t)")
        c, p = self.num.content_split()
        return QTScalar(self.den.scale(1 / c), p, _canonical=True)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n):
        if n == 0:
            return _S_ONE
        base = self if n > 0 else self.inverse()
        n = abs(n)
        out = base
        for _ in range(n - 1):
            out = out * base
        return out

    def mul_monomial(self, a, b):
        """Multiply by q^a t^b (a, b may be negative)."""
        na = self.num.mul_term(max(a, 0), max(b, 0))
        da = self.den.mul_term(max(-a, 0), max(-b, 0))
        if na.terms and da.terms and not da.is_one():
            return QTScalar(na, da)
        return QTScalar(na, da, _canonical=True)

    @staticmethod
    def sum(items):
        """Sum of QTScalars, grouping by denominator first."""
        groups = {}
        for s in items:
            if not s.num.terms:
                continue
            k = s.den
            if k in groups:
                groups[k] = groups[k] + s.num
            else:
                groups[k] = s.num
        total = _S_ZERO
        for den, num in groups.items():
            total = total + QTScalar(num, den)
        return total

    # -- substitution --------------------------------------------------
    def invert_parameters(self):
        """The image under q -> 1/q, t -> 1/t."""
        def flip(p):
            if not p.terms:
                return p, 0, 0
            ma = max(a for a, _ in p.terms)
            mb = max(b for _, b in p.terms)
            out = QTPoly({(ma - a, mb - b): c for (a, b), c in p.terms.items()})
            return out, ma, mb
        n2, an, bn = flip(self.num)
        d2, ad, bd = flip(self.den)
        return QTScalar(n2.mul_term(max(ad - an, 0), max(bd - bn, 0)),
                        d2.mul_term(max(an - ad, 0), max(bn - bd, 0)))

    # -- serialization & display ---------------------------------------
    def to_json(self):
        def enc(p):
            return [[str(Fraction(c)), a, b] for (a, b), c in p.sorted_terms()]
        return {"num": enc(self.num), "den": enc(self.den)}

    @staticmethod
    def from_json(obj):
        def dec(rows):
            terms = {}
            for c, a, b in rows:
                f = Fraction(c)
                terms[(int(a), int(b))] = int(f) if f.denominator == 1 else f
            return QTPoly(terms)
        return QTScalar(dec(obj["num"]), dec(obj["den"]))

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"QTScalar({format_scalar(self)!r})"


_S_ZERO = QTScalar(_P_ZERO, _P_ONE, _canonical=True)
_S_ONE = QTScalar(_P_ONE, _P_ONE, _canonical=True)


def qt_monomial(a: int, b: int) -> QTScalar:
    """q^a t^b as a canonical fraction; negative exponents allowed."""
    num = QTPoly.monomial(max(a, 0), max(b, 0))
    den = QTPoly.monomial(max(-a, 0), max(-b, 0))
    return QTScalar(num, den, _canonical=True)


def qt_arith(a: QTScalar, b: QTScalar, op: str) -> QTScalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


_BRACKET_EXP = {"q": (1, 0), "t": (0, 1), "t_inverse": (0, -1)}


def t_bracket(k: int, param: str = "t") -> QTScalar:
    """[k] = 1 + p + ... + p^(k-1) in the chosen parameter."""
    if k < 0:
        raise ValueError("bracket of a negative integer")
    da, db = _BRACKET_EXP[param]
    out = _S_ZERO
    for j in range(k):
        out = out + qt_monomial(da * j, db * j)
    return out


def t_bracket_factorial(k: int, param: str = "t") -> QTScalar:
    """[k]! = [1][2]...[k]; the empty product for k = 0."""
    if k < 0:
        raise ValueError("bracket factorial of a negative integer")
    out = _S_ONE
    for j in range(2, k + 1):
        out = out * t_bracket(j, param)
    return out


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _monomial_text(a, b, latex):
    parts = []
    if a:
        if latex:
            parts.append("q" if a == 1 else "q^{%d}" % a)
        else:
            parts.append("q" if a == 1 else f"q^{a}")
    if b:
        if latex:
            parts.append("t" if b == 1 else "t^{%d}" % b)
        else:
            parts.append("t" if b == 1 else f"t^{b}")
    return ("" if latex else "*").join(parts)


def format_poly(p: QTPoly, latex: bool = False) -> str:
    if p.is_zero():
        return "0"
    chunks = []
    for (a, b), c in p.sorted_terms():
        c = Fraction(c)
        mono = _monomial_text(a, b, latex)
        neg = c < 0
        c = abs(c)
        if mono and c == 1:
            body = mono
        else:
            cs = str(c) if c.denominator == 1 else (
                "\\tfrac{%d}{%d}" % (c.numerator, c.denominator) if latex
                else str(c))
            body = cs + (("" if latex else "*") + mono if mono else "")
        if not chunks:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


def format_scalar(s: QTScalar, latex: bool = False) -> str:
    if s.is_zero():
        return "0"
    if s.den.is_one():
        return format_poly(s.num, latex)
    # canonical form fixes the sign of the den's leading term; flipping
    # both signs when its trailing term is negative reads better
    # (1 - q*t rather than -1 + q*t) and changes nothing mathematically
    npoly, dpoly = s.num, s.den
    e = min(dpoly.terms, key=_grlex)
    if dpoly.terms[e] < 0:
        npoly, dpoly = -npoly, -dpoly
    num = format_poly(npoly, latex)
    den = format_poly(dpoly, latex)
    if latex:
        return "\\frac{%s}{%s}" % (num, den)
    nstr = f"({num})" if len(npoly.terms) > 1 or num.startswith("-") else num
    dstr = f"({den})" if len(dpoly.terms) > 1 else den
    return f"{nstr}/{dstr}"
