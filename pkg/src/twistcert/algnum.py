"""Exact arithmetic in the algebraic closure of the rationals.

A real number is (irreducible integer minpoly, isolating interval with
rational endpoints); a non-real one is a pair (re, im) of real numbers
with im != 0.  Rationals ride a degree-1 fast path and store the exact
Fraction.  Arithmetic goes through resultant-built annihilating
polynomials followed by irreducible-factor selection and interval
refinement until exactly one candidate root remains.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import intpoly
from .errors import DegreeCapExceeded, DivisionByZero, NotNegativeDiscriminant
from .intpoly import IntPoly

# resultant degrees past this cap raise instead of computing
ARITH_DEGREE_CAP = 64


def set_arith_cap(cap):
    global ARITH_DEGREE_CAP
    ARITH_DEGREE_CAP = cap


_RATIONAL = "rational"
_REAL = "real"
_COMPLEX = "complex"


class AlgebraicNumber:
    __slots__ = ("kind", "_frac", "_minpoly", "_lo", "_hi", "_re", "_im")

    def __init__(self):
        raise TypeError("use the from_* constructors")

    # -- constructors -----------------------------------------------------

    @classmethod
    def _blank(cls):
        self = object.__new__(cls)
        self._frac = None
        self._minpoly = None
        self._lo = self._hi = None
        self._re = self._im = None
        return self

    @classmethod
    def from_rational(cls, value):
        self = cls._blank()
        self.kind = _RATIONAL
        self._frac = Fraction(value)
        return self

    @classmethod
    def from_real_root(cls, minpoly, lo, hi):
        """Real number as the unique root of an irreducible primitive
        IntPoly inside [lo, hi].  Degree-1 input collapses to a rational.
        """
        if minpoly.degree == 1:
            c0, c1 = minpoly.coeffs
            return cls.from_rational(Fraction(-c0, c1))
        self = cls._blank()
        self.kind = _REAL
        self._minpoly = minpoly
        self._lo = Fraction(lo)
        self._hi = Fraction(hi)
        return self

    @classmethod
    def from_pair(cls, re, im):
        """re + i*im for real algebraic re, im; collapses if im == 0."""
        if im.is_zero():
            return re
        self = cls._blank()
        self.kind = _COMPLEX
        self._re = re
        self._im = im
        return self

    # -- basic queries ----------------------------------------------------

    def is_rational(self):
        return self.kind == _RATIONAL

    def is_real(self):
        return self.kind != _COMPLEX

    def is_zero(self):
        return self.kind == _RATIONAL and self._frac == 0

    def is_one(self):
        return self.kind == _RATIONAL and self._frac == 1

    @property
    def rational_value(self):
        assert self.kind == _RATIONAL
        return self._frac

    @property
    def re(self):
        if self.kind == _COMPLEX:
            return self._re
        return self

    @property
    def im(self):
        if self.kind == _COMPLEX:
            return self._im
        return ZERO

    @property
    def minpoly(self):
        if self._minpoly is None:
            if self.kind == _RATIONAL:
                self._minpoly = IntPoly(
                    [-self._frac.numerator, self._frac.denominator])
            else:
                self._minpoly = _complex_minpoly(self._re, self._im)
        return self._minpoly

    @property
    def degree(self):
        return self.minpoly.degree

    def interval(self):
        """Current isolating interval (real numbers only)."""
        if self.kind == _RATIONAL:
            return (self._frac, self._frac)
        assert self.kind == _REAL
        return (self._lo, self._hi)

    def refine(self):
        """Halve the isolating interval by one sign-based bisection step."""
        if self.kind != _REAL:
            return
        p = self._minpoly.to_fractions()
        lo, hi = self._lo, self._hi
        mid = (lo + hi) / 2
        v = intpoly.fp_eval(p, mid)
        # irreducible of degree >= 2 has no rational roots, so v != 0
        if (v > 0) == (intpoly.fp_eval(p, hi) > 0):
            self._hi = mid
        else:
            self._lo = mid

    def refine_below(self, width):
        while self.kind == _REAL and self._hi - self._lo > width:
            self.refine()

    def sign(self):
        if self.kind == _RATIONAL:
            return (self._frac > 0) - (self._frac < 0)
        assert self.kind == _REAL
        while self._lo <= 0 <= self._hi:
            self.refine()
        return 1 if self._lo > 0 else -1

    # -- equality ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, AlgebraicNumber):
            if isinstance(other, (int, Fraction)):
                other = AlgebraicNumber.from_rational(other)
            else:
                return NotImplemented
        if self is other:
            return True
        if self.kind != other.kind:
            # a complex never equals a real; rational vs irrational-real
            # differ in minpoly degree
            return False
        if self.kind == _RATIONAL:
            return self._frac == other._frac
        if self.kind == _COMPLEX:
            return self._re == other._re and self._im == other._im
        if self._minpoly != other._minpoly:
            return False
        p = self._minpoly.to_fractions()
        seq = intpoly.sturm_sequence(p)
        while True:
            alo, ahi = self._lo, self._hi
            blo, bhi = other._lo, other._hi
            if ahi < blo or bhi < alo:
                return False
            lo, hi = min(alo, blo), max(ahi, bhi)
            if intpoly.sturm_count_closed(seq, p, lo, hi) == 1:
                return True
            self.refine()
            other.refine()

    def __hash__(self):
        if self.kind == _RATIONAL:
            return hash(self._frac)
        if self.kind == _COMPLEX:
            return hash((hash(self._re), hash(self._im)))
        return hash(self._minpoly.coeffs)

    def __lt__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraicNumber.from_rational(other)
        if not self.is_real() or not other.is_real():
            raise TypeError("ordering is defined for real numbers only")
        if self == other:
            return False
        while True:
            alo, ahi = self.interval()
            blo, bhi = other.interval()
            if ahi < blo:
                return True
            if bhi < alo:
                return False
            self.refine()
            other.refine()

    def __le__(self, other):
        return self == other or self < other

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        if self.kind == _RATIONAL:
            return AlgebraicNumber.from_rational(-self._frac)
        if self.kind == _COMPLEX:
            return AlgebraicNumber.from_pair(-self._re, -self._im)
        p = IntPoly([c if i % 2 == 0 else -c
                     for i, c in enumerate(self._minpoly.coeffs)]).primitive()
        return AlgebraicNumber.from_real_root(p, -self._hi, -self._lo)

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.kind == _RATIONAL:
            return AlgebraicNumber.from_rational(1 / self._frac)
        if self.kind == _COMPLEX:
            norm = self._re * self._re + self._im * self._im
            ninv = norm.inverse()
            return AlgebraicNumber.from_pair(self._re * ninv,
                                             -(self._im * ninv))
        self.sign()  # force the interval away from zero
        p = IntPoly(list(reversed(self._minpoly.coeffs))).primitive()
        lo, hi = 1 / self._hi, 1 / self._lo
        return AlgebraicNumber.from_real_root(p, min(lo, hi), max(lo, hi))

    def _shift(self, r):
        """self + r for rational r."""
        if self.kind == _RATIONAL:
            return AlgebraicNumber.from_rational(self._frac + r)
        if self.kind == _COMPLEX:
            return AlgebraicNumber.from_pair(self._re._shift(r), self._im)
        p = self._minpoly.to_fractions()
        shifted = _compose_shift(p, r)
        return AlgebraicNumber.from_real_root(
            intpoly.from_fractions(shifted).primitive(),
            self._lo + r, self._hi + r)

    def _scale(self, r):
        """self * r for rational r != 0."""
        assert r != 0
        if self.kind == _RATIONAL:
            return AlgebraicNumber.from_rational(self._frac * r)
        if self.kind == _COMPLEX:
            return AlgebraicNumber.from_pair(self._re._scale(r),
                                             self._im._scale(r))
        p = self._minpoly.to_fractions()
        scaled = [c / r ** i for i, c in enumerate(p)]
        lo, hi = self._lo * r, self._hi * r
        return AlgebraicNumber.from_real_root(
            intpoly.from_fractions(scaled).primitive(),
            min(lo, hi), max(lo, hi))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.kind == _COMPLEX or other.kind == _COMPLEX:
            return AlgebraicNumber.from_pair(self.re + other.re,
                                             self.im + other.im)
        if other.kind == _RATIONAL:
            return self._shift(other._frac)
        if self.kind == _RATIONAL:
            return other._shift(self._frac)
        return _real_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.kind == _COMPLEX or other.kind == _COMPLEX:
            ra, ia, rb, ib = self.re, self.im, other.re, other.im
            return AlgebraicNumber.from_pair(ra * rb - ia * ib,
                                             ra * ib + ia * rb)
        if other.is_zero() or self.is_zero():
            return ZERO
        if other.kind == _RATIONAL:
            return self._scale(other._frac)
        if self.kind == _RATIONAL:
            return other._scale(self._frac)
        return _real_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by zero")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- printing ---------------------------------------------------------

    def __repr__(self):
        from .serialize import alg_to_text
        return alg_to_text(self)


def _coerce(x):
    if isinstance(x, AlgebraicNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return AlgebraicNumber.from_rational(x)
    return NotImplemented


ZERO = AlgebraicNumber.from_rational(0)
ONE = AlgebraicNumber.from_rational(1)


def _compose_shift(p, r):
    """p(x - r) over the rationals, via Horner in (x - r)."""
    acc = []
    for c in reversed(p):
        acc = intpoly.fp_mul(acc, [-r, Fraction(1)])
        if acc:
            acc[0] += c
            acc = intpoly.fp_trim(acc)
        elif c:
            acc = [Fraction(c)]
    return acc


# ---------------------------------------------------------------------------
# interval arithmetic with Fraction endpoints

def _iv_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _iv_neg(a):
    return (-a[1], -a[0])


def _iv_mul(a, b):
    vals = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(vals), max(vals))


# ---------------------------------------------------------------------------
# resultant-based binary operations on irrational reals

def _annihilator_add(p, q):
    """Res_y(p(y), q(x - y)) as a Fraction polynomial in x."""
    F = [[Fraction(c)] for c in p.coeffs]
    G = []
    qc = q.coeffs
    m = q.degree
    for k in range(m + 1):
        # coefficient of y^k: (-1)^k sum_{j>=k} q_j C(j,k) x^(j-k)
        row = [Fraction(0)] * (m - k + 1)
        for j in range(k, m + 1):
            row[j - k] += Fraction((-1) ** k * math.comb(j, k) * qc[j])
        G.append(intpoly.fp_trim(row))
    return intpoly.bivariate_resultant_in_y(F, G, p.degree * q.degree)


def _annihilator_mul(p, q):
    """Res_y(p(y), y^m q(x/y)); valid when q(0) != 0."""
    F = [[Fraction(c)] for c in p.coeffs]
    m = q.degree
    G = []
    for k in range(m + 1):
        # coefficient of y^k is q_{m-k} x^(m-k)
        c = q.coeffs[m - k]
        G.append(intpoly.fp_trim([Fraction(0)] * (m - k) + [Fraction(c)]))
    return intpoly.bivariate_resultant_in_y(F, G, p.degree * q.degree)


def _select_root(annihilator, iv_func, operands):
    """Pick the irreducible factor and isolating interval for the value
    enclosed by iv_func(operand intervals), refining operands until
    exactly one candidate root survives.
    """
    ann = intpoly.from_fractions(annihilator)
    sf = intpoly.from_fractions(intpoly.squarefree_part(ann.to_fractions()))
    factors = [f for f, _ in intpoly.factor_rational(
        sf, degree_cap=max(8, sf.degree))]
    fracs = [f.to_fractions() for f in factors]
    seqs = [intpoly.sturm_sequence(f) for f in fracs]
    for _ in range(512):
        lo, hi = iv_func(*[x.interval() for x in operands])
        counts = [intpoly.sturm_count_closed(seq, f, lo, hi)
                  for seq, f in zip(seqs, fracs)]
        total = sum(counts)
        if total == 1:
            idx = counts.index(1)
            chosen = factors[idx]
            if chosen.degree == 1:
                c0, c1 = chosen.coeffs
                return AlgebraicNumber.from_rational(Fraction(-c0, c1))
            return AlgebraicNumber.from_real_root(chosen, lo, hi)
        for x in operands:
            x.refine()
    raise RuntimeError("root selection failed to converge")


def _check_cap(p, q):
    if p.degree * q.degree > ARITH_DEGREE_CAP:
        raise DegreeCapExceeded(
            "resultant degree %d exceeds arithmetic cap %d"
            % (p.degree * q.degree, ARITH_DEGREE_CAP))


def _real_add(a, b):
    p, q = a.minpoly, b.minpoly
    _check_cap(p, q)
    ann = _annihilator_add(p, q)
    return _select_root(ann, _iv_add, [a, b])


def _real_mul(a, b):
    p, q = a.minpoly, b.minpoly
    _check_cap(p, q)
    ann = _annihilator_mul(p, q)
    return _select_root(ann, _iv_mul, [a, b])


# ---------------------------------------------------------------------------
# minimal polynomial of a complex pair

def _im_unit_annihilator(q):
    """Integer polynomial vanishing on i*s for every root s of q."""
    # split q = qe(x^2) + x*qo(x^2); then q(ix) q(-ix) = qe(-x^2)^2 + x^2 qo(-x^2)^2
    qe = [c for i, c in enumerate(q.coeffs) if i % 2 == 0]
    qo = [c for i, c in enumerate(q.coeffs) if i % 2 == 1]

    def sub_negsq(cs):
        out = [0] * (2 * len(cs) - 1) if cs else []
        for i, c in enumerate(cs):
            out[2 * i] = c * (-1) ** i
        return IntPoly(out)

    a = sub_negsq(qe)
    b = sub_negsq(qo)
    return (a * a + IntPoly([0, 0, 1]) * b * b).primitive()


def _complex_eval_decomposed(poly, re, im):
    """poly(re + i*im) as an (re, im) pair of real algebraic numbers."""
    u, v = ZERO, ZERO
    for c in reversed(poly.coeffs):
        u, v = u * re - v * im + AlgebraicNumber.from_rational(c), \
            u * im + v * re
    return u, v


def _complex_minpoly(re, im):
    if re.is_rational() and im.is_rational():
        r, s = re.rational_value, im.rational_value
        # (x - r)^2 + s^2, cleared to integers
        poly = [r * r + s * s, -2 * r, Fraction(1)]
        return intpoly.from_fractions(poly).primitive()
    p = re.minpoly
    q2 = _im_unit_annihilator(im.minpoly)
    ann = _annihilator_add(p, q2)
    sf = intpoly.from_fractions(
        intpoly.squarefree_part(intpoly.fp_trim(list(ann))))
    factors = [f for f, _ in intpoly.factor_rational(
        sf, degree_cap=max(8, sf.degree))]
    for fac in factors:
        u, v = _complex_eval_decomposed(fac, re, im)
        if u.is_zero() and v.is_zero():
            return fac
    raise RuntimeError("no annihilator factor vanishes at the pair")


# ---------------------------------------------------------------------------
# public operations

def alg_binary(op, a, b):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown operation %r" % (op,))


def alg_is_zero(a):
    return a.is_zero()


def real_roots(p):
    """All distinct real roots of a nonzero IntPoly, sorted ascending,
    each carrying its own irreducible minpoly and a disjoint isolating
    interval.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return []
    sf = intpoly.squarefree_part(p.to_fractions())
    intervals = intpoly.isolate_real_roots(sf)
    factors = [f for f, _ in intpoly.factor_rational(
        p, degree_cap=max(8, p.degree))]
    fracs = [f.to_fractions() for f in factors]
    out = []
    for lo, hi in intervals:
        owner = None
        for fac, fc in zip(factors, fracs):
            if intpoly.count_roots_closed(fc, lo, hi) == 1:
                owner = fac
                break
        assert owner is not None
        if owner.degree == 1:
            c0, c1 = owner.coeffs
            out.append(AlgebraicNumber.from_rational(Fraction(-c0, c1)))
        else:
            out.append(AlgebraicNumber.from_real_root(owner, lo, hi))
    return out


def sqrt_positive_rational(r):
    """Nonnegative square root of a rational r >= 0 as a real number."""
    r = Fraction(r)
    if r < 0:
        raise ValueError("negative radicand")
    if r == 0:
        return ZERO
    p = IntPoly([-r.numerator, 0, r.denominator])
    roots = real_roots(p)
    return roots[-1]


def quad_complex_roots(p):
    """Conjugate root pair of a degree-2 IntPoly with negative
    discriminant, as (re + i*im, re - i*im) with im > 0.
    """
    if p.degree != 2:
        raise ValueError("polynomial must have degree 2")
    c, b, a = p.coeffs
    disc = b * b - 4 * a * c
    if disc >= 0:
        raise NotNegativeDiscriminant(
            "discriminant %d is not negative" % (disc,))
    re = AlgebraicNumber.from_rational(Fraction(-b, 2 * a))
    im = sqrt_positive_rational(Fraction(-disc, 4 * a * a))
    plus = AlgebraicNumber.from_pair(re, im)
    minus = AlgebraicNumber.from_pair(re, -im)
    prim = p.primitive()
    plus._minpoly = prim
    minus._minpoly = prim
    return plus, minus


def factor_rational(p, degree_cap=8):
    """Irreducible factorization over the rationals (see intpoly)."""
    return intpoly.factor_rational(p, degree_cap=degree_cap)


def check_invariants(a):
    """Assert the representation invariants; used by tests and selftest."""
    if a.kind == _RATIONAL:
        assert a.minpoly.degree == 1
        return True
    if a.kind == _REAL:
        p = a.minpoly
        assert intpoly.is_irreducible(p)
        assert p == p.primitive()
        sf = p.to_fractions()
        assert intpoly.count_roots_closed(sf, a._lo, a._hi) == 1
        return True
    assert a.kind == _COMPLEX
    assert a._re.is_real() and a._im.is_real() and not a._im.is_zero()
    u, v = _complex_eval_decomposed(a.minpoly, a._re, a._im)
    assert u.is_zero() and v.is_zero()
    return True
