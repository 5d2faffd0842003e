"""Univariate integer polynomials plus the rational-coefficient kernels
built on them: Sturm sequences, real-root counting, resultants and
factorization over the rationals.

Coefficient order is constant-first throughout.  An ``IntPoly`` is always
canonical: no trailing zeros, and the zero polynomial is the empty tuple.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from .errors import DegreeCapExceeded


class IntPoly:
    """Primitive-friendly integer polynomial, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([(self.coeffs[i] if i < len(self.coeffs) else 0)
                        + (other.coeffs[i] if i < len(other.coeffs) else 0)
                        for i in range(n)])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    def evaluate(self, x):
        acc = Fraction(0) if isinstance(x, Fraction) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self):
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, abs(c))
        return g

    def primitive(self):
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def to_fractions(self):
        return [Fraction(c) for c in self.coeffs]

    def __repr__(self):
        return "IntPoly(%r)" % (list(self.coeffs),)


def from_fractions(coeffs):
    """Clear denominators and return the primitive IntPoly (sign kept)."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return IntPoly([])
    lcm = 1
    for c in cs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in cs]
    return IntPoly(ints)


# ---------------------------------------------------------------------------
# Fraction-coefficient helpers (plain lists, constant first)

def fp_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def fp_degree(p):
    return len(p) - 1


def fp_neg(p):
    return [-c for c in p]


def fp_sub(p, q):
    n = max(len(p), len(q))
    return fp_trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0)
                    for i in range(n)])


def fp_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return fp_trim(out)


def fp_divmod(p, q):
    """Quotient and remainder over the rationals; q must be nonzero."""
    assert q, "division by zero polynomial"
    r = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quot = [Fraction(0)] * max(0, len(r) - dq)
    while len(r) - 1 >= dq and fp_trim(r):
        dr = len(r) - 1
        if dr < dq:
            break
        c = r[-1] / lead
        quot[dr - dq] = c
        for i in range(dq + 1):
            r[dr - dq + i] -= c * q[i]
        r.pop()
        fp_trim(r)
    return fp_trim(quot), fp_trim(r)


def fp_rem(p, q):
    return fp_divmod(p, q)[1]


def fp_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def fp_derivative(p):
    return fp_trim([i * c for i, c in enumerate(p)][1:])


def fp_monic(p):
    if not p:
        return p
    lead = p[-1]
    return [c / lead for c in p]


def fp_gcd(p, q):
    a, b = list(p), list(q)
    while b:
        a, b = b, fp_rem(a, b)
    return fp_monic(a)


# ---------------------------------------------------------------------------
# Sturm machinery

def sturm_sequence(p):
    """Sturm chain of a squarefree Fraction polynomial."""
    seq = [list(p), fp_derivative(p)]
    while seq[-1]:
        r = fp_neg(fp_rem(seq[-2], seq[-1]))
        if not r:
            break
        seq.append(r)
    return seq


def _sign_variations(seq, x):
    signs = []
    for p in seq:
        v = fp_eval(p, x)
        if v:
            signs.append(1 if v > 0 else -1)
    count = 0
    for a, b in zip(signs, signs[1:]):
        if a != b:
            count += 1
    return count


def sturm_count(seq, lo, hi):
    """Distinct real roots in the half-open interval (lo, hi]."""
    return _sign_variations(seq, lo) - _sign_variations(seq, hi)


def root_bound(p):
    """Cauchy bound: all real roots lie strictly inside (-B, B)."""
    lead = abs(p[-1])
    m = max(abs(c) for c in p[:-1]) if len(p) > 1 else 0
    return Fraction(m, lead) + 1


def squarefree_part(p):
    """p / gcd(p, p') over the rationals, monic."""
    g = fp_gcd(p, fp_derivative(p))
    if fp_degree(g) == 0:
        return fp_monic(list(p))
    q, r = fp_divmod(p, g)
    assert not r
    return fp_monic(q)


def isolate_real_roots(p):
    """Isolating intervals for all real roots of a squarefree Fraction
    polynomial.  Rational roots are returned as degenerate [r, r]
    intervals; irrational ones get open intervals with a sign change and
    Sturm count one.  Sorted ascending.
    """
    if fp_degree(p) < 1:
        return []
    seq = sturm_sequence(p)
    bound = root_bound(p)

    def nonroot_point(lo, hi):
        # rational point in (lo, hi) that is not a root of p
        m = (lo + hi) / 2
        step = (hi - lo) / 4
        while fp_eval(p, m) == 0:
            m += step
            step /= 2
        return m

    out = []

    def recurse(lo, hi):
        n = sturm_count(seq, lo, hi)
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        m = nonroot_point(lo, hi)
        recurse(lo, m)
        recurse(m, hi)

    lo = -bound
    while fp_eval(p, lo) == 0:  # cannot happen with a strict Cauchy bound
        lo -= 1
    recurse(lo, bound)
    # each interval (lo, hi] holds one simple root; hi is never a root
    # because the bound is strict and interior split points are non-roots
    return out


def sturm_count_closed(seq, p, lo, hi):
    """Distinct real roots of squarefree p in [lo, hi], given its chain."""
    if lo > hi:
        return 0
    if lo == hi:
        return 1 if fp_eval(p, lo) == 0 else 0
    n = sturm_count(seq, lo, hi)
    if fp_eval(p, lo) == 0:
        n += 1
    return n


def count_roots_closed(p, lo, hi):
    """Distinct real roots of squarefree p in the closed interval [lo, hi]."""
    return sturm_count_closed(sturm_sequence(p), p, lo, hi)


# ---------------------------------------------------------------------------
# Resultants

def fp_resultant(p, q):
    """Resultant of two Fraction polynomials via the Euclidean PRS."""
    a, b = fp_trim(list(p)), fp_trim(list(q))
    if not a or not b:
        return Fraction(0)
    res = Fraction(1)
    while True:
        da, db = fp_degree(a), fp_degree(b)
        if db == 0:
            return res * b[0] ** da
        r = fp_rem(a, b)
        if not r:
            return Fraction(0)
        dr = fp_degree(r)
        res *= Fraction(-1) ** (da * db) * b[-1] ** (da - dr)
        a, b = b, r


def sylvester_resultant(p, q):
    """Independent route: resultant as the Sylvester-matrix determinant.

    Used as a cross-check oracle; O(n^3) fraction Gaussian elimination.
    """
    m, n = fp_degree(p), fp_degree(q)
    if m < 0 or n < 0:
        return Fraction(0)
    if m == 0 and n == 0:
        return Fraction(1)
    size = m + n
    rows = []
    rp = list(reversed(p))
    rq = list(reversed(q))
    for i in range(n):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in rp]
                    + [Fraction(0)] * (size - i - m - 1))
    for i in range(m):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in rq]
                    + [Fraction(0)] * (size - i - n - 1))
    det = Fraction(1)
    for col in range(size):
        piv = None
        for r in range(col, size):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col]:
                f = rows[r][col] * inv
                for c in range(col, size):
                    rows[r][c] -= f * rows[col][c]
    return det


def lagrange_interpolate(points):
    """Polynomial (Fraction list) through the given (x, y) pairs."""
    poly = []
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            basis = fp_mul(basis, [-xj, Fraction(1)])
            denom *= xi - xj
        scale = yi / denom
        term = [c * scale for c in basis]
        n = max(len(poly), len(term))
        poly = [(poly[k] if k < len(poly) else 0)
                + (term[k] if k < len(term) else 0) for k in range(n)]
    return fp_trim(poly)


def bivariate_resultant_in_y(F, G, degree_bound):
    """Res_y of two polynomials given as lists over y of Fraction
    polynomials in x.  Computed by evaluation at integer points followed
    by Lagrange interpolation; points where a leading coefficient
    vanishes are skipped.
    """
    points = []
    x0 = 0
    needed = degree_bound + 1
    while len(points) < needed:
        xv = Fraction(x0)
        # alternate 0, 1, -1, 2, -2, ...
        x0 = -x0 + 1 if x0 <= 0 else -x0
        fl = fp_eval(F[-1], xv)
        gl = fp_eval(G[-1], xv)
        if fl == 0 or gl == 0:
            continue
        fv = fp_trim([fp_eval(c, xv) for c in F])
        gv = fp_trim([fp_eval(c, xv) for c in G])
        points.append((xv, fp_resultant(fv, gv)))
    return lagrange_interpolate(points)


# ---------------------------------------------------------------------------
# Factorization over the rationals

@functools.lru_cache(maxsize=4096)
def _factor_squarefree_cached(coeffs):
    # sympy carries the Hensel-lifting machinery; we only hand it
    # squarefree primitive input and renormalize its output
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(coeffs)), x, domain=sympy.ZZ)
    _, factors = poly.factor_list()
    out = []
    for fac, mult in factors:
        ip = IntPoly(list(reversed([int(c) for c in fac.all_coeffs()])))
        out.append((ip.primitive(), int(mult)))
    return tuple(out)


def squarefree_decomposition(p):
    """Yun-style decomposition of a Fraction polynomial.

    Returns [(part, multiplicity), ...] with each part monic squarefree.
    """
    p = fp_monic(list(p))
    out = []
    g = fp_gcd(p, fp_derivative(p))
    if fp_degree(g) == 0:
        return [(p, 1)]
    w, _ = fp_divmod(p, g)
    mult = 1
    while fp_degree(w) > 0:
        y = fp_gcd(w, g)
        z, _ = fp_divmod(w, y)
        if fp_degree(z) > 0:
            out.append((fp_monic(z), mult))
        g, _ = fp_divmod(g, y)
        w = y
        mult += 1
    if fp_degree(g) > 0:
        # leftover perfect power beyond the loop; cannot happen in char 0
        out.append((fp_monic(g), mult))
    return out


def factor_rational(p, degree_cap=8):
    """Irreducible factorization of an IntPoly over the rationals.

    Returns [(factor, multiplicity), ...]; factors primitive, positive
    leading coefficient, sorted by (degree, coefficients).  The product
    of factor^mult equals p up to a rational constant.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree > degree_cap:
        raise DegreeCapExceeded(
            "degree %d exceeds factorization cap %d" % (p.degree, degree_cap))
    if p.degree == 0:
        return []
    out = []
    for part, mult in squarefree_decomposition(p.to_fractions()):
        ipart = from_fractions(part).primitive()
        for fac, m in _factor_squarefree_cached(ipart.coeffs):
            out.append((fac, m * mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def is_irreducible(p):
    facs = factor_rational(p, degree_cap=max(8, p.degree))
    return len(facs) == 1 and facs[0][1] == 1 and facs[0][0].degree == p.degree
