"""Canonical textual forms: rationals as p/q, algebraic numbers as
alg(...)/algc(...) literals, tower elements in the expression grammar.
Printing then parsing reproduces the identical canonical value.
"""

from __future__ import annotations

from fractions import Fraction


def frac_to_text(f):
    f = Fraction(f)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def intpoly_to_text(p, var="x"):
    """Integer polynomial in descending powers, e.g. ``x^2-2``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            v = var if i == 1 else "%s^%d" % (var, i)
            body = v if abs(c) == 1 else "%d*%s" % (abs(c), v)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts)


def alg_to_text(a):
    if a.is_rational():
        return frac_to_text(a.rational_value)
    if a.is_real():
        lo, hi = a.interval()
        return "alg(%s,%s,%s)" % (intpoly_to_text(a.minpoly),
                                  frac_to_text(lo), frac_to_text(hi))
    return "algc(%s,re=%s,im=%s)" % (intpoly_to_text(a.minpoly),
                                     alg_to_text(a.re), alg_to_text(a.im))


def _coeff_text(c):
    txt = alg_to_text(c)
    if not c.is_rational():
        return "(%s)" % txt if "," in txt else txt
    if c.rational_value.denominator != 1 or c.rational_value < 0:
        return "(%s)" % txt
    return txt


def _poly_to_text(poly, tower):
    from .funcfield import mp_sorted_terms
    if not poly:
        return "0"
    parts = []
    for mono, coeff in mp_sorted_terms(poly):
        factors = []
        if not mono or not coeff.is_one():
            factors.append(_coeff_text(coeff))
        for idx, e in mono:
            name = tower.name_of(idx)
            factors.append(name if e == 1 else "%s^%d" % (name, e))
        parts.append("*".join(factors))
    return "+".join(parts)


def element_to_text(e):
    num = _poly_to_text(e.num, e.tower)
    den_terms = list(e.den.items())
    if len(den_terms) == 1 and den_terms[0][0] == () \
            and den_terms[0][1].is_one():
        return num
    den = _poly_to_text(e.den, e.tower)
    return "(%s)/(%s)" % (num, den)


def matrix_to_obj(m):
    """Matrix file form: row-major entry strings under the grammar."""
    return {"n": m.n,
            "entries": [entry_text(x) for row in m.rows for x in row]}


def entry_text(x):
    from .algnum import AlgebraicNumber
    from .funcfield import TowerElement
    if isinstance(x, Fraction) or isinstance(x, int):
        return frac_to_text(x)
    if isinstance(x, AlgebraicNumber):
        return alg_to_text(x)
    if isinstance(x, TowerElement):
        return element_to_text(x)
    raise TypeError("cannot serialize %r" % (type(x),))
