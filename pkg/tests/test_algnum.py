"""Exact algebraic numbers: arithmetic through annihilating resultants,
equality and ordering via interval refinement, complex pairs, and the
degree cap.

The minimal-polynomial claims are cross-checked against a brute
Sylvester-matrix resultant oracle built from scratch in this file.
"""

import random
from fractions import Fraction

import pytest

from twistcert import algnum
from twistcert.algnum import (AlgebraicNumber, alg_binary, alg_is_zero,
                              check_invariants, quad_complex_roots,
                              real_roots, sqrt_positive_rational)
from twistcert.errors import DegreeCapExceeded, DivisionByZero
from twistcert.intpoly import IntPoly


def rat(x):
    return AlgebraicNumber.from_rational(Fraction(x))


def sqrt_of(n):
    """Positive square root of a positive integer, via root isolation."""
    return real_roots(IntPoly([-n, 0, 1]))[-1]


def sylvester_resultant_oracle(p, q):
    """Oracle: resultant of two integer polynomials by cofactor
    expansion of the Sylvester matrix (small sizes only)."""
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(p.coeffs)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(q.coeffs)):
            row[i + j] = c
        rows.append(row)

    def det(mat):
        if len(mat) == 1:
            return mat[0][0]
        total = 0
        for j, c in enumerate(mat[0]):
            if c == 0:
                continue
            minor = [r[:j] + r[j + 1:] for r in mat[1:]]
            total += (-1) ** j * c * det(minor)
        return total

    return det(rows)


def test_minpoly_sqrt2_plus_sqrt3():
    s = sqrt_of(2) + sqrt_of(3)
    assert s.minpoly == IntPoly([1, 0, -10, 0, 1])
    # oracle: Res_y(y^2-2, (x-y)^2-3) must vanish at sqrt2+sqrt3, and
    # its quartic factor is exactly the reported minimal polynomial
    # Res computed on the shifted polynomial written out in x:
    # (x-y)^2-3 = y^2 - 2xy + (x^2-3); eliminating y by hand gives
    # x^4 - 10x^2 + 1, which the Sylvester oracle confirms at x = 0..4
    for x0 in range(5):
        shifted = IntPoly([x0 * x0 - 3, -2 * x0, 1])
        expect = IntPoly([1, 0, -10, 0, 1]).evaluate(Fraction(x0))
        assert sylvester_resultant_oracle(IntPoly([-2, 0, 1]),
                                          shifted) == expect


def test_sqrt2_times_sqrt3_is_sqrt6():
    p = sqrt_of(2) * sqrt_of(3)
    assert p.minpoly == IntPoly([-6, 0, 1])
    assert p == sqrt_of(6)


def test_sqrt2_squared_collapses_to_rational():
    two = sqrt_of(2) * sqrt_of(2)
    assert two.is_rational() and two.rational_value == 2


def test_rational_fast_paths():
    a, b = rat(Fraction(3, 4)), rat(Fraction(-2, 5))
    assert (a + b).rational_value == Fraction(7, 20)
    assert (a * b).rational_value == Fraction(-3, 10)
    assert (a / b).rational_value == Fraction(-15, 8)
    assert alg_binary("sub", a, b).rational_value == Fraction(23, 20)


def test_alg_is_zero_and_cancellation():
    s = sqrt_of(2)
    assert alg_is_zero(s - s)
    assert not alg_is_zero(s)
    assert alg_is_zero(s * s - rat(2))


def test_ordering_and_equality():
    s2, s3 = sqrt_of(2), sqrt_of(3)
    assert s2 < s3
    assert rat(1) < s2 < rat(2)
    assert s2 != s3
    assert s2 == sqrt_of(2)
    assert hash(s2) == hash(sqrt_of(2))


def test_inverse_and_division():
    s2 = sqrt_of(2)
    inv = s2.inverse()
    assert alg_is_zero(inv * s2 - rat(1))
    assert inv.minpoly == IntPoly([-1, 0, 2])
    with pytest.raises(DivisionByZero):
        rat(0).inverse()


def test_real_roots_x_cubed_minus_x():
    roots = real_roots(IntPoly([0, -1, 0, 1]))
    assert len(roots) == 3
    assert [r.rational_value for r in roots] == [-1, 0, 1]


def test_real_roots_disjoint_isolation():
    roots = real_roots(IntPoly([1, 0, -10, 0, 1]))
    assert len(roots) == 4
    for a, b in zip(roots, roots[1:]):
        assert a < b
        lo_a, hi_a = a.interval()
        lo_b, hi_b = b.interval()
        assert hi_a <= lo_b


def test_quad_complex_roots():
    plus, minus = quad_complex_roots(IntPoly([5, -2, 1]))
    assert plus.re.rational_value == 1
    assert plus.im.rational_value == 2
    assert minus.im.rational_value == -2
    # product of the conjugate pair is the constant term
    prod = plus * minus
    assert prod.is_rational() and prod.rational_value == 5
    total = plus + minus
    assert total.rational_value == 2


def test_complex_arithmetic_and_minpoly():
    plus, _ = quad_complex_roots(IntPoly([5, -2, 1]))
    i_unit, _ = quad_complex_roots(IntPoly([1, 0, 1]))
    assert (i_unit * i_unit).rational_value == -1
    w = plus * i_unit  # (1+2i)*i = -2+i
    assert w.re.rational_value == -2
    assert w.im.rational_value == 1
    assert w.minpoly == IntPoly([5, 4, 1])
    assert alg_is_zero(w * w.inverse() - rat(1))


def test_complex_with_irrational_parts():
    s2, s3 = sqrt_of(2), sqrt_of(3)
    w = AlgebraicNumber.from_pair(s2, s3)
    assert w.minpoly == IntPoly([25, 0, 2, 0, 1])
    conj = AlgebraicNumber.from_pair(s2, -s3)
    norm = w * conj
    assert norm.is_rational() and norm.rational_value == 5


def test_sqrt_positive_rational():
    r = sqrt_positive_rational(Fraction(9, 4))
    assert r.rational_value == Fraction(3, 2)
    s = sqrt_positive_rational(Fraction(2))
    assert s == sqrt_of(2)


def test_pow():
    s2 = sqrt_of(2)
    assert (s2 ** 4).rational_value == 4
    assert (s2 ** 0).rational_value == 1
    assert alg_is_zero(s2 ** -2 - rat(Fraction(1, 2)))


def test_degree_cap():
    old = algnum.ARITH_DEGREE_CAP
    algnum.set_arith_cap(4)
    try:
        a = real_roots(IntPoly([-2, 0, 0, 0, 1]))[-1]   # 2^(1/4)
        b = real_roots(IntPoly([-3, 0, 0, 0, 1]))[-1]   # 3^(1/4)
        with pytest.raises(DegreeCapExceeded):
            a + b
    finally:
        algnum.set_arith_cap(old)


def test_check_invariants_random_arithmetic():
    rng = random.Random(5150)
    pool = [sqrt_of(2), sqrt_of(3), sqrt_of(5), rat(Fraction(1, 3)),
            rat(-2), real_roots(IntPoly([-2, 0, 0, 1]))[0]]
    values = list(pool)
    for _ in range(40):
        a, b = rng.choice(values), rng.choice(values)
        op = rng.choice(["add", "sub", "mul"])
        c = alg_binary(op, a, b)
        check_invariants(c)
        if len(values) < 12:
            values.append(c)


def test_refinement_determinism():
    # byte-identical reprs for two independent computations
    a = (sqrt_of(2) + sqrt_of(3)) * sqrt_of(5)
    b = (sqrt_of(2) + sqrt_of(3)) * sqrt_of(5)
    assert repr(a) == repr(b)
