"""Scalar domains pluggable into the matrix kernels.

A domain supplies zero, one, from_int, and a zero test; the scalars
themselves carry field arithmetic through their operators.
"""

from __future__ import annotations

from fractions import Fraction

from .algnum import AlgebraicNumber


class RationalDomain:
    name = "QQ"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def is_zero(self, x):
        return x == 0

    def __eq__(self, other):
        return isinstance(other, RationalDomain)

    def __hash__(self):
        return hash("QQ")


class AlgebraicDomain:
    name = "QQbar"

    def zero(self):
        return AlgebraicNumber.from_rational(0)

    def one(self):
        return AlgebraicNumber.from_rational(1)

    def from_int(self, n):
        return AlgebraicNumber.from_rational(n)

    def is_zero(self, x):
        return x.is_zero()

    def __eq__(self, other):
        return isinstance(other, AlgebraicDomain)

    def __hash__(self):
        return hash("QQbar")


class TowerDomain:
    def __init__(self, tower):
        self.tower = tower
        self.name = "tower"

    def zero(self):
        return self.tower.zero()

    def one(self):
        return self.tower.one()

    def from_int(self, n):
        return self.tower.const(n)

    def is_zero(self, x):
        return x.is_zero()

    def __eq__(self, other):
        return isinstance(other, TowerDomain) and other.tower is self.tower

    def __hash__(self):
        return hash(id(self.tower))


class FiniteFieldDomain:
    def __init__(self, field):
        self.field = field
        self.name = "GF(%d)" % field.q

    def zero(self):
        return self.field.elem(0)

    def one(self):
        return self.field.elem(1)

    def from_int(self, n):
        return self.field.from_int(n)

    def is_zero(self, x):
        return x.code == 0

    def __eq__(self, other):
        return (isinstance(other, FiniteFieldDomain)
                and other.field.p == self.field.p
                and other.field.k == self.field.k)

    def __hash__(self):
        return hash((self.field.p, self.field.k))


QQ = RationalDomain()
QQBAR = AlgebraicDomain()
