"""Witnessing twisted-conjugacy class membership.

A matrix X lies in the twisted class of the identity when some T
satisfies T^-1 * phi(T) = X.  The engine manufactures such a T by
adjoining a block of n^2 fresh transcendentals whose images under phi
are chosen so that the identity holds by construction -- and then
re-checks it by exact arithmetic.
"""

from fractions import Fraction

from twistcert import (QQ, Matrix, Session, class_witness,
                       diagonal_witness, mat_inv, scalar_witness)
from twistcert.twisted import lift_rational_matrix

X = Matrix(QQ, [[Fraction(1), Fraction(2)],
                [Fraction(3), Fraction(5)]])
session = Session()
result = class_witness(X, session)
phi = session.auto

print("target X:")
for row in X.rows:
    print("  ", row)
print("witness T:")
for row in result.T.rows:
    print("  ", [str(x) for x in row])

check = mat_inv(result.T) * phi.apply_matrix(result.T)
print("T^-1 * phi(T) == X:", check == lift_rational_matrix(X, session))

# scalar targets take a single fresh generator
y = scalar_witness(Fraction(5), session)
print("scalar witness y with y/phi(y) = 5:", y,
      "->", y * phi.apply(y).inverse())

# diagonal targets get one scalar witness per entry
D = lift_rational_matrix(Matrix(QQ, [[Fraction(2), Fraction(0)],
                                     [Fraction(0), Fraction(-3)]]),
                         session)
Y = diagonal_witness(D, session)
print("diagonal witness:", [str(Y.rows[i][i]) for i in range(2)])
