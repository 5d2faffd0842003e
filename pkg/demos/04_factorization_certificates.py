"""Decomposing a matrix into at most three certified factors.

Every invertible rational matrix is a product of at most three matrices
from the twisted class of the identity and its inverse class.  The
pipeline: shift by a diagonal D so A*D has distinct eigenvalues,
diagonalize exactly, build witnesses, and emit a machine-checkable
certificate.  The verifier rebuilds everything from the serialized form
and re-checks each identity, so tampering is caught.
"""

import copy
from fractions import Fraction

from twistcert import (QQ, FactorConfig, Matrix, Session, factor3,
                       factorization_to_obj, verify_certificate)

A = Matrix(QQ, [[Fraction(1), Fraction(1)],
                [Fraction(0), Fraction(2)]])
session = Session()
# this seed yields a non-scalar shift, so the factors do not commute
cert = factor3(A, session, FactorConfig(seed=1))

print("factors:", len(cert.factors))
for i, f in enumerate(cert.factors):
    print("  factor %d, sign %+d:" % (i + 1, f.sign))
    for row in f.matrix.rows:
        print("    ", [str(x) for x in row])

print("middle factor collapses under this phi:", cert.collapsible)

obj = factorization_to_obj(cert)
print("independent verification:", verify_certificate(obj))

# a single tampered entry flips the verdict
bad = copy.deepcopy(obj)
bad["target"]["entries"][0] += "+1"
print("verification after tampering:", verify_certificate(bad))

# reordering non-commuting factors also fails
bad = copy.deepcopy(obj)
bad["factors"] = [bad["factors"][2], bad["factors"][0],
                  bad["factors"][1]]
print("verification after reordering:", verify_certificate(bad))
