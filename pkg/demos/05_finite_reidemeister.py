"""Brute-force ground truth over small finite matrix groups.

Twisted conjugacy x ~ z * x * phi(z)^-1 partitions a group into
classes; the Reidemeister number counts them.  Exhaustive enumeration
over GF(p^k) gives exact answers to compare against the symbolic
machinery's claims.
"""

from twistcert import (AutoDescriptor, FiniteField, FiniteGroup,
                       FiniteGroupSpec, quotient_check,
                       twisted_partition, unit_class_subgroup,
                       width_profile)
from twistcert.finite import identity_auto

frob = AutoDescriptor.parse("frobenius:1")

# F4*: the Frobenius folds all three units into one class
g = FiniteGroup(FiniteGroupSpec("GL", 1, FiniteField(2, 2)))
print("R(GL1(F4), Frobenius) =",
      twisted_partition(g, frob).reidemeister_number)

# F9*: two classes (the squares and the non-squares)
g9 = FiniteGroup(FiniteGroupSpec("GL", 1, FiniteField(3, 2)))
print("R(GL1(F9), Frobenius) =",
      twisted_partition(g9, frob).reidemeister_number)

# GL2(F2) is the symmetric group on three letters: three classes
g2 = FiniteGroup(FiniteGroupSpec("GL", 2, FiniteField(2)))
part = twisted_partition(g2, identity_auto())
print("R(GL2(F2), id) =", part.reidemeister_number,
      "with class sizes", [len(c) for c in part.classes])

# the determinant quotient never has more classes than the group
r_g, r_q, ok = quotient_check(g2, identity_auto())
print("quotient bound on GL2(F2): %d <= %d is %s" % (r_q, r_g, ok))

# the subgroup generated by the class of the identity is normal
sub, normal = unit_class_subgroup(g9, frob)
print("unit-class subgroup of F9* has order", len(sub),
      "and is normal:", normal)

# how many class elements multiply out to cover the whole group?
g4 = FiniteGroup(FiniteGroupSpec("GL", 2, FiniteField(2, 2)))
generates, width, sizes = width_profile(g4, frob)
print("GL2(F4) width profile: generates=%s width=%s layers=%s"
      % (generates, width, sizes))
