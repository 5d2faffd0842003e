"""Rational function field towers and their automorphisms.

Generators are adjoined in append-only blocks; an automorphism is given
by an invertible linear image matrix on each block and extends the
identity on all algebraic constants.  Every element is kept in a
canonical reduced form, so equality is plain structural comparison.
"""

from twistcert import Session

session = Session()

# adjoin t with phi(t) = 2t
session.extend_block(["t"], [[2]])
tower = session.tower
phi = session.auto
t = tower.gen("t")

e = (t + 1) / (t - 1)
print("e       =", e)
print("phi(e)  =", phi.apply(e))
print("phi^-1(phi(e)) == e:", phi.apply_inverse(phi.apply(e)) == e)

# a second block with a genuinely mixing image: u -> u + v, v -> v
session.extend_block(["u", "v"], [[1, 1], [0, 1]])
u, v = tower.gen("u"), tower.gen("v")
print("phi(u*v + u) =", phi.apply(u * v + u))
print("phi^-1(u)    =", phi.apply_inverse(u))

# images may reference earlier generators: w -> t*w
session.extend_block(["w"], [[t]])
w = tower.gen("w")
print("phi(w)  =", phi.apply(w))
print("phi(w) / w =", phi.apply(w) / w)

# the tower remembers its construction order
print("tower version:", session.version)
print("generators:", [tower.name_of(i)
                      for i in range(tower.num_generators)])
