"""Brute-force ground truth over small finite matrix groups: exhaustive
enumeration of GL_n/SL_n over GF(p^k) with p^k <= 16, twisted-conjugacy
orbit partitions, Reidemeister numbers, the determinant-quotient
inequality, the subgroup generated by the unit class, and empirical
product-width profiles.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from .errors import EnumerationCapExceeded

# fixed irreducible moduli (constant-first coefficients) for the
# non-prime fields with p^k <= 16; irreducibility re-checked at startup
_MODULI = {
    (2, 2): (1, 1, 1),        # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),     # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
    (3, 2): (1, 0, 1),        # x^2 + 1
}

_PRIMES = (2, 3, 5, 7, 11, 13)


def _poly_is_irreducible(coeffs, p):
    """Exhaustive check for degree <= 4 over GF(p): no roots, and for
    degree 4 additionally no monic quadratic factor."""
    deg = len(coeffs) - 1
    for a in range(p):
        if sum(c * a ** i for i, c in enumerate(coeffs)) % p == 0:
            return False
    if deg == 4:
        for b in range(p):
            for c in range(p):
                # divide by x^2 + b x + c and test for zero remainder
                rem = list(coeffs)
                for i in range(deg, 1, -1):
                    q = rem[i] % p
                    rem[i] = 0
                    rem[i - 1] = (rem[i - 1] - q * b) % p
                    rem[i - 2] = (rem[i - 2] - q * c) % p
                if rem[0] % p == 0 and rem[1] % p == 0:
                    return False
    return True


class FiniteField:
    """GF(p^k), p^k <= 16; elements are dense codes 0..q-1 whose base-p
    digits are the polynomial coefficients (constant digit first)."""

    def __init__(self, p, k=1):
        if p not in _PRIMES:
            raise ValueError("unsupported characteristic %d" % p)
        if k == 1:
            self.modulus = (0, 1)
        else:
            if (p, k) not in _MODULI:
                raise ValueError("unsupported field GF(%d^%d)" % (p, k))
            self.modulus = _MODULI[p, k]
            assert _poly_is_irreducible(self.modulus, p), \
                "modulus table entry must be irreducible"
        self.p = p
        self.k = k
        self.q = p ** k
        self._build_tables()

    def _digits(self, code):
        out = []
        for _ in range(self.k):
            out.append(code % self.p)
            code //= self.p
        return out

    def _code(self, digits):
        code = 0
        for d in reversed(digits):
            code = code * self.p + d % self.p
        return code

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        self.add = [[0] * q for _ in range(q)]
        self.mul = [[0] * q for _ in range(q)]
        self.neg = [0] * q
        for a in range(q):
            da = self._digits(a)
            self.neg[a] = self._code([-x % p for x in da])
            for b in range(q):
                db = self._digits(b)
                self.add[a][b] = self._code(
                    [(x + y) % p for x, y in zip(da, db)])
                prod = [0] * (2 * k - 1)
                for i, x in enumerate(da):
                    for j, y in enumerate(db):
                        prod[i + j] = (prod[i + j] + x * y) % p
                # reduce modulo the defining polynomial (monic)
                for i in range(2 * k - 2, k - 1, -1):
                    c = prod[i]
                    if c:
                        prod[i] = 0
                        for j in range(k):
                            prod[i - k + j] = (prod[i - k + j]
                                               - c * self.modulus[j]) % p
                self.mul[a][b] = self._code(prod[:k])
        self.inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self.mul[a][b] == 1:
                    self.inv[a] = b
                    break
        self.frob = [self.power(a, p) for a in range(q)]

    def power(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self.mul[r][a]
            a = self.mul[a][a]
            e >>= 1
        return r

    def frobenius(self, a, f=1):
        for _ in range(f % self.k):
            a = self.frob[a]
        return a

    def elem(self, code):
        return code % self.q if self.k == 1 else code

    def from_int(self, n):
        return n % self.p

    def units(self):
        return list(range(1, self.q))


# --- flat-tuple matrix helpers over a finite field --------------------

def fmat_mul(field, n, a, b):
    mul, add = field.mul, field.add
    out = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            s = 0
            for k in range(n):
                s = add[s][mul[a[i * n + k]][b[k * n + j]]]
            out[i * n + j] = s
    return tuple(out)


def fmat_det(field, n, a):
    mul, add, neg = field.mul, field.add, field.neg
    if n == 1:
        return a[0]
    if n == 2:
        return add[mul[a[0]][a[3]]][neg[mul[a[1]][a[2]]]]
    det = 0
    for perm in itertools.permutations(range(n)):
        term = 1
        for i in range(n):
            term = mul[term][a[i * n + perm[i]]]
        inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                         if perm[i] > perm[j])
        det = add[det][term if inversions % 2 == 0 else neg[term]]
    return det


def fmat_identity(n):
    return tuple(1 if i == j else 0 for i in range(n) for j in range(n))


def fmat_inv(field, n, a):
    """Gauss-Jordan inverse; input must be invertible."""
    mul, add, neg, inv = field.mul, field.add, field.neg, field.inv
    rows = [[a[i * n + j] for j in range(n)]
            + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        s = inv[rows[col][col]]
        rows[col] = [mul[s][x] for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                c = rows[r][col]
                rows[r] = [add[x][neg[mul[c][y]]]
                           for x, y in zip(rows[r], rows[col])]
    return tuple(rows[i][n + j] for i in range(n) for j in range(n))


def fmat_transpose(n, a):
    return tuple(a[j * n + i] for i in range(n) for j in range(n))


@dataclass
class FiniteGroupSpec:
    kind: str  # "GL" | "SL"
    n: int
    field: FiniteField
    cap: int = 10 ** 6

    def label(self):
        return "%s%d(F%d)" % (self.kind, self.n, self.field.q)


class FiniteGroup:
    """Exhaustive enumeration with dense element ids in row-major entry
    radix order, so all outputs are reproducible."""

    def __init__(self, spec):
        field, n = spec.field, spec.n
        if field.q ** (n * n) > spec.cap:
            raise EnumerationCapExceeded(
                "%d candidate matrices exceed the cap %d"
                % (field.q ** (n * n), spec.cap))
        self.spec = spec
        self.field = field
        self.n = n
        elems = []
        for flat in itertools.product(range(field.q), repeat=n * n):
            det = fmat_det(field, n, flat)
            if det == 0:
                continue
            if spec.kind == "SL" and det != 1:
                continue
            elems.append(flat)
        self.elems = elems
        self.index = {m: i for i, m in enumerate(elems)}
        self.identity = self.index[fmat_identity(n)]
        self._inv = [self.index[fmat_inv(field, n, m)] for m in elems]

    def __len__(self):
        return len(self.elems)

    def mul(self, a, b):
        return self.index[fmat_mul(self.field, self.n,
                                   self.elems[a], self.elems[b])]

    def inv(self, a):
        return self._inv[a]

    def order_formula(self):
        q, n = self.field.q, self.n
        gl = 1
        for i in range(n):
            gl *= q ** n - q ** i
        return gl if self.spec.kind == "GL" else gl // (q - 1)


@dataclass
class AutoDescriptor:
    """Composition of primitive automorphism steps, applied in order.

    Steps: ("frobenius", f) entrywise x -> x^(p^f); ("inner", gid)
    x -> g x g^-1; ("transpose_inverse",) x -> (x^T)^-1, exploratory.
    """
    steps: list

    @classmethod
    def parse(cls, text, allow_exploratory=False):
        if text.startswith("compose:"):
            parts = text[len("compose:"):].split("+")
        else:
            parts = [text]
        steps = []
        for part in parts:
            if part == "id":
                continue
            if part.startswith("frobenius:"):
                steps.append(("frobenius", int(part.split(":")[1])))
            elif part.startswith("inner:"):
                steps.append(("inner", int(part.split(":")[1])))
            elif part == "transpose-inverse":
                if not allow_exploratory:
                    raise ValueError(
                        "transpose-inverse requires the exploratory flag")
                steps.append(("transpose_inverse",))
            else:
                raise ValueError("unknown automorphism %r" % part)
        return cls(steps)

    def label(self):
        if not self.steps:
            return "id"
        names = []
        for step in self.steps:
            if step[0] == "frobenius":
                names.append("frobenius:%d" % step[1])
            elif step[0] == "inner":
                names.append("inner:%d" % step[1])
            else:
                names.append("transpose-inverse")
        if len(names) == 1:
            return names[0]
        return "compose:" + "+".join(names)


def identity_auto():
    return AutoDescriptor([])


def build_auto(group, descriptor):
    """Image table (list indexed by element id) for the descriptor;
    checked to be a bijective homomorphism."""
    field, n = group.field, group.n
    images = list(range(len(group)))
    for step in descriptor.steps:
        if step[0] == "frobenius":
            f = step[1]
            table = [group.index[tuple(field.frobenius(x, f) for x in m)]
                     for m in group.elems]
        elif step[0] == "inner":
            g = step[1]
            ginv = group.inv(g)
            table = [group.mul(group.mul(g, a), ginv)
                     for a in range(len(group))]
        elif step[0] == "transpose_inverse":
            table = [group.index[fmat_inv(field, n, fmat_transpose(n, m))]
                     for m in group.elems]
        else:
            raise ValueError("unknown step %r" % (step,))
        images = [table[x] for x in images]
    assert len(set(images)) == len(group), "images must be a bijection"
    return images


class _DSU:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra


@dataclass
class TwistedPartition:
    classes: list
    reidemeister_number: int
    descriptor: AutoDescriptor

    def class_of(self, x):
        for i, cls in enumerate(self.classes):
            if x in cls:
                return i
        raise KeyError(x)


def twisted_partition(group, descriptor, workers=1):
    """Orbit partition of x ~ z * x * phi(z)^-1 by disjoint-set closure
    over all z; classes ordered by minimal element id.  The conjugator
    set is chunked across `workers` slices whose union relations merge
    to the same partition for every worker count.
    """
    images = build_auto(group, descriptor)
    size = len(group)
    phi_inv = [group.inv(images[z]) for z in range(size)]
    dsu = _DSU(size)
    workers = max(1, workers)
    chunk = (size + workers - 1) // workers
    for w in range(workers):
        for z in range(w * chunk, min((w + 1) * chunk, size)):
            zi = phi_inv[z]
            for x in range(size):
                dsu.union(x, group.mul(group.mul(z, x), zi))
    buckets = {}
    for x in range(size):
        buckets.setdefault(dsu.find(x), []).append(x)
    classes = [sorted(v) for v in buckets.values()]
    classes.sort(key=lambda c: c[0])
    return TwistedPartition(classes=classes,
                            reidemeister_number=len(classes),
                            descriptor=descriptor)


def _induced_unit_map(group, images):
    """The map psi on F_q* with det(phi(X)) = psi(det(X)); well defined
    because SL is phi-admissible -- asserted element by element."""
    field, n = group.field, group.n
    psi = {}
    for xid, m in enumerate(group.elems):
        d = fmat_det(field, n, m)
        image_det = fmat_det(field, n, group.elems[images[xid]])
        if d in psi:
            assert psi[d] == image_det, "determinant quotient ill-defined"
        else:
            psi[d] = image_det
    return psi


def _unit_partition(field, psi):
    """Twisted classes of u ~ z * u * psi(z)^-1 in the abelian F_q*."""
    units = field.units()
    pos = {u: i for i, u in enumerate(units)}
    dsu = _DSU(len(units))
    for z in units:
        shift = field.mul[z][field.inv[psi[z]]]
        for u in units:
            dsu.union(pos[u], pos[field.mul[u][shift]])
    return len({dsu.find(i) for i in range(len(units))})


def quotient_check(group, descriptor):
    """(R on the group, R on the determinant quotient F_q*, and whether
    the quotient number is <= the group number)."""
    part = twisted_partition(group, descriptor)
    images = build_auto(group, descriptor)
    psi = _induced_unit_map(group, images)
    r_quot = _unit_partition(group.field, psi)
    return part.reidemeister_number, r_quot, r_quot <= part.reidemeister_number


def unit_class_subgroup(group, descriptor):
    """Subgroup generated by the twisted class of the identity, plus a
    brute-force normality check (expected true)."""
    part = twisted_partition(group, descriptor)
    seed = next(c for c in part.classes if group.identity in c)
    members = set(seed)
    frontier = list(seed)
    while frontier:
        new = []
        for a in frontier:
            ia = group.inv(a)
            if ia not in members:
                members.add(ia)
                new.append(ia)
            for b in list(members):
                for c in (group.mul(a, b), group.mul(b, a)):
                    if c not in members:
                        members.add(c)
                        new.append(c)
        frontier = new
    is_normal = all(group.mul(group.mul(g, h), group.inv(g)) in members
                    for g in range(len(group)) for h in members)
    return sorted(members), is_normal


def width_profile(group, descriptor):
    """Breadth-first product closure of S = [e] u [e]^-1: returns
    (generates, width or None, layer sizes up to stabilization)."""
    part = twisted_partition(group, descriptor)
    unit_class = next(c for c in part.classes if group.identity in c)
    S = set(unit_class) | {group.inv(x) for x in unit_class}
    layer = set(S)
    sizes = [len(layer)]
    width = 1 if len(layer) == len(group) else None
    k = 1
    while True:
        nxt = {group.mul(a, s) for a in layer for s in S}
        k += 1
        if nxt == layer:
            break
        layer = nxt
        sizes.append(len(layer))
        if width is None and len(layer) == len(group):
            width = k
    generates = len(layer) == len(group)
    return generates, width, sizes


def random_inner_descriptors(group, count, seed=0):
    rng = random.Random(seed)
    return [AutoDescriptor([("inner", rng.randrange(len(group)))])
            for _ in range(count)]


def report_obj(group, descriptor):
    """Machine-readable report for the CLI surface."""
    part = twisted_partition(group, descriptor)
    generates, width, sizes = width_profile(group, descriptor)
    return {
        "group": group.spec.label(),
        "automorphism": descriptor.label(),
        "order": len(group),
        "reidemeisterNumber": part.reidemeister_number,
        "classSizes": [len(c) for c in part.classes],
        "width": {"generates": generates, "width": width,
                  "layerSizes": sizes},
    }
