"""Exact matrix algebra over any field domain: products, inverses,
determinants, division-free characteristic polynomials, discriminants
and nullspaces.  Deterministic pivoting (first nonzero by row order)
keeps every result reproducible.
"""

from __future__ import annotations

from .errors import DomainMismatch, SingularMatrix


class Matrix:
    __slots__ = ("n", "rows", "domain")

    def __init__(self, domain, rows):
        self.domain = domain
        self.rows = [list(r) for r in rows]
        self.n = len(self.rows)
        for r in self.rows:
            if len(r) != self.n:
                raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, domain, n):
        z, o = domain.zero(), domain.one()
        return cls(domain, [[o if i == j else z for j in range(n)]
                            for i in range(n)])

    @classmethod
    def diagonal(cls, domain, diag):
        z = domain.zero()
        n = len(diag)
        return cls(domain, [[diag[i] if i == j else z for j in range(n)]
                            for i in range(n)])

    def _check(self, other):
        if self.domain != other.domain:
            raise DomainMismatch("matrices over different domains")
        if self.n != other.n:
            raise DomainMismatch("dimension mismatch")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.n == other.n and self.domain == other.domain
                and all(self.rows[i][j] == other.rows[i][j]
                        for i in range(self.n) for j in range(self.n)))

    def __mul__(self, other):
        self._check(other)
        z = self.domain.zero()
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = z
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(self.domain, out)

    def __sub__(self, other):
        self._check(other)
        return Matrix(self.domain,
                      [[self.rows[i][j] - other.rows[i][j]
                        for j in range(self.n)] for i in range(self.n)])

    def __add__(self, other):
        self._check(other)
        return Matrix(self.domain,
                      [[self.rows[i][j] + other.rows[i][j]
                        for j in range(self.n)] for i in range(self.n)])

    def scale(self, c):
        return Matrix(self.domain,
                      [[c * x for x in row] for row in self.rows])

    def is_identity(self):
        dz = self.domain
        for i in range(self.n):
            for j in range(self.n):
                x = self.rows[i][j]
                if i == j:
                    if not dz.is_zero(x - dz.one()):
                        return False
                elif not dz.is_zero(x):
                    return False
        return True

    def is_zero(self):
        return all(self.domain.is_zero(x) for row in self.rows
                   for x in row)

    def is_diagonal(self):
        for i in range(self.n):
            for j in range(self.n):
                if i != j and not self.domain.is_zero(self.rows[i][j]):
                    return False
        return True

    def diagonal_entries(self):
        return [self.rows[i][i] for i in range(self.n)]

    def transpose(self):
        return Matrix(self.domain,
                      [[self.rows[j][i] for j in range(self.n)]
                       for i in range(self.n)])

    def map(self, fn, domain=None):
        return Matrix(domain or self.domain,
                      [[fn(x) for x in row] for row in self.rows])

    def __repr__(self):
        return "Matrix(%d, %r)" % (self.n, self.rows)


def mat_mul(a, b):
    return a * b


def mat_det(m):
    """Determinant by Gaussian elimination with exact division."""
    n = m.n
    dz = m.domain
    rows = [list(r) for r in m.rows]
    det = dz.one()
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not dz.is_zero(rows[r][col]):
                piv = r
                break
        if piv is None:
            return dz.zero()
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = dz.zero() - det
        pivot = rows[col][col]
        det = det * pivot
        inv = dz.one() / pivot
        for r in range(col + 1, n):
            if not dz.is_zero(rows[r][col]):
                f = rows[r][col] * inv
                for c in range(col, n):
                    rows[r][c] = rows[r][c] - f * rows[col][c]
    return det


def mat_inv(m):
    """Inverse by Gauss-Jordan; first nonzero pivot by row order."""
    n = m.n
    dz = m.domain
    rows = [list(r) + [dz.one() if i == j else dz.zero()
                       for j in range(n)] for i, r in enumerate(m.rows)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not dz.is_zero(rows[r][col]):
                piv = r
                break
        if piv is None:
            raise SingularMatrix("matrix is singular")
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
        inv = dz.one() / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and not dz.is_zero(rows[r][col]):
                f = rows[r][col]
                rows[r] = [rows[r][c] - f * rows[col][c]
                           for c in range(2 * n)]
    return Matrix(m.domain, [row[n:] for row in rows])


class UniPoly:
    """Univariate polynomial over a scalar domain, constant term first."""

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain, coeffs):
        cs = list(coeffs)
        while cs and domain.is_zero(cs[-1]):
            cs.pop()
        self.domain = domain
        self.coeffs = cs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_monic(self):
        return (self.coeffs
                and self.domain.is_zero(self.coeffs[-1] - self.domain.one()))

    def evaluate_matrix(self, m):
        """Substitute a matrix for the variable (Cayley-Hamilton checks)."""
        acc = Matrix.identity(m.domain, m.n).scale(m.domain.zero())
        for c in reversed(self.coeffs):
            acc = acc * m + Matrix.identity(m.domain, m.n).scale(c)
        return acc

    def derivative(self):
        dz = self.domain
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            k = dz.zero()
            for _ in range(i):
                k = k + dz.one()
            out.append(k * c)
        return UniPoly(dz, out)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(self.domain.is_zero(a - b)
                   for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self):
        return "UniPoly(%r)" % (self.coeffs,)


def charpoly(m):
    """det(lambda*I - M) by the Berkowitz division-free algorithm.

    Valid over any commutative ring, so the same code path serves finite
    fields of small characteristic.
    """
    n = m.n
    dz = m.domain
    z, o = dz.zero(), dz.one()
    if n == 0:
        return UniPoly(dz, [o])
    a = m.rows
    # vector of charpoly coefficients, highest degree first; start with
    # the 1x1 leading principal submatrix: (lambda - a00)
    poly = [o, z - a[0][0]]
    for k in range(1, n):
        # principal submatrix M_k is (k+1)x(k+1); R = row a[k][:k],
        # C = column a[:k][k], A = leading k x k block
        R = [a[k][j] for j in range(k)]
        C = [a[i][k] for i in range(k)]
        A = [[a[i][j] for j in range(k)] for i in range(k)]
        # Toeplitz column: [1, -a_kk, -R*C, -R*A*C, -R*A^2*C, ...]
        col = [o, z - a[k][k]]
        vec = C
        for _ in range(k):
            s = z
            for i in range(k):
                s = s + R[i] * vec[i]
            col.append(z - s)
            vec = [sum_(dz, (A[i][j] * vec[j] for j in range(k)))
                   for i in range(k)]
        # multiply the lower-triangular Toeplitz matrix defined by `col`
        # with the previous coefficient vector
        new = []
        for i in range(len(poly) + 1):
            s = z
            for j in range(len(poly)):
                d = i - j
                if 0 <= d < len(col):
                    s = s + col[d] * poly[j]
            new.append(s)
        poly = new
    return UniPoly(dz, list(reversed(poly)))


def sum_(domain, items):
    acc = domain.zero()
    for x in items:
        acc = acc + x
    return acc


def charpoly_leibniz(m):
    """Independent oracle: expand det(lambda*I - M) by permutations."""
    import itertools

    n = m.n
    dz = m.domain
    # entries of lambda*I - M as linear polynomials [c0, c1]
    def entry(i, j):
        if i == j:
            return [dz.zero() - m.rows[i][j], dz.one()]
        return [dz.zero() - m.rows[i][j]]

    total = [dz.zero()]
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        prod = [dz.one()]
        for i in range(n):
            prod = _poly_mul(dz, prod, entry(i, perm[i]))
        if sign < 0:
            prod = [dz.zero() - c for c in prod]
        total = _poly_add(dz, total, prod)
    return UniPoly(dz, total)


def _poly_mul(dz, p, q):
    out = [dz.zero()] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def _poly_add(dz, p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else dz.zero())
            + (q[i] if i < len(q) else dz.zero()) for i in range(n)]


def _poly_rem(dz, p, q):
    """Remainder of p by q over a field domain (lists, constant first)."""
    r = list(p)
    while r and dz.is_zero(r[-1]):
        r.pop()
    dq = len(q) - 1
    inv = dz.one() / q[-1]
    while len(r) - 1 >= dq and r:
        c = r[-1] * inv
        dr = len(r) - 1
        for i in range(dq + 1):
            r[dr - dq + i] = r[dr - dq + i] - c * q[i]
        r.pop()
        while r and dz.is_zero(r[-1]):
            r.pop()
    return r


def resultant(p, q):
    """Resultant of two UniPolys over a field domain, via the Euclidean
    remainder sequence."""
    dz = p.domain
    a = list(p.coeffs)
    b = list(q.coeffs)
    if not a or not b:
        return dz.zero()
    res = dz.one()
    neg_one = dz.zero() - dz.one()
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            out = res
            for _ in range(da):
                out = out * b[0]
            return out
        r = _poly_rem(dz, a, b)
        if not r:
            return dz.zero()
        dr = len(r) - 1
        sign = neg_one if (da * db) % 2 else dz.one()
        lead_pow = dz.one()
        for _ in range(da - dr):
            lead_pow = lead_pow * b[-1]
        res = res * sign * lead_pow
        a, b = b, r


def discriminant(p):
    """(-1)^(n(n-1)/2) * Res(p, p') for monic p of degree >= 1; zero
    exactly when p has a repeated root."""
    if p.degree < 1:
        raise ValueError("degree must be at least 1")
    if not p.is_monic():
        raise ValueError("polynomial must be monic")
    dz = p.domain
    n = p.degree
    dp = p.derivative()
    if not dp.coeffs:
        return dz.zero()
    r = resultant(p, dp)
    if (n * (n - 1) // 2) % 2:
        r = dz.zero() - r
    return r


def nullspace(m):
    """Basis of the kernel by exact row reduction; [] iff invertible."""
    n = m.n
    dz = m.domain
    rows = [list(r) for r in m.rows]
    pivots = []
    rank = 0
    for col in range(n):
        piv = None
        for r in range(rank, n):
            if not dz.is_zero(rows[r][col]):
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = dz.one() / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(n):
            if r != rank and not dz.is_zero(rows[r][col]):
                f = rows[r][col]
                rows[r] = [rows[r][c] - f * rows[rank][c] for c in range(n)]
        pivots.append(col)
        rank += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [dz.zero()] * n
        vec[fc] = dz.one()
        for r, pc in enumerate(pivots):
            vec[pc] = dz.zero() - rows[r][fc]
        basis.append(vec)
    return basis
