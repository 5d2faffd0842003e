"""Twisted-conjugacy machinery over the symbolic engine: twisted
conjugation, witness construction by transcendental adjunction, the
distinct-eigenvalue diagonal shift, exact diagonalization, and the
decomposition of an invertible rational matrix into at most three
factors from the twisted class of the identity and its inverse class.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import algnum, intpoly
from .algnum import AlgebraicNumber
from .domains import QQ, QQBAR, TowerDomain
from .errors import (NotDiagonal, RepeatedEigenvalues, ShiftNotFound,
                     SingularMatrix, UnsupportedSplitting, ZeroElement)
from .linalg import Matrix, charpoly, discriminant, mat_det, mat_inv, nullspace

ENGINE_VERSION = "twistcert-0.1.0"


def twisted_conjugate(z, y, phi):
    """z * y * phi(z)^-1 with phi acting entrywise."""
    pz = phi.apply_matrix(z)
    return z * y * mat_inv(pz)


@dataclass
class WitnessResult:
    T: Matrix
    block: object
    tower_version: int


def lift_rational_matrix(m, session):
    """Rational matrix -> matrix of constants over the session tower."""
    tower = session.tower
    return Matrix(TowerDomain(tower),
                  [[tower.const(x) for x in row] for row in m.rows])


def lift_algebraic_matrix(m, session):
    tower = session.tower
    return Matrix(TowerDomain(tower),
                  [[tower.const(x) for x in row] for row in m.rows])


def class_witness(X, session):
    """Adjoin a fresh n^2-generator block T with phi(T) = T*X, so that
    T^-1 * phi(T) = X exactly; X must be invertible over the tower.
    """
    if X.domain == QQ:
        X = lift_rational_matrix(X, session)
    n = X.n
    if mat_det(X).is_zero():
        raise SingularMatrix("witness target must be invertible")
    base = session.tower.version + 1
    while True:
        names = ["t%d_%d%d" % (base, i + 1, j + 1)
                 for i in range(n) for j in range(n)]
        if not any(session.tower.has_generator(nm) for nm in names):
            break
        base += 1
    zero = session.tower.zero()
    # phi(t_ij) = sum_k t_ik x_kj: block image is I_n (x) X^T, invertible
    # exactly because X is -- the algebraic-independence argument
    images = []
    for i in range(n):
        for j in range(n):
            row = []
            for k in range(n):
                for l in range(n):
                    row.append(X.rows[l][j] if k == i else zero)
            images.append(row)
    block = session.extend_block(names, images)
    dom = TowerDomain(session.tower)
    T = Matrix(dom, [[session.tower.gen(names[i * n + j])
                      for j in range(n)] for i in range(n)])
    det = mat_det(T)
    assert not det.is_zero()
    check = mat_inv(T) * session.auto.apply_matrix(T)
    assert check == X, "witness identity failed"
    return WitnessResult(T=T, block=block, tower_version=session.version)


def scalar_witness(x, session, prefix="y"):
    """Adjoin fresh y with phi(y) = x^-1 * y, so y * phi(y)^-1 = x."""
    if isinstance(x, AlgebraicNumber):
        x = session.tower.const(x)
    if not hasattr(x, "tower"):
        x = session.tower.const(x)
    if x.is_zero():
        raise ZeroElement("witness target must be nonzero")
    names = session.fresh_names(prefix, 1)
    session.extend_block(names, [[x.inverse()]])
    return session.tower.gen(names[0])


def diagonal_witness(D, session):
    """Diagonal Y with Y * phi(Y)^-1 = D, one scalar witness per entry."""
    if not D.is_diagonal():
        raise NotDiagonal("input must be diagonal")
    entries = D.diagonal_entries()
    for x in entries:
        bad = x.is_zero() if hasattr(x, "is_zero") else x == 0
        if bad:
            raise ZeroElement("diagonal entries must be nonzero")
    ys = [scalar_witness(x, session) for x in entries]
    return Matrix.diagonal(TowerDomain(session.tower), ys)


@dataclass
class ShiftConfig:
    seed: int = 0
    range: int = 10
    max_attempts: int = 100


def distinct_shift(A, config=None):
    """Diagonal D with positive integer entries making charpoly(A*D)
    squarefree, found by seeded sampling with a deterministic grid
    fallback after max_attempts/2 samples.
    """
    config = config or ShiftConfig()
    n = A.n
    if QQ.is_zero(mat_det(A)):
        raise SingularMatrix("input must be invertible")
    rng = random.Random(config.seed)
    grid = itertools.product(range(1, config.range + 1), repeat=n)
    for attempt in range(config.max_attempts):
        if attempt < config.max_attempts // 2:
            diag = [rng.randint(1, config.range) for _ in range(n)]
        else:
            try:
                diag = list(next(grid))
            except StopIteration:
                break
        D = Matrix.diagonal(QQ, [Fraction(d) for d in diag])
        if not QQ.is_zero(discriminant(charpoly(A * D))):
            return D
    raise ShiftNotFound(
        "no distinct-eigenvalue shift within %d attempts"
        % (config.max_attempts,))


def _eigenvalues_of_charpoly(cp):
    """Distinct eigenvalues of a squarefree rational charpoly, in a
    deterministic order; raises UnsupportedSplitting when an irreducible
    factor of degree >= 3 has non-real roots.
    """
    ip = intpoly.from_fractions(cp.coeffs)
    factors = algnum.factor_rational(ip, degree_cap=max(8, ip.degree))
    values = []
    for fac, _ in factors:
        if fac.degree == 1:
            c0, c1 = fac.coeffs
            values.append(AlgebraicNumber.from_rational(Fraction(-c0, c1)))
            continue
        roots = algnum.real_roots(fac)
        if len(roots) == fac.degree:
            values.extend(roots)
            continue
        if fac.degree == 2:
            plus, minus = algnum.quad_complex_roots(fac)
            values.extend([plus, minus])
            continue
        raise UnsupportedSplitting(
            "irreducible factor of degree %d has non-real roots"
            % (fac.degree,))
    return values


def eigen_split(M):
    """Exact diagonalization M = X B X^-1 for a rational matrix with
    squarefree characteristic polynomial; eigenvector columns are scaled
    to leading coordinate one.
    """
    cp = charpoly(M)
    if QQ.is_zero(discriminant(cp)):
        raise RepeatedEigenvalues("characteristic polynomial not squarefree")
    values = _eigenvalues_of_charpoly(cp)
    n = M.n
    assert len(values) == n
    Ma = M.map(lambda x: AlgebraicNumber.from_rational(x), QQBAR)
    cols = []
    for lam in values:
        shifted = Ma - Matrix.identity(QQBAR, n).scale(lam)
        kernel = nullspace(shifted)
        assert len(kernel) == 1, "distinct eigenvalue must be simple"
        v = kernel[0]
        lead = next(x for x in v if not x.is_zero())
        inv = lead.inverse()
        cols.append([x * inv for x in v])
    X = Matrix(QQBAR, [[cols[j][i] for j in range(n)] for i in range(n)])
    B = Matrix.diagonal(QQBAR, values)
    assert X * B == Ma * X, "diagonalization check failed"
    return X, B


@dataclass
class SplitPair:
    matrix: Matrix
    witness: Matrix


def conj_split(x, y, phi):
    """Conjugation of x*phi(x)^-1 by y, split per the two-factor product
    identity: returns c1 (witness y^-1 x) and c2 (witness y) with
    y^-1 (x phi(x)^-1) y = c1 * c2^-1 exactly.
    """
    xinv_w = mat_inv(y) * x
    c1 = xinv_w * mat_inv(phi.apply_matrix(xinv_w))
    c2 = mat_inv(y) * phi.apply_matrix(y)
    lhs = mat_inv(y) * (x * mat_inv(phi.apply_matrix(x))) * y
    assert lhs == c1 * mat_inv(c2), "product identity failed"
    return SplitPair(c1, xinv_w), SplitPair(c2, y)


@dataclass
class Factor:
    matrix: Matrix
    sign: int
    witness: Matrix


@dataclass
class TwistedFactorization:
    target: Matrix
    factors: list
    tower_version: int
    session: object
    seed: int
    collapsible: bool = False
    engine_version: str = ENGINE_VERSION

    def check(self):
        """Re-check all membership identities and the product."""
        phi = self.session.auto
        if len(self.factors) > 3:
            return False
        prod = Matrix.identity(self.target.domain, self.target.n)
        for f in self.factors:
            member = f.witness * mat_inv(phi.apply_matrix(f.witness))
            expect = f.matrix if f.sign == 1 else mat_inv(f.matrix)
            if not member == expect:
                return False
            prod = prod * f.matrix
        return prod == self.target


@dataclass
class FactorConfig:
    seed: int = 0
    range: int = 10
    max_attempts: int = 100
    split_retries: int = 10


def factor3(A, session, config=None):
    """Decompose invertible rational A into at most three certified
    factors from the twisted class of the identity and its inverse
    class, following the general shift / diagonalize / conjugate
    pipeline with phi treated as a black box.
    """
    config = config or FactorConfig()
    if QQ.is_zero(mat_det(A)):
        raise SingularMatrix("input must be invertible")
    At = lift_rational_matrix(A, session)
    phi = session.auto

    if At.is_identity():
        cert = TwistedFactorization(target=At, factors=[],
                                    tower_version=session.version,
                                    session=session, seed=config.seed)
        assert cert.check()
        return cert

    if A.is_diagonal():
        Y = diagonal_witness(At, session)
        At = lift_rational_matrix(A, session)
        factors = [Factor(matrix=At, sign=1, witness=Y)]
        cert = TwistedFactorization(target=At, factors=factors,
                                    tower_version=session.version,
                                    session=session, seed=config.seed)
        assert cert.check()
        return cert

    # find D with A*D having distinct eigenvalues and a supported
    # (real-or-quadratic) splitting field structure
    last_err = None
    X = B = D = None
    for attempt in range(config.split_retries):
        shift_cfg = ShiftConfig(seed=config.seed + 7919 * attempt,
                                range=config.range,
                                max_attempts=config.max_attempts)
        D = distinct_shift(A, shift_cfg)
        try:
            X, B = eigen_split(A * D)
            break
        except UnsupportedSplitting as err:
            last_err = err
            X = B = None
    if X is None:
        raise last_err or UnsupportedSplitting("no supported shift found")

    Xt = lift_algebraic_matrix(X, session)
    Bt = lift_algebraic_matrix(B, session)
    Y_B = diagonal_witness(Bt, session)

    W1 = Xt * Y_B
    F1 = W1 * mat_inv(phi.apply_matrix(W1))
    F2_inv = Xt * mat_inv(phi.apply_matrix(Xt))
    F2 = mat_inv(F2_inv)
    Dt = lift_rational_matrix(D, session)
    D_inv = mat_inv(Dt)
    Y3 = diagonal_witness(D_inv, session)
    F3 = D_inv

    At = lift_rational_matrix(A, session)
    ADt = lift_rational_matrix(A * D, session)
    assert F1 * F2 == ADt, "two-factor stage must rebuild A*D"
    assert F1 * F2 * F3 == At, "product must rebuild A"

    factors = [Factor(matrix=F1, sign=1, witness=W1),
               Factor(matrix=F2, sign=-1, witness=Xt),
               Factor(matrix=F3, sign=1, witness=Y3)]
    cert = TwistedFactorization(target=At, factors=factors,
                                tower_version=session.version,
                                session=session, seed=config.seed,
                                collapsible=F2.is_identity())
    assert cert.check()
    return cert
