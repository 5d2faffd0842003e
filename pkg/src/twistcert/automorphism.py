"""Field automorphisms given by invertible linear images on the
transcendental generator blocks of a tower, fixing every algebraic
coefficient.  Extension adjoins a fresh block together with the linear
image of its generators, keeping an exact inverse as the witness that
the extended map is still an automorphism.
"""

from __future__ import annotations

from .domains import TowerDomain
from .errors import SingularImageMatrix, UncoveredGenerator
from .funcfield import FieldTower, TowerElement
from .linalg import Matrix, mat_det, mat_inv


class _BlockImages:
    __slots__ = ("forward", "backward", "fwd_elems", "bwd_elems")

    def __init__(self, forward, backward, fwd_elems, bwd_elems):
        self.forward = forward      # image matrix C (rows of TowerElements)
        self.backward = backward    # phi^-1-transported C^-1
        self.fwd_elems = fwd_elems  # generator index -> image TowerElement
        self.bwd_elems = bwd_elems


class AutomorphismSpec:
    """Images for every covered block; identity on the algebraic base."""

    def __init__(self, tower):
        self.tower = tower
        self._blocks = []

    @property
    def version(self):
        return len(self._blocks)

    def covers(self, element):
        covered = sum(self.tower.blocks[b].arity
                      for b in range(len(self._blocks)))
        return all(idx < covered for idx in element.variables())

    def _image_maps(self, inverse):
        out = {}
        for data in self._blocks:
            out.update(data.bwd_elems if inverse else data.fwd_elems)
        return out

    def _substitute(self, element, images):
        for idx in element.variables():
            if idx not in images:
                raise UncoveredGenerator(
                    "generator %r not covered by the automorphism"
                    % (self.tower.name_of(idx),))
        num = self._subst_poly(element.num, images)
        den = self._subst_poly(element.den, images)
        return num / den

    def _subst_poly(self, poly, images):
        tower = self.tower
        acc = tower.zero()
        for mono, coeff in poly.items():
            term = tower.const(coeff)
            for idx, e in mono:
                term = term * images[idx] ** e
            acc = acc + term
        return acc

    def apply(self, element):
        """Ring-homomorphic image; algebraic coefficients are fixed."""
        if element.tower is not self.tower:
            raise UncoveredGenerator("element from a different tower")
        return self._substitute(element, self._image_maps(inverse=False))

    def apply_inverse(self, element):
        if element.tower is not self.tower:
            raise UncoveredGenerator("element from a different tower")
        return self._substitute(element, self._image_maps(inverse=True))

    def apply_matrix(self, m):
        return m.map(self.apply)

    def apply_matrix_inverse(self, m):
        return m.map(self.apply_inverse)

    def block_images(self):
        """Per-block forward image matrices (for serialization)."""
        return [data.forward for data in self._blocks]

    def _extend(self, names, images):
        """Register images for the freshly appended block (internal; the
        block itself is added by Session.extend_block)."""
        tower = self.tower
        block = tower.blocks[len(self._blocks)]
        assert block.names == tuple(names)
        m = len(names)
        dom = TowerDomain(tower)
        C = Matrix(dom, images)
        Cinv = mat_inv(C)  # SingularMatrix cannot happen: det checked
        # backward map: phi^-1(g_i) = sum_j phi^-1(Cinv[i][j]) g_j
        backward = [[self.apply_inverse(Cinv.rows[i][j]) for j in range(m)]
                    for i in range(m)]
        gens = [tower.gen(nm) for nm in names]
        fwd_elems = {}
        bwd_elems = {}
        for i in range(m):
            fwd = tower.zero()
            bwd = tower.zero()
            for j in range(m):
                fwd = fwd + images[i][j] * gens[j]
                bwd = bwd + backward[i][j] * gens[j]
            fwd_elems[block.start + i] = fwd
            bwd_elems[block.start + i] = bwd
        self._blocks.append(_BlockImages(images, backward,
                                         fwd_elems, bwd_elems))
        return block


class Session:
    """Exclusive handle on one tower + automorphism pair.

    Tower extension happens only through this object; applying the
    automorphism is pure and safe on any snapshot.
    """

    def __init__(self):
        self.tower = FieldTower()
        self.auto = AutomorphismSpec(self.tower)

    @property
    def version(self):
        return self.tower.version

    def domain(self):
        return TowerDomain(self.tower)

    def extend_block(self, names, images):
        """Adjoin fresh generators g_1..g_m with phi(g_i) given by the
        rows of an invertible m x m image matrix over the current tower.
        """
        m = len(names)
        if len(images) != m or any(len(r) != m for r in images):
            raise ValueError("image matrix shape must match the arity")
        rows = []
        for r in images:
            rows.append([x if isinstance(x, TowerElement)
                         else self.tower.const(x) for x in r])
        for r in rows:
            for x in r:
                if x.tower is not self.tower:
                    raise UncoveredGenerator("image entry from another tower")
        dom = TowerDomain(self.tower)
        det = mat_det(Matrix(dom, rows))
        if det.is_zero():
            raise SingularImageMatrix("image matrix has zero determinant")
        self.tower.add_block(names)
        return self.auto._extend(names, rows)

    def fresh_names(self, prefix, count):
        """Deterministic fresh generator names: prefix + block ordinal."""
        base = self.tower.version + 1
        if count == 1:
            names = ["%s%d" % (prefix, base)]
        else:
            names = ["%s%d_%d" % (prefix, base, i + 1) for i in range(count)]
        # bump the ordinal if an earlier block used the same prefix
        while any(self.tower.has_generator(nm) for nm in names):
            base += 1
            if count == 1:
                names = ["%s%d" % (prefix, base)]
            else:
                names = ["%s%d_%d" % (prefix, base, i + 1)
                         for i in range(count)]
        return names


def auto_apply(phi, element):
    return phi.apply(element)


def auto_apply_inverse(phi, element):
    return phi.apply_inverse(element)


def extend_block(session, names, images):
    return session.extend_block(names, images)
