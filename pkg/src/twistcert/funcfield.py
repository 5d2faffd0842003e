"""Multivariate rational functions over algebraic-number coefficients in
the transcendental generators of an append-only field tower.

Polynomials are sparse dicts {monomial: coefficient}; a monomial is a
tuple of (generator index, exponent) pairs sorted by index.  The term
order is graded lexicographic over the flattened generator list, which
keeps canonical forms stable when the tower is later extended.  A
TowerElement is a reduced fraction num/den with gcd one and the leading
coefficient of the denominator equal to one; this canonical form makes
equality a dict comparison.
"""

from __future__ import annotations

from fractions import Fraction

from .algnum import AlgebraicNumber
from .errors import (DenominatorVanishes, DivisionByZero, MissingAssignment,
                     NameCollision, TowerMismatch)

_ZERO = AlgebraicNumber.from_rational(0)
_ONE = AlgebraicNumber.from_rational(1)


class TowerGeneratorBlock:
    __slots__ = ("names", "start")

    def __init__(self, names, start):
        assert len(names) >= 1
        self.names = tuple(names)
        self.start = start

    @property
    def arity(self):
        return len(self.names)

    def __repr__(self):
        return "TowerGeneratorBlock(%r)" % (list(self.names),)


class FieldTower:
    """Ordered blocks of globally-unique transcendental generators.

    Append-only: extension never invalidates existing elements, and the
    version (block count) identifies a snapshot.
    """

    def __init__(self):
        self.blocks = []
        self.gen_names = []
        self._index = {}

    @property
    def version(self):
        return len(self.blocks)

    @property
    def num_generators(self):
        return len(self.gen_names)

    def add_block(self, names):
        names = tuple(names)
        for nm in names:
            if nm in self._index:
                raise NameCollision("generator %r already exists" % (nm,))
        if len(set(names)) != len(names):
            raise NameCollision("duplicate names within block")
        block = TowerGeneratorBlock(names, len(self.gen_names))
        for nm in names:
            self._index[nm] = len(self.gen_names)
            self.gen_names.append(nm)
        self.blocks.append(block)
        return block

    def index_of(self, name):
        return self._index[name]

    def has_generator(self, name):
        return name in self._index

    def name_of(self, index):
        return self.gen_names[index]

    def block_of_index(self, index):
        for b, block in enumerate(self.blocks):
            if block.start <= index < block.start + block.arity:
                return b
        raise IndexError(index)

    def const(self, value):
        if not isinstance(value, AlgebraicNumber):
            value = AlgebraicNumber.from_rational(Fraction(value))
        if value.is_zero():
            return TowerElement(self, {}, {(): _ONE})
        return TowerElement(self, {(): value}, {(): _ONE})

    def gen(self, name):
        idx = self._index[name]
        return TowerElement(self, {((idx, 1),): _ONE}, {(): _ONE})

    def zero(self):
        return self.const(0)

    def one(self):
        return self.const(1)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials: dict {monomial: AlgebraicNumber}

def mono_mul(a, b):
    out = dict(a)
    for idx, e in b:
        out[idx] = out.get(idx, 0) + e
    return tuple(sorted(out.items()))


def mono_div(a, b):
    """a / b or None when not divisible."""
    out = dict(a)
    for idx, e in b:
        have = out.get(idx, 0)
        if have < e:
            return None
        if have == e:
            del out[idx]
        else:
            out[idx] = have - e
    return tuple(sorted(out.items()))


def mono_degree(m):
    return sum(e for _, e in m)


def mono_key(m):
    """Graded-lex sort key: higher degree first, then earlier generators
    with higher exponents first.  Encoded so that bigger key = bigger
    monomial under tuple comparison with padding.
    """
    return (mono_degree(m), tuple((-idx, e) for idx, e in m))


def mp_is_zero(p):
    return not p


def mp_add(p, q):
    out = dict(p)
    for m, c in q.items():
        if m in out:
            s = out[m] + c
            if s.is_zero():
                del out[m]
            else:
                out[m] = s
        else:
            out[m] = c
    return out


def mp_neg(p):
    return {m: -c for m, c in p.items()}


def mp_sub(p, q):
    return mp_add(p, mp_neg(q))


def mp_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = mono_mul(m1, m2)
            c = c1 * c2
            if m in out:
                s = out[m] + c
                if s.is_zero():
                    del out[m]
                else:
                    out[m] = s
            elif not c.is_zero():
                out[m] = c
    return out


def mp_scale(p, c):
    if c.is_zero():
        return {}
    return {m: coeff * c for m, coeff in p.items()}


def mp_leading(p):
    """(monomial, coefficient) of the graded-lex leading term."""
    m = max(p, key=mono_key)
    return m, p[m]


def mp_variables(p):
    out = set()
    for m in p:
        for idx, _ in m:
            out.add(idx)
    return out


def mp_divexact(p, q):
    """Exact quotient p/q, or None when q does not divide p."""
    if not p:
        return {}
    assert q
    qm, qc = mp_leading(q)
    qc_inv = qc.inverse()
    rem = dict(p)
    quot = {}
    while rem:
        rm, rc = mp_leading(rem)
        m = mono_div(rm, qm)
        if m is None:
            return None
        c = rc * qc_inv
        quot[m] = c
        rem = mp_sub(rem, mp_mul({m: c}, q))
    return quot


def mp_coeffs_wrt(p, var):
    """Represent p as a univariate in `var`: dict degree -> polynomial."""
    out = {}
    for m, c in p.items():
        deg = 0
        rest = []
        for idx, e in m:
            if idx == var:
                deg = e
            else:
                rest.append((idx, e))
        level = out.setdefault(deg, {})
        level[tuple(rest)] = c
    return out


def mp_from_univar(coeffs, var):
    out = {}
    for deg, poly in coeffs.items():
        for m, c in poly.items():
            if deg:
                full = tuple(sorted(list(m) + [(var, deg)]))
            else:
                full = m
            out[full] = c
    return out


def _gcd_list(polys):
    g = {}
    for p in polys:
        g = mp_gcd(g, p)
        if g and not mp_variables(g):
            return g  # constant gcd, cannot shrink further
    return g


def _pseudo_rem(A, B, var):
    """Pseudo-remainder of A by B, both univariate in `var` with
    multivariate coefficients, deg A >= deg B."""
    a = mp_coeffs_wrt(A, var)
    b = mp_coeffs_wrt(B, var)
    da, db = max(a), max(b)
    lb = b[db]
    rem = a
    for k in range(da, db - 1, -1):
        dr = max(rem) if rem else -1
        if dr < db:
            break
        lr = rem[dr]
        # rem = lb*rem - lr*x^(dr-db)*B
        new = {}
        for d, c in rem.items():
            if d == dr:
                continue
            new[d] = mp_mul(c, lb)
        for d, c in b.items():
            if d == db:
                continue  # cancels exactly against the dropped top term
            shifted = d + dr - db
            term = mp_mul(c, lr)
            if shifted in new:
                new[shifted] = mp_sub(new[shifted], term)
            else:
                new[shifted] = mp_neg(term)
        rem = {d: c for d, c in new.items() if c}
    return mp_from_univar(rem, var)


def _primitive_wrt(p, var):
    """(content, primitive part) of p as a univariate in `var`."""
    coeffs = mp_coeffs_wrt(p, var)
    cont = _gcd_list(list(coeffs.values()))
    pp = mp_divexact(p, cont)
    assert pp is not None
    return cont, pp


def mp_gcd(p, q):
    """Multivariate gcd by recursive primitive PRS in the last-occurring
    generator.  Result is defined up to a constant; callers normalize.
    """
    if not p:
        return dict(q)
    if not q:
        return dict(p)
    if not mp_variables(p) or not mp_variables(q):
        return {(): _ONE}  # a constant gcd, and constants are units
    vars_pq = mp_variables(p) | mp_variables(q)
    var = max(vars_pq)
    dp = max(mp_coeffs_wrt(p, var))
    dq = max(mp_coeffs_wrt(q, var))
    if dp == 0 or dq == 0:
        # one side is free of the main variable: gcd divides its
        # coefficients' content
        if dp == 0 and dq == 0:
            # var occurs in neither (can't happen: var from the union)
            raise AssertionError
        if dp == 0:
            cont, _ = _primitive_wrt(q, var)
            return mp_gcd(p, cont)
        cont, _ = _primitive_wrt(p, var)
        return mp_gcd(cont, q)
    cont_p, pp_p = _primitive_wrt(p, var)
    cont_q, pp_q = _primitive_wrt(q, var)
    g_cont = mp_gcd(cont_p, cont_q)
    A, B = pp_p, pp_q
    if max(mp_coeffs_wrt(A, var)) < max(mp_coeffs_wrt(B, var)):
        A, B = B, A
    while True:
        R = _pseudo_rem(A, B, var)
        if not R:
            break
        rv = mp_coeffs_wrt(R, var)
        if max(rv) == 0:
            # nonzero remainder free of var: primitive parts are coprime
            B = {(): _ONE}
            break
        _, R = _primitive_wrt(R, var)
        A, B = B, R
    if mp_variables(B):
        _, B = _primitive_wrt(B, var)
    return mp_mul(g_cont, B)


def mp_eval(p, values):
    """Evaluate with {generator index: AlgebraicNumber}."""
    acc = _ZERO
    for m, c in p.items():
        term = c
        for idx, e in m:
            if idx not in values:
                raise MissingAssignment("generator index %d unassigned" % idx)
            term = term * values[idx] ** e
        acc = acc + term
    return acc


def mp_sorted_terms(p):
    """Terms in descending graded-lex order (canonical print order)."""
    return sorted(p.items(), key=lambda mc: mono_key(mc[0]), reverse=True)


# ---------------------------------------------------------------------------

class TowerElement:
    """Canonical rational function over a tower.  Immutable."""

    __slots__ = ("tower", "num", "den")

    def __init__(self, tower, num, den, normalize=True):
        self.tower = tower
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    # construction helpers live on FieldTower (const, gen)

    def is_zero(self):
        return not self.num

    def is_one(self):
        return (self.den == {(): _ONE} and len(self.num) == 1
                and self.num.get((), _ZERO).is_one())

    def is_constant(self):
        return not mp_variables(self.num) and not mp_variables(self.den)

    def constant_value(self):
        assert self.is_constant()
        if not self.num:
            return _ZERO
        return self.num[()] / self.den[()]

    def variables(self):
        return mp_variables(self.num) | mp_variables(self.den)

    def _check(self, other):
        if not isinstance(other, TowerElement):
            if isinstance(other, (int, Fraction, AlgebraicNumber)):
                return self.tower.const(other)
            return None
        if other.tower is not self.tower:
            raise TowerMismatch("elements belong to different towers")
        return other

    def __eq__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(tuple(sorted((m, hash(c)) for m, c in self.num.items())))

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            # common (already canonical) denominator: one small reduction
            return TowerElement(self.tower, mp_add(self.num, other.num),
                                dict(self.den))
        num = mp_add(mp_mul(self.num, other.den), mp_mul(other.num, self.den))
        den = mp_mul(self.den, other.den)
        return TowerElement(self.tower, num, den)

    __radd__ = __add__

    def __neg__(self):
        return TowerElement(self.tower, mp_neg(self.num), self.den,
                            normalize=False)

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        # cross-cancel first so the product is reduced by construction
        n1, d2 = _cancel(self.num, other.den)
        n2, d1 = _cancel(other.num, self.den)
        return TowerElement(self.tower, mp_mul(n1, n2), mp_mul(d1, d2),
                            normalize=False)._rescaled()

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by zero element")
        n1, n2 = _cancel(self.num, other.num)
        d1, d2 = _cancel(self.den, other.den)
        return TowerElement(self.tower, mp_mul(n1, d2), mp_mul(d1, n2),
                            normalize=False)._rescaled()

    def __rtruediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other / self

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero element")
        # num/den already coprime: only the leading scale changes
        return TowerElement(self.tower, dict(self.den), dict(self.num),
                            normalize=False)._rescaled()

    def _rescaled(self):
        """Restore canonical form assuming num/den are already reduced:
        make the denominator's leading coefficient one."""
        if not self.num:
            self.den = {(): _ONE}
            return self
        _, lc = mp_leading(self.den)
        if not lc.is_one():
            inv = lc.inverse()
            self.num = mp_scale(self.num, inv)
            self.den = mp_scale(self.den, inv)
        return self

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        out = self.tower.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def evaluate(self, assignment):
        """Exact evaluation at {generator name: AlgebraicNumber}."""
        values = {}
        for name, val in assignment.items():
            values[self.tower.index_of(name)] = val
        den = mp_eval(self.den, values)
        if den.is_zero():
            raise DenominatorVanishes("denominator vanishes at the point")
        return mp_eval(self.num, values) / den

    def __repr__(self):
        from .serialize import element_to_text
        return element_to_text(self)


def _cancel(num, den):
    """Divide out the (non-constant part of the) gcd of two polynomials;
    constant factors are units and handled by the final rescale."""
    if not num or not mp_variables(num) or not mp_variables(den):
        return num, den
    g = mp_gcd(num, den)
    if not mp_variables(g):
        return num, den
    num2 = mp_divexact(num, g)
    den2 = mp_divexact(den, g)
    assert num2 is not None and den2 is not None, "gcd must divide"
    return num2, den2


def _normalize(num, den):
    """Reduce the fraction and make the denominator's graded-lex leading
    coefficient one.  normalize(g*num, g*den) == normalize(num, den).
    """
    if not den:
        raise DivisionByZero("zero denominator")
    if not num:
        return {}, {(): _ONE}
    if mp_variables(num) and mp_variables(den):
        g = mp_gcd(num, den)
        if mp_variables(g) or not g.get((), _ONE).is_one():
            num2 = mp_divexact(num, g)
            den2 = mp_divexact(den, g)
            assert num2 is not None and den2 is not None, "gcd must divide"
            num, den = num2, den2
    _, lc = mp_leading(den)
    if not lc.is_one():
        inv = lc.inverse()
        num = mp_scale(num, inv)
        den = mp_scale(den, inv)
    return num, den


def rf_binary(op, a, b):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown operation %r" % (op,))


def rf_normalize(tower, num, den):
    return TowerElement(tower, num, den)


def rf_eval(a, assignment):
    return a.evaluate(assignment)
