"""Certificate files: serialization of factorizations and witnesses to
a human-diffable JSON form with all entries as expression-grammar
strings, plus the independent verifier that rebuilds the tower and
automorphism from the file and re-checks every identity.
"""

from __future__ import annotations

import json
import os
import tempfile

from .automorphism import Session
from .domains import TowerDomain
from .errors import MalformedCertificate, TwistcertError
from .exprparse import parse_element
from .linalg import Matrix, mat_inv
from .serialize import matrix_to_obj
from .twisted import ENGINE_VERSION


def _tower_obj(session):
    blocks = []
    for block, data in zip(session.tower.blocks,
                           session.auto._blocks):
        m = block.arity
        images = Matrix(TowerDomain(session.tower),
                        [list(row) for row in data.forward])
        blocks.append({"names": list(block.names),
                       "images": matrix_to_obj(images)})
    return {"blocks": blocks}


def factorization_to_obj(cert):
    """File form of a TwistedFactorization."""
    return {
        "kind": "factorization",
        "engineVersion": cert.engine_version,
        "seed": cert.seed,
        "target": matrix_to_obj(cert.target),
        "factors": [{"matrix": matrix_to_obj(f.matrix),
                     "sign": f.sign,
                     "witness": matrix_to_obj(f.witness)}
                    for f in cert.factors],
        "tower": _tower_obj(cert.session),
        "collapsible": cert.collapsible,
    }


def witness_to_obj(target, result, session):
    """File form of a class_witness run: target X, the witness T, and
    the tower/automorphism extension that certifies T^-1 phi(T) = X."""
    return {
        "kind": "witness",
        "engineVersion": ENGINE_VERSION,
        "target": matrix_to_obj(target),
        "T": matrix_to_obj(result.T),
        "tower": _tower_obj(session),
    }


def save_obj(obj, path):
    """Write atomically: a file on disk is complete or absent."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(obj, fh, indent=2, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def load_obj(path):
    with open(path) as fh:
        return json.load(fh)


def _need(obj, key, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise MalformedCertificate("missing field %r" % key)
    value = obj[key]
    if not isinstance(value, kind):
        raise MalformedCertificate("field %r has the wrong type" % key)
    return value


def _rebuild_session(obj):
    """Session with the certified tower + automorphism, built by
    replaying the block extensions (images parsed against the prefix)."""
    session = Session()
    blocks = _need(_need(obj, "tower", dict), "blocks", list)
    for bobj in blocks:
        names = _need(bobj, "names", list)
        mobj = _need(bobj, "images", dict)
        m = _need(mobj, "n", int)
        entries = _need(mobj, "entries", list)
        if len(names) != m or len(entries) != m * m:
            raise MalformedCertificate("image matrix shape mismatch")
        try:
            rows = [[parse_element(entries[i * m + j], session.tower)
                     for j in range(m)] for i in range(m)]
            session.extend_block(names, rows)
        except MalformedCertificate:
            raise
        except TwistcertError as err:
            raise MalformedCertificate(str(err))
    return session


def _parse_matrix(mobj, tower):
    n = _need(mobj, "n", int)
    entries = _need(mobj, "entries", list)
    if n < 1 or len(entries) != n * n:
        raise MalformedCertificate("matrix shape mismatch")
    try:
        rows = [[parse_element(entries[i * n + j], tower)
                 for j in range(n)] for i in range(n)]
    except TwistcertError as err:
        raise MalformedCertificate(str(err))
    return Matrix(TowerDomain(tower), rows)


def verify_certificate(cert):
    """Independent re-check of a certificate, given either a
    TwistedFactorization or a loaded certificate file object.

    Rebuilds phi from the serialization, re-checks each membership
    identity and the product; true iff everything passes.  Structural
    problems raise MalformedCertificate instead of returning false.
    """
    if not isinstance(cert, dict):
        cert = factorization_to_obj(cert)
    kind = cert.get("kind", "factorization")
    session = _rebuild_session(cert)
    phi = session.auto
    tower = session.tower
    target = _parse_matrix(_need(cert, "target", dict), tower)
    if kind == "witness":
        T = _parse_matrix(_need(cert, "T", dict), tower)
        if T.n != target.n:
            raise MalformedCertificate("witness size mismatch")
        try:
            return mat_inv(T) * phi.apply_matrix(T) == target
        except TwistcertError:
            return False
    if kind != "factorization":
        raise MalformedCertificate("unknown certificate kind %r" % kind)
    factors = _need(cert, "factors", list)
    if len(factors) > 3:
        return False
    prod = Matrix.identity(TowerDomain(tower), target.n)
    try:
        for fobj in factors:
            sign = _need(fobj, "sign", int)
            if sign not in (1, -1):
                raise MalformedCertificate("sign must be +1 or -1")
            matrix = _parse_matrix(_need(fobj, "matrix", dict), tower)
            witness = _parse_matrix(_need(fobj, "witness", dict), tower)
            if matrix.n != target.n or witness.n != target.n:
                raise MalformedCertificate("factor size mismatch")
            member = witness * mat_inv(phi.apply_matrix(witness))
            expect = matrix if sign == 1 else mat_inv(matrix)
            if not member == expect:
                return False
            prod = prod * matrix
    except MalformedCertificate:
        raise
    except TwistcertError:
        return False
    return prod == target
