"""Command-line surface: matrix/certificate file I/O, witness and
factorization commands, the finite brute-force reports, and a selftest
table.  Exit codes: 0 success or verified, 1 verification failure,
2 unsupported instance, 3 input or parse error, 4 resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import certs, finite
from . import twisted as tw
from .automorphism import Session
from .domains import QQ
from .errors import (DegreeCapExceeded, EnumerationCapExceeded,
                     ExprSyntaxError, MalformedCertificate, ShiftNotFound,
                     SingularMatrix, TwistcertError, UnknownGenerator,
                     UnsupportedSplitting)
from .exprparse import parse_element
from .funcfield import FieldTower
from .linalg import Matrix
from .serialize import frac_to_text, matrix_to_obj

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_UNSUPPORTED = 2
EXIT_PARSE = 3
EXIT_CAP = 4


def _default_seed():
    try:
        return int(os.environ.get("TWISTCERT_SEED", "0"))
    except ValueError:
        return 0


def _load_rational_matrix(path):
    """Matrix file {n, entries}: entries are constant grammar strings."""
    with open(path) as fh:
        obj = json.load(fh)
    n = obj["n"]
    entries = obj["entries"]
    if not isinstance(n, int) or n < 1 or len(entries) != n * n:
        raise ValueError("matrix shape mismatch")
    tower = FieldTower()
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = parse_element(entries[i * n + j], tower)
            if not e.is_constant():
                raise ValueError("matrix entries must be constants")
            value = e.constant_value()
            if not value.is_rational():
                raise ValueError("matrix entries must be rational")
            row.append(value.rational_value)
        rows.append(row)
    return Matrix(QQ, rows)


def _cmd_witness(args):
    X = _load_rational_matrix(args.matrix)
    session = Session()
    result = tw.class_witness(X, session)
    target = tw.lift_rational_matrix(X, session)
    obj = certs.witness_to_obj(target, result, session)
    if args.output:
        certs.save_obj(obj, args.output)
    print(json.dumps(obj, indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_factor(args):
    A = _load_rational_matrix(args.matrix)
    session = Session()
    config = tw.FactorConfig(seed=args.seed, range=args.range)
    cert = tw.factor3(A, session, config)
    obj = certs.factorization_to_obj(cert)
    certs.save_obj(obj, args.output)
    print(json.dumps({"factors": len(cert.factors),
                      "collapsible": cert.collapsible,
                      "certificate": args.output}, sort_keys=True))
    return EXIT_OK


def _cmd_shift(args):
    A = _load_rational_matrix(args.matrix)
    config = tw.ShiftConfig(seed=args.seed, range=args.range)
    D = tw.distinct_shift(A, config)
    print(json.dumps({"diagonal": [frac_to_text(x)
                                   for x in D.diagonal_entries()]},
                     sort_keys=True))
    return EXIT_OK


def _cmd_verify(args):
    obj = certs.load_obj(args.certificate)
    ok = certs.verify_certificate(obj)
    print("verified" if ok else "verification failed")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def _finite_group(args):
    field = finite.FiniteField(args.p, args.k)
    spec = finite.FiniteGroupSpec(args.kind, args.n, field, cap=args.cap)
    return finite.FiniteGroup(spec)


def _cmd_finite(args):
    group = _finite_group(args)
    descriptor = finite.AutoDescriptor.parse(
        args.auto, allow_exploratory=args.exploratory)
    if args.report == "reidemeister":
        part = finite.twisted_partition(group, descriptor,
                                        workers=args.workers)
        print(json.dumps({"group": group.spec.label(),
                          "automorphism": descriptor.label(),
                          "order": len(group),
                          "reidemeisterNumber": part.reidemeister_number,
                          "classSizes": [len(c) for c in part.classes]},
                         sort_keys=True))
    else:
        generates, width, sizes = finite.width_profile(group, descriptor)
        print(json.dumps({"group": group.spec.label(),
                          "automorphism": descriptor.label(),
                          "generates": generates,
                          "width": width,
                          "layerSizes": sizes}, sort_keys=True))
    return EXIT_OK


def _selftest_cases():
    from . import algnum
    from .intpoly import IntPoly

    def kernels():
        roots = algnum.real_roots(IntPoly([0, -1, 0, 1]))
        assert len(roots) == 3
        s2 = algnum.real_roots(IntPoly([-2, 0, 1]))[1]
        s3 = algnum.real_roots(IntPoly([-3, 0, 1]))[1]
        assert (s2 + s3).minpoly == IntPoly([1, 0, -10, 0, 1])

    def witness():
        session = Session()
        X = Matrix(QQ, [[Fraction(1), Fraction(2)],
                        [Fraction(3), Fraction(5)]])
        tw.class_witness(X, session)

    def factorization():
        session = Session()
        A = Matrix(QQ, [[Fraction(1), Fraction(1)],
                        [Fraction(0), Fraction(1)]])
        cert = tw.factor3(A, session)
        assert certs.verify_certificate(cert)
        obj = certs.factorization_to_obj(cert)
        obj["target"]["entries"][0] += "+1"
        assert not certs.verify_certificate(obj)

    def finite_values():
        for (p, k, auto, expect) in [(2, 2, "frobenius:1", 1),
                                     (3, 2, "frobenius:1", 2)]:
            group = finite.FiniteGroup(
                finite.FiniteGroupSpec("GL", 1, finite.FiniteField(p, k)))
            part = finite.twisted_partition(
                group, finite.AutoDescriptor.parse(auto))
            assert part.reidemeister_number == expect
        group = finite.FiniteGroup(
            finite.FiniteGroupSpec("GL", 2, finite.FiniteField(2)))
        part = finite.twisted_partition(group, finite.identity_auto())
        assert part.reidemeister_number == 3

    def quotient():
        group = finite.FiniteGroup(
            finite.FiniteGroupSpec("GL", 2, finite.FiniteField(3)))
        _, _, ok = finite.quotient_check(group, finite.identity_auto())
        assert ok

    def parser_round_trip():
        from .serialize import element_to_text
        tower = FieldTower()
        tower.add_block(["t1", "t2"])
        import random
        rng = random.Random(12345)
        for _ in range(50):
            e = tower.const(Fraction(rng.randint(-9, 9),
                                     rng.randint(1, 9)))
            for _ in range(rng.randint(1, 4)):
                g = tower.gen(rng.choice(["t1", "t2"]))
                e = e * g + tower.const(rng.randint(-3, 3))
            assert parse_element(element_to_text(e), tower) == e

    return [("algebraic kernels", kernels),
            ("witness identity", witness),
            ("factorization round-trip", factorization),
            ("finite oracle values", finite_values),
            ("determinant quotient bound", quotient),
            ("parser round-trip", parser_round_trip)]


def _cmd_selftest(args):
    failures = 0
    for name, fn in _selftest_cases():
        try:
            fn()
            status = "PASS"
        except Exception:
            status = "FAIL"
            failures += 1
        print("%-28s %s" % (name, status))
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAIL


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="twistcert",
        description="exact twisted-conjugacy witnesses, factorization "
                    "certificates, and finite brute-force oracles")
    sub = parser.add_subparsers(dest="command", required=True)
    seed = _default_seed()

    p = sub.add_parser("witness", help="class witness for a matrix file")
    p.add_argument("matrix")
    p.add_argument("--output", default=None)
    p.set_defaults(fn=_cmd_witness)

    p = sub.add_parser("factor", help="factor a matrix, write certificate")
    p.add_argument("matrix")
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--range", type=int, default=10)
    p.add_argument("--output", default="cert.json")
    p.set_defaults(fn=_cmd_factor)

    p = sub.add_parser("shift", help="distinct-eigenvalue diagonal shift")
    p.add_argument("matrix")
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--range", type=int, default=10)
    p.set_defaults(fn=_cmd_shift)

    p = sub.add_parser("verify", help="verify a certificate file")
    p.add_argument("certificate")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("finite", help="finite brute-force reports")
    p.add_argument("report", choices=["reidemeister", "width"])
    p.add_argument("--kind", choices=["GL", "SL"], default="GL")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--auto", default="id",
                   help="id | frobenius:F | inner:ID | transpose-inverse"
                        " | compose:A+B")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, default=10 ** 6)
    p.add_argument("--exploratory", action="store_true")
    p.set_defaults(fn=_cmd_finite)

    p = sub.add_parser("selftest", help="run the built-in check table")
    p.set_defaults(fn=_cmd_selftest)
    return parser


def run_command(argv):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_PARSE if err.code else EXIT_OK
    try:
        return args.fn(args)
    except (DegreeCapExceeded, EnumerationCapExceeded) as err:
        print("resource cap: %s" % err, file=sys.stderr)
        return EXIT_CAP
    except (UnsupportedSplitting, ShiftNotFound) as err:
        print("unsupported instance: %s" % err, file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (ExprSyntaxError, UnknownGenerator, MalformedCertificate) as err:
        print("input error: %s" % err, file=sys.stderr)
        return EXIT_PARSE
    except (OSError, json.JSONDecodeError, KeyError, ValueError,
            TypeError) as err:
        message = str(err)
        if "unsupported" in message:
            print("unsupported instance: %s" % err, file=sys.stderr)
            return EXIT_UNSUPPORTED
        print("input error: %s" % err, file=sys.stderr)
        return EXIT_PARSE
    except (SingularMatrix, TwistcertError) as err:
        print("input error: %s" % err, file=sys.stderr)
        return EXIT_PARSE


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
