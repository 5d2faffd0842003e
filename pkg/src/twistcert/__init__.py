"""Exact twisted-conjugacy witnesses and factorization certificates.

The package provides exact algebraic-number arithmetic, lazily extended
rational function field towers with automorphisms given by invertible
linear images on generator blocks, exact linear algebra over pluggable
scalar domains, witness construction and the three-factor decomposition
of invertible rational matrices, brute-force finite-group oracles, and
a certificate-file CLI.
"""

from .algnum import (AlgebraicNumber, alg_binary, alg_is_zero,
                     factor_rational, quad_complex_roots, real_roots)
from .automorphism import (AutomorphismSpec, Session, auto_apply,
                           auto_apply_inverse, extend_block)
from .certs import (factorization_to_obj, load_obj, save_obj,
                    verify_certificate, witness_to_obj)
from .domains import QQ, QQBAR, FiniteFieldDomain, TowerDomain
from .errors import *  # noqa: F401,F403 -- the exception vocabulary
from .exprparse import parse_element
from .finite import (AutoDescriptor, FiniteField, FiniteGroup,
                     FiniteGroupSpec, TwistedPartition, quotient_check,
                     twisted_partition, unit_class_subgroup, width_profile)
from .funcfield import (FieldTower, TowerElement, TowerGeneratorBlock,
                        rf_binary, rf_eval, rf_normalize)
from .intpoly import IntPoly
from .linalg import (Matrix, UniPoly, charpoly, discriminant, mat_det,
                     mat_inv, mat_mul, nullspace)
from .twisted import (Factor, FactorConfig, ShiftConfig,
                      TwistedFactorization, WitnessResult, class_witness,
                      conj_split, diagonal_witness, distinct_shift,
                      eigen_split, factor3, scalar_witness,
                      twisted_conjugate)

__version__ = "0.1.0"
