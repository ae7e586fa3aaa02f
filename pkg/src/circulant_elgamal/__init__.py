"""ElGamal over determinant-1 circulant matrices on GF(2^n).

A d x d circulant over GF(2^n) is its first row; products are cyclic
convolutions of those rows, so the whole scheme runs on length-d
coefficient vectors. Key generation (`keygen.generate`) constructs
matrices passing the five security conditions, `elgamal` implements
encryption on top of them, `dlp` carries the desk-scale attacks, and
`security` reproduces the published parameter and security tables.
"""

from .circulant import (
    Circulant,
    NotInvertible,
    OpCounter,
    inverse,
    matvec,
    mul,
    power,
    square,
)
from .dlp import NotFound, bsgs, pohlig_hellman, solve_circulant_dlp
from .elgamal import (
    Ciphertext,
    PrivateKey,
    PublicKey,
    decrypt,
    encrypt,
    oracle_reduction,
)
from .gf2field import FieldElement, FieldSpec, Poly, field_make
from .keygen import (
    ConditionReport,
    NotPrimitive,
    OrderInfo,
    ParamSet,
    five_conditions,
    generate,
    load_params,
    order_of,
    save_params,
)
from .numtheory import Factorization, factor, is_prime, is_primitive_mod
from .security import (
    SecurityReport,
    estimate,
    generic_bits,
    index_calculus_bits,
    regime_check,
    scan_primitive_pairs,
    security_table,
    verify_reference_primes,
)

__version__ = "0.1.0"

__all__ = [
    "Circulant",
    "Ciphertext",
    "ConditionReport",
    "Factorization",
    "FieldElement",
    "FieldSpec",
    "NotFound",
    "NotInvertible",
    "NotPrimitive",
    "OpCounter",
    "OrderInfo",
    "ParamSet",
    "Poly",
    "PrivateKey",
    "PublicKey",
    "SecurityReport",
    "bsgs",
    "decrypt",
    "encrypt",
    "estimate",
    "factor",
    "field_make",
    "five_conditions",
    "generate",
    "generic_bits",
    "index_calculus_bits",
    "inverse",
    "is_prime",
    "is_primitive_mod",
    "load_params",
    "matvec",
    "mul",
    "oracle_reduction",
    "order_of",
    "pohlig_hellman",
    "power",
    "regime_check",
    "save_params",
    "scan_primitive_pairs",
    "security_table",
    "solve_circulant_dlp",
    "square",
    "verify_reference_primes",
]
