"""GF(2^n) zero-inverse-sum subspace toolkit (python layer over the C++ core)."""

from ._core import (
    Field,
    c2,
    cc3,
    classify,
    default_modulus_hex,
    factor_xn_plus_1,
    kset,
    lang_weil,
    poly_order,
    table1,
    verify,
    witness,
    witness_exhaustive,
)

__all__ = [
    "Field",
    "c2",
    "cc3",
    "classify",
    "default_modulus_hex",
    "factor_xn_plus_1",
    "kset",
    "lang_weil",
    "poly_order",
    "table1",
    "verify",
    "witness",
    "witness_exhaustive",
]

__version__ = "0.1.0"
