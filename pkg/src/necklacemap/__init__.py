"""Bijection between q-colored necklaces and zero-weighted-sum color functions.

For coprime n and q, length-n necklaces over q colors correspond one-to-one
to functions f: Z_n -> {0..q-1} with sum(v * f(v)) = 0 (mod n).  This
package computes the correspondence explicitly in both directions, provides
the closed-form counts, and ships an exhaustive verifier for desk-scale
instances.
"""

from .counting import binary_zero_sum_count, necklace_count, stratum_count
from .decomposition import (
    CosetTable,
    build_tables,
    crt_combine,
    crt_split,
    cyclotomic_cosets,
    factor_xn_minus_1,
    orbit_canonical,
    shift,
)
from .bijection import map_necklace, unmap_function, weighted_sum
from .numtheory import RingParams
from .oracle import (
    VerificationReport,
    enum_functions,
    enum_necklaces,
    verify_bijection,
    verify_shift_lemma,
)

__version__ = "0.1.0"

__all__ = [
    "RingParams",
    "CosetTable",
    "build_tables",
    "cyclotomic_cosets",
    "factor_xn_minus_1",
    "crt_split",
    "crt_combine",
    "shift",
    "orbit_canonical",
    "map_necklace",
    "unmap_function",
    "weighted_sum",
    "necklace_count",
    "binary_zero_sum_count",
    "stratum_count",
    "enum_necklaces",
    "enum_functions",
    "verify_bijection",
    "verify_shift_lemma",
    "VerificationReport",
    "__version__",
]
