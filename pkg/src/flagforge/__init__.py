"""Cyclic orbit flag codes over finite fields.

Finite field arithmetic in discrete-log form, F_p-subspaces and flags of
F_{p^n}, orbits under cyclic subgroups of F_{p^n}^*, Galois flag codes and
optimum distance analysis, with brute-force oracles and a command line tool.
"""

from .errors import FlagforgeError
from .ffield import FieldCtx, FieldElem, build_field
from .flag import Flag, flag_distance, new_flag
from .galois import galois_distance, galois_flag, galois_table, galois_type
from .odfc import allowed_dimensions, max_flag_distance, odfc_scan, odfc_verify
from .orbit import (
    best_friend,
    cardinality_formula,
    is_disjoint,
    min_distance,
    orbit,
    projected,
    stabilizer,
    subgroup,
)
from .subspace import Subspace, subspace_distance

__version__ = "0.1.0"

__all__ = [
    "FieldCtx",
    "FieldElem",
    "Flag",
    "FlagforgeError",
    "Subspace",
    "__version__",
    "allowed_dimensions",
    "best_friend",
    "build_field",
    "cardinality_formula",
    "flag_distance",
    "galois_distance",
    "galois_flag",
    "galois_table",
    "galois_type",
    "is_disjoint",
    "max_flag_distance",
    "min_distance",
    "new_flag",
    "odfc_scan",
    "odfc_verify",
    "orbit",
    "projected",
    "stabilizer",
    "subgroup",
    "subspace_distance",
]
