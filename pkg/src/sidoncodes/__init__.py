"""Cyclic constant-dimension subspace codes over finite field towers.

Construction of orbit-generator families, exhaustive verification of
code sizes and minimum distances at desk scale, exact closed-form size
comparisons, and an operator-channel decoding demonstration.
"""

__version__ = "0.1.0"

from .analysis import (
    CodeEnumeration,
    OrbitCode,
    VerificationReport,
    claimed_profile,
    construct_code,
    enumerate_code,
    formula_size,
    min_distance,
    naive_min_distance,
    table_rows,
    verify_code,
)
from .channel import ChannelParams, DecodeResult, SimulationStats, decode, simulate, transmit
from .constructions import FAMILIES, ConstructionParams, generators
from .errors import ConstructionError, LevelMismatchError, SizeGuardError, TowerMismatchError
from .linalg import BACKEND
from .sidon import (
    BoundCheck,
    is_sidon,
    orbit_size,
    pairwise_bound,
    sidon_orbit_equivalence,
    sidon_sum_check,
)
from .subspace import (
    Subspace,
    cyclic_shift,
    distance,
    intersect,
    is_direct_sum,
    orbit,
    product_space,
    random_subspace,
    span,
    sum_spaces,
)
from .tower import CosetReps, FieldElement, FieldTower, build_tower

__all__ = [
    "BACKEND",
    "BoundCheck",
    "ChannelParams",
    "CodeEnumeration",
    "ConstructionError",
    "ConstructionParams",
    "CosetReps",
    "DecodeResult",
    "FAMILIES",
    "FieldElement",
    "FieldTower",
    "LevelMismatchError",
    "OrbitCode",
    "SimulationStats",
    "SizeGuardError",
    "Subspace",
    "TowerMismatchError",
    "VerificationReport",
    "build_tower",
    "claimed_profile",
    "construct_code",
    "cyclic_shift",
    "decode",
    "distance",
    "enumerate_code",
    "formula_size",
    "generators",
    "intersect",
    "is_direct_sum",
    "is_sidon",
    "min_distance",
    "naive_min_distance",
    "orbit",
    "orbit_size",
    "pairwise_bound",
    "product_space",
    "random_subspace",
    "sidon_orbit_equivalence",
    "sidon_sum_check",
    "simulate",
    "span",
    "sum_spaces",
    "table_rows",
    "transmit",
    "verify_code",
]
