"""Fenchel-Nielsen twist flow on cross-ratio coordinates of the marked annulus.

The flow along the core curve of a one-marked-point-per-boundary annulus
has a closed form in the four positive cross-ratio coordinates.  This
package implements that closed form, an equivalent fixed-point form, and a
first-principles boundary-map construction used to verify both, plus the
Dehn-twist specialization at integer parameters and the local application
of the twist inside coordinate vectors of larger surfaces.
"""

from .annulus import (
    ARC_QUADRUPLES,
    AnnulusCoords,
    CoreGeodesic,
    EndpointConfig,
    coords_from_endpoints,
    core_geodesic,
    endpoints,
    exponential_fixed_points,
    holonomy_f2,
)
from .mobius import (
    INFINITY,
    DegenerateCrossRatioError,
    MobiusMap,
    NonHyperbolicError,
    ProjectivePoint,
    cross_ratio,
)
from .sampling import Lcg, random_coords
from .surface import AnnulusEmbedding, SurfaceCoords, apply_local_twist
from .twist import (
    StratumMap,
    TwistRangeError,
    dehn_twist,
    stratum_map,
    twist_closed_form,
    twist_oracle,
    twist_p_form,
    twisted_endpoints,
)

__version__ = "0.1.0"

__all__ = [
    "ARC_QUADRUPLES",
    "AnnulusCoords",
    "AnnulusEmbedding",
    "CoreGeodesic",
    "DegenerateCrossRatioError",
    "EndpointConfig",
    "INFINITY",
    "Lcg",
    "MobiusMap",
    "NonHyperbolicError",
    "ProjectivePoint",
    "StratumMap",
    "SurfaceCoords",
    "TwistRangeError",
    "apply_local_twist",
    "coords_from_endpoints",
    "core_geodesic",
    "cross_ratio",
    "dehn_twist",
    "endpoints",
    "exponential_fixed_points",
    "holonomy_f2",
    "random_coords",
    "stratum_map",
    "twist_closed_form",
    "twist_oracle",
    "twist_p_form",
    "twisted_endpoints",
]
