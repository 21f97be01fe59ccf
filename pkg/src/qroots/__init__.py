"""Zero-containment bounds for one-sided quaternionic polynomials, with an
independent root oracle to check them."""

from .bounds import (
    BoundRegion,
    HolderPair,
    RegionKind,
    Verdict,
    all_origin_bounds,
    cauchy_bound,
    euclidean_bound,
    feasible_r,
    kmt_bound,
    kmt_bound_simplified,
    montel_bound,
    proof_lower_bound,
    rather_region,
    region_contains,
)
from .harness import CampaignConfig, run_campaign, verify_one
from .oracle import ComplexRoot, ZeroClass, ZeroKind, all_zeros, real_poly_roots, solve
from .polynomial import QPolynomial, RealPolynomial, Side, companion, evaluate, monic_normalize, to_side
from .quaternion import I, J, K, ONE, ZERO, Quaternion, conj, inverse, mul, norm, similarity_data

__version__ = "0.1.0"
