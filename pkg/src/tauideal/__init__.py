"""Exact test ideals of monomial ideals in Q-Gorenstein toric rings.

Computes tau(a^t) by the Newton-polyhedron interior criterion with exact
rational arithmetic, cross-validated by finite-q Frobenius-side oracles.
"""

from .errors import (
    ConeNotFullDimensionalError,
    ConeNotPointedError,
    DimensionMismatchError,
    EnumerationBoundError,
    InputError,
    NotQGorensteinError,
    NotStabilizedError,
    RingMismatchError,
    SemigroupMembershipError,
    TauIdealError,
    UnsupportedRingError,
    ZeroVectorError,
)
from .lattice import (
    Cone,
    ToricRing,
    cone_from_rays,
    dual_cone,
    gorenstein_vector,
    orthant_ring,
    toric_ring,
)
from .polyhedra import NewtonPolyhedron, newton_polyhedron, scale
from .ideals import (
    MonomialIdeal,
    bracket_power,
    colon,
    frobenius_root,
    ideal_sum,
    integral_closure,
    intersect,
    kill_variable,
    minimalize,
    multiply,
    power,
    unit_ideal,
    zero_ideal,
)
from .tau import (
    tau,
    tau_is_unit,
    tau_veronese,
    veronese_maximal_ideal,
    veronese_ring,
)
from .frobenius import (
    STATUS_FAILS,
    STATUS_HOLDS,
    STATUS_STABILIZED,
    Verdict,
    frobenius_root_tau_oracle,
    in_star_E,
    socle_piece_vanishes_at_q,
    tau_socle_oracle,
    tight_closure_member_at_q,
    tight_integral_closure_at_q,
)
from .campaigns import CAMPAIGNS, CampaignReport, run_campaign, run_crosscheck

__version__ = "1.0.0"

__all__ = [
    "CAMPAIGNS",
    "CampaignReport",
    "Cone",
    "ConeNotFullDimensionalError",
    "ConeNotPointedError",
    "DimensionMismatchError",
    "EnumerationBoundError",
    "InputError",
    "MonomialIdeal",
    "NewtonPolyhedron",
    "NotQGorensteinError",
    "NotStabilizedError",
    "RingMismatchError",
    "STATUS_FAILS",
    "STATUS_HOLDS",
    "STATUS_STABILIZED",
    "SemigroupMembershipError",
    "TauIdealError",
    "ToricRing",
    "UnsupportedRingError",
    "Verdict",
    "ZeroVectorError",
    "bracket_power",
    "colon",
    "cone_from_rays",
    "dual_cone",
    "frobenius_root",
    "frobenius_root_tau_oracle",
    "gorenstein_vector",
    "ideal_sum",
    "in_star_E",
    "integral_closure",
    "intersect",
    "kill_variable",
    "minimalize",
    "multiply",
    "newton_polyhedron",
    "orthant_ring",
    "power",
    "run_campaign",
    "run_crosscheck",
    "scale",
    "socle_piece_vanishes_at_q",
    "tau",
    "tau_is_unit",
    "tau_socle_oracle",
    "tau_veronese",
    "tight_closure_member_at_q",
    "tight_integral_closure_at_q",
    "toric_ring",
    "unit_ideal",
    "veronese_maximal_ideal",
    "veronese_ring",
    "zero_ideal",
]
