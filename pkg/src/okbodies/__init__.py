"""Exact invariants and Newton-Okounkov bodies of plane valuation flags.

From a proximity description of a cluster of infinitely near points this
package computes, in exact arithmetic, the classical invariants of the
associated divisorial valuation and the Newton-Okounkov body of the
exceptional curve valuation attached to a flag on the blown-up surface,
with Zariski-decomposition cross-checks.
"""

from .cluster import (
    DualGraph,
    GraphShape,
    PointRecord,
    ProximityCluster,
    dual_graph,
    from_multiplicity_sequence,
    graph_shape,
    multiplicity_sequence,
    precedes,
    validate,
)
from .flagval import (
    BranchSpec,
    CurveSpec,
    ExceptionalValuation,
    FlagSpec,
    PairValue,
    build_flag,
    curve_value,
    extend_cluster,
    pair_value,
    value_cone_slice,
)
from .geometry import Body, Shape
from .invariants import (
    MaximalContactData,
    PuiseuxExponents,
    beta_prime_monotone,
    continued_fraction,
    curvette_multiplicities,
    curvette_value,
    evaluate_continued_fraction,
    intersection_formula,
    maximal_contact_values,
    puiseux_exponents,
)
from .okbody import (
    BranchClass,
    NpiCheck,
    ShapeReport,
    SupraminimalCertificate,
    body_minimal,
    body_nonminimal,
    body_npi,
    certificate_from_curve,
    check_npi,
    classify_shape,
    is_minimal_consistent,
    normalize,
)
from .oracle import (
    ClusterGenSpec,
    noether_intersection_oracle,
    polygon_area,
    random_cluster,
)
from .scalars import ExactScalar, sqrt_scalar
from .zariski import (
    DivisorClass,
    Regime,
    ZariskiPair,
    curve_class,
    decompose_npi,
    intersect,
    slice_body,
    strict_transform,
)

__version__ = "0.1.0"
