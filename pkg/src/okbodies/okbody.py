"""Newton-Okounkov bodies of exceptional curve valuations.

Three computation paths, each driven by the only muhat values the theory
pins down exactly: sqrt of the last maximal contact value (minimal case),
the line value nu_r(v) (non-positive at infinity), or the ratio carried by
an explicit supraminimal-curve certificate.  A fourth operation rewrites a
body for the equivalent valuation whose polygon has a side on the x-axis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import cluster as cl
from .errors import (
    CertificateInconsistent,
    BranchSlopeUnrecognized,
    LineSupportInvalid,
    NotNPI,
    NotSupraminimal,
    RTooSmall,
)
from .flagval import (
    BranchSpec,
    CurveSpec,
    ExceptionalValuation,
    PairValue,
    curve_value,
    extend_cluster,
    pair_value,
    value_cone_slice,
)
from .geometry import Body, Shape, make_body
from .invariants import MaximalContactData, curvette_value, maximal_contact_values
from .scalars import ExactScalar, coerce, sqrt_scalar

__all__ = [
    "SupraminimalCertificate",
    "BranchClass",
    "ShapeReport",
    "NpiCheck",
    "is_minimal_consistent",
    "body_minimal",
    "body_nonminimal",
    "check_npi",
    "body_npi",
    "classify_shape",
    "normalize",
    "certificate_from_curve",
    "line_values",
]

_ZERO = ExactScalar(Fraction(0))


@dataclass(frozen=True)
class SupraminimalCertificate:
    """Caller-asserted supraminimal curve with its valuation data."""

    curve: CurveSpec
    value_pair: PairValue
    mu: Fraction   # value_pair.first / degree
    c: Fraction    # value_pair.second / degree


class BranchClass(enum.Enum):
    BETA0_RAY = "beta0_ray"   # pair value on the ray of betabar_0(nu)
    TOP_RAY = "top_ray"       # pair value on the ray of betabar_{g*}(nu)


class ShapeReport(NamedTuple):
    shape: Shape
    per_branch_class: tuple[BranchClass, ...]


class NpiCheck(NamedTuple):
    is_npi: bool
    nu_v: int


def is_minimal_consistent(mc: MaximalContactData, muhat) -> bool:
    """True iff muhat^2 equals 1/vol = betabar_{g+1} exactly."""
    mu = coerce(muhat)
    return mu.sign() > 0 and mu * mu == ExactScalar(Fraction(mc.betabar[-1]))


def body_minimal(val: ExceptionalValuation) -> Body:
    """Body of a minimal valuation: the full cone slice at muhat = sqrt(1/vol)."""
    mc = maximal_contact_values(val.cluster, val.r)
    return value_cone_slice(val, sqrt_scalar(mc.betabar[-1]))


def certificate_from_curve(val: ExceptionalValuation, curve: CurveSpec) -> SupraminimalCertificate:
    """Evaluate a curve and package it as a supraminimality certificate."""
    value = curve_value(val, curve)
    mc = maximal_contact_values(val.cluster, val.r)
    if value.first * value.first <= curve.degree * curve.degree * mc.betabar[-1]:
        raise NotSupraminimal(
            f"nu_r(f)^2 = {value.first}^2 is not above deg^2/vol = "
            f"{curve.degree}^2 * {mc.betabar[-1]}"
        )
    return SupraminimalCertificate(
        curve=curve,
        value_pair=value,
        mu=Fraction(value.first, curve.degree),
        c=Fraction(value.second, curve.degree),
    )


def body_nonminimal(val: ExceptionalValuation, cert: SupraminimalCertificate) -> Body:
    """Hull of (0,0), Q1, Q2, Q3 for a non-minimal valuation."""
    mc = maximal_contact_values(val.cluster, val.r)
    bb_top = mc.betabar[-1]
    if cert.mu * cert.mu <= bb_top:
        raise NotSupraminimal(f"mu = {cert.mu} with mu^2 <= {bb_top}")
    if curve_value(val, cert.curve) != cert.value_pair:
        raise CertificateInconsistent(
            f"certificate pair {cert.value_pair} does not match the curve's value"
        )
    mu = cert.mu
    if val.flag.is_free:
        q1y, q2y = Fraction(0), Fraction(1)
    else:
        v_eta = Fraction(curvette_value(val.cluster, val.r, val.flag.eta))
        q1y, q2y = v_eta, v_eta + 1
    pts = [
        (Fraction(0), Fraction(0)),
        (Fraction(bb_top) / mu, q1y / mu),
        (Fraction(bb_top) / mu, q2y / mu),
        (mu, cert.c),
    ]
    return make_body(pts, muhat=coerce(mu), minimal=False)


def _line_support_free_prefix(cluster: cl.ProximityCluster, r: int, support) -> tuple[int, ...]:
    support = tuple(support)
    if sorted(support) != list(range(1, len(support) + 1)) or len(support) < 2:
        raise LineSupportInvalid(f"support {support} is not an initial segment containing 1, 2")
    if support[-1] > r:
        raise LineSupportInvalid(f"support reaches p_{support[-1]} past r={r}")
    for i in support:
        if cluster.is_satellite(i):
            raise LineSupportInvalid(f"p_{i} is satellite; a line passes only free points")
    return tuple(sorted(support))


def line_values(cluster: cl.ProximityCluster, support, upto: int) -> tuple[int, ...]:
    """nu_i(v) for i = 1..upto, v the line germ through the supported points."""
    return tuple(
        sum(m for k, m in enumerate(cl.multiplicity_sequence(cluster, i), start=1) if k in set(support))
        for i in range(1, upto + 1)
    )


def check_npi(cluster: cl.ProximityCluster, r: int, line_support) -> NpiCheck:
    """Non-positivity at infinity: nu_r(v)^2 >= betabar_{g+1}(nu_r)."""
    if r < 2:
        raise RTooSmall("non-positivity at infinity needs r >= 2")
    support = _line_support_free_prefix(cluster, r, line_support)
    m = cl.multiplicity_sequence(cluster, r)
    nu_v = sum(m[i - 1] for i in support)
    mc = maximal_contact_values(cluster, r)
    return NpiCheck(nu_v * nu_v >= mc.betabar[-1], nu_v)


def body_npi(val: ExceptionalValuation, line_support) -> Body:
    """Closed-form triangle for a non-positive-at-infinity valuation."""
    cluster, r = val.cluster, val.r
    npi = check_npi(cluster, r, line_support)
    if not npi.is_npi:
        raise NotNPI(f"nu_r(v)^2 = {npi.nu_v}^2 < 1/vol")
    support = _line_support_free_prefix(cluster, r, line_support)
    mc = maximal_contact_values(cluster, r)
    bb_top = mc.betabar[-1]
    v = Fraction(npi.nu_v)
    minimal = npi.nu_v * npi.nu_v == bb_top

    if not minimal:
        if val.flag.is_free:
            q2 = (bb_top / v, 1 / v)
            q3 = (v, Fraction(0))
        else:
            eta = val.flag.eta
            nu_r_phi_eta = Fraction(curvette_value(cluster, val.r, eta))
            nu_eta_v = line_values(cluster, support, eta)[eta - 1]
            if cl.precedes(cl.dual_graph(cluster, r), eta, r):
                q2 = (bb_top / v, nu_r_phi_eta / v)
            else:
                q2 = (bb_top / v, (nu_r_phi_eta + 1) / v)
            q3 = (v, Fraction(nu_eta_v))
    else:
        if val.flag.is_free:
            q2 = (v, Fraction(0))
            q3 = (v, 1 / v)
        else:
            q2 = (v, (bb_top - 1) / v)
            q3 = (v, Fraction(bb_top) / v)

    pts = [(Fraction(0), Fraction(0)), q2, q3]
    return make_body(pts, muhat=coerce(v), minimal=minimal, expect_shape=Shape.TRIANGLE)


def _root_component(val: ExceptionalValuation, upto: int) -> frozenset[int]:
    """Root component of the stable (infinite-blow-up limit) dual graph.

    Blowing up the flag chain removes the edge {eta, r}, attaches the chain
    r+1, r+2, ... at eta (satellite q) or at nothing (free q); the divisor
    E_r keeps all its other adjacencies but never stably meets the chain.
    """
    r = val.r
    edges = set(cl.dual_graph(val.cluster, r).edges)
    if not val.flag.is_free:
        edges.discard((min(val.flag.eta, r), max(val.flag.eta, r)))
        edges.add((val.flag.eta, r + 1))
    edges.update((j, j + 1) for j in range(r + 1, upto))
    adj: dict[int, set[int]] = {v: set() for v in range(1, upto + 1)}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def classify_shape(val: ExceptionalValuation, curve: CurveSpec) -> ShapeReport:
    """Per-branch boundary-ray classes; triangle iff a single class occurs.

    The slope classification (which boundary ray of the value cone carries
    the branch's pair value) is cross-checked against membership in the
    root component of the stable dual graph: branches attaching off the
    root component land on the betabar_{g*} ray.
    """
    rays = val.boundary_rays()
    classes = []
    top = max(max((b.top_index() for b in curve.branches), default=1), val.r + 1)
    root_side = _root_component(val, top)
    for branch in curve.branches:
        value = pair_value(val, branch)
        on_lo = value.first * rays[0][1] == value.second * rays[0][0]
        on_hi = value.first * rays[1][1] == value.second * rays[1][0]
        if on_lo and not on_hi:
            side = BranchClass.BETA0_RAY
        elif on_hi and not on_lo:
            side = BranchClass.TOP_RAY
        else:
            raise BranchSlopeUnrecognized(
                f"branch value {tuple(value)} lies on neither boundary ray {rays}"
            )
        i0 = branch.top_index()
        graph_side = BranchClass.BETA0_RAY if i0 in root_side else BranchClass.TOP_RAY
        if graph_side != side:
            raise BranchSlopeUnrecognized(
                f"slope class {side} disagrees with graph class {graph_side} for i0={i0}"
            )
        classes.append(side)
    shape = Shape.TRIANGLE if len(set(classes)) <= 1 else Shape.QUADRILATERAL
    return ShapeReport(shape, tuple(classes))


def _normalization_matrix(val: ExceptionalValuation) -> tuple[tuple[Fraction, ...], ...]:
    """Row-vector matrix A of the rescaling lemma: x -> x A."""
    mc_r = maximal_contact_values(val.cluster, val.r)
    b0 = Fraction(mc_r.betabar[0])
    if val.flag.is_free:
        return ((1 / b0, Fraction(0)), (Fraction(0), Fraction(1)))
    j = val.top_ray_index()
    mc_eta = maximal_contact_values(val.cluster, val.flag.eta)
    e_r = Fraction(mc_r.e[j - 1])
    e_eta = Fraction(mc_eta.e[j - 1])
    graph = cl.dual_graph(val.cluster, val.r)
    a = 1 if cl.precedes(graph, val.flag.eta, val.r) else 2
    sign = 1 if a == 1 else -1
    return ((1 / b0, sign * e_eta), (Fraction(0), -sign * e_r))


def normalize(val: ExceptionalValuation, body: Body) -> Body:
    """Body of the equivalent valuation with betabar_0(nu') = (1, 0)."""
    A = _normalization_matrix(val)
    a11, a12 = A[0]
    a21, a22 = A[1]
    pts = [(x * a11 + y * a21, x * a12 + y * a22) for x, y in body.vertices]
    return make_body(pts, muhat=body.muhat, minimal=body.minimal)


def normalization_determinant(val: ExceptionalValuation) -> Fraction:
    A = _normalization_matrix(val)
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]
