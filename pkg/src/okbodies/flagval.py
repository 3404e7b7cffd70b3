"""Exceptional curve valuations of flags, normalized to nu(m_r) = (1,0).

The valuation of the flag X_r > E_r > {q = p_{r+1}} takes values in Z^2 with
the lexicographic order.  Its two components act on a germ through weight
vectors over the cluster points: the first is the multiplicity sequence of
nu_r, the second is the multiplicity sequence of nu_eta (when q lies on
E_eta as well) plus an indicator of the points proximate to p_r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import cluster as cl
from .errors import (
    BranchInvalid,
    EtaEqualsR,
    EtaNotAdjacent,
    IndexOutOfRange,
    MalformedGraph,
    NonPositiveMuhat,
)
from .geometry import Body, Shape, make_body
from .invariants import maximal_contact_values
from .scalars import ExactScalar, coerce

__all__ = [
    "FlagSpec",
    "PairValue",
    "ExceptionalValuation",
    "BranchSpec",
    "CurveSpec",
    "build_flag",
    "pair_value",
    "value_cone_slice",
    "extend_cluster",
]


@dataclass(frozen=True)
class FlagSpec:
    """Flag data: r is the defining divisor index, eta is None for a free q."""

    r: int
    eta: int | None = None

    @property
    def is_free(self) -> bool:
        return self.eta is None


class PairValue(NamedTuple):
    first: int
    second: int


@dataclass(frozen=True)
class BranchSpec:
    """Multiplicities of one analytic branch along p_1, p_2, ...

    Index r+1 is the flag center q; indices beyond r+1 are the successive
    satellite points proximate to p_r.  The support must be a prefix and
    the multiplicities must satisfy the proximity inequalities for germs.
    """

    mults: tuple[int, ...]

    def top_index(self) -> int:
        return max((i for i, m in enumerate(self.mults, start=1) if m), default=0)


@dataclass(frozen=True)
class CurveSpec:
    degree: int
    branches: tuple[BranchSpec, ...]


@dataclass(frozen=True)
class ExceptionalValuation:
    cluster: cl.ProximityCluster
    flag: FlagSpec
    w1: tuple[int, ...]  # over p_1..p_{r+1}; zero at r+1
    w2: tuple[int, ...]  # over p_1..p_{r+1}; one at r+1

    @property
    def r(self) -> int:
        return self.flag.r

    def weight(self, i: int) -> PairValue:
        """Pair value of the maximal ideal at p_i (i may exceed r+1)."""
        if i <= self.r + 1:
            return PairValue(self.w1[i - 1], self.w2[i - 1])
        return PairValue(0, 1)

    def top_ray_index(self) -> int:
        """Index j with betabar_j(nu) spanning the second boundary ray.

        Equals the number of Puiseux pairs of the flag valuation itself:
        g(nu_r) when q is satellite and p_r is satellite, g(nu_r)+1 otherwise.
        """
        mc = maximal_contact_values(self.cluster, self.r)
        if not self.flag.is_free and self.cluster.is_satellite(self.r):
            return mc.g
        return mc.g + 1

    def boundary_rays(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Primitive-direction pairs spanning the value cone's two edges."""
        mc_r = maximal_contact_values(self.cluster, self.r)
        if self.flag.is_free:
            return (mc_r.betabar[0], 0), (mc_r.betabar[-1], 1)
        j = self.top_ray_index()
        mc_eta = maximal_contact_values(self.cluster, self.flag.eta)
        return (
            (mc_r.betabar[0], mc_eta.betabar[0]),
            (mc_r.betabar[j], mc_eta.betabar[j]),
        )


def extend_cluster(cluster: cl.ProximityCluster, flag: FlagSpec, upto: int) -> cl.ProximityCluster:
    """Cluster extended with q = p_{r+1} and the chain of satellites of p_r."""
    r = flag.r
    if upto < r + 1:
        raise IndexOutOfRange(f"extension must reach at least {r + 1}")
    records = list(cluster.points[:r])
    records.append(cl.PointRecord(r + 1, flag.eta))
    for i in range(r + 2, upto + 1):
        records.append(cl.PointRecord(i, r))
    return cl.ProximityCluster(tuple(records))


def build_flag(cluster: cl.ProximityCluster, flag: FlagSpec) -> ExceptionalValuation:
    """Weight vectors of nu_{E.} for the given flag, validated."""
    r = flag.r
    if not 1 <= r <= cluster.size:
        raise IndexOutOfRange(f"r={r} outside 1..{cluster.size}")
    m_r = cl.multiplicity_sequence(cluster, r)
    if flag.is_free:
        w1 = m_r + (0,)
        w2 = (0,) * r + (1,)
    else:
        eta = flag.eta
        if eta == r:
            raise EtaEqualsR("q must lie on a second divisor E_eta with eta != r")
        if not 1 <= eta <= r:
            raise IndexOutOfRange(f"eta={eta} outside 1..{r}")
        graph = cl.dual_graph(cluster, r)
        if eta not in graph.neighbors(r):
            raise EtaNotAdjacent(f"E_{eta} does not meet E_{r} on X_{r}")
        m_eta = cl.multiplicity_sequence(cluster, eta)
        w1 = m_r + (0,)
        w2 = m_eta + (0,) * (r - eta) + (1,)
    val = ExceptionalValuation(cluster, flag, w1, w2)
    _check_pair_proximity(val)
    return val


def _check_pair_proximity(val: ExceptionalValuation) -> None:
    """Z^2 proximity equalities on the finite cluster (all i < r; r is lex-automatic)."""
    ext = extend_cluster(val.cluster, val.flag, val.r + 1)
    for i in range(1, val.r):
        prox = ext.proximate_set(i, val.r + 1)
        total = (
            sum(val.weight(j).first for j in prox),
            sum(val.weight(j).second for j in prox),
        )
        if total != tuple(val.weight(i)):
            raise MalformedGraph(
                f"pair proximity equality fails at p_{i}: {val.weight(i)} != {total}"
            )


def _validate_branch(val: ExceptionalValuation, germ: BranchSpec) -> cl.ProximityCluster:
    mults = germ.mults
    if not mults or any(m < 0 for m in mults):
        raise BranchInvalid("branch multiplicities must be nonnegative and nonempty")
    top = germ.top_index()
    if top == 0:
        raise BranchInvalid("branch must pass through p_1")
    if any(m == 0 for m in mults[:top]):
        raise BranchInvalid("branch support must be a prefix of the point chain")
    ext = extend_cluster(val.cluster, val.flag, max(val.r + 1, top))
    for i in range(1, top + 1):
        prox_sum = sum(mults[j - 1] for j in ext.proximate_set(i, top) if j <= len(mults))
        if mults[i - 1] < prox_sum:
            raise BranchInvalid(
                f"proximity inequality fails at p_{i}: {mults[i - 1]} < {prox_sum}"
            )
    return ext


def pair_value(val: ExceptionalValuation, germ: BranchSpec) -> PairValue:
    """Value of an analytic branch: componentwise Noether dot product."""
    _validate_branch(val, germ)
    first = sum(m * val.weight(i).first for i, m in enumerate(germ.mults, start=1))
    second = sum(m * val.weight(i).second for i, m in enumerate(germ.mults, start=1))
    return PairValue(first, second)


def curve_value(val: ExceptionalValuation, curve: CurveSpec) -> PairValue:
    """Value of a curve germ: the sum over its branches."""
    if curve.degree <= 0 or not curve.branches:
        raise BranchInvalid("curve needs a positive degree and at least one branch")
    parts = [pair_value(val, b) for b in curve.branches]
    return PairValue(sum(p.first for p in parts), sum(p.second for p in parts))


def value_cone_slice(val: ExceptionalValuation, muhat) -> Body:
    """Triangle c(nu) /\\ h(nu): the value cone cut at first coordinate muhat."""
    mu = coerce(muhat)
    if mu.sign() <= 0:
        raise NonPositiveMuhat(f"muhat must be positive, got {muhat}")
    (lo1, lo2), (hi1, hi2) = val.boundary_rays()
    zero = ExactScalar(Fraction(0))
    verts = [
        (zero, zero),
        (mu, mu * Fraction(lo2, lo1)),
        (mu, mu * Fraction(hi2, hi1)),
    ]
    mc = maximal_contact_values(val.cluster, val.r)
    minimal = (mu * mu) == ExactScalar(Fraction(mc.betabar[-1]))
    return make_body(verts, muhat=mu, minimal=minimal, expect_shape=Shape.TRIANGLE)
