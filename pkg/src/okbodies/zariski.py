"""Intersection theory on X_r and Zariski decompositions of H - t*E_r.

The Picard lattice is generated by H (pullback of a line) and the total
transforms E_i* with H^2 = 1, E_i*.E_j* = -delta_ij, H.E_i* = 0.  For
non-positive-at-infinity valuations the decomposition of H - t*E_r is given
in closed form on two affine regimes meeting at t0 = betabar_{g+1}/nu_r(v),
and slicing the body out of it reproduces the closed-form triangle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import cluster as cl
from .errors import DimensionMismatch, IndexOutOfRange, NotNPI, TOutOfRange
from .flagval import ExceptionalValuation
from .geometry import Body, Shape, make_body
from .invariants import curvette_value, maximal_contact_values
from .okbody import check_npi, _line_support_free_prefix, line_values
from .scalars import coerce

__all__ = [
    "DivisorClass",
    "Regime",
    "ZariskiPair",
    "intersect",
    "strict_transform",
    "curve_class",
    "decompose_npi",
    "slice_body",
]


@dataclass(frozen=True)
class DivisorClass:
    """h*H + sum(e_star_i * E_i*) with rational coefficients."""

    h: Fraction
    e_star: tuple[Fraction, ...]

    @property
    def r(self) -> int:
        return len(self.e_star)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if self.r != other.r:
            raise DimensionMismatch(f"rank {self.r} vs {other.r}")
        return DivisorClass(self.h + other.h, tuple(a + b for a, b in zip(self.e_star, other.e_star)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "DivisorClass":
        s = Fraction(scalar)
        return DivisorClass(s * self.h, tuple(s * c for c in self.e_star))

    __mul__ = __rmul__

    def is_zero(self) -> bool:
        return self.h == 0 and all(c == 0 for c in self.e_star)


def zero_class(r: int) -> DivisorClass:
    return DivisorClass(Fraction(0), (Fraction(0),) * r)


def hyperplane(r: int) -> DivisorClass:
    return DivisorClass(Fraction(1), (Fraction(0),) * r)


def exceptional(r: int, i: int) -> DivisorClass:
    e = [Fraction(0)] * r
    e[i - 1] = Fraction(1)
    return DivisorClass(Fraction(0), tuple(e))


def intersect(a: DivisorClass, b: DivisorClass) -> Fraction:
    """Intersection number in the standard lattice of a blown-up plane."""
    if a.r != b.r:
        raise DimensionMismatch(f"rank {a.r} vs {b.r}")
    return a.h * b.h - sum(x * y for x, y in zip(a.e_star, b.e_star))


def strict_transform(cluster: cl.ProximityCluster, i: int, r: int | None = None) -> DivisorClass:
    """Class of the strict transform of E_i on X_r: E_i* minus its satellites' total transforms."""
    r = cluster.size if r is None else r
    if not 1 <= i <= r <= cluster.size:
        raise IndexOutOfRange(f"i={i} outside 1..{r}")
    out = exceptional(r, i)
    for j in cluster.proximate_set(i, r):
        out = out - exceptional(r, j)
    return out


def curve_class(r: int, degree: int, mults) -> DivisorClass:
    """Class of the strict transform of a degree-d plane curve with the given multiplicities."""
    mults = tuple(mults)[:r]
    e = [-Fraction(m) for m in mults] + [Fraction(0)] * (r - len(mults))
    return DivisorClass(Fraction(degree), tuple(e))


class Regime(enum.Enum):
    BELOW_BREAK = "below_break"
    ABOVE_BREAK = "above_break"
    MINIMAL_CASE = "minimal"


@dataclass(frozen=True)
class ZariskiPair:
    t: Fraction
    positive: DivisorClass
    negative: DivisorClass
    regime: Regime
    components: tuple[tuple[str, Fraction, DivisorClass], ...]  # label, coefficient, class


def _d_class(cluster: cl.ProximityCluster, r: int, support) -> DivisorClass:
    """The nef generator nu_r(v)*H - sum(m_i * E_i*)."""
    m = cl.multiplicity_sequence(cluster, r)
    nu_v = sum(m[i - 1] for i in support)
    return DivisorClass(Fraction(nu_v), tuple(-Fraction(mi) for mi in m))


def decompose_npi(val: ExceptionalValuation, line_support, t) -> ZariskiPair:
    """Zariski decomposition of H - t*E_r for a non-positive-at-infinity flag."""
    cluster, r = val.cluster, val.r
    npi = check_npi(cluster, r, line_support)
    if not npi.is_npi:
        raise NotNPI(f"nu_r(v)^2 = {npi.nu_v}^2 < 1/vol")
    support = _line_support_free_prefix(cluster, r, line_support)
    t = Fraction(t)
    v = Fraction(npi.nu_v)
    if not 0 <= t <= v:
        raise TOutOfRange(f"t={t} outside [0, {v}]")

    mc = maximal_contact_values(cluster, r)
    bb_top = Fraction(mc.betabar[-1])
    phi = [Fraction(curvette_value(cluster, r, i)) for i in range(1, r + 1)]
    minimal = v * v == bb_top
    d_r = _d_class(cluster, r, support)
    H = hyperplane(r)

    components: list[tuple[str, Fraction, DivisorClass]] = []
    if minimal:
        regime = Regime.MINIMAL_CASE
        b0 = (v - t) / v
        br = t / (v * v)
        positive = b0 * H + br * d_r
        coeffs = {i: t * phi[i - 1] / (v * v) for i in range(1, r)}
    elif t * v <= bb_top:
        regime = Regime.BELOW_BREAK
        b0 = 1 - v * t / bb_top
        br = t / bb_top
        positive = b0 * H + br * d_r
        coeffs = {i: t * phi[i - 1] / bb_top for i in range(1, r)}
    else:
        regime = Regime.ABOVE_BREAK
        denom = v * v - bb_top
        br = (v - t) / denom
        positive = br * d_r
        vees = line_values(cluster, support, r)
        coeffs = {
            i: (vees[i - 1] * (v * t - bb_top) + phi[i - 1] * (v - t)) / denom
            for i in range(1, r)
        }
        a0 = (v * t - bb_top) / denom
        line = curve_class(r, 1, [1 if i in support else 0 for i in range(1, r + 1)])
        if a0:
            components.append(("L", a0, line))

    negative = zero_class(r)
    for i in range(1, r):
        if coeffs[i]:
            comp = strict_transform(cluster, i, r)
            components.append((f"E_{i}", coeffs[i], comp))
    for _, coeff, comp in components:
        negative = negative + coeff * comp

    pair = ZariskiPair(t, positive, negative, regime, tuple(components))
    target = H - t * exceptional(r, r)
    if not (pair.positive + pair.negative - target).is_zero():
        raise AssertionError(f"P_t + N_t != H - t E_r* at t={t}")
    return pair


def slice_body(val: ExceptionalValuation, line_support) -> Body:
    """Body reconstructed from the Zariski decompositions along the ray.

    alpha(t) is the coefficient in N_t of the unique negative component
    through q (the strict transform of E_eta; 0 for a free q), beta(t) adds
    P_t . E_r; both are affine per regime so the breakpoints determine the
    polygon.
    """
    cluster, r = val.cluster, val.r
    npi = check_npi(cluster, r, line_support)
    if not npi.is_npi:
        raise NotNPI(f"nu_r(v)^2 = {npi.nu_v}^2 < 1/vol")
    mc = maximal_contact_values(cluster, r)
    v = Fraction(npi.nu_v)
    t0 = Fraction(mc.betabar[-1]) / v
    breakpoints = sorted({Fraction(0), min(t0, v), v})

    lower, upper = [], []
    e_r = strict_transform(cluster, r, r)
    for t in breakpoints:
        pair = decompose_npi(val, line_support, t)
        alpha = Fraction(0)
        if not val.flag.is_free:
            label = f"E_{val.flag.eta}"
            alpha = next((c for lbl, c, _ in pair.components if lbl == label), Fraction(0))
        beta = alpha + intersect(pair.positive, e_r)
        lower.append((t, alpha))
        upper.append((t, beta))

    minimal = v * v == mc.betabar[-1]
    return make_body(lower + upper, muhat=coerce(v), minimal=minimal, expect_shape=Shape.TRIANGLE)
