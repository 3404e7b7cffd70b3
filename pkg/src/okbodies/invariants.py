"""Classical invariants of divisorial valuations.

Maximal contact values, the gcd ladder, Puiseux exponents with their
continued fractions, volume, and the closed-form intersection numbers of
curvettes.  Everything is integer/rational exact; values of sub-valuations
nu_k always refer to the prefix cluster p_1..p_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import cluster as cl
from .errors import IndexOutOfRange, OrderViolation

__all__ = [
    "MaximalContactData",
    "PuiseuxExponents",
    "curvette_multiplicities",
    "curvette_value",
    "maximal_contact_values",
    "puiseux_exponents",
    "intersection_formula",
    "beta_prime_monotone",
    "continued_fraction",
    "evaluate_continued_fraction",
]


@dataclass(frozen=True)
class MaximalContactData:
    betabar: tuple[int, ...]   # betabar_0 .. betabar_{g+1}
    e: tuple[int, ...]         # e_j = gcd(betabar_0..betabar_j), j = 0..g
    n_factors: tuple[int, ...] # n_j = e_{j-1}/e_j, j = 1..g
    g: int
    volume: Fraction


@dataclass(frozen=True)
class PuiseuxExponents:
    beta_prime: tuple[Fraction, ...]
    cf: tuple[tuple[int, ...], ...]


def curvette_multiplicities(cluster: cl.ProximityCluster, k: int) -> tuple[int, ...]:
    """Multiplicities of a k-curvette at p_1..p_k (it passes through no later point)."""
    return cl.multiplicity_sequence(cluster, k)


def curvette_value(cluster: cl.ProximityCluster, n: int, k: int) -> int:
    """Intersection multiplicity (phi_n, phi_k)_p by the Noether dot product."""
    if not (1 <= n <= cluster.size and 1 <= k <= cluster.size):
        raise IndexOutOfRange(f"(n, k)=({n}, {k}) outside 1..{cluster.size}")
    mn = cl.multiplicity_sequence(cluster, n)
    mk = cl.multiplicity_sequence(cluster, k)
    return sum(a * b for a, b in zip(mn, mk))


@lru_cache(maxsize=65536)
def _mcv(cluster: cl.ProximityCluster, n: int) -> MaximalContactData:
    shape = cl._shape(cluster, n)
    m = cl.multiplicity_sequence(cluster, n)
    betabar = [m[0]]
    betabar += [curvette_value(cluster, n, ell) for ell in shape.dead_ends[: shape.puiseux_pair_count]]
    betabar.append(sum(v * v for v in m))
    e = [betabar[0]]
    for j in range(1, shape.puiseux_pair_count + 1):
        e.append(gcd(e[-1], betabar[j]))
    n_factors = tuple(e[j - 1] // e[j] for j in range(1, len(e)))
    return MaximalContactData(
        betabar=tuple(betabar),
        e=tuple(e),
        n_factors=n_factors,
        g=shape.puiseux_pair_count,
        volume=Fraction(1, betabar[-1]),
    )


def maximal_contact_values(cluster: cl.ProximityCluster, n: int) -> MaximalContactData:
    if not 1 <= n <= cluster.size:
        raise IndexOutOfRange(f"n={n} outside 1..{cluster.size}")
    return _mcv(cluster, n)


def continued_fraction(x: Fraction) -> tuple[int, ...]:
    """Euclidean expansion [a_0, a_1, ...] of a positive rational.

    All terms after a_0 are >= 1 and the last term is >= 2 unless the
    expansion is the single term [a_0].
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError("continued fractions of positive rationals only")
    p, q = x.numerator, x.denominator
    out = []
    while q:
        out.append(p // q)
        p, q = q, p % q
    return tuple(out)


def evaluate_continued_fraction(cf) -> Fraction:
    val = Fraction(cf[-1])
    for a in reversed(cf[:-1]):
        val = a + 1 / val
    return val


def puiseux_exponents(mc: MaximalContactData) -> PuiseuxExponents:
    """Puiseux exponents beta'_1..beta'_{g+1} and their continued fractions."""
    bp = []
    for j in range(1, mc.g + 2):
        n_prev = 1 if j == 1 else mc.n_factors[j - 2]
        e_prev = mc.e[min(j - 1, len(mc.e) - 1)]
        bp.append(1 + Fraction(mc.betabar[j] - n_prev * mc.betabar[j - 1], e_prev))
    return PuiseuxExponents(tuple(bp), tuple(continued_fraction(b) for b in bp))


def _rho(cluster: cl.ProximityCluster, i: int, n: int) -> int:
    """Largest m such that phi_i passes through every point of the m-th pair."""
    shape = cl._shape(cluster, n)
    rho = 0
    for j, (_, end) in enumerate(shape.pair_ranges, start=1):
        if end <= i:
            rho = j
    return rho


def intersection_formula(cluster: cl.ProximityCluster, i: int, j: int) -> int:
    """(phi_i, phi_j)_p from maximal contact values, without the dot product.

    Case (a) applies when E_i is free and i lies strictly inside the free
    part of pair rho(i)+1; there d counts the vertices of the dual-graph
    path from vertex st_rho+1 (vertex 1 when rho = 0) to vertex i.  The
    Noether dot product (`curvette_value`) is the independent oracle.
    """
    if not (1 <= i and j <= cluster.size):
        raise IndexOutOfRange(f"(i, j)=({i}, {j}) outside 1..{cluster.size}")
    if i >= j:
        raise OrderViolation(f"need i < j, got ({i}, {j})")
    shape = cl._shape(cluster, j)
    mc_i = maximal_contact_values(cluster, i)
    mc_j = maximal_contact_values(cluster, j)
    rho = _rho(cluster, i, j)
    dead_ends = shape.dead_ends  # l_1..l_g(, l_{g+1})

    if not cluster.is_satellite(i) and rho < len(dead_ends) and i < dead_ends[rho]:
        # case (a): E_i free, strictly before the dead end of pair rho+1
        e_prev_i = 0 if rho == 0 else mc_i.e[rho - 1]
        start = 1 if rho == 0 else shape.pair_ranges[rho - 1][1] + 1
        graph = cl.dual_graph(cluster, j)
        d = len(graph.path(start, i))
        return e_prev_i * mc_j.betabar[rho] + d * mc_i.e[rho] * mc_j.e[rho]
    # case (b)
    return min(
        mc_i.e[rho] * mc_j.betabar[rho + 1],
        mc_j.e[rho] * mc_i.betabar[rho + 1],
    )


def beta_prime_monotone(cluster: cl.ProximityCluster, i: int, j: int) -> bool:
    """True iff betabar_{rho+1}(nu_i)/e_rho(nu_i) <= betabar_{rho+1}(nu_j)/e_rho(nu_j).

    Equivalent to j not preceding i in the root-path order of the dual graph
    of nu_j; exposed separately so the equivalence can be property-tested.
    """
    if not (1 <= i and j <= cluster.size):
        raise IndexOutOfRange(f"(i, j)=({i}, {j}) outside 1..{cluster.size}")
    if i >= j:
        raise OrderViolation(f"need i < j, got ({i}, {j})")
    rho = _rho(cluster, i, j)
    mc_i = maximal_contact_values(cluster, i)
    mc_j = maximal_contact_values(cluster, j)
    return (
        mc_i.betabar[rho + 1] * mc_j.e[rho] <= mc_j.betabar[rho + 1] * mc_i.e[rho]
    )
