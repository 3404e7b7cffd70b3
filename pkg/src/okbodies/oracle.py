"""Independent cross-checkers and the seeded random input generator.

These deliberately re-derive their answers from first principles (dot
products, shoelace sums) so the main computation paths have something
honest to disagree with.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import cluster as cl
from .errors import DegeneratePolygon
from .geometry import shoelace_area
from .scalars import ExactScalar

__all__ = [
    "ClusterGenSpec",
    "random_cluster",
    "noether_intersection_oracle",
    "polygon_area",
]


@dataclass(frozen=True)
class ClusterGenSpec:
    max_points: int
    satellite_probability: Fraction = Fraction(1, 3)
    seed: int = 0


def random_cluster(spec: ClusterGenSpec) -> cl.ProximityCluster:
    """Uniformly seeded valid cluster; satellite targets drawn among legal ones."""
    if spec.max_points < 1:
        raise ValueError("max_points must be >= 1")
    rng = random.Random(spec.seed)
    n = rng.randint(1, spec.max_points)
    sats: list[int | None] = [None]
    for i in range(2, n + 1):
        # legal extra targets: points the predecessor is proximate to
        legal = [j for j in ((i - 2,) if i >= 3 else ()) if j >= 1]
        prev_sat = sats[i - 2]
        if prev_sat is not None:
            legal.append(prev_sat)
        if legal and rng.random() < spec.satellite_probability:
            sats.append(rng.choice(sorted(legal)))
        else:
            sats.append(None)
    return cl.validate(sats)


def noether_intersection_oracle(cluster: cl.ProximityCluster, i: int, j: int) -> int:
    """(phi_i, phi_j)_p as a raw dot product of independently recomputed multiplicities."""

    def mults(k: int) -> list[int]:
        m = [0] * (k + 1)
        m[k] = 1
        for a in range(k - 1, 0, -1):
            total = 0
            for b in range(a + 1, k + 1):
                if a in cluster.proximities(b):
                    total += m[b]
            m[a] = total
        return m[1:]

    mi, mj = mults(i), mults(j)
    return sum(a * b for a, b in zip(mi, mj))


def polygon_area(vertices) -> ExactScalar:
    """Exact shoelace area of a simple polygon given as scalar pairs."""
    if len(tuple(vertices)) < 3:
        raise DegeneratePolygon("need at least 3 vertices")
    return shoelace_area(vertices)
