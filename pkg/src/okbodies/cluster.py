"""Proximity clusters of infinitely near points and their dual graphs.

A cluster records a simple sequence of point blow-ups purely combinatorially:
each point p_i (i >= 2) is proximate to its predecessor p_{i-1}, and a
satellite point carries one extra proximity ``satellite_of``.  All other data
of the package (multiplicities, dual graphs, Puiseux pairs) is derived from
this structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    IndexOutOfRange,
    MalformedGraph,
    NonConsecutiveIds,
    SatelliteOfSelfOrLater,
    SatelliteTargetInvalid,
)

__all__ = [
    "PointRecord",
    "ProximityCluster",
    "DualGraph",
    "GraphShape",
    "validate",
    "multiplicity_sequence",
    "dual_graph",
    "precedes",
    "graph_shape",
    "from_multiplicity_sequence",
]


@dataclass(frozen=True)
class PointRecord:
    """One blow-up center: 1-based index plus the optional extra proximity."""

    id: int
    satellite_of: int | None = None


@dataclass(frozen=True)
class ProximityCluster:
    points: tuple[PointRecord, ...]

    @property
    def size(self) -> int:
        return len(self.points)

    def satellite_of(self, i: int) -> int | None:
        return self.points[i - 1].satellite_of

    def is_satellite(self, i: int) -> bool:
        return self.points[i - 1].satellite_of is not None

    def proximities(self, i: int) -> tuple[int, ...]:
        """Indices j < i with p_i -> p_j (predecessor first)."""
        rec = self.points[i - 1]
        base = (i - 1,) if i > 1 else ()
        return base + ((rec.satellite_of,) if rec.satellite_of is not None else ())

    def proximate_set(self, i: int, n: int | None = None) -> tuple[int, ...]:
        """Indices j <= n of points proximate to p_i, in increasing order."""
        n = self.size if n is None else n
        out = [j for j in range(i + 1, n + 1) if i in self.proximities(j)]
        return tuple(out)

    def prefix(self, n: int) -> "ProximityCluster":
        if not 1 <= n <= self.size:
            raise IndexOutOfRange(f"prefix {n} of a {self.size}-point cluster")
        return ProximityCluster(self.points[:n])


def validate(points) -> ProximityCluster:
    """Check raw point records and return the validated cluster.

    Accepts an iterable of PointRecord, of ``{"satellite_of": j}`` mappings
    (ids implicit from position), or of ``int | None`` satellite targets.
    """
    records = []
    for pos, item in enumerate(points, start=1):
        if isinstance(item, PointRecord):
            records.append(item)
        elif isinstance(item, dict):
            unknown = set(item) - {"id", "satellite_of"}
            if unknown:
                raise SatelliteTargetInvalid(f"unknown point fields {sorted(unknown)}")
            records.append(PointRecord(item.get("id", pos), item.get("satellite_of")))
        elif item is None or isinstance(item, int):
            records.append(PointRecord(pos, item))
        else:
            raise SatelliteTargetInvalid(f"unreadable point record {item!r}")

    if not records:
        raise NonConsecutiveIds("empty cluster")
    for pos, rec in enumerate(records, start=1):
        if rec.id != pos:
            raise NonConsecutiveIds(f"expected id {pos}, got {rec.id}")

    cluster = ProximityCluster(tuple(records))
    for rec in records:
        i, j = rec.id, rec.satellite_of
        if j is None:
            continue
        if j >= i:
            raise SatelliteOfSelfOrLater(f"p_{i} satellite of p_{j}")
        if j < 1 or j == i - 1:
            # the proximity to the predecessor is implicit, never stored
            raise SatelliteTargetInvalid(f"p_{i} satellite of p_{j}")
        if j not in cluster.proximities(i - 1):
            raise SatelliteTargetInvalid(
                f"p_{i} satellite of p_{j}, but p_{i - 1} is not proximate to p_{j}"
            )
    return cluster


@lru_cache(maxsize=65536)
def _mseq(cluster: ProximityCluster, n: int) -> tuple[int, ...]:
    m = [0] * (n + 1)
    m[n] = 1
    for i in range(n - 1, 0, -1):
        m[i] = sum(m[j] for j in cluster.proximate_set(i, n))
    return tuple(m[1:])


def multiplicity_sequence(cluster: ProximityCluster, n: int) -> tuple[int, ...]:
    """Values m_i = nu_n(m_i) of the divisorial valuation of E_n, i = 1..n.

    Solved back-to-front: m_n = 1 and m_i is the sum of m_j over the points
    proximate to p_i, which is triangular in reverse index order.
    """
    if not 1 <= n <= cluster.size:
        raise IndexOutOfRange(f"n={n} outside 1..{cluster.size}")
    return _mseq(cluster, n)


def from_multiplicity_sequence(m) -> ProximityCluster:
    """Rebuild the unique cluster whose multiplicity sequence is ``m``.

    Greedy back-to-front: the proximate set of p_i is the shortest run
    {i+1, ..., k} whose multiplicities sum to m_i.
    """
    m = list(m)
    n = len(m)
    if n == 0 or m[-1] != 1:
        raise SatelliteTargetInvalid("multiplicity sequence must end with 1")
    ub = [i + 1 for i in range(n)]  # ub[i-1] = largest j with p_j -> p_i
    for i in range(n - 1, 0, -1):
        total, k = 0, i
        while total < m[i - 1]:
            k += 1
            if k > n:
                raise SatelliteTargetInvalid(f"proximity sums cannot reach m_{i}={m[i - 1]}")
            total += m[k - 1]
        if total != m[i - 1]:
            raise SatelliteTargetInvalid(f"proximity sums overshoot m_{i}={m[i - 1]}")
        ub[i - 1] = k
    sats: list[int | None] = [None] * n
    for i in range(1, n):
        for j in range(i + 2, ub[i - 1] + 1):
            sats[j - 1] = i
    return validate(sats)


@dataclass(frozen=True)
class DualGraph:
    """Tree of exceptional divisors on X_n; vertices are blow-up indices."""

    n: int
    edges: tuple[tuple[int, int], ...]  # sorted (i, j) with i < j
    root: int = 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = [j for i, j in self.edges if i == v] + [i for i, j in self.edges if j == v]
        return tuple(sorted(out))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def root_path(self, v: int) -> tuple[int, ...]:
        """Vertices on the unique path from the root to v, inclusive."""
        parent = self._parents()
        path = [v]
        while path[-1] != self.root:
            path.append(parent[path[-1]])
        return tuple(reversed(path))

    def path(self, a: int, b: int) -> tuple[int, ...]:
        pa, pb = self.root_path(a), self.root_path(b)
        k = 0
        while k < min(len(pa), len(pb)) and pa[k] == pb[k]:
            k += 1
        # pa[k-1] is the deepest common ancestor
        return tuple(reversed(pa[k - 1:])) + pb[k:]

    def _parents(self) -> dict[int, int]:
        return _parents_of(self)


@lru_cache(maxsize=65536)
def _parents_of(graph: DualGraph) -> dict[int, int]:
    adj: dict[int, list[int]] = {v: [] for v in range(1, graph.n + 1)}
    for i, j in graph.edges:
        adj[i].append(j)
        adj[j].append(i)
    parent = {graph.root: graph.root}
    stack = [graph.root]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                stack.append(w)
    if len(parent) != graph.n:
        raise MalformedGraph("dual graph is not connected")
    return parent


@lru_cache(maxsize=65536)
def _graph(cluster: ProximityCluster, n: int) -> DualGraph:
    prox = {i: set(cluster.proximities(i)) for i in range(1, n + 1)}
    edges = []
    for j in range(2, n + 1):
        for i in cluster.proximities(j):
            # E_i and E_j stay adjacent unless some later blow-up separates them
            separated = any(
                i in prox[k] and j in prox[k] for k in range(j + 1, n + 1)
            )
            if not separated:
                edges.append((i, j))
    return DualGraph(n, tuple(sorted(edges)))


def dual_graph(cluster: ProximityCluster, n: int) -> DualGraph:
    """Dual graph of E_1, ..., E_n on the blown-up surface X_n."""
    if not 1 <= n <= cluster.size:
        raise IndexOutOfRange(f"n={n} outside 1..{cluster.size}")
    return _graph(cluster, n)


def precedes(graph: DualGraph, a: int, b: int) -> bool:
    """Root-path partial order: a <= b iff the path from 1 to b contains a."""
    for v in (a, b):
        if not 1 <= v <= graph.n:
            raise IndexOutOfRange(f"vertex {v} outside 1..{graph.n}")
    return a in graph.root_path(b)


@dataclass(frozen=True)
class GraphShape:
    """Dead ends, star vertices and Puiseux-pair intervals of a dual graph."""

    dead_ends: tuple[int, ...]        # l_1, ..., l_g (, l_{g+1} if tail)
    star_vertices: tuple[int, ...]    # the degree-3 vertices, in pair order
    puiseux_pair_count: int
    tail_length: int
    pair_ranges: tuple[tuple[int, int], ...]  # index interval of each pair

    @property
    def pair_membership(self) -> dict[int, set[int]]:
        out: dict[int, set[int]] = {}
        for j, (lo, hi) in enumerate(self.pair_ranges, start=1):
            for i in range(lo, hi + 1):
                out.setdefault(i, set()).add(j)
        return out


@lru_cache(maxsize=65536)
def _shape(cluster: ProximityCluster, n: int) -> GraphShape:
    graph = _graph(cluster, n)
    for v in range(1, n + 1):
        if graph.degree(v) > 3:
            raise MalformedGraph(f"vertex {v} has degree {graph.degree(v)}")

    # Puiseux pairs are the maximal runs of consecutive satellite points;
    # pair j ends at the last satellite of run j (the paper's st_j) and its
    # dead end l_j is the last free point before the run starts.
    runs: list[tuple[int, int]] = []
    i = 2
    while i <= n:
        if cluster.is_satellite(i):
            start = i
            while i + 1 <= n and cluster.is_satellite(i + 1):
                i += 1
            runs.append((start, i))
        i += 1

    g = len(runs)
    dead_ends = tuple(start - 1 for start, _ in runs)
    pair_ranges = []
    prev_end = 1
    for _, end in runs:
        pair_ranges.append((prev_end, end))
        prev_end = end
    tail_length = n - prev_end
    if tail_length:
        dead_ends = dead_ends + (n,)
    # star vertices are the run ends that are interior to the trunk; when the
    # defining point is satellite the last run ends at n and is not a star
    stars = tuple(end for _, end in runs if end != n)

    shape = GraphShape(dead_ends, stars, g, tail_length, tuple(pair_ranges))

    # cross-check against the degree-based definitions
    deg1 = {v for v in range(2, n + 1) if graph.degree(v) == 1}
    deg3 = {v for v in range(1, n + 1) if graph.degree(v) == 3}
    if n >= 2 and (deg1 != set(shape.dead_ends) or deg3 != set(shape.star_vertices)):
        raise MalformedGraph(
            f"degree data {sorted(deg1)}/{sorted(deg3)} disagrees with "
            f"pair structure {shape.dead_ends}/{shape.star_vertices}"
        )
    return shape


def graph_shape(graph: DualGraph, cluster: ProximityCluster) -> GraphShape:
    """Shape classification of the dual graph of nu_n, n = graph.n."""
    if graph.n > cluster.size:
        raise IndexOutOfRange(f"graph on {graph.n} vertices, cluster has {cluster.size}")
    return _shape(cluster, graph.n)
