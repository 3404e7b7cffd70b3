"""Problem documents and exact JSON serialization.

A document carries the cluster (blow-up order, satellite targets), the flag,
and where muhat comes from.  All machine output keeps rationals as "p/q"
strings in lowest terms; quadratic scalars serialize as {"a","b","d"}
objects, collapsing to a bare "p/q" string when the radical part vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cluster as cl
from .errors import ClusterError
from .flagval import BranchSpec, CurveSpec, FlagSpec
from .geometry import Body
from .scalars import ExactScalar

__all__ = [
    "ProblemDocument",
    "SchemaError",
    "parse_document",
    "fraction_to_json",
    "fraction_from_json",
    "scalar_to_json",
    "scalar_from_json",
    "body_to_json",
    "body_from_json",
]


class SchemaError(ClusterError):
    """Document does not match the expected schema."""


@dataclass(frozen=True)
class ProblemDocument:
    cluster: cl.ProximityCluster
    flag: FlagSpec | None
    mu_kind: str | None                 # "minimal" | "npi" | "curve"
    line_support: tuple[int, ...] | None
    curve: CurveSpec | None


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise SchemaError(msg)


def parse_document(data) -> ProblemDocument:
    _require(isinstance(data, dict), "document must be a JSON object")
    _require("cluster" in data, "missing 'cluster'")
    raw_points = data["cluster"]
    _require(isinstance(raw_points, list), "'cluster' must be a list")
    for item in raw_points:
        _require(isinstance(item, dict), "cluster entries must be objects")
        sat = item.get("satellite_of")
        _require(sat is None or isinstance(sat, int), "'satellite_of' must be an integer")
    cluster = cl.validate(raw_points)

    flag = None
    if "flag" in data and data["flag"] is not None:
        raw = data["flag"]
        _require(isinstance(raw, dict) and "q" in raw, "'flag' needs a 'q' field")
        if raw["q"] == "free":
            flag = FlagSpec(cluster.size, None)
        elif raw["q"] == "satellite":
            _require(isinstance(raw.get("eta"), int), "satellite flag needs integer 'eta'")
            flag = FlagSpec(cluster.size, raw["eta"])
        else:
            raise SchemaError("flag 'q' must be 'free' or 'satellite'")

    mu_kind = None
    line_support = None
    curve = None
    if "mu_source" in data and data["mu_source"] is not None:
        raw = data["mu_source"]
        _require(isinstance(raw, dict) and "kind" in raw, "'mu_source' needs a 'kind'")
        mu_kind = raw["kind"]
        if mu_kind == "minimal":
            pass
        elif mu_kind == "npi":
            support = raw.get("line_support")
            _require(
                isinstance(support, list) and all(isinstance(i, int) for i in support),
                "'npi' needs an integer list 'line_support'",
            )
            line_support = tuple(support)
        elif mu_kind == "curve":
            degree = raw.get("degree")
            branches = raw.get("branches")
            _require(isinstance(degree, int) and degree > 0, "'curve' needs a positive 'degree'")
            _require(
                isinstance(branches, list)
                and branches
                and all(
                    isinstance(b, list) and b and all(isinstance(m, int) and m >= 0 for m in b)
                    for b in branches
                ),
                "'curve' needs nonempty integer branch lists",
            )
            curve = CurveSpec(degree, tuple(BranchSpec(tuple(b)) for b in branches))
        else:
            raise SchemaError(f"unknown mu_source kind {mu_kind!r}")

    return ProblemDocument(cluster, flag, mu_kind, line_support, curve)


# -- exact JSON encoding ------------------------------------------------

def fraction_to_json(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def fraction_from_json(s) -> Fraction:
    if not isinstance(s, str) or "/" not in s:
        raise SchemaError(f"expected 'p/q' string, got {s!r}")
    p, q = s.split("/", 1)
    try:
        return Fraction(int(p), int(q))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {s!r}") from exc


def scalar_to_json(x: ExactScalar):
    if x.is_rational:
        return fraction_to_json(x.a)
    return {
        "a": fraction_to_json(x.a),
        "b": fraction_to_json(x.b),
        "d": x.d,
    }


def scalar_from_json(obj) -> ExactScalar:
    if isinstance(obj, str):
        return ExactScalar(fraction_from_json(obj))
    if isinstance(obj, dict):
        return ExactScalar(
            fraction_from_json(obj["a"]),
            fraction_from_json(obj["b"]),
            int(obj["d"]),
        )
    raise SchemaError(f"expected scalar encoding, got {obj!r}")


def body_to_json(body: Body) -> dict:
    return {
        "muhat": scalar_to_json(body.muhat),
        "shape": body.shape.value,
        "minimal": body.minimal,
        "vertices": [[scalar_to_json(x), scalar_to_json(y)] for x, y in body.vertices],
    }


def body_from_json(obj) -> dict:
    """Parse a body JSON back to exact values (round-trip check helper)."""
    return {
        "muhat": scalar_from_json(obj["muhat"]),
        "shape": obj["shape"],
        "minimal": obj["minimal"],
        "vertices": [tuple(scalar_from_json(c) for c in v) for v in obj["vertices"]],
    }
