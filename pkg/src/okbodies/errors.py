"""Exception hierarchy shared by all modules.

Every error carries a machine-readable ``code`` (its class name); the CLI
maps ``ClusterError``/schema problems to exit code 2 and ``MathError``
(violated mathematical preconditions) to exit code 3.
"""


class OkbodiesError(Exception):
    """Base class for all domain errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class ClusterError(OkbodiesError):
    """Structurally invalid input data (exit code 2 in the CLI)."""


class MathError(OkbodiesError):
    """Violated mathematical precondition (exit code 3 in the CLI)."""


class NonConsecutiveIds(ClusterError):
    pass


class SatelliteTargetInvalid(ClusterError):
    pass


class SatelliteOfSelfOrLater(ClusterError):
    pass


class IndexOutOfRange(ClusterError):
    pass


class OrderViolation(ClusterError):
    pass


class MalformedGraph(ClusterError):
    pass


class DimensionMismatch(ClusterError):
    pass


class EtaEqualsR(MathError):
    pass


class EtaNotAdjacent(MathError):
    pass


class BranchInvalid(MathError):
    pass


class NonPositiveMuhat(MathError):
    pass


class NotSupraminimal(MathError):
    pass


class CertificateInconsistent(MathError):
    pass


class LineSupportInvalid(MathError):
    pass


class RTooSmall(MathError):
    pass


class NotNPI(MathError):
    pass


class TOutOfRange(MathError):
    pass


class BranchSlopeUnrecognized(MathError):
    pass


class DegeneratePolygon(MathError):
    pass
