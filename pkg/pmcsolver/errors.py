"""Exception hierarchy shared by the library, the CLI and the HTTP service.

Every error carries the CLI exit code and the HTTP status it maps to, so entry
points can convert without knowing the concrete class.
"""


class SolverError(Exception):
    """Base class for all solver errors."""

    exit_code = 1
    status_code = 400


# Class / promise violations (exit code 2)

class ClassViolation(SolverError):
    """The input graph breaks a structural promise of the algorithm."""

    exit_code = 2
    status_code = 422


class NotInClassC(ClassViolation):
    """Graph contains a hole of length >= 6 or an extended C5."""


class NotLongHoleFree(ClassViolation):
    """Graph contains an induced cycle of length >= 5."""


class NotP5Free(ClassViolation):
    """Graph contains an induced path on five vertices."""


class NotAClique(ClassViolation):
    """Minimal dominating connected set of a full component is not a clique."""


class NoPrivateVertex(ClassViolation):
    """A vertex of Z has no private neighbor in the separator."""


class NoCoveringComponent(ClassViolation):
    """No component of G - Omega sees a whole independent subset of Omega."""


class NoSuchPair(ClassViolation):
    """No two components cover Omega minus the neighborhood of a vertex."""


class NoZVertices(ClassViolation):
    """The separator has no vertex anticomplete to the far side of the solution."""


class ContainerMissesPmc(ClassViolation):
    """An assembled impure-PMC container does not contain the PMC."""


class LiftFailed(ClassViolation):
    """Neither lifting candidate is a PMC of the larger graph."""


# Budget / size limits (exit code 3)

class BudgetExceeded(SolverError):
    """An enumeration exceeded its budget."""

    exit_code = 3
    status_code = 413


class TooLarge(BudgetExceeded):
    """Instance is above the size cap of an exponential routine."""


class GiveUp(BudgetExceeded):
    """Rejection sampling did not produce an instance in the allowed attempts."""


# Parse errors (exit code 4)

class GraphParseError(SolverError):
    """Malformed graph or family file."""

    exit_code = 4
    status_code = 400


# Contract errors raised to the caller (exit code 1)

class PrimitiveSeparator(SolverError):
    """Separator lies in a single open neighborhood; use the F0 family."""


class PurePmc(SolverError):
    """All adhesions of the PMC already belong to the separator family."""


class NotAPmc(SolverError):
    """The given set is not a potential maximal clique."""


class JNotIndependent(SolverError):
    """The given subset of Omega is not independent."""


class VNotCovered(SolverError):
    """No component of G - Omega has the vertex in its neighborhood."""


class InvalidArgument(SolverError):
    """Argument outside the documented domain."""
