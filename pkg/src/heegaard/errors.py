"""Exception types shared across the package.

Validation errors map to CLI exit code 2, budget errors to exit code 3.
"""


class HeegaardError(Exception):
    """Base class for all package errors."""


class ValidationError(HeegaardError):
    """Bad input data (exit code 2)."""


class MalformedWord(ValidationError):
    """A crossing word does not close up on the schema or uses unknown tokens."""


class NotDisjoint(ValidationError):
    """Curves handed to a cut were not pairwise disjoint."""


class ArcIntersectsCurves(ValidationError):
    """A band-sum arc cannot be realized with interior disjoint from the curves."""


class NotSeparating(ValidationError):
    """Operation requires a separating disk."""


class NotNonSeparating(ValidationError):
    """Operation requires a non-separating disk."""


class NotCanceling(ValidationError):
    """The two disks do not intersect transversely in a single point."""


class GenusTooSmall(ValidationError):
    """Operation requires ambient genus at least two."""


class NotAPath(ValidationError):
    """Edge list is not a simple path in the graph."""


class InvalidSequence(ValidationError):
    """An alternating disk sequence violates its adjacency constraints."""


class ClusterAnomaly(ValidationError):
    """A same-label component is not a star; input is not genuine splitting data."""


class UnknownBuiltin(ValidationError):
    """No built-in splitting with the requested name."""


class BudgetExceeded(HeegaardError):
    """A configured enumeration or search cap was hit (exit code 3)."""


class ArcBudgetExceeded(BudgetExceeded):
    """Arc generation exhausted its candidate budget."""
