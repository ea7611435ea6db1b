"""Combinatorial analysis of weak reducing pairs on genus-3 Heegaard splittings."""

from .schema import SurfaceSchema
from .errors import (
    ArcBudgetExceeded, ArcIntersectsCurves, BudgetExceeded, ClusterAnomaly,
    GenusTooSmall, HeegaardError, InvalidSequence, MalformedWord, NotAPath,
    NotCanceling, NotDisjoint, NotNonSeparating, NotSeparating, UnknownBuiltin,
    ValidationError,
)

__all__ = [
    "SurfaceSchema",
    "ArcBudgetExceeded", "ArcIntersectsCurves", "BudgetExceeded",
    "ClusterAnomaly", "GenusTooSmall", "HeegaardError", "InvalidSequence",
    "MalformedWord", "NotAPath", "NotCanceling", "NotDisjoint",
    "NotNonSeparating", "NotSeparating", "UnknownBuiltin", "ValidationError",
]
