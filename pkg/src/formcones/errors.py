"""Exception hierarchy for the toolkit.

Every error raised on purpose derives from :class:`FormconesError`, so callers
(including the CLI) can map failures to exit codes without matching on
messages.
"""


class FormconesError(Exception):
    """Base class for all toolkit errors."""


class DegenerateRay(FormconesError):
    """A zero vector was used where a ray direction is required."""


class DimensionMismatch(FormconesError):
    """Operands live in different ambient ranks."""


class NotPointed(FormconesError):
    """The cone has a positive-dimensional lineality space."""


class NotFullDimensional(FormconesError):
    """The cone does not span the ambient space."""


class DegenerateSpace(FormconesError):
    """The space has Picard rank 1, so its cone data is trivial."""


class RankUnsupported(FormconesError):
    """Chamber decompositions are only computed in Picard rank 2 and 3."""


class OutsideEffective(FormconesError):
    """The divisor class lies outside the effective cone."""


class BoundaryPoint(FormconesError):
    """The divisor class sits on a wall, so no chamber interior contains it."""


class NoReferenceData(FormconesError):
    """No bundled reference data covers the requested space."""


class RouteMismatch(FormconesError):
    """Two independent evaluation routes of the same formula disagree."""


class InternalError(FormconesError):
    """An internal consistency check failed; this is a bug if it fires."""
