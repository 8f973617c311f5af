"""Exception hierarchy for stratikit.

Every failure mode that callers are expected to handle gets its own class;
anything raised as InternalInconsistency indicates a bug or a violated
mathematical invariant, never bad user input.
"""


class StratikitError(Exception):
    """Base class for all stratikit errors."""


class InputError(StratikitError):
    """Malformed user input (JSON schema, CLI arguments, bad field spec)."""


class InvalidRelation(InputError):
    """A quiver relation is not composable/parallel or not in the square
    of the arrow ideal."""


class NotAdmissible(StratikitError):
    """Quiver compilation did not stabilize below the length bound; the
    ideal is (or behaves like) a non-admissible one."""


class NotBasicSplit(StratikitError):
    """An operation requiring a basic split algebra (semisimple quotient a
    product of copies of the base field) was attempted on something else."""


class LiftingFailed(StratikitError):
    """Primitive idempotent lifting could not certify a decomposition of
    the semisimple quotient; should not occur on the supported corpus."""


class DecompositionFailed(StratikitError):
    """Direct-sum decomposition could not be certified; reported rather
    than guessed."""


class ConstructionDiverged(StratikitError):
    """An iterative construction (universal extensions for the
    characteristic tilting module) exceeded its iteration bound."""


class NotFiltered(StratikitError):
    """A module presented as filtered by a family of modules turned out
    not to admit such a filtration."""


class TooManyIdempotents(StratikitError):
    """An exhaustive search over idempotent orders was requested for an
    algebra with too many vertices (factorial guard)."""


class PreconditionUnverified(StratikitError):
    """An operation whose correctness depends on a previously certified
    fact was called without that certificate."""


class InternalInconsistency(StratikitError):
    """Two independent computations of the same invariant disagreed."""


class RoutesDisagree(InternalInconsistency):
    """The Ext-vanishing route and the peeling route for filtration
    membership returned different verdicts."""
