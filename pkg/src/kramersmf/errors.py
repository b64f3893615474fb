"""Exception hierarchy for the toolkit.

Every failure mode that callers are expected to handle gets its own class so
that pipeline stages can report precisely what went wrong.
"""


class KramersError(Exception):
    """Base class for all toolkit errors."""


class UnsupportedOrder(KramersError):
    """Derivative order not available for this potential representation."""


class QuadratureFailure(KramersError):
    """An adaptive quadrature did not reach the requested tolerance."""


class Overflow(KramersError):
    """Integrand exceeds the representable range even after max-shifting."""


class SolverFailure(KramersError):
    """A root solve (Newton / bisection) did not converge."""


class OscillatoryQuadratureFailure(KramersError):
    """Oscillatory quadrature failed or the frequency exceeds the cap."""


class DegenerateMinimum(KramersError):
    """Second derivative at the minimizer is too small for the asymptotics."""


class NoDoubleWell(KramersError):
    """The macroscopic Hamiltonian has no strictly positive critical point."""


class MultipleRoots(KramersError):
    """The critical-point scan found more than one positive root."""


class GeometryDegenerate(KramersError):
    """The metastable geometry collapsed (boundary shift reaches the well)."""


class InvalidPoincare(KramersError):
    """Non-positive Poincare constant supplied."""


class NonFinite(KramersError):
    """A state vector contains NaN or infinity."""


class NumericBlowup(KramersError):
    """Integration diverged; the time step is too large for this config."""


class AllTimedOut(KramersError):
    """Every trajectory in a Monte Carlo budget hit the step limit."""


class InvalidBudget(KramersError):
    """A Monte Carlo run was requested with a non-positive sample count."""


class ConfigInvalid(KramersError):
    """Experiment configuration failed schema validation."""


class StageFailure(KramersError):
    """A pipeline stage errored; carries the stage name and the cause."""

    def __init__(self, stage: str, cause: BaseException):
        super().__init__(f"stage '{stage}' failed: {cause}")
        self.stage = stage
        self.cause = cause


class IoFailure(KramersError):
    """Report rendering could not write an output file."""
