"""Exception types shared across the package."""


class NCPhaseError(Exception):
    """Base class for all ncphase errors."""


class InvalidDeformation(NCPhaseError):
    """Deformation parameters outside the representable range (need 0 < theta < 1)."""


class CutoffTooSmall(NCPhaseError):
    """Fock cutoff too small for the requested construction."""


class BasisMismatch(NCPhaseError):
    """Operands live on different Fock bases."""


class MarginTooLarge(NCPhaseError):
    """Projection margin exceeds the available occupation range."""


class InvalidRegime(NCPhaseError):
    """Oscillator parameters violate a validity constraint; the message names it."""


class NonPositiveKinetic(NCPhaseError):
    """Scaling step requires strictly positive kinetic coefficients."""


class ComplexFrequency(NCPhaseError):
    """A normal-mode radicand went negative; no real frequencies exist."""


class NotConverged(NCPhaseError):
    """Numeric eigenvalues failed the cutoff-convergence check."""


class QuadratureTooCoarse(NCPhaseError):
    """Quadrature rule has too few nodes per axis."""


class GridTooCoarse(NCPhaseError):
    """Sampled grid has too few points per axis."""


class BoundaryLeak(NCPhaseError):
    """Grid function does not decay at the sampling boundary."""


class SingularChain(NCPhaseError):
    """The classical coordinate chain is singular (1 - theta^2 <= 0)."""


class ConfigError(NCPhaseError):
    """Invalid run configuration (CLI exit code 2)."""
