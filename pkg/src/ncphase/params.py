"""Noncommutativity parameters and their validity constraints."""

import math
from dataclasses import dataclass

from .errors import InvalidDeformation


@dataclass(frozen=True)
class NCParameters:
    """Deformation data of the phase space.

    mu and nu are the coordinate-coordinate and momentum-momentum
    noncommutativity scales (units length^2 and momentum^2); hbar is the
    usual action scale.  The derived dimensionless deformation is
    theta = sqrt(mu*nu)/hbar and must satisfy 0 < theta < 1 for the
    rotation-type mode realization to exist.
    """

    mu: float
    nu: float
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("mu", "nu", "hbar"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0.0:
                raise InvalidDeformation(
                    f"{name} must be finite and > 0 (got {value}); negative "
                    "scales leave the quarter-power quadrature factors undefined"
                )
        if not 0.0 < self.theta < 1.0:
            raise InvalidDeformation(
                f"theta = sqrt(mu*nu)/hbar = {self.theta} outside (0, 1); "
                "the deformed mode algebra degenerates at theta = 1"
            )

    @property
    def theta(self) -> float:
        return math.sqrt(self.mu * self.nu) / self.hbar

    @property
    def length_scale(self) -> float:
        """Quarter-power factor (mu/nu)^(1/4) carried by coordinates."""
        return (self.mu / self.nu) ** 0.25

    @property
    def momentum_scale(self) -> float:
        """Quarter-power factor (nu/mu)^(1/4) carried by momenta."""
        return (self.nu / self.mu) ** 0.25
