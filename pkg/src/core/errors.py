"""Exceptions raised across the simulator.

Value problems subclass ``ValueError`` and numerical breakdowns subclass
``RuntimeError`` so callers that only care about the broad category can keep
catching the builtins.
"""


class GridMismatchError(ValueError):
    """Two spectral objects live on different frequency grids."""


class EmptyFieldError(ValueError):
    """A field with zero norm was passed where energy is required."""


class EmptyBandError(ValueError):
    """A spectral window selects no grid points or no kernel support."""


class DegenerateSeedError(ValueError):
    """The seed has no usable component outside the already-known modes."""


class ConfigError(ValueError):
    """The experiment configuration cannot be resolved."""


class ConvergenceError(RuntimeError):
    """A mandatory feedback-iteration stage did not converge."""
