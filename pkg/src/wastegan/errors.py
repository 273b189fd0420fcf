"""Exception types shared across the package."""


class WasteGanError(Exception):
    """Base class for all package errors."""


class ConfigurationError(WasteGanError):
    """A config value is out of its documented range."""


class DimensionError(WasteGanError):
    """Operand shapes do not conform; message carries both shapes."""


class ContractError(WasteGanError):
    """A documented precondition was violated by the caller."""


class TrainingDiverged(WasteGanError):
    """A loss term became non-finite; carries (step, term)."""

    def __init__(self, step: int, term: str):
        super().__init__(f"non-finite loss at step {step}: {term}")
        self.step = step
        self.term = term


class ProjectionFailed(WasteGanError):
    """No valid depth available around the requested pixel."""


class CheckpointError(WasteGanError):
    """Malformed or mismatched checkpoint file."""
