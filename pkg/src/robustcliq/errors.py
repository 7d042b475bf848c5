"""Exception types raised across the package."""


class RobustCliqError(Exception):
    """Base class for all package errors."""


class OddCycle(RobustCliqError):
    """Raised when a graph that must be bipartite contains an odd cycle."""

    def __init__(self, witness):
        self.witness = list(witness)
        super().__init__(f"graph is not bipartite; odd cycle {self.witness}")


class InvalidAttachment(RobustCliqError):
    def __init__(self, step_index, reason):
        self.step_index = step_index
        self.reason = reason
        super().__init__(f"step {step_index}: {reason}")


class SizeCapExceeded(RobustCliqError):
    """A configured resource cap (universe size, face count, time) was hit."""


class UniverseMismatch(RobustCliqError):
    pass
