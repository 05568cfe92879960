"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument violates a documented precondition."""


class SingularityError(RuntimeError):
    """A regression matrix is rank deficient (try a smaller lag order)."""


class DivergenceError(RuntimeError):
    """Integration produced a non-finite state."""

    def __init__(self, step: int, time: float):
        self.step = step
        self.time = time
        super().__init__(f"non-finite state at step {step} (t={time:.6g})")


class DegeneratePulseError(RuntimeError):
    """The perturbed node itself showed no response (forcing too small)."""
