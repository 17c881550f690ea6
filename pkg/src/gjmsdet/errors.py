"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument violates a documented precondition."""


class UnsupportedArgumentError(ValueError):
    """The requested case is outside what the library computes."""


class DivergentIntegralError(ValueError):
    """The requested integral does not converge (non-positive decay rate,
    or a spectral factor with 2*alpha >= d)."""


class InternalConsistencyError(RuntimeError):
    """An exact identity that must hold by construction failed; indicates a
    broken coefficient table or a bug, never bad user input."""


class EvaluationError(RuntimeError):
    """An integrand sample came back non-finite."""

    def __init__(self, message: str, abscissa: float):
        super().__init__(f"{message} (at x = {abscissa!r})")
        self.abscissa = abscissa


class AccuracyError(RuntimeError):
    """The panel budget ran out before the tolerance was met.  Carries the
    best available value and its error estimate."""

    def __init__(self, message: str, value: float, err_estimate: float, panels_used: int):
        super().__init__(
            f"{message}: best value {value!r} with error estimate {err_estimate:.3e} "
            f"after {panels_used} panels"
        )
        self.value = value
        self.err_estimate = err_estimate
        self.panels_used = panels_used
