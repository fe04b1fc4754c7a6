from abstract.exceptions import FreqlabError


class InvalidMixError(FreqlabError, ValueError):
    pass


class NumericalError(FreqlabError, ArithmeticError):
    def __init__(self, message: str, step_time: float | None = None):
        self.step_time = step_time
        if step_time is not None:
            message = f"{message} at t={step_time:.6g} s"
        super().__init__(message)
