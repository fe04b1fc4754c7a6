class FreqlabError(Exception):
    """Root of every error raised by the freqlab apps."""


class ValidationError(FreqlabError, ValueError):
    """Collects every violated constraint instead of stopping at the first one."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))
