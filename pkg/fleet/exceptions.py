from abstract.exceptions import FreqlabError


class InvalidBatteryError(FreqlabError, ValueError):
    pass


class UnknownStrategyError(FreqlabError, KeyError):
    def __init__(self, name: str, known: list[str]):
        self.name = name
        self.known = known
        super().__init__(name)

    def __str__(self):
        return f"Unknown charging strategy '{self.name}', expected one of: {', '.join(self.known)}"
