from abstract.exceptions import FreqlabError, ValidationError


class ScenarioValidationError(ValidationError):
    pass


class EmptyTrajectoryError(FreqlabError, ValueError):
    pass


class ProfileError(FreqlabError, ValueError):
    pass
