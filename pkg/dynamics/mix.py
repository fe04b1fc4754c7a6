import math
from dataclasses import dataclass

import numpy

from .exceptions import InvalidMixError


@dataclass(frozen=True)
class GenerationSource:
    name: str
    inertia_constant: float
    power_output: float

    def violations(self) -> list[str]:
        errors = []
        if not math.isfinite(self.inertia_constant) or self.inertia_constant < 0:
            errors.append(f"inertia_constant must be >= 0, got {self.inertia_constant}")
        if not math.isfinite(self.power_output) or self.power_output < 0:
            errors.append(f"power_output must be >= 0, got {self.power_output}")
        return errors

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "inertia_constant": self.inertia_constant,
            "power_output": self.power_output,
        }


@dataclass(frozen=True)
class GenerationMix:
    sources: tuple[GenerationSource, ...] = ()

    @property
    def base_power(self) -> float:
        # always recomputed from the members
        return math.fsum(source.power_output for source in self.sources)

    def violations(self) -> list[str]:
        errors = []
        for index, source in enumerate(self.sources):
            errors += [f"sources[{index}].{error}" for error in source.violations()]
        if not self.sources:
            errors.append("sources must not be empty")
        elif not self.base_power > 0:
            errors.append("total power_output must be > 0")
        return errors

    def to_dict(self) -> dict:
        return {"sources": [source.to_dict() for source in self.sources]}


# California, 2021-02-28 20:00, the low-inertia hour used as the default case.
# The printed effective H for this hour is 6.4 s while the output-weighted
# average of the rows below is 3.994 s; scenarios can override either way.
CALIFORNIA_MIX = GenerationMix(
    (
        GenerationSource("coal", 2.6, 1166.0),
        GenerationSource("natural_gas", 4.9, 12996.0),
        GenerationSource("nuclear", 4.1, 1147.0),
        GenerationSource("petroleum", 3.6, 88.0),
        GenerationSource("wind_solar", 0.0, 809.0),
        GenerationSource("hydro", 2.4, 3115.0),
        GenerationSource("other", 0.0, 509.0),
    )
)


def _check_mix(mix: GenerationMix):
    if not mix.sources:
        raise InvalidMixError("Generation mix has no sources")
    if not mix.base_power > 0:
        raise InvalidMixError("Generation mix has zero total power output")


def effective_inertia(mix: GenerationMix) -> float:
    """Output-weighted average of the member inertia constants, in seconds."""
    _check_mix(mix)
    inertia = numpy.array([source.inertia_constant for source in mix.sources])
    output = numpy.array([source.power_output for source in mix.sources])
    return float(numpy.dot(inertia, output) / output.sum())


def to_per_unit(power: float, mix: GenerationMix) -> float:
    _check_mix(mix)
    return power / mix.base_power
