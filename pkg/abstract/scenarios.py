from __future__ import annotations

import abc
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from dynamics.grid import Disturbance, GovernorParams
    from dynamics.mix import GenerationMix
    from fleet.vehicles import FleetConfig


class ScenarioInterface(abc.ABC):
    """Fields every scenario source provides, one per scenario-file key."""

    mix: GenerationMix
    h_override: float | None
    governor: GovernorParams
    fleet: FleetConfig
    disturbance: Disturbance
    trigger_threshold: float
    sim_time_of_day: float
    horizon: float
    dt: float
