from dataclasses import dataclass

import numpy

from .engine import Trajectory
from .exceptions import EmptyTrajectoryError

DEFAULT_SETTLING_BAND = 0.02


@dataclass(frozen=True)
class NadirReport:
    nadir: float
    nadir_time: float
    settling_time: float | None
    steady_state_f: float
    # Hz/s over the first step
    rocof: float
    trigger_time: float | None

    def to_dict(self) -> dict:
        return {
            "nadir_hz": self.nadir,
            "nadir_time_s": self.nadir_time,
            "settling_time_s": self.settling_time,
            "steady_state_hz": self.steady_state_f,
            "rocof_hz_s": self.rocof,
            "trigger_time_s": self.trigger_time,
        }


def nadir_report(trajectory: Trajectory, band: float = DEFAULT_SETTLING_BAND) -> NadirReport:
    """
    Frequency metrics of one run.

    The steady state is the final sample; settling time is the first sample
    from which the frequency never again leaves ``band`` Hz around it.
    """
    if not len(trajectory):
        raise EmptyTrajectoryError("Cannot report on an empty trajectory")

    t, f = trajectory.t, trajectory.f
    lowest = int(numpy.argmin(f))
    steady_state = float(f[-1])

    outside = numpy.flatnonzero(numpy.abs(f - steady_state) > band)
    if not outside.size:
        settling_time = float(t[0])
    elif outside[-1] + 1 < len(t):
        settling_time = float(t[outside[-1] + 1])
    else:
        settling_time = None

    rocof = float((f[1] - f[0]) / (t[1] - t[0])) if len(t) > 1 else 0.0

    return NadirReport(
        nadir=float(f[lowest]),
        nadir_time=float(t[lowest]),
        settling_time=settling_time,
        steady_state_f=steady_state,
        rocof=rocof,
        trigger_time=trajectory.trigger_time,
    )
