from dataclasses import dataclass

from dynamics.mix import GenerationMix

from .exceptions import ProfileError

PROFILE_RESOLUTION = 15
PROFILE_ENTRIES = 24 * 60 // PROFILE_RESOLUTION


@dataclass(frozen=True)
class ProfileEntry:
    time_of_day: float
    mix: GenerationMix


@dataclass(frozen=True)
class DailyProfile:
    entries: tuple[ProfileEntry, ...]

    def __post_init__(self):
        if len(self.entries) != PROFILE_ENTRIES:
            raise ProfileError(
                f"Daily profile needs {PROFILE_ENTRIES} entries at "
                f"{PROFILE_RESOLUTION}-minute resolution, got {len(self.entries)}"
            )
        times = [entry.time_of_day for entry in self.entries]
        expected = list(range(0, 24 * 60, PROFILE_RESOLUTION))
        if times != expected:
            raise ProfileError(
                f"Daily profile entries must start at 00:00 and advance by "
                f"{PROFILE_RESOLUTION} minutes"
            )

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @classmethod
    def constant(cls, mix: GenerationMix) -> "DailyProfile":
        return cls(
            tuple(
                ProfileEntry(time_of_day, mix)
                for time_of_day in range(0, 24 * 60, PROFILE_RESOLUTION)
            )
        )
