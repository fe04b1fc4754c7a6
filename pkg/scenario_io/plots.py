from io import StringIO
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import pandas  # noqa: E402

from simulation.sweeps import SweepResult  # noqa: E402

from .repositories import write_atomic  # noqa: E402


def plot_frequency(frame: pandas.DataFrame, path: Path, threshold: float | None = None) -> Path:
    """SVG of the f_hz channel of a trajectory frame; no new data is computed."""
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.plot(frame["t"], frame["f_hz"], color="black", linewidth=1.2, label="frequency")
    if threshold is not None:
        ax.axhline(threshold, color="gray", linestyle=":", label=f"trigger {threshold} Hz")
    ax.set_xlabel("Time (s)")
    ax.set_ylabel("Frequency (Hz)")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="lower right")
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)
    fig.tight_layout()

    # svg embeds a creation date unless told otherwise
    buffer = StringIO()
    fig.savefig(buffer, format="svg", metadata={"Date": None})
    plt.close(fig)
    return write_atomic(path, buffer.getvalue())


def plot_sweep(
    baseline: SweepResult, results: list[SweepResult], path: Path, threshold: float | None = None
) -> Path:
    """One panel per response mode, one line per level, the no-EV run dashed in each."""
    modes = list(dict.fromkeys(result.mode for result in results))
    fig, axes = plt.subplots(1, len(modes), figsize=(6 * len(modes), 4), sharey=True, squeeze=False)
    levels = sorted({result.level for result in results})
    colors = plt.cm.viridis([i / max(len(levels) - 1, 1) for i in range(len(levels))])

    for ax, mode in zip(axes[0], modes):
        ax.plot(
            baseline.trajectory.t,
            baseline.trajectory.f,
            color="black",
            linestyle="--",
            linewidth=1.0,
            label="no EV",
        )
        for result in (r for r in results if r.mode is mode):
            ax.plot(
                result.trajectory.t,
                result.trajectory.f,
                color=colors[levels.index(result.level)],
                linewidth=1.2,
                label=f"{result.level:g}",
            )
        if threshold is not None:
            ax.axhline(threshold, color="gray", linestyle=":")
        ax.set_title(mode.value.upper())
        ax.set_xlabel("Time (s)")
        ax.grid(True, alpha=0.3)
        ax.spines["right"].set_visible(False)
        ax.spines["top"].set_visible(False)
    axes[0][0].set_ylabel("Frequency (Hz)")
    axes[0][-1].legend(title="participation", loc="lower right", fontsize="small")
    fig.tight_layout()

    buffer = StringIO()
    fig.savefig(buffer, format="svg", metadata={"Date": None})
    plt.close(fig)
    return write_atomic(path, buffer.getvalue())
