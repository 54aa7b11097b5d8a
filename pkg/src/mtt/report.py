"""Render law-suite reports as figures alongside the JSON output."""

from __future__ import annotations

import os
from typing import Iterable

from .laws import LawReport


def render_figures(reports: Iterable[LawReport], directory: str) -> list[str]:
    """Write PNG summaries (status and runtime) plus a JSON copy into a directory.

    Returns the list of file paths written.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    from .laws import reports_to_json

    reports = list(reports)
    os.makedirs(directory, exist_ok=True)
    written = []

    names = [r.law for r in reports]
    instances = [r.instances for r in reports]
    colors = ["#2a9d54" if r.passed else "#c0392b" for r in reports]
    height = max(3.0, 0.26 * len(reports) + 1.2)

    fig, ax = plt.subplots(figsize=(9, height))
    ax.barh(names, instances, color=colors)
    ax.set_xlabel("instances checked")
    ax.set_title("law suite: instances per law (red = failed)")
    ax.invert_yaxis()
    ax.tick_params(axis="y", labelsize=7)
    fig.tight_layout()
    status_path = os.path.join(directory, "laws_status.png")
    fig.savefig(status_path, dpi=120)
    plt.close(fig)
    written.append(status_path)

    fig, ax = plt.subplots(figsize=(9, height))
    ax.barh(names, [r.elapsed_ms for r in reports], color="#33658a")
    ax.set_xlabel("elapsed (ms)")
    ax.set_title("law suite: runtime per law")
    ax.invert_yaxis()
    ax.tick_params(axis="y", labelsize=7)
    fig.tight_layout()
    runtime_path = os.path.join(directory, "laws_runtime.png")
    fig.savefig(runtime_path, dpi=120)
    plt.close(fig)
    written.append(runtime_path)

    json_path = os.path.join(directory, "laws.json")
    with open(json_path, "w", encoding="utf-8") as handle:
        handle.write(reports_to_json(reports) + "\n")
    written.append(json_path)
    return written
