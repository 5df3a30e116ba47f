"""Report figures, written to files (no display needed)."""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

RC = {
    "figure.figsize": (6.4, 4.0),
    "figure.dpi": 100,
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "savefig.bbox": "tight",
}

STATUS_COLORS = {"pass": "#4c9a5b", "fail": "#c0392b", "error": "#e08a1e"}


def _save(fig, path: Path | str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_stabilization(values: dict, plateau: int, exact: int | None, title: str,
                       path: Path | str) -> Path:
    """k at each padding level, with the plateau and the exact value marked."""
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        ns = sorted(values)
        ax.plot(ns, [values[n] for n in ns], "o-", color="#34495e", label="k(padded triple)")
        ax.axhline(plateau, ls="--", color="#4c9a5b", label=f"plateau = {plateau}")
        if exact is not None and exact != plateau:
            ax.axhline(exact, ls=":", color="#c0392b", label=f"exact formula = {exact}")
        ax.set_xlabel("n")
        ax.set_ylabel("value")
        ax.set_title(title)
        ax.xaxis.get_major_locator().set_params(integer=True)
        ax.yaxis.get_major_locator().set_params(integer=True)
        ax.legend(frameon=False)
        return _save(fig, path)


def plot_verification(reports, path: Path | str) -> Path:
    """Cases run per suite, coloured by status."""
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(6.4, 0.28 * len(reports) + 1.2))
        names = [r.suite.name for r in reports]
        ys = range(len(reports))
        ax.barh(ys, [max(r.cases_run, 1) for r in reports],
                color=[STATUS_COLORS.get(r.status, "grey") for r in reports])
        ax.set_yticks(list(ys), names)
        ax.invert_yaxis()
        ax.set_xscale("log")
        ax.set_xlabel("cases run")
        for y, r in zip(ys, reports):
            ax.text(max(r.cases_run, 1), y, f" {r.status} ({r.wall_time:.1f}s)", va="center", fontsize=7)
        ax.grid(axis="y", visible=False)
        return _save(fig, path)


def plot_sweep(values, title: str, path: Path | str) -> Path:
    """How often each coefficient value occurs in a sweep."""
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        freq = Counter(values)
        xs = sorted(freq)
        ax.bar([str(x) for x in xs], [freq[x] for x in xs], color="#34495e")
        ax.set_xlabel("coefficient value")
        ax.set_ylabel("ordered triples")
        ax.set_title(title)
        ax.grid(axis="x", visible=False)
        return _save(fig, path)
