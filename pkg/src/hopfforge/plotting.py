"""Figures for fusion rings and modular data (matplotlib, Agg backend)."""
from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

__all__ = ["plot_fusion", "plot_modular", "save_figure"]

STYLE = {
    "font.size": 8,
    "axes.titlesize": 9,
    "axes.labelsize": 8,
    "xtick.labelsize": 5,
    "ytick.labelsize": 5,
    "figure.dpi": 150,
}


def save_figure(fig, directory: str, name: str) -> str:
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, name)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path


def _family_ticks(ax, labels):
    """One tick per family block, at its first label."""
    starts = {}
    for k, lab in enumerate(labels):
        starts.setdefault(lab.family, k)
    pos = list(starts.values())
    ax.set_xticks(pos)
    ax.set_xticklabels(list(starts))
    ax.set_yticks(pos)
    ax.set_yticklabels(list(starts))


def plot_fusion(ring, directory: str) -> list:
    """Heatmaps of the number of simple summands of a.b and of one fusion matrix."""
    n = ring.rank
    total = np.zeros((n, n))
    for (a, b), row in ring.N.items():
        total[a, b] = sum(row.values())
    paths = []
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.2, 3.6))
        im = ax.imshow(total, cmap="viridis", interpolation="nearest")
        fig.colorbar(im, ax=ax, label=r"$\sum_c N_{ab}^c$")
        _family_ticks(ax, ring.labels)
        ax.set_xlabel("b")
        ax.set_ylabel("a")
        ax.set_title("summands of a.b")
        paths.append(save_figure(fig, directory, "fusion_summands.png"))

        a = max(range(n), key=lambda k: ring.dims[k])
        Na = np.zeros((n, n))
        for b in range(n):
            for c, k in ring.product(a, b).items():
                Na[b, c] = k
        fig, ax = plt.subplots(figsize=(4.2, 3.6))
        im = ax.imshow(Na, cmap="magma", interpolation="nearest")
        fig.colorbar(im, ax=ax, label=r"$N_{ab}^c$")
        _family_ticks(ax, ring.labels)
        ax.set_xlabel("c")
        ax.set_ylabel("b")
        ax.set_title(f"fusion matrix of {ring.labels[a]}")
        paths.append(save_figure(fig, directory, "fusion_matrix.png"))
    return paths


def plot_modular(md, directory: str) -> list:
    """|S~| on the computed rows and the twists on the unit circle."""
    rows = sorted({a for a, _ in md.S})
    n = len(md.labels)
    S = np.full((len(rows), n), np.nan)
    for (a, b), v in md.S.items():
        S[rows.index(a), b] = abs(v.to_complex())
    paths = []
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5.0, max(1.6, 0.12 * len(rows) + 1.0)))
        im = ax.imshow(S, cmap="viridis", aspect="auto", interpolation="nearest")
        fig.colorbar(im, ax=ax, label=r"$|\tilde S_{XY}|$")
        ax.set_yticks(range(len(rows)))
        ax.set_yticklabels([str(md.labels[a]) for a in rows])
        ax.set_xlabel("Y (label index)")
        ax.set_title(r"$|\tilde S|$ on computed rows")
        paths.append(save_figure(fig, directory, "s_matrix.png"))

        fig, ax = plt.subplots(figsize=(3.2, 3.2))
        circle = np.linspace(0, 2 * np.pi, 400)
        ax.plot(np.cos(circle), np.sin(circle), lw=0.5, color="0.6")
        colors = {"T": "C0", "U": "C1", "V": "C2", "W": "C3"}
        # shrinking markers so coinciding twists of different families stay visible
        sizes = {"T": 9, "U": 7, "V": 5, "W": 3}
        for a, th in sorted(md.theta.items()):
            z = th.to_complex()
            fam = getattr(md.labels[a], "family", "T")
            ax.plot(z.real, z.imag, "o", ms=sizes.get(fam, 4), color=colors.get(fam, "k"))
        for fam, c in colors.items():
            ax.plot([], [], "o", ms=sizes[fam], color=c, label=fam)
        ax.legend(loc="center", frameon=False)
        ax.set_aspect("equal")
        ax.set_title(r"twists $\theta_X$")
        ax.set_xlabel(r"Re $\theta$")
        ax.set_ylabel(r"Im $\theta$")
        paths.append(save_figure(fig, directory, "twists.png"))
    return paths
