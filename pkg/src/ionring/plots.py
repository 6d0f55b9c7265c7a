"""Figure rendering for the sweep datasets. File output only (Agg backend)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def modes_figure(spectrum, path: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    j = np.arange(1, spectrum.n_ions + 1)
    ax.plot(j, spectrum.frequencies, "o", ms=4)
    ax.set_xlabel("mode index j")
    ax.set_ylabel(r"$\omega_j$ (normalized)")
    ax.set_title(f"Normal modes, N = {spectrum.n_ions}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def flux_figure(rows, path: str) -> None:
    alphas = [r.alpha for r in rows]
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6, 7), sharex=True)
    for i, n in enumerate(rows[0].quantum_numbers):
        ax1.plot(alphas, [r.energies[i] for r in rows], lw=1,
                 label=rf"$n_1 = {n:g}$")
    ax1.set_ylabel(r"$E / E^*$")
    ax1.legend(fontsize=8, ncol=2)
    ax2.plot(alphas, [r.omega_gs for r in rows], lw=1, color="k")
    ties = [(r.alpha, r.omega_gs) for r in rows if r.degenerate]
    if ties:
        ax2.plot([t[0] for t in ties], [t[1] for t in ties], "rx", ms=5)
    ax2.set_xlabel(r"$\alpha$")
    ax2.set_ylabel(r"$\omega_{gs} / \omega^*$")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def diameter_figure(rows, path: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot([r.d_over_d0 for r in rows],
            [r.omega_over_omegastar0 for r in rows], lw=1)
    ax.axvline(2.0 ** -0.5, color="gray", lw=0.8, ls="--")
    ax.set_xlabel(r"$d / d_0$")
    ax.set_ylabel(r"$\omega / \omega^*_0$")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def thermal_figure(points, path: str) -> None:
    by_alpha: dict[float, list] = {}
    for p in points:
        by_alpha.setdefault(p.alpha, []).append(p)
    fig, ax = plt.subplots(figsize=(6, 4))
    for alpha, pts in by_alpha.items():
        ax.plot([p.t_over_tstar for p in pts],
                [p.omega_bar_over_omegastar for p in pts], lw=1,
                label=rf"$\alpha = {alpha:g}$")
    ax.set_xlabel(r"$T / T^*$")
    ax.set_ylabel(r"$\bar\omega / \omega^*$")
    if len(by_alpha) <= 12:
        ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
