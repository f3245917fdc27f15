"""Figure rendering for the report-style outputs (sweeps and screen profiles)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_uncertainty_figure(rows, path) -> None:
    """Both uncertainty bounds against the basis angle; equal only at 0, pi/4, pi/2."""
    thetas = [r[0] for r in rows]
    ours = [r[1] for r in rows]
    dk = [r[2] for r in rows]
    fig, ax = plt.subplots(figsize=(5.4, 3.6))
    ax.plot(thetas, ours, "-", label="min-row-entropy bound")
    ax.plot(thetas, dk, "--", label="max-overlap bound")
    ax.set_xlabel(r"$\theta$ (rad)")
    ax.set_ylabel("lower bound on S(A)+S(B) (bits)")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_werner_figure(rows, path) -> None:
    """Criterion spectra across the Werner family, with the 1/3 threshold marked."""
    xs = [r["x"] for r in rows]
    fig, ax = plt.subplots(figsize=(5.4, 3.6))
    ax.plot(xs, [r["cond_eig_max"] for r in rows], "-", label="max conditional eigenvalue")
    ax.plot(xs, [r["ppt_eig_min"] for r in rows], "--", label="min partial-transpose eigenvalue")
    ax.axhline(1.0, color="gray", lw=0.8)
    ax.axhline(0.0, color="gray", lw=0.8)
    ax.axvline(1 / 3, color="gray", lw=0.8, ls=":")
    ax.set_xlabel("singlet fraction x")
    ax.set_ylabel("eigenvalue")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_screen_figure(profile, path) -> None:
    """Screen intensity over position for one eraser mode."""
    fig, ax = plt.subplots(figsize=(5.4, 3.6))
    ax.plot(profile.xs, profile.intensity, "-", lw=0.9)
    ax.set_xlabel("screen position")
    ax.set_ylabel("intensity")
    ax.set_title(f"mode={profile.mode}, visibility={profile.visibility:.3f}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
