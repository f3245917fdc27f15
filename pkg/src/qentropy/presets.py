"""Named state catalogue backing the --preset flags."""

from __future__ import annotations

from .separability import werner
from .states import (
    DensityMatrix,
    bell_state,
    correlated_pair,
    density_from_pure,
    ghz_state,
    independent_pair,
    nplet_state,
)

PRESET_NAMES = ("bell", "case1", "case2", "ghz", "werner:<x>", "nplet:<m>")


def preset(name: str) -> DensityMatrix:
    """Resolve a preset name (e.g. 'bell', 'werner:0.2', 'nplet:4') to a density matrix."""
    base, _, arg = name.partition(":")
    base = base.strip().lower()
    if base == "bell":
        return density_from_pure(bell_state())
    if base == "case1":
        return independent_pair()
    if base == "case2":
        return correlated_pair()
    if base == "ghz":
        return density_from_pure(ghz_state())
    if base == "werner":
        if not arg:
            raise ValueError("preset 'werner' needs a singlet fraction, e.g. werner:0.2")
        return werner(float(arg))
    if base == "nplet":
        if not arg:
            raise ValueError("preset 'nplet' needs a factor count, e.g. nplet:4")
        return density_from_pure(nplet_state(int(arg)))
    raise ValueError(f"unknown preset {name!r}; available: {', '.join(PRESET_NAMES)}")
