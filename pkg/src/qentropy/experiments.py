"""Scripted scenario reproductions: beam tagging, the interference eraser, and a dichotomic cat.

Each scenario evolves a pure state through explicit unitary stages, so the
global entropy stays zero throughout; all randomness in the ledgers lives in
reduced views. The single non-unitary step in the whole module is the
eraser's diagonal polarizer, which is a post-selection (projector plus
renormalization) with reported success probability, not a unitary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .entropy import venn2, von_neumann_entropy
from .measurement import measurement_chain
from .states import StateVector

ERASER_MODES = ("baseline", "tagged", "erased", "recorded")

SQRT_HALF = 1 / math.sqrt(2)


@dataclass
class EntropyLedger:
    """Named subsystem entropies (bits) collected across the stages of one scenario."""

    scenario: str
    entries: dict[str, float] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"scenario": self.scenario, "entries": dict(self.entries)}


@dataclass
class ScreenProfile:
    """Screen intensity over position, with fringe visibility and selection bookkeeping.

    ``intensity_raw`` integrates to the post-selection probability;
    ``intensity`` is the renormalized profile of the surviving sub-ensemble.
    """

    xs: np.ndarray
    intensity: np.ndarray
    intensity_raw: np.ndarray
    visibility: float
    mode: str
    post_selection_probability: float
    geometry: dict[str, float]

    def sidecar(self) -> dict:
        return {
            "mode": self.mode,
            "visibility": self.visibility,
            "post_selection_probability": self.post_selection_probability,
            "geometry": dict(self.geometry),
        }


def stern_gerlach(sequential: bool = False, spin_amplitudes=(SQRT_HALF, SQRT_HALF)) -> EntropyLedger:
    """Entropy ledger of a deflection experiment on a two-level magnetic moment.

    The field gradient tags spin with a left/right location (an entangling
    shift, not a correlation); collecting on a screen, or applying a second
    gradient, copies that variable once more. Reduced views then show one bit
    of randomness, balanced by the negative conditional entropy of the
    unobserved spin.
    """
    tagged = measurement_chain(spin_amplitudes, 1)
    rho_tagged = tagged.psi.density()
    ledger = EntropyLedger(scenario="stern_gerlach_sequential" if sequential else "stern_gerlach")
    s_location = von_neumann_entropy(rho_tagged.reduced([1]))
    ledger.entries["s_total_tagged"] = von_neumann_entropy(rho_tagged)
    ledger.entries["s_location"] = s_location
    ledger.entries["s_spin_given_location"] = ledger.entries["s_total_tagged"] - s_location

    triplet = measurement_chain(spin_amplitudes, 2)
    rho_triplet = triplet.psi.density()
    s_total = von_neumann_entropy(rho_triplet)
    pair = rho_triplet.reduced([1, 2])
    s_pair = von_neumann_entropy(pair)
    if sequential:
        diagram = venn2(pair)
        prob_equal = float(sum(np.real(pair.matrix[i * 2 + i, i * 2 + i]) for i in range(2)))
        ledger.entries["s_total_double_gradient"] = s_total
        ledger.entries["s_positions_joint"] = s_pair
        ledger.entries["s_position_first"] = diagram.s_a
        ledger.entries["s_position_second"] = diagram.s_b
        ledger.entries["s_position_mutual"] = diagram.s_a_mutual_b
        ledger.entries["s_spin_given_positions"] = s_total - s_pair
        ledger.entries["prob_positions_equal"] = prob_equal
    else:
        ledger.entries["s_total_screened"] = s_total
        ledger.entries["s_pointer_pair"] = s_pair
        ledger.entries["s_spin_given_pointers"] = s_total - s_pair
    return ledger


def _gaussian(x: np.ndarray, w: float) -> np.ndarray:
    return (math.pi * w * w) ** (-0.25) * np.exp(-(x * x) / (2 * w * w))


def eraser_location_state(mode: str) -> tuple[np.ndarray, float]:
    """Unnormalized 2x2 location state after the mode's optics, with survival probability.

    Location index 0 is the left path, 1 the right; polarization and (for the
    recorded mode) the which-path record are already traced out.
    """
    if mode not in ERASER_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {ERASER_MODES}")
    plus = np.array([SQRT_HALF, SQRT_HALF])
    if mode == "baseline":
        # (|L> + |R>)/sqrt(2) x |H>: fully coherent, nothing discarded
        rho = np.full((2, 2), 0.5, dtype=complex)
        return rho, 1.0
    if mode == "tagged":
        # (|L,V> + |R,H>)/sqrt(2): orthogonal tags kill the off-diagonal terms
        amp = np.zeros((2, 2), dtype=complex)
        amp[0, 1] = amp[1, 0] = SQRT_HALF
        rho = amp @ amp.conj().T
        return rho, 1.0
    if mode == "erased":
        amp = np.zeros((2, 2), dtype=complex)
        amp[0, 1] = amp[1, 0] = SQRT_HALF
        survivor = amp @ plus  # project polarization onto the diagonal direction
        prob = float(np.vdot(survivor, survivor).real)
        return np.outer(survivor, survivor.conj()), prob
    # recorded: tag copied to an ancilla before the eraser acts
    amp = np.zeros((2, 2, 2), dtype=complex)  # (location, polarization, record)
    amp[0, 1, 1] = amp[1, 0, 0] = SQRT_HALF
    survivor = np.einsum("lpr,p->lr", amp, plus)
    prob = float(np.sum(np.abs(survivor) ** 2))
    rho = np.einsum("lr,mr->lm", survivor, survivor.conj())
    return rho, prob


def eraser_stage_states(mode: str) -> list[StateVector]:
    """Normalized pure states at each stage of the mode's optics (for purity checks)."""
    if mode not in ERASER_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {ERASER_MODES}")
    split = StateVector(np.array([SQRT_HALF, 0.0, SQRT_HALF, 0.0]), (2, 2))  # (|L>+|R>)/sqrt2 x |H>
    if mode == "baseline":
        return [split]
    tagged = StateVector(np.array([0.0, SQRT_HALF, SQRT_HALF, 0.0]), (2, 2))
    if mode == "tagged":
        return [split, tagged]
    if mode == "erased":
        plus = np.array([SQRT_HALF, SQRT_HALF])
        erased = StateVector(np.kron(np.array([SQRT_HALF, SQRT_HALF]), plus), (2, 2))
        return [split, tagged, erased]
    recorded = np.zeros((2, 2, 2), dtype=complex)
    recorded[0, 1, 1] = recorded[1, 0, 0] = SQRT_HALF
    pre = StateVector(recorded.reshape(-1), (2, 2, 2))
    post = np.zeros((2, 2, 2), dtype=complex)  # (location, record, polarization -> |+>)
    for loc, rec in [(0, 1), (1, 0)]:
        post[loc, rec, 0] = post[loc, rec, 1] = 0.5
    return [split, tagged, pre, StateVector(post.reshape(-1), (2, 2, 2))]


def quantum_eraser(mode: str, d: float = 0.0, w: float = 1.0, kappa: float = 10.0,
                   grid: np.ndarray | None = None) -> ScreenProfile:
    """Screen profile of the two-path interference experiment in the given mode.

    Spatial amplitudes are Gaussian envelopes of width ``w`` centered at
    -/+ d/2 with opposite transverse momentum kicks +/- kappa/2, so a coherent
    location state shows 1 + cos(kappa x) fringes. Visibility is the extremal
    contrast of the envelope-normalized profile over the central fringe
    window, which keeps envelope droop from masquerading as fringe contrast.
    """
    if w <= 0 or kappa <= 0 or d < 0:
        raise ValueError(f"invalid geometry: need w > 0, kappa > 0, d >= 0; got w={w}, kappa={kappa}, d={d}")
    xs = np.linspace(-6.0, 6.0, 2048) if grid is None else np.asarray(grid, dtype=float)
    if xs.size < 16 or (xs.max() - xs.min()) < 6 * w:
        raise ValueError(f"grid must span at least 6*w = {6 * w}; got span {xs.max() - xs.min()}")
    rho_raw, prob = eraser_location_state(mode)
    rho = rho_raw / prob
    psi_l = _gaussian(xs - d / 2, w) * np.exp(1j * kappa * xs / 2)
    psi_r = _gaussian(xs + d / 2, w) * np.exp(-1j * kappa * xs / 2)
    waves = np.stack([psi_l, psi_r])
    intensity = np.real(np.einsum("mx,mn,nx->x", waves, rho, waves.conj()))
    envelope = np.real(rho[0, 0]) * np.abs(psi_l) ** 2 + np.real(rho[1, 1]) * np.abs(psi_r) ** 2
    window = np.abs(xs) <= math.pi / kappa + 1e-12
    contrast = intensity[window] / envelope[window]
    visibility = float((contrast.max() - contrast.min()) / (contrast.max() + contrast.min()))
    return ScreenProfile(
        xs=xs,
        intensity=intensity,
        intensity_raw=prob * intensity,
        visibility=min(max(visibility, 0.0), 1.0),
        mode=mode,
        post_selection_probability=prob,
        geometry={"d": float(d), "w": float(w), "kappa": float(kappa)},
    )


def cat_state(cat_atoms: int, include_observer: bool = False,
              atom_amplitudes=(SQRT_HALF, SQRT_HALF)) -> StateVector:
    """Pure state of atom + photon + dichotomic cat variables (+ observer)."""
    if cat_atoms < 1:
        raise ValueError("the cat needs at least one atom")
    followers = 1 + cat_atoms + (1 if include_observer else 0)
    return measurement_chain(atom_amplitudes, followers).psi


def schroedinger_cat(cat_atoms: int = 1, include_observer: bool = False,
                     atom_amplitudes=(SQRT_HALF, SQRT_HALF)) -> EntropyLedger:
    """Entropy ledger of the decaying-atom/cat chain.

    Tracing the atom leaves photon and cat classically correlated with one
    bit of randomness; the atom's conditional entropy of -1 bit restores the
    vanishing total. Opening the box only appends an observer factor to the
    chain and changes none of the totals.
    """
    psi = cat_state(cat_atoms, include_observer, atom_amplitudes)
    rho = psi.density()
    rest = list(range(1, len(psi.dims)))
    s_total = von_neumann_entropy(rho)
    s_rest = von_neumann_entropy(rho.reduced(rest))
    ledger = EntropyLedger(scenario="schroedinger_cat")
    ledger.entries["s_total"] = s_total
    ledger.entries["s_photon_cat" + ("_observer" if include_observer else "")] = s_rest
    ledger.entries["s_atom_given_rest"] = s_total - s_rest
    ledger.entries["s_atom"] = von_neumann_entropy(rho.reduced([0]))
    return ledger
