import math

import numpy as np
import pytest

from qentropy.entropy import venn2, von_neumann_entropy
from qentropy.experiments import (
    ERASER_MODES,
    cat_state,
    eraser_location_state,
    eraser_stage_states,
    quantum_eraser,
    schroedinger_cat,
    stern_gerlach,
)
from qentropy.linalg import MemoryGuardError
from qentropy.measurement import measurement_chain
from qentropy.states import DensityMatrix

SQ = 2**-0.5


def test_stern_gerlach_single_ledger():
    ledger = stern_gerlach()
    e = ledger.entries
    assert abs(e["s_total_tagged"]) < 1e-7
    assert abs(e["s_location"] - 1.0) < 1e-7
    assert abs(e["s_spin_given_location"] + 1.0) < 1e-7
    assert abs(e["s_total_screened"]) < 1e-7
    assert abs(e["s_pointer_pair"] - 1.0) < 1e-7
    assert abs(e["s_spin_given_pointers"] + 1.0) < 1e-7


def test_stern_gerlach_aligned_spin_is_entropyless():
    ledger = stern_gerlach(spin_amplitudes=(1.0, 0.0))
    assert all(abs(v) < 1e-9 for v in ledger.entries.values())


def test_stern_gerlach_sequential_correlations():
    ledger = stern_gerlach(sequential=True)
    e = ledger.entries
    assert abs(e["prob_positions_equal"] - 1.0) < 1e-10
    assert abs(e["s_position_mutual"] - 1.0) < 1e-7
    assert abs(e["s_total_double_gradient"]) < 1e-7
    assert abs(e["s_spin_given_positions"] + 1.0) < 1e-7


def test_stern_gerlach_sequential_hides_spin():
    # same triplet construction the scenario uses: spin copied to two locations
    triplet = measurement_chain((SQ, SQ), 2)
    spin = triplet.psi.density().reduced([0])
    assert np.max(np.abs(spin.matrix - np.eye(2) / 2)) < 1e-10
    pair = triplet.psi.density().reduced([1, 2])
    off_diag = pair.matrix - np.diag(np.diag(pair.matrix))
    assert np.max(np.abs(off_diag)) < 1e-12  # joint distribution is diagonal


def test_eraser_default_visibilities():
    assert quantum_eraser("tagged").visibility <= 0.01
    assert quantum_eraser("erased").visibility >= 0.99
    assert quantum_eraser("recorded").visibility <= 0.01
    assert quantum_eraser("baseline").visibility >= 0.99


def test_eraser_post_selection_probability():
    assert abs(quantum_eraser("erased").post_selection_probability - 0.5) < 1e-10
    assert abs(quantum_eraser("recorded").post_selection_probability - 0.5) < 1e-10
    assert quantum_eraser("baseline").post_selection_probability == 1.0
    assert quantum_eraser("tagged").post_selection_probability == 1.0


def test_eraser_visibility_ordering():
    profiles = {mode: quantum_eraser(mode) for mode in ERASER_MODES}
    erased, baseline = profiles["erased"].visibility, profiles["baseline"].visibility
    assert erased >= baseline - 1e-6
    assert baseline - 1e-6 >= profiles["tagged"].visibility
    assert baseline - 1e-6 >= profiles["recorded"].visibility


def test_eraser_intensity_normalization():
    for mode in ERASER_MODES:
        profile = quantum_eraser(mode)
        raw = np.trapezoid(profile.intensity_raw, profile.xs)
        renorm = np.trapezoid(profile.intensity, profile.xs)
        assert abs(raw - profile.post_selection_probability) < 1e-9
        assert abs(renorm - 1.0) < 1e-9


def test_eraser_erased_profile_matches_closed_form():
    profile = quantum_eraser("erased")
    xs = profile.xs
    envelope = (math.pi) ** -0.5 * np.exp(-(xs**2))  # G(x)^2 for w = 1
    expected = envelope * (1 + np.cos(10 * xs))
    assert np.max(np.abs(profile.intensity - expected)) < 1e-12


def test_eraser_tagged_profile_is_fringeless():
    profile = quantum_eraser("tagged")
    envelope = (math.pi) ** -0.5 * np.exp(-(profile.xs**2))
    assert np.max(np.abs(profile.intensity - envelope)) < 1e-12


def test_eraser_location_states():
    rho, p = eraser_location_state("baseline")
    assert p == 1.0 and np.allclose(rho, np.full((2, 2), 0.5))
    rho, p = eraser_location_state("tagged")
    assert p == 1.0 and np.allclose(rho, np.eye(2) / 2)
    rho, p = eraser_location_state("erased")
    assert abs(p - 0.5) < 1e-12 and np.allclose(rho / p, np.full((2, 2), 0.5))
    rho, p = eraser_location_state("recorded")
    assert abs(p - 0.5) < 1e-12 and np.allclose(rho / p, np.eye(2) / 2)
    with pytest.raises(ValueError):
        eraser_location_state("mystery")


def test_eraser_stages_stay_pure():
    for mode in ERASER_MODES:
        for stage in eraser_stage_states(mode):
            assert von_neumann_entropy(stage.density()) < 1e-7


def test_eraser_erasure_restores_initial_structure():
    # surviving sub-ensemble is the split state up to a polarization rotation
    final = eraser_stage_states("erased")[-1]
    loc = final.density().reduced([0])
    assert np.max(np.abs(loc.matrix - np.full((2, 2), 0.5))) < 1e-12


def test_eraser_geometry_validation():
    with pytest.raises(ValueError):
        quantum_eraser("tagged", w=0.0)
    with pytest.raises(ValueError):
        quantum_eraser("tagged", kappa=-1.0)
    with pytest.raises(ValueError):
        quantum_eraser("tagged", grid=np.linspace(-1, 1, 64))  # span below 6w


def test_eraser_visibility_degrades_with_separation():
    # central fringe contrast falls like 1/cosh(x d) as the envelopes separate
    vis = [quantum_eraser("erased", d=d).visibility for d in (0.0, 1.0, 2.0, 4.0)]
    assert all(a > b for a, b in zip(vis, vis[1:]))
    assert vis[0] > 0.99 and vis[-1] < 0.7


def test_cat_single_atom_ledger():
    ledger = schroedinger_cat(cat_atoms=1)
    e = ledger.entries
    assert abs(e["s_total"]) < 1e-7
    assert abs(e["s_photon_cat"] - 1.0) < 1e-7
    assert abs(e["s_atom_given_rest"] + 1.0) < 1e-7
    assert abs(e["s_atom"] - 1.0) < 1e-7


def test_cat_unsuperposed_atom_is_entropyless():
    ledger = schroedinger_cat(cat_atoms=2, atom_amplitudes=(1.0, 0.0))
    assert all(abs(v) < 1e-9 for v in ledger.entries.values())


def test_cat_observer_does_not_change_totals():
    ledger = schroedinger_cat(cat_atoms=2, include_observer=True)
    e = ledger.entries
    assert abs(e["s_total"]) < 1e-7
    assert abs(e["s_photon_cat_observer"] - 1.0) < 1e-7
    assert abs(e["s_atom_given_rest"] + 1.0) < 1e-7


def test_cat_pack_bipartitions_classically_correlated():
    psi = cat_state(cat_atoms=5)
    pack = psi.density().reduced(range(1, 7))  # photon + 5 cat atoms
    off_diag = pack.matrix - np.diag(np.diag(pack.matrix))
    assert np.max(np.abs(off_diag)) < 1e-12
    for split in range(1, 6):
        blocks = DensityMatrix(pack.matrix, (2**split, 2 ** (6 - split)))
        diagram = venn2(blocks)
        assert abs(diagram.s_a_mutual_b - 1.0) < 1e-7


def test_cat_memory_guard():
    with pytest.raises(MemoryGuardError):
        schroedinger_cat(cat_atoms=30)
