"""Quantum conditional-entropy toolkit.

Conditional and mutual density operators, entropy Venn diagrams, spectral
separability diagnostics, and unitary measurement-chain simulations, all in
bits over dense finite-dimensional Hilbert spaces.
"""

from .entropy import (
    ConditionalOperator,
    VennDiagram2,
    VennDiagram3,
    conditional_density,
    conditional_entropy,
    conditional_entropy_from_operator,
    mutual_density,
    mutual_entropy,
    mutual_entropy_from_operator,
    shannon_entropy,
    venn2,
    venn3,
    von_neumann_entropy,
)
from .experiments import (
    EntropyLedger,
    ScreenProfile,
    quantum_eraser,
    schroedinger_cat,
    stern_gerlach,
)
from .linalg import (
    InvalidStateError,
    MemoryGuardError,
    herm_eig,
    kron,
    lie_trotter_product,
    matrix_exp2,
    matrix_log2,
    partial_trace,
    partial_transpose,
)
from .measurement import (
    ChainState,
    MeasurementBasisMap,
    UncertaintyRecord,
    apply_gate,
    chain_ledger,
    cnot_general,
    consecutive_measurement,
    deutsch_kraus_bound,
    entropic_bound,
    measurement_chain,
    repeat_measurement,
    rotation_basis,
    theta_sweep,
)
from .presets import preset
from .sampling import (
    random_density_matrix,
    random_pure_state,
    random_unitary,
    rng_for_trial,
)
from .separability import (
    SeparabilityReport,
    analyze,
    conjecture_trial,
    sample_separable,
    werner,
    werner_threshold_sweep,
)
from .states import (
    DensityMatrix,
    StateVector,
    basis_state,
    bell_state,
    correlated_pair,
    density_from_pure,
    ghz_state,
    independent_pair,
    nplet_state,
)

__version__ = "0.1.0"

__all__ = [
    "ChainState",
    "ConditionalOperator",
    "DensityMatrix",
    "EntropyLedger",
    "InvalidStateError",
    "MeasurementBasisMap",
    "MemoryGuardError",
    "ScreenProfile",
    "SeparabilityReport",
    "StateVector",
    "UncertaintyRecord",
    "VennDiagram2",
    "VennDiagram3",
    "analyze",
    "apply_gate",
    "basis_state",
    "bell_state",
    "chain_ledger",
    "cnot_general",
    "conditional_density",
    "conditional_entropy",
    "conditional_entropy_from_operator",
    "conjecture_trial",
    "consecutive_measurement",
    "correlated_pair",
    "density_from_pure",
    "deutsch_kraus_bound",
    "entropic_bound",
    "ghz_state",
    "herm_eig",
    "independent_pair",
    "kron",
    "lie_trotter_product",
    "matrix_exp2",
    "matrix_log2",
    "measurement_chain",
    "mutual_density",
    "mutual_entropy",
    "mutual_entropy_from_operator",
    "nplet_state",
    "partial_trace",
    "partial_transpose",
    "preset",
    "quantum_eraser",
    "random_density_matrix",
    "random_pure_state",
    "random_unitary",
    "repeat_measurement",
    "rng_for_trial",
    "rotation_basis",
    "sample_separable",
    "schroedinger_cat",
    "shannon_entropy",
    "stern_gerlach",
    "theta_sweep",
    "venn2",
    "venn3",
    "von_neumann_entropy",
    "werner",
    "werner_threshold_sweep",
]
