"""Network controllability toolkit: driver nodes via maximum matching,
Gramian control energy, longest control chains, input placement, and
3-node motif censuses.

Node ids are 1-based across this API, matching the CLI and file formats.
"""

from ._ctrlchain import (
    CtrlchainError,
    Network,
    classify_energy,
    drivers,
    gramian,
    gramian_from_matrix,
    input_distances,
    isolated_regions,
    lcc,
    lcc_spectrum,
    load_matrix,
    matrix_exponential,
    min_inputs_for_lcc,
    network_stats,
    region_sweep,
    remove_isolated,
    threshold_binarize,
    triad_census,
    __version__,
)

__all__ = [
    "CtrlchainError",
    "Network",
    "classify_energy",
    "drivers",
    "gramian",
    "gramian_from_matrix",
    "input_distances",
    "isolated_regions",
    "lcc",
    "lcc_spectrum",
    "load_matrix",
    "matrix_exponential",
    "min_inputs_for_lcc",
    "network_stats",
    "region_sweep",
    "remove_isolated",
    "threshold_binarize",
    "triad_census",
    "__version__",
]
