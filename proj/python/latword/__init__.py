"""Lattice words over posets: enumeration, central measures, grid ideals, RSK."""

from ._core import (
    LatwordError,
    Poset,
    Spectrum,
    SurvivalSolver,
    chains_of,
    compare_rsk_to_central,
    count_paths,
    decompose,
    embed_pullback,
    enumerate_lattice_words,
    estimate_spectrum,
    fiber_statistics,
    grid_levels,
    hook_length_count,
    is_lattice,
    linear_extension_count,
    min1_compare,
    multinomial,
    poset_levels,
    rsk_insert,
    sample_central,
    tableau_embed,
    verify_centrality,
)
from ._core import __version__

__all__ = [
    "LatwordError",
    "Poset",
    "Spectrum",
    "SurvivalSolver",
    "chains_of",
    "compare_rsk_to_central",
    "count_paths",
    "decompose",
    "embed_pullback",
    "enumerate_lattice_words",
    "estimate_spectrum",
    "fiber_statistics",
    "grid_levels",
    "hook_length_count",
    "is_lattice",
    "linear_extension_count",
    "min1_compare",
    "multinomial",
    "poset_levels",
    "rsk_insert",
    "sample_central",
    "tableau_embed",
    "verify_centrality",
    "__version__",
]
