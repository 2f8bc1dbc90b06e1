"""Rowmotion, tilings, toggles, and homomesy checks on fence posets."""

from .enumeration import closed_form_count, count_antichains, count_ideals
from .fence import (
    ANTICHAIN,
    IDEAL,
    UPPER,
    Composition,
    ElementSet,
    FamilyCapError,
    Fence,
    FenceError,
    RoleError,
    build_fence,
)
from .rowmotion import (
    Orbit,
    Superorbit,
    antichain_orbits,
    ideal_complement,
    ideal_orbits,
    orbit_of,
    rowmotion,
    rowmotion_inverse,
    superorbits,
)
from .stats import (
    MesyReport,
    StatExpr,
    check_homomesy,
    check_orbomesy,
    evaluate,
    indicator,
    orbit_stats_from_tiling,
    orbit_sum,
    parse_stat,
)
from .tiling import (
    AlphaTiling,
    Tile,
    TileCounts,
    TilingError,
    TilingReport,
    orbit_of_tiling,
    render_tiling,
    tile_counts,
    tiling_of_orbit,
    validate_tiling,
)
from .toggles import (
    BaseGraph,
    ToggleWord,
    admissible_toggles,
    apply_word,
    base_graph,
    conjugate_word,
    conjugation_path,
    sample_linear_extensions,
    toggle,
    transfer_check,
    word_orbits,
)

__version__ = "0.1.0"

__all__ = [
    "ANTICHAIN",
    "IDEAL",
    "UPPER",
    "AlphaTiling",
    "BaseGraph",
    "Composition",
    "ElementSet",
    "FamilyCapError",
    "Fence",
    "FenceError",
    "MesyReport",
    "Orbit",
    "RoleError",
    "StatExpr",
    "Superorbit",
    "Tile",
    "TileCounts",
    "TilingError",
    "TilingReport",
    "ToggleWord",
    "admissible_toggles",
    "antichain_orbits",
    "apply_word",
    "base_graph",
    "build_fence",
    "check_homomesy",
    "check_orbomesy",
    "closed_form_count",
    "conjugate_word",
    "conjugation_path",
    "count_antichains",
    "count_ideals",
    "evaluate",
    "ideal_complement",
    "ideal_orbits",
    "indicator",
    "orbit_of",
    "orbit_of_tiling",
    "orbit_stats_from_tiling",
    "orbit_sum",
    "parse_stat",
    "render_tiling",
    "rowmotion",
    "rowmotion_inverse",
    "sample_linear_extensions",
    "superorbits",
    "tile_counts",
    "tiling_of_orbit",
    "toggle",
    "transfer_check",
    "validate_tiling",
    "word_orbits",
]
