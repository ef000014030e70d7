"""Pack-and-measure seed selection for influence maximization under the
Independent Cascade model."""

__version__ = "0.1.0"

from .diffusion import (
    DiffusionOutcome,
    SpreadEstimate,
    coverage_report,
    coverage_steps,
    estimate_spread,
    firehouse_coverage,
    firehouse_decide,
    ic_simulate,
)
from .errors import (
    ConfigError,
    EmptyGraphError,
    GraphParseError,
    PackMeasureError,
    RequestError,
    SpecError,
)
from .graph import (
    UNREACHABLE,
    DistanceField,
    Graph,
    bfs_distances,
    degree,
    load_edge_list,
    multi_source_distances,
    shell_sizes,
    write_edge_list,
)
from .heuristics import (
    InfluenceScore,
    SeedSet,
    diminishing_influence,
    diminishing_influence_all,
    dih_seeds,
    mdh_seeds,
    pack_and_measure_seeds,
    random_seeds,
    select_seeds,
)
from .packing import Packing, k_d_packing, maximal_d_packing
from .synthgen import PRESETS, SyntheticSpec, generate_scattered_cliques
