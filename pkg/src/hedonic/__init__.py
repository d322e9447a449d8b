"""Exact engine for hedonic games on friendship graphs.

Build a game, evaluate any of six preference models with exact rational
arithmetic, certify the stability of a partition, enumerate full cores at
small player counts, and sweep graph families hunting for empty-core
counterexamples.
"""

__version__ = "0.1.0"

from .model import (
    Aggregation,
    Game,
    GameValidationError,
    Graph,
    Model,
    Partition,
    PartitionError,
    bit,
    build_game,
    canonicalize,
    coalition_of,
    mask_of,
    members_of,
)
from .utilities import (
    Preference,
    Utility,
    compare,
    enemy_oriented_utility,
    equal_treatment_utility,
    fo_profile,
    fractional_utility,
    friend_oriented_utility,
    selfish_first_utility,
    truly_altruistic_utility,
    utility,
)
from .stability import (
    ALL_NOTIONS,
    Notion,
    StabilityReport,
    Verdict,
    certify,
    check_individual_rationality,
    check_individual_stability,
    check_nash_stability,
    find_blocking_coalition,
    is_core_stable,
)
from .search import (
    CapExceeded,
    CoreResult,
    Counterexample,
    HuntReport,
    TimeBudgetExceeded,
    compute_core,
    enumerate_graphs,
    enumerate_partitions,
    find_core_partition,
    homogeneous_game,
    hunt_empty_core,
)

__all__ = [
    "__version__",
    "Aggregation",
    "Game",
    "GameValidationError",
    "Graph",
    "Model",
    "Partition",
    "PartitionError",
    "bit",
    "build_game",
    "canonicalize",
    "coalition_of",
    "mask_of",
    "members_of",
    "Preference",
    "Utility",
    "compare",
    "enemy_oriented_utility",
    "equal_treatment_utility",
    "fo_profile",
    "fractional_utility",
    "friend_oriented_utility",
    "selfish_first_utility",
    "truly_altruistic_utility",
    "utility",
    "ALL_NOTIONS",
    "Notion",
    "StabilityReport",
    "Verdict",
    "certify",
    "check_individual_rationality",
    "check_individual_stability",
    "check_nash_stability",
    "find_blocking_coalition",
    "is_core_stable",
    "CapExceeded",
    "CoreResult",
    "Counterexample",
    "HuntReport",
    "TimeBudgetExceeded",
    "compute_core",
    "enumerate_graphs",
    "enumerate_partitions",
    "find_core_partition",
    "homogeneous_game",
    "hunt_empty_core",
]
