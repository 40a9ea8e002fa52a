"""Strategic voting for negotiating teams.

A team aggregates its members' rankings with a positional scoring rule and
then negotiates the resulting order against another party under an
alternating-offers protocol.  This package provides the election and
negotiation primitives, solvers that find (or rule out) manipulative votes
for single voters and coalitions, and brute-force oracles to certify them.
"""

from teamnego.core import (
    CONSTRUCTIVE,
    DESTRUCTIVE,
    Order,
    Profile,
    Rule,
    ValidationError,
    aggregate,
    position,
    realize_vector,
    swf,
)
from teamnego.harness import (
    ExperimentConfig,
    ExperimentReport,
    GeneratedInstance,
    generate,
    run_experiment,
    serialize_report,
    stream_text,
)
from teamnego.instances import ParseError, parse_instance, serialize_instance
from teamnego.kernel import BACKEND as KERNEL_BACKEND
from teamnego.manipulation import (
    DECISION_ALWAYS_SAFE,
    DECISION_NO,
    DECISION_YES,
    GATE_FEASIBLE,
    GATE_PAPER,
    InfeasibleIterationError,
    ManipulationQuery,
    ManipulationResult,
    TopBlock,
    find_manipulation,
    gate_threshold,
    top_block,
    verify,
)
from teamnego.negotiation import (
    INITIATOR_OTHER,
    INITIATOR_TEAM,
    NegotiationInstance,
    RcResult,
    rc,
    spe_both,
    spe_result,
    top_set,
)
from teamnego.oracle import (
    OracleLimitError,
    OracleResult,
    PlacementClosures,
    brute_force,
    permutation_sum,
    placement_closures,
    spe_unmemoized,
)

__version__ = "0.1.0"

__all__ = [
    "CONSTRUCTIVE",
    "DECISION_ALWAYS_SAFE",
    "DECISION_NO",
    "DECISION_YES",
    "DESTRUCTIVE",
    "ExperimentConfig",
    "ExperimentReport",
    "GATE_FEASIBLE",
    "GATE_PAPER",
    "GeneratedInstance",
    "INITIATOR_OTHER",
    "INITIATOR_TEAM",
    "InfeasibleIterationError",
    "KERNEL_BACKEND",
    "ManipulationQuery",
    "ManipulationResult",
    "NegotiationInstance",
    "OracleLimitError",
    "OracleResult",
    "Order",
    "ParseError",
    "PlacementClosures",
    "Profile",
    "RcResult",
    "Rule",
    "TopBlock",
    "ValidationError",
    "aggregate",
    "brute_force",
    "find_manipulation",
    "gate_threshold",
    "generate",
    "parse_instance",
    "permutation_sum",
    "placement_closures",
    "position",
    "rc",
    "realize_vector",
    "run_experiment",
    "serialize_instance",
    "serialize_report",
    "spe_both",
    "spe_result",
    "spe_unmemoized",
    "stream_text",
    "swf",
    "top_block",
    "top_set",
    "verify",
]
