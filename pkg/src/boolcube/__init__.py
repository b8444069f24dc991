"""Boolean networks on the hypercube: fixed points, subnetworks, dynamics."""

from .hypercube import (
    FormatError,
    Point,
    all_points,
    basis_point,
    hamming,
    neighbor_set,
    parse_point,
    xor,
)
from .network import (
    BooleanNetwork,
    ParityClass,
    WidthCapError,
    conjugate,
    enumerate_networks,
    eosd_class,
    fixed_points,
    is_conjugate_bijective,
    is_non_expansive,
    is_self_dual,
    load_bn,
    parity_class,
    parse_bn,
    random_network,
    render_bn,
    translate,
    xor_output,
)
from .subnetwork import (
    BaseProperty,
    CriticalityReport,
    SubnetworkSpec,
    all_subnetworks_fixed_point_census,
    criticality,
    find_eosd_subnetwork,
    immediate_subnetwork,
    induced_subnetwork,
    minimal_forbidden_set,
    subnetworks,
)
from .siggraph import (
    CircularForm,
    Cycle,
    CycleFilter,
    SignedDigraph,
    and_net,
    circular_network,
    counting_condition,
    delocalizing_vertices,
    detect_circular,
    discrete_derivative,
    enumerate_cycles,
    global_interaction_graph,
    is_and_net,
    is_chordless,
    load_sg,
    local_interaction_graph,
    parse_sg,
    render_sg,
    shih_dong_condition,
)
from .dynamics import (
    Attractor,
    StateGraph,
    asynchronous_state_graph,
    attractor_summary,
    attractors,
    strong_convergence,
    weak_convergence,
)
from .theorems import (
    AndNets,
    Circular,
    Exhaustive,
    NonExpansiveFiltered,
    OpenQuestion,
    Sample,
    SearchReport,
    Subsets,
    SweepReport,
    TheoremId,
    Verdict,
    VerdictKind,
    check,
    check_point_set,
    open_question_search,
    sweep,
    sweep_many,
)

__all__ = [name for name in dir() if not name.startswith("_")]
