"""Self-stress analysis: fibers, strata, characteristics, atoms and surgeries."""

from .atoms import Atom, atom_count_bound, atom_stress, atom_sum, cancelling_atom, decompose
from .characteristic import (
    BoundCheck,
    EdgeAdditionCheck,
    EdgeDrop,
    TcReport,
    Witness,
    bound_check,
    edge_addition_check,
    edge_deletion_check,
    find_witness,
    generic_dim,
    induced_k4_bound,
    sample_dims,
    tau_complete,
    tau_report,
)
from .connectivity import connectivity, edge_connectivity, find_induced_k4, is_laman, vertex_connectivity
from .strata import (
    LineStratum,
    always_zero_edges,
    enumerate_cells,
    enumerate_cells_incremental,
    fiber_equivalent,
    fingerprint,
    gk_stratum_member,
    k3_line_strata,
    visible,
    visible_space,
)
from .stresses import (
    add_tensegrities,
    equilibrium_matrix,
    fiber_dim,
    general_position,
    is_self_stress,
    require_self_stress,
    self_stress_space,
    sign_matrix,
    verify_self_stress,
)
from .surgery import (
    Direction,
    GeneralSurgery,
    SurgeryI,
    SurgeryII,
    SurgeryResult,
    SurgerySpec,
    apply_surgery,
    general_surgery,
    surgery_I,
    surgery_II,
    transport_basis,
)

__all__ = [
    "equilibrium_matrix",
    "self_stress_space",
    "fiber_dim",
    "verify_self_stress",
    "is_self_stress",
    "require_self_stress",
    "sign_matrix",
    "add_tensegrities",
    "general_position",
    "connectivity",
    "vertex_connectivity",
    "edge_connectivity",
    "find_induced_k4",
    "is_laman",
    "enumerate_cells",
    "enumerate_cells_incremental",
    "fingerprint",
    "fiber_equivalent",
    "gk_stratum_member",
    "visible",
    "visible_space",
    "always_zero_edges",
    "LineStratum",
    "k3_line_strata",
    "sample_dims",
    "generic_dim",
    "tau_complete",
    "tau_report",
    "TcReport",
    "Witness",
    "find_witness",
    "EdgeDrop",
    "edge_deletion_check",
    "BoundCheck",
    "bound_check",
    "EdgeAdditionCheck",
    "edge_addition_check",
    "induced_k4_bound",
    "Atom",
    "atom_stress",
    "cancelling_atom",
    "decompose",
    "atom_sum",
    "atom_count_bound",
    "Direction",
    "GeneralSurgery",
    "SurgeryI",
    "SurgeryII",
    "SurgerySpec",
    "SurgeryResult",
    "apply_surgery",
    "general_surgery",
    "surgery_I",
    "surgery_II",
    "transport_basis",
]
