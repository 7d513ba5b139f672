"""Non-commuting graphs of finite groups, their distance and detour invariants,
and exact closed forms for the dihedral family."""

from .builder import (
    OmegaPartition,
    ShapeDescriptor,
    SplitPartition,
    classify_omega1,
    classify_omega2,
    degree_via_centralizer,
    dihedral_graph,
    is_split_partition,
    noncommuting_graph,
    omega_partition,
    split_partition,
    star_check,
)
from .closed_forms import ClosedFormReport, closed_forms_for
from .detour import DetourMatrix, detour_distance, detour_index, detour_matrix, detour_polynomial
from .errors import *  # noqa: F401,F403
from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    SimpleGraph,
    bfs_distances,
    degree,
    eccentricity,
    edge_count,
    graph_transmission,
    induced_subgraph,
    is_connected,
    mean_distance,
    vertex_transmission,
)
from .group import (
    DihedralLabel,
    FiniteGroup,
    center,
    centralizer,
    dihedral_group,
    is_abelian,
    parse_cayley_table,
    read_cayley_table,
    validate_cayley_table,
    write_cayley_table,
)
from .invariants import (
    eccentric_connectivity_index,
    eccentric_connectivity_polynomial,
    total_eccentricity,
    total_eccentricity_polynomial,
)
from .polynomial import SparsePolynomial, poly_add, poly_derivative_at_one, poly_eval
from .harness import VerificationReport, verify

__version__ = "0.1.0"
