"""graph2ham: compile MAX CUT and INDEPENDENT SET instances into 2-local
Hamiltonian promise problems and certify the reductions exactly."""

from ._kernels import backend_name
from .decider import Decision, decide
from .graphs import Assignment, Graph, generate_graph, make_graph, parse_graph, serialize_graph
from .operators import (
    EnergyValue,
    LocalHamiltonian,
    LocalTerm,
    basis_energy,
    dense_matrix,
    embed_dense,
    full_diagonal,
    parse_lham,
    projector_even,
    projector_one_one,
    projector_zero,
    serialize_lham,
    validate_term,
)
from .oracles import (
    OracleResult,
    brute_force_max_cut,
    brute_force_max_independent_set,
    dense_min_eigenvalue,
    min_energy,
)
from .reductions import (
    PromiseInstance,
    ReductionOutput,
    cut_weight,
    even_edge_count,
    is_value,
    reduce_independent_set,
    reduce_maxcut,
    repair_independent_set,
)

__version__ = "0.1.0"
