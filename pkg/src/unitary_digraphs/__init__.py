"""Zero patterns of unitary matrices, line digraphs and coined quantum walks."""

__version__ = "0.1.0"

from .digraph import (
    ArcLabel,
    Digraph,
    apply_permutations,
    as_pattern,
    complement,
    degrees,
    digraph_of,
    in_neighborhood,
    is_degree_balanced,
    is_permutation_equivalent,
    is_strongly_connected,
    line_digraph,
    out_neighborhood,
    pattern_of,
    support_of,
    well_formed,
)
from .euler import (
    euler_circuit,
    euler_circuits_per_component,
    hamiltonian_cycle_in_line_digraph,
    verify_hamiltonian_cycle,
)
from .generators import FAMILIES, generate
from .oracle import Feasible, Infeasible, OracleParams, Unknown, decide, nearest_unitary
from .patterns import (
    SpecularBlocks,
    SqWitness,
    is_line_digraph,
    is_quadrangular,
    is_specular,
    is_strongly_quadrangular,
    square_blocks,
)
from .synthesis import (
    UnitaryCertificate,
    fourier_matrix,
    synthesize_coined,
    synthesize_specular,
    transport,
    verify,
)
from .walk import init_state, run, step, vertex_distribution
