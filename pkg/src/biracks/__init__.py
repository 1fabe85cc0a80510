"""Finite augmented biracks and their link invariants.

Core objects: AugmentedBirack (validated permutation tables with derived
inverse maps, kink map, and characteristic), LinkDiagram (semiarc-level
signed crossing lists for classical and virtual links), Cochain2 and
LaurentPolynomial (weight data and invariant values), plus exact integer
homology of the birack chain complex via Smith normal form.
"""

from .algebra import (
    AugmentedBirack,
    AxiomCheck,
    AxiomReport,
    birack_map,
    characteristic,
    check_axioms,
    cycle_notation,
    derive_kink_map,
    format_birack,
    from_matrix,
    from_tables,
    kink_map,
    matrix_to_tables,
    parse_birack,
    parse_birack_tables,
    sideways,
    sideways_inverse,
    tsr_birack,
)
from .data import (
    available_biracks,
    available_cochains,
    available_diagrams,
    load_birack,
    load_cochain,
    load_diagram,
)
from .diagram import (
    Crossing,
    LinkDiagram,
    add_positive_kink,
    canonical_relabel,
    from_crossings,
    parse_crossing_list,
    parse_gauss,
    parse_pd,
    render_crossing_list,
    render_gauss,
    reverse_component,
)
from .errors import (
    AxiomViolation,
    BadSign,
    BirackError,
    DanglingSemiarc,
    DiagramError,
    DuplicateEndpoint,
    InvalidLabeling,
    KinkMapMissing,
    KinkMapNotUnique,
    NonBijectiveColumn,
    NotAUnit,
    NotReducedCocycle,
    RelationFails,
    ResourceLimitExceeded,
    SignMismatch,
    UnmatchedCrossingLabel,
)
from .homology import (
    Chain,
    Cochain1,
    Cochain2,
    HomologyGroup,
    boundary_matrix,
    boundary_of_chain,
    boundary_of_tuple,
    coboundary_basis,
    cohomology_group,
    degenerate_generators,
    evaluate_coboundary,
    format_cochain,
    homology_group,
    is_reduced_2_cocycle,
    parse_cochain,
    partial_dprime,
    partial_prime,
    reduced_2_cocycles,
    reduced_2_cohomology,
    reduced_cocycle_constraints,
    tuple_basis,
)
from .invariants import (
    InvariantResult,
    LaurentPolynomial,
    boltzmann_weight,
    brute_force_labelings,
    cocycle_invariant,
    counting_invariant,
    crossing_equations,
    enumerate_labelings,
    framed_invariants,
    labeling_is_valid,
)
from .linalg import (
    IntegerMatrix,
    SmithDecomposition,
    kernel_basis,
    kernel_lattice_mod,
    quotient_invariants,
    smith_normal_form,
)

__version__ = "0.1.0"
