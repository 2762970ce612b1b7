"""racklab: finite groups, conjugation racks, subrack lattices, exact
homology of their order complexes, and a verification suite for the
structural facts the library is built around."""

from .groups import (
    FiniteGroup,
    GroupSpecError,
    OrderCapExceeded,
    CapExceeded,
    InvariantViolation,
    build_group,
    parse_group_spec,
    format_group_spec,
    conjugacy_classes,
    subgroup_generated,
    all_subgroups,
    core_and_normalizer,
    group_properties,
    minimal_nonabelian_subgroups,
    check_class_avoidance,
)
from .racks import (
    Rack,
    RackAxiomError,
    validate_rack,
    is_quandle,
    conjugation_rack,
    rack_from_spec,
    subrack_closure,
    rack_isomorphism,
)
from .lattice import (
    BudgetExceeded,
    SubrackLattice,
    enumerate_subracks,
    meet,
    join,
    atoms,
    coatoms,
    is_atomic,
    gradedness,
    all_maximal_chain_lengths,
    maximal_chain_lengths_through,
    closure_bar,
    int_lattice,
    is_boolean,
    is_boolean_sets,
    compute_M,
    product_decomposition_check,
    export_lattice_text,
    load_lattice_export,
)
from .topology import (
    OrderComplex,
    HomologyResult,
    order_complex,
    boundary_matrices,
    smith_normal_form,
    reduced_homology,
    is_homology_sphere,
)
from .partitions import (
    SetPartition,
    partition_lattice,
    k_equal_lattice,
    transposition_rack_isomorphism,
    orbit_partition_map,
    quillen_fiber_check,
)

__version__ = "0.1.0"
