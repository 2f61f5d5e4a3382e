"""sepsys: exact toolkit for finite abstract separation systems.

Decide the structural properties of a finite separation system or universe
(scrupulous, fastidious, regular, distributive, boolean small-algebra) and
construct certified representations by set separations, set bipartitions,
and graph separations, each checked by an independent morphism verifier and
backed by brute-force oracles.
"""

from .concrete import (
    ConcreteSystem,
    Graph,
    SetSep,
    as_abstract,
    bipartition_universe,
    full_set_universe,
    graph_universe,
)
from .construct import (
    Implementation,
    Refusal,
    atomic_strong_implementation,
    graphic_implementation,
    implement_by_bipartitions,
    implement_by_sets,
    naive_ground_members,
    strong_ground_members,
    strong_implement_by_bipartitions,
    strong_implement_by_sets,
)
from .core import (
    ElementClass,
    SepSystem,
    Verdict,
    build_system,
    classify,
    cosmalls,
    delete_unoriented,
    is_fastidious,
    is_regular,
    is_scrupulous,
    smalls,
)
from .errors import (
    AntisymmetryViolation,
    BadInvolution,
    BudgetExceeded,
    InternalAssertionFailed,
    InvalidInput,
    NotALattice,
    NotATree,
    NotClosed,
    SearchBudgetExceeded,
    SepsysError,
    UnknownElement,
    UnknownExample,
)
from .orientations import consistent_orientations, orientations_containing
from .universe import (
    SmallAlgebraReport,
    Universe,
    build_universe,
    cancellation_witness,
    is_distributive,
    small_algebra,
)
from .verify import (
    SepMap,
    canonical_ground_bound,
    check_homomorphism,
    check_isomorphism_onto_image,
    check_universe_isomorphism,
    oracle_brute_force_set_implementation,
    oracle_definitional_recheck,
)
from .workbench import (
    Lattice,
    Tree,
    chain_lattice,
    diamond_lattice,
    edge_tree_set,
    enumerate_systems,
    gen_example,
    pentagon_lattice,
    random_system,
    random_tree,
    random_universe,
    universe_from_lattice,
)

__version__ = "0.1.0"
