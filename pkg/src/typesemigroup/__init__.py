"""Type semigroups of combinatorial groupoid models.

Certified decision procedures for finitely presented commutative monoids,
graph and k-graph transfer calculus, explicit finite-action ground truth,
exact-rational state solvers, and a stably-finite / purely-infinite
classifier.  All arithmetic is exact; every positive verdict carries a
replayable certificate and every negative one an invariant separator.
"""

__version__ = "0.1.0"

from .actions import (
    ActionGroupoid,
    Bisection,
    BruteforceOutcome,
    FiniteGroupAction,
    OrbitPartition,
    action_groupoid,
    bruteforce_equiv,
    build_action,
    closure,
    oracle_equiv,
    orbit_fingerprint,
    orbits,
    stabilize,
    transformation_presentation,
    verify_witnesses,
)
from .classify import (
    HYPOTHESES_NOT_MET,
    INCONCLUSIVE,
    PURELY_INFINITE,
    STABLY_FINITE,
    ClassificationReport,
    ClassifyBudgets,
    classify,
)
from .errors import ConsistencyError, InputError
from .graphs import (
    CylinderUnion,
    DirectedGraph,
    Edge,
    KGraphModel,
    PathWord,
    StructuralReport,
    adjacency_power,
    build_graph,
    class_of_cylinders,
    cylinder_normalize,
    graph_adjacency,
    kgraph_from_graph,
    kgraph_skeleton,
    path_word,
    presentation_from_kgraph,
    relabel_kgraph,
    structural_checks,
    theta,
    validate_kgraph,
    vertex_delta,
    vertex_word,
)
from .monoid import (
    DEFAULT_BUDGET,
    INFINITY,
    BudgetReport,
    DecisionOutcome,
    Direction,
    EquivCertificate,
    LinearSeparator,
    MonoidPresentation,
    Move,
    RewriteStep,
    SearchBudget,
    SeparatorKind,
    UnperforationCounterexample,
    UnperforationSweep,
    Verdict,
    almost_unperforated_up_to,
    build_presentation,
    decide_equiv,
    decide_leq,
    find_separator,
    kl_paradoxical,
    replay,
    unit_vector,
    verify_certificate,
    verify_leq_outcome,
    verify_separator,
)
from .states import (
    CoboundaryResult,
    DifferenceLattice,
    StateCertificate,
    StiemkeResult,
    coboundary_check,
    difference_lattice,
    faithful_finite_state,
    positive_invariant_vector,
    solve_state_at,
    stiemke_crosscheck,
    verify_coboundary_witness,
    verify_state_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
