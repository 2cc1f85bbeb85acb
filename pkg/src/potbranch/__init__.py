"""Minimum spanning in-branchings of directed graphs.

General instances are solved with Chu-Liu/Edmonds. Potential instances,
``Q[i,j] = phi[i,j] - phi[i,i]`` with symmetric ``phi``, are solved by an
undirected minimum spanning tree rooted at the smallest diagonal entry.
"""
from ._backend import available_backends, backend_name, use_backend
from .errors import (
    ConfigError,
    DisconnectedGraphError,
    InfeasibleError,
    InstanceTooLargeError,
    InvalidGraphError,
    ParseError,
    PotbranchError,
)
from .generate import GenSpec, XorShift64Star, gen_general, gen_potential, perturb
from .graph import (
    Arc,
    Diagnostic,
    DirectedGraph,
    Edge,
    InBranching,
    PotentialSystem,
    UndirectedGraph,
    UndirectedTree,
    Violation,
    branching_weight,
    connected_components,
    validate_branching,
)
from .msa import edmonds_best_root, edmonds_fixed_root, enumerate_optimal, feasible_roots
from .mst import DisjointSetForest, kruskal, prim
from .potential import (
    AsymmetricArc,
    InconsistentCycle,
    NonPositiveArc,
    RecoveryResult,
    build_q,
    recover_phi,
    solve_fast,
    validate_phi,
    weight_by_formula,
)
from .textio import format_instance, format_weight, parse_instance

__version__ = "0.1.0"
