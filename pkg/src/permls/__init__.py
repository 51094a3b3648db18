"""Strict and permissive k-exchange local search for vertex cover."""
from .coloring import ColoringFamily, FamilyTooLarge, random_family, universal_family
from .graph_core import (
    BipartiteGraph,
    Graph,
    NotSeparable,
    SeparabilityCertificate,
    certify_separability,
    degeneracy,
    is_vertex_cover,
    neighborhood,
    set_distance,
    subdivide_twice,
)
from .matching import find_hall_violator, maximum_matching
from .permissive import (
    PermissiveOutcome,
    candidate_family,
    check_structural_witness,
    permissive_search,
    prune_coloring,
)
from .reductions import (
    CliqueInstance,
    clique_to_hallset,
    clique_to_hallset_2subdivided,
    hallset_to_lsvc,
    minimize_rule,
    vc_subdivision_shift,
)
from .strict_ls import CoverInstance, HallInstance, hall_set_bruteforce, strict_search

__version__ = "0.1.0"
