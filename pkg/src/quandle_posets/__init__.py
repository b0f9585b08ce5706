"""Finite quandles, strict orders, Alexandroff topologies and the orders that
make quandle multiplications continuous."""

from .alexandroff import (
    FiniteTopology,
    closed_complement,
    enumerate_T0,
    is_T0,
    is_T1,
    minimal_open,
    order_to_topology,
    topology_to_order,
)
from .continuity import (
    ContinuityReport,
    complete_npartite_order,
    dedup_orders,
    enumerate_left_orders,
    enumerate_right_orders,
    is_left_continuous,
    is_right_continuous,
    left_collapse_check,
    pair_orbits,
    single_extra_orbit_order,
    verify_quandle_theorems,
)
from .dihedral import affine_iso_check, chi_order, count_classes_formula, dihedral_report
from .errors import *  # noqa: F401,F403
from .poset import (
    HasseDiagram,
    StrictOrder,
    enumerate_orders,
    is_crosspartite,
    maximal_chains,
    order_from_edges,
    poset_isomorphic,
    transitive_reduction,
)
from .quandle import (
    Permutation,
    Quandle,
    alexander,
    canonical_form,
    dihedral,
    enumerate_quandles,
    inner_group,
    is_connected,
    is_latin,
    left_mult,
    orbits,
    parse_quandle_json,
    parse_quandle_text,
    quandle_automorphisms,
    quandle_isomorphic,
    right_mult,
    trivial,
    validate_quandle,
)
from .reproduce import reproduce_tables

__version__ = "0.1.0"
