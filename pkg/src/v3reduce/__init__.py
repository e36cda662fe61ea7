"""Reductions of (v_3) configurations and their Levi graphs."""

from .codec import (
    Configuration,
    config_from_levi,
    levi_from_config,
    parse_graph6,
    parse_lcf,
    write_dot,
    write_graph6,
)
from .graph import UNBOUNDED, Graph, V3Graph, bipartition, components, girth, is_two_connected, validate_v3
from .iso import CanonicalForm, are_isomorphic, canonical_form, is_self_dual
from .families import d_graph, gp, heawood, pappus, t_graph, tutte_coxeter
from .reduce import (
    AugmentationMove,
    ReductionMove,
    ReductionTrace,
    a_augment,
    apply_move,
    b_augment,
    enumerate_reductions,
    reduce_to_terminal,
)
from .census import (
    CensusLevel,
    IrreducibilityReport,
    brute_force_census,
    classify,
    count_configurations,
    enumerate_census,
    verify_theorem1,
    verify_theorem3,
)

__version__ = "0.1.0"
