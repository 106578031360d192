"""Intersection and union decomposition of minimal automata recognizing ideals."""

from .automata import (
    Check,
    Certificate,
    Dfa,
    Mode,
    ReachOrder,
    RankTable,
    accepts,
    canonical,
    equivalent,
    from_edges,
    from_table,
    includes,
    is_linear,
    isomorphic,
    minimize,
    product,
    ranks,
    reach_order,
    to_json,
    trim_check,
    validate,
)
from .decomposition import Component, Decomposition
from .ideals import (
    IdealAutomaton,
    WordSet,
    check_ideal,
    concat,
    gen_fig6,
    is_ideal,
    is_subword,
    lmin,
    power,
    principal_automaton,
    shuffle_ideal,
)
from .inter import (
    DampingScan,
    SeparatorInfo,
    Witness,
    damping_scan,
    decompose_inter,
    decompose_inter_recursive,
    decompose_linear,
    decompose_nonlinear,
    family_automaton,
    is_inter_prime,
    reduced_automaton,
    separator,
    witness,
)
from .union import AccelScan, accel_scan, decompose_union, is_union_prime

__version__ = "0.1.0"
