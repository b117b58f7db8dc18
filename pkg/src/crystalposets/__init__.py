"""
Tableau crystals of type A as edge-colored graded posets: generation from
the signature rule, interval and Mobius analytics, saturated-chain moves,
and the key map with its fibers and Demazure subcrystals.
"""

from .crystal import (
    CrystalGraph,
    apply_e,
    apply_f,
    check_stembridge_axioms,
    generate,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    highest,
    i_signature,
    local_structure,
    string_stats,
    tableau_from_string,
    tableau_to_string,
    weight,
)
from .keymap import (
    KeyTable,
    adapted_string_check,
    check_key_axioms,
    compute_keys,
    demazure,
    fiber,
    fiber_extremes,
    minimal_fiber_elements,
)
from .poset import (
    Interval,
    MobiusCache,
    euler_mobius,
    find_move_path,
    free_interval,
    interval,
    interval_mobius,
    minimal_upper_bounds,
    mobius,
    non_stembridge_witness,
    saturated_chains,
    stembridge_components,
    stembridge_moves,
)
from .scenarios import Certificate, run_all
from .weyl import (
    classify_longest_parabolic,
    left_multiply,
    left_weak_join,
    left_weak_leq,
    length,
    longest_parabolic,
    reduced_words,
    strong_bruhat_leq,
)

__version__ = "0.1.0"
