"""Exact homomorphism counting into loop-threshold graphs and the J-extremal lex problem."""

from .errors import InstanceTooLarge, NotThreshold, PatternUnsupported, PreconditionOutsideProof
from .graph import (
    FOX,
    H_IND,
    J,
    Graph,
    LexParams,
    LoopThresholdCode,
    ThresholdCode,
    clique_looped_split,
    colex_graph,
    count_isolates,
    decode_loop_threshold,
    decode_threshold,
    encode_threshold,
    join,
    lex_decompose,
    lex_graph,
    split_graph,
    union,
)
from .hom import (
    hard_core_weights,
    hom_closed_forms,
    hom_count,
    hom_count_threshold,
    ind_count,
    ind_profile,
    independence_poly_eval,
    partition_function,
    s_circ_identity_check,
)
from .lex import (
    EllRecord,
    RParams,
    SweepRecord,
    ell,
    ell_bounds_check,
    extremal_q_set,
    j_of_R,
    lex_ind_closed,
    stability_check,
    subcase_ledger,
    sweep,
)

__version__ = "0.1.0"
