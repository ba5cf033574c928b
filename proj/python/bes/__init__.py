"""Configuration-free hypergraph toolkit."""

from ._core import (
    BesError,
    Configuration,
    Hypergraph,
    Params,
    check_claim_calc,
    clean,
    cover_histogram,
    exact_f,
    find_configuration,
    greedy_pack,
    is_free,
    pi_known,
    r_threshold_even,
    span,
    supporting_J,
    t_shadow,
    t_tight_components,
    verify_cleaned,
    verify_witness,
)

__all__ = [
    "BesError",
    "Configuration",
    "Hypergraph",
    "Params",
    "check_claim_calc",
    "clean",
    "cover_histogram",
    "exact_f",
    "find_configuration",
    "greedy_pack",
    "is_free",
    "pi_known",
    "r_threshold_even",
    "span",
    "supporting_J",
    "t_shadow",
    "t_tight_components",
    "verify_cleaned",
    "verify_witness",
]
