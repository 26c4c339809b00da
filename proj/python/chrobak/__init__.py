"""Unary NFA to arithmetic-progression / Chrobak-normal-form conversion."""

from chrobak._core import (
    ArithmeticProgression,
    ChrobakCycle,
    ChrobakNfa,
    ConvertResult,
    CycleProfile,
    EventuallyPeriodicSet,
    LimitError,
    NormalizedNfa,
    ParseError,
    RhoShape,
    SccDecomposition,
    SccGcdInfo,
    SemigroupDecomposition,
    UnaryNfa,
    accepted_up_to,
    build_restricted,
    canonicalize,
    cnf_to_nfa,
    cnf_to_progressions,
    convert,
    cycle_lengths_via_powers,
    cycle_profile,
    decompose,
    determinize,
    diophantine_overapprox,
    dot_cnf,
    enumerate_paths_lastscc,
    eps_equal,
    eps_from_progressions,
    eps_member,
    exact_length_path_exists,
    example1_graph,
    is_cnf,
    member,
    normalize,
    numerical_semigroup_decompose,
    parse_nfa,
    parse_progressions,
    progressions_to_cnf,
    ps_member,
    random_nfa,
    reach_states,
    representable_dp,
    rho_shape,
    scc_gcd,
    serialize_nfa,
    serialize_progressions,
    simple_cycle_gcd_bruteforce,
    simple_cycle_lengths,
    trim,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
