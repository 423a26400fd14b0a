"""Learning and minimizing multiplicity automata over GF(2)."""

from ._alma import (
    InputError,
    InvariantError,
    M2ma,
    Nfa,
    OracleError,
    learn,
    learn_function,
    nba_accepts,
    parse_nba,
    parse_suba,
    run,
    suba_accepts,
    suba_to_m2ma,
)

__all__ = [
    "InputError",
    "InvariantError",
    "M2ma",
    "Nfa",
    "OracleError",
    "learn",
    "learn_function",
    "nba_accepts",
    "parse_nba",
    "parse_suba",
    "run",
    "suba_accepts",
    "suba_to_m2ma",
]
