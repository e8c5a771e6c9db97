"""Variable forgetting and fragment analysis for propositional CNF theories.

Theories use the named-text format: one clause per line, whitespace-separated
literals, a '-' prefix for negation, '#' comments, and `_|_` for the empty
clause.
"""

from ._core import (
    ParseError,
    PreconditionError,
    ResourceLimitError,
    classify,
    decide,
    defines,
    entails,
    forget,
    prime_implicants,
    prime_implicates,
    sat,
    snc,
    wsc,
)

__all__ = [
    "ParseError",
    "PreconditionError",
    "ResourceLimitError",
    "classify",
    "decide",
    "defines",
    "entails",
    "forget",
    "prime_implicants",
    "prime_implicates",
    "sat",
    "snc",
    "wsc",
]
