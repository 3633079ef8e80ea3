"""Prefix-code toolkit: integer codes, expected-length interval analysis,
designer codes, and a continued-fraction rational codec."""

from ._pcpl import (
    analyze_csv,
    analyze_json,
    best_parameter,
    codebook,
    codeword,
    codeword_length,
    decode,
    encode,
    entropy,
    expected_length,
    golin,
    is_antiunary,
    is_j_smooth,
    monte_carlo,
    optimal_estimate,
    rational_decode,
    rational_encode,
    smooth_improve,
)
from ._pcpl import cf_expand as _cf_expand_raw
from ._pcpl import cf_reconstruct as _cf_reconstruct_raw

__version__ = "0.1.0"


def cf_expand(rational):
    """Continued-fraction terms of "p/q" text as (a0, [a1, ...]) integers."""
    a0, terms = _cf_expand_raw(rational)
    return int(a0), [int(t) for t in terms]


def cf_reconstruct(a0, terms):
    """Rational "p/q" text from integer continued-fraction terms."""
    return _cf_reconstruct_raw(str(a0), [str(t) for t in terms])


__all__ = [
    "analyze_csv",
    "analyze_json",
    "best_parameter",
    "cf_expand",
    "cf_reconstruct",
    "codebook",
    "codeword",
    "codeword_length",
    "decode",
    "encode",
    "entropy",
    "expected_length",
    "golin",
    "is_antiunary",
    "is_j_smooth",
    "monte_carlo",
    "optimal_estimate",
    "rational_decode",
    "rational_encode",
    "smooth_improve",
]
