"""Exact multiplicative preprojective algebra engine."""

from ._mppa import (
    MppaError,
    build_upsilon,
    critical_pairs,
    default_q,
    moment_map,
    nf,
    nf_quiver,
    oracle_equals,
    suite_names,
    verify,
)

__all__ = [
    "MppaError",
    "build_upsilon",
    "critical_pairs",
    "default_q",
    "moment_map",
    "nf",
    "nf_quiver",
    "oracle_equals",
    "suite_names",
    "verify",
]
