"""Sato-Tate group structures: exact moments, cocycles, Frobenius statistics."""

from fractions import Fraction

from ._satotate import (
    SttError,
    ap_point_count,
    builtin_specs,
    cocycle_split_order,
    curve_traces,
    ks_to_semicircle,
    sample_traces,
    semicircle_cdf,
    su2_trace_moment_frac,
)


def su2_trace_moment(n: int) -> Fraction:
    """Exact n-th moment of the trace on SU(2) under Haar measure."""
    num, den = su2_trace_moment_frac(n)
    return Fraction(int(num), int(den))


__all__ = [
    "SttError",
    "ap_point_count",
    "builtin_specs",
    "cocycle_split_order",
    "curve_traces",
    "ks_to_semicircle",
    "sample_traces",
    "semicircle_cdf",
    "su2_trace_moment",
    "su2_trace_moment_frac",
]
