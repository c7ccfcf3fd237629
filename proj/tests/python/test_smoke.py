import math

import pytest

import _satotate as stt


def test_trace_moments_are_catalan():
    catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    for k, c in enumerate(catalan):
        num, den = stt.su2_trace_moment_frac(2 * k)
        assert (int(num), int(den)) == (c, 1)
    assert stt.su2_trace_moment_frac(3) == ("0", "1")


def test_semicircle_cdf():
    assert stt.semicircle_cdf(-2.0) == 0.0
    assert stt.semicircle_cdf(2.0) == 1.0
    assert stt.semicircle_cdf(0.0) == pytest.approx(0.5)


def test_point_counts():
    # conductor-11 curve y^2 + y = x^3 - x^2 - 10x - 20
    known = {2: -2, 3: -1, 5: 1, 7: -2, 13: 4}
    for p, ap in known.items():
        assert stt.ap_point_count(0, -1, 1, -10, -20, p) == ap
    with pytest.raises(stt.SttError):
        stt.ap_point_count(0, -1, 1, -10, -20, 11)


def test_curve_traces_weil_bound():
    for p, ap in stt.curve_traces(0, 0, 1, -1, 0, 500):
        assert ap * ap <= 4 * p


def test_sampling_is_deterministic_and_equidistributed():
    a = stt.sample_traces("su2", 20000, 7)
    b = stt.sample_traces("su2", 20000, 7)
    assert a == b
    assert stt.ks_to_semicircle(a) < 0.02
    mean2 = sum(t * t for t in a) / len(a)
    assert math.isclose(mean2, 1.0, abs_tol=0.05)


def test_cocycle_split_orders():
    assert stt.cocycle_split_order("carry_v4") == 4
    assert stt.cocycle_split_order("quaternion_v4") == 0


def test_builtin_specs():
    specs = stt.builtin_specs()
    assert "su2" in specs and "rm_swap" in specs
