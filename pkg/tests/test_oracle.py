import json

import pytest
from hypothesis import given, settings, strategies as st

from energy_codes import CodeParams, PolarityCodec, WCodec, count_secc, count_swcc, enumerate_class, measure_rate
from energy_codes.bitseq import SUBBLOCK, WINDOW, to_str
from energy_codes.errors import BudgetExceeded
from energy_codes.oracle import count_by_enumeration, verify_halfspace_bound


def test_frozen_counts():
    assert count_secc(12, 4, 1, 3) == 2744
    assert count_swcc(16, 10, 1, 9) == 65024
    assert count_swcc(20, 12, 2, 10) == 1020930
    # every window of length 1 must be a 1
    assert count_swcc(9, 1, 1, 1) == 1
    assert count_swcc(9, 2, 1, 2) == 89  # no two adjacent zeros: Fibonacci


def test_enumeration_is_lexicographic():
    words = [to_str(w) for w in enumerate_class(5, 3, 1, 2)]
    assert words == sorted(words)
    assert "01101" in words and "00011" not in words
    assert len(list(enumerate_class(8, 4, 2, 2, SUBBLOCK))) == 36


def test_budget_and_validation():
    with pytest.raises(BudgetExceeded):
        list(enumerate_class(24, 4, 1, 3, budget=1 << 20))
    with pytest.raises(BudgetExceeded):
        count_swcc(40, 30, 1, 29, max_states=1 << 20)
    with pytest.raises(ValueError):
        count_secc(12, 4, 3, 1)
    with pytest.raises(ValueError):
        count_secc(10, 4, 1, 3)


def test_large_n_switches_to_python_ints():
    big = count_swcc(100, 4, 1, 3)
    assert isinstance(big, int) and big > 2**62
    assert big == count_swcc(100, 4, 1, 3)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 14), st.data())
def test_swcc_matches_enumeration(n, data):
    ell = data.draw(st.integers(1, n))
    a = data.draw(st.integers(0, ell))
    b = data.draw(st.integers(a, ell))
    assert count_swcc(n, ell, a, b) == count_by_enumeration(n, ell, a, b, WINDOW)


def test_window_class_inside_subblock_class():
    assert count_swcc(12, 4, 1, 3) < count_secc(12, 4, 1, 3)


def test_bound_report_json():
    report = verify_halfspace_bound(16, 10, 1, 9)
    d = json.loads(json.dumps(report.as_dict()))
    assert d["holds"] is True and d["c"] == "2/5" and d["sufficient_condition"] is False
    fails = verify_halfspace_bound(12, 4, 2, 2)
    assert not fails.holds


def test_rate_reports():
    w = measure_rate(WCodec(CodeParams(16, 10, 1, 9)), samples=32)
    assert (w.rate, w.redundancy, w.failures) == ("15/16", 1, 0)
    assert w.class_count == 65024 and w.capacity_bound < 1
    p = measure_rate(PolarityCodec(CodeParams(21, 7, 3, 7)), samples=32, seed=1)
    assert p.rate == "18/21" and p.failures == 0
