import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jband_sim.specfun import BesselEval, bessel_j, bessel_j_row

from oracles import bessel_mp, bessel_series

# Frozen from the series/arbitrary-precision oracles.
J1_OF_2 = 0.5767248077568734
J0_OF_2 = 0.22389077914123567


def test_order_zero_at_origin():
    assert bessel_j(0, 0.0) == 1.0


def test_positive_order_at_origin():
    assert bessel_j(5, 0.0) == 0.0


def test_series_value_order_one():
    assert bessel_j(1, 2.0) == pytest.approx(J1_OF_2, abs=1e-12)


def test_row_at_origin():
    assert bessel_j_row(2, 0.0).tolist() == [1.0, 0.0, 0.0]


def test_row_matches_series_values():
    row = bessel_j_row(1, 2.0)
    assert row[0] == pytest.approx(J0_OF_2, abs=1e-12)
    assert row[1] == pytest.approx(J1_OF_2, abs=1e-12)


@pytest.mark.parametrize("n", range(0, 21, 4))
@pytest.mark.parametrize("x", [0.05, 0.5, 1.0, 2.0, 5.0, 10.0])
def test_against_series_oracle(n, x):
    assert bessel_j(n, x) == pytest.approx(bessel_series(n, x), abs=1e-12)


@pytest.mark.parametrize("n,x", [
    (0, 1000.0), (1, 1000.0), (1500, 1000.0), (2000, 1000.0), (-2000, 1000.0),
    (500, 500.0), (999, 998.5), (2000, 3.0), (123, 0.02), (40, 40.0),
    (0, 1e-9), (3, 1e-9), (7, 0.3),
])
def test_against_arbitrary_precision_oracle(n, x):
    assert bessel_j(n, x) == pytest.approx(bessel_mp(n, x), abs=1e-12)


def test_oracles_agree_with_each_other():
    # Guards the test suite itself: both reference routes match where valid.
    for n, x in [(0, 2.0), (1, 2.0), (5, 7.5), (12, 10.0)]:
        assert bessel_series(n, x) == pytest.approx(bessel_mp(n, x), abs=1e-13)


@given(st.integers(min_value=-300, max_value=300),
       st.floats(min_value=0.0, max_value=300.0, allow_nan=False))
def test_parity_is_exact(n, x):
    sign = -1.0 if (n < 0 and n % 2) else 1.0
    assert bessel_j(n, x) == sign * bessel_j(abs(n), x)


@given(st.floats(min_value=0.0, max_value=200.0, allow_nan=False))
@settings(deadline=None)
def test_closure_identity(x):
    n_max = math.ceil(x) + 40
    row = bessel_j_row(n_max, x)
    total = row[0] ** 2 + 2.0 * float(np.sum(row[1:] ** 2))
    assert abs(total - 1.0) <= 1e-8


@given(st.integers(min_value=1, max_value=600),
       st.floats(min_value=1.0, max_value=400.0, allow_nan=False))
@settings(deadline=None)
def test_three_term_recurrence_residual(n, x):
    row = bessel_j_row(n + 1, x)
    residual = row[n - 1] + row[n + 1] - (2.0 * n / x) * row[n]
    assert abs(residual) <= 1e-8


@given(st.integers(min_value=0, max_value=400),
       st.floats(min_value=0.0, max_value=500.0, allow_nan=False))
@settings(deadline=None)
def test_magnitude_bound(n, x):
    assert abs(bessel_j(n, x)) <= 1.0 + 1e-12


def test_row_consistent_with_scalar():
    row = bessel_j_row(50, 37.3)
    for k in (0, 1, 17, 50):
        assert row[k] == pytest.approx(bessel_j(k, 37.3), abs=1e-12)


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), -1.0])
def test_rejects_bad_arguments(bad):
    with pytest.raises(ValueError):
        bessel_j(0, bad)


def test_row_rejects_negative_order():
    with pytest.raises(ValueError):
        bessel_j_row(-1, 1.0)


def test_eval_record():
    rec = BesselEval.evaluate(-3, 2.0)
    assert rec.n == -3 and rec.x == 2.0
    assert rec.value == -bessel_j(3, 2.0)
    assert abs(rec.value) <= 1.0
