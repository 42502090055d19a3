import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jband_sim.core import AggregateDensityMatrix, ModelParams, OccupationProfile, make_window
from jband_sim.measures import (
    average_concurrence,
    coherence_size,
    concurrence_vs_size_curve,
    entropy_report,
    extended_state_entropy,
    ipr,
    resonance_coherence_size,
    site_entropy,
    spano_coherence_size,
)

# Frozen closed-form values.
SPANO_C15_B05_TK2 = 16.552283739700747
SPANO_C5_B05_TK2 = 7.957508037063235
RESONANCE_C5 = 62.83185307179586
RESONANCE_C15 = 188.4955592153876
CONCURRENCE_CHAIN_N100 = 0.009575590154104521


def profile_from(u, t=0.0):
    u = np.asarray(u, dtype=float)
    return OccupationProfile(window=make_window(len(u)), u=u, t=t)


def delta_profile(N):
    u = np.zeros(N)
    u[make_window(N).indices.index(0)] = 1.0
    return profile_from(u)


def test_site_entropy_pure_states():
    assert site_entropy(0.0) == 0.0
    assert site_entropy(1.0) == 0.0


def test_site_entropy_maximum():
    assert site_entropy(0.5) == pytest.approx(math.log(2), abs=1e-15)


def test_site_entropy_rejects_out_of_range():
    for u in (-0.01, 1.01):
        with pytest.raises(ValueError):
            site_entropy(u)


@given(st.floats(min_value=0.0, max_value=1.0))
def test_site_entropy_bounds_and_symmetry(u):
    s = site_entropy(u)
    assert 0.0 <= s <= math.log(2) + 1e-12
    assert s == pytest.approx(site_entropy(1.0 - u), abs=1e-12)


@given(st.floats(min_value=0.0, max_value=1.0),
       st.floats(min_value=0.0, max_value=1.0))
def test_site_entropy_concavity(u, v):
    mid = site_entropy(0.5 * (u + v))
    assert mid >= 0.5 * (site_entropy(u) + site_entropy(v)) - 1e-12


def test_entropy_of_delta_profile_is_zero():
    assert entropy_report(delta_profile(11)).total == 0.0


def test_entropy_of_half_filled_pair():
    report = entropy_report(profile_from([0.5, 0.5]))
    assert report.total == pytest.approx(2 * math.log(2), abs=1e-12)
    assert report.average == pytest.approx(math.log(2), abs=1e-12)


def test_extended_reference_at_two_sites():
    assert extended_state_entropy(2) == pytest.approx(math.log(2), abs=1e-15)


@given(st.integers(min_value=2, max_value=400))
def test_uniform_profile_average_equals_extended_reference(N):
    report = entropy_report(profile_from(np.full(N, 1.0 / N)))
    assert report.average == pytest.approx(report.extended_ref, rel=1e-12)
    assert report.average == pytest.approx(report.total / N, rel=1e-12)


def test_ipr_localized():
    assert ipr(delta_profile(9)) == 1.0


def test_ipr_uniform():
    assert ipr(profile_from(np.full(25, 1.0 / 25))) == pytest.approx(25.0, rel=1e-9)


def test_ipr_two_equal_weights():
    assert ipr(profile_from([0.5, 0.5, 0.0])) == pytest.approx(2.0, rel=1e-12)


def test_ipr_rejects_empty_profile():
    with pytest.raises(ValueError):
        ipr(profile_from(np.zeros(5)))


@given(st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=2, max_size=40),
       st.floats(min_value=0.05, max_value=1.0))
@settings(max_examples=80)
def test_ipr_ignores_overall_scale(weights, scale):
    u = np.asarray(weights)
    total = u.sum()
    if total < 1e-6:  # degenerate and underflow-prone shapes are excluded
        return
    u = u / max(total, 1.0)  # keep the profile invariant satisfied
    assert ipr(profile_from(u * scale)) == pytest.approx(ipr(profile_from(u)), rel=1e-9)


def test_concurrence_localized_limit():
    assert average_concurrence(1.0, 10).avg_concurrence == 0.0


def test_concurrence_delocalized_limit():
    report = average_concurrence(10.0, 10)
    assert report.avg_concurrence == 2.0 / 10
    assert report.scaled == pytest.approx(1.0, rel=1e-12)


def test_concurrence_intermediate_value():
    assert average_concurrence(2.0, 4).avg_concurrence == pytest.approx(1.0 / 6, abs=1e-15)


@pytest.mark.parametrize("zeta,N", [(0.5, 4), (5.0, 4), (1.0, 1)])
def test_concurrence_rejects_out_of_range(zeta, N):
    with pytest.raises(ValueError):
        average_concurrence(zeta, N)


@given(st.integers(min_value=2, max_value=300),
       st.floats(min_value=0.0, max_value=1.0))
def test_concurrence_is_affine_in_zeta(N, frac):
    zeta = 1.0 + frac * (N - 1)
    got = average_concurrence(zeta, N).avg_concurrence
    slope = 2.0 / (N * (N - 1.0))
    assert got == pytest.approx(slope * (zeta - 1.0), rel=1e-12, abs=1e-300)


def test_coherence_size_localized_matrix():
    N = 7
    rho = AggregateDensityMatrix(N=N, entries=np.eye(N) / N)
    assert coherence_size(rho) == pytest.approx(1.0, rel=1e-12)


def test_coherence_size_uniform_matrix():
    N = 7
    rho = AggregateDensityMatrix(N=N, entries=np.full((N, N), 1.0 / N))
    assert coherence_size(rho) == pytest.approx(float(N), rel=1e-12)


def test_coherence_size_two_site_example():
    rho = AggregateDensityMatrix(N=2, entries=np.array([[0.5, 0.25], [0.25, 0.5]]))
    assert coherence_size(rho) == pytest.approx(1.8, rel=1e-12)


def test_coherence_size_rejects_zero_matrix():
    with pytest.raises(ValueError):
        coherence_size(AggregateDensityMatrix(N=3, entries=np.zeros((3, 3))))


@given(st.integers(min_value=2, max_value=12), st.integers(min_value=0, max_value=10**9))
@settings(max_examples=80)
def test_coherence_size_bounds(N, seed):
    rng = np.random.default_rng(seed)
    m = rng.uniform(0.0, 1.0, size=(N, N))
    m = 0.5 * (m + m.T)
    m *= 0.9 / max(np.trace(m), 1e-9)
    value = coherence_size(AggregateDensityMatrix(N=N, entries=m))
    assert 1.0 - 1e-9 <= value <= N + 1e-9


def test_spano_reference_values():
    p = ModelParams(a=0.0, b=0.5, c=15.0, t_k=2.0, N=500)
    assert spano_coherence_size(p) == pytest.approx(SPANO_C15_B05_TK2, abs=1e-9)
    p = ModelParams(a=0.0, b=0.5, c=5.0, t_k=2.0, N=500)
    assert spano_coherence_size(p) == pytest.approx(SPANO_C5_B05_TK2, abs=1e-9)


def test_spano_is_clamped_to_system_size():
    p = ModelParams(a=0.0, b=0.5, c=15.0, t_k=2.0, N=10)
    assert spano_coherence_size(p) == 10.0


def test_spano_rejects_zero_coupling():
    with pytest.raises(ValueError, match="b"):
        spano_coherence_size(ModelParams(a=0.0, b=0.0, c=15.0, t_k=2.0, N=100))


def test_spano_monotone_in_couplings():
    big = 10**9
    along_b = [spano_coherence_size(ModelParams(0.0, b, 15.0, 2.0, big))
               for b in np.linspace(0.1, 2.0, 12)]
    assert all(x > y for x, y in zip(along_b, along_b[1:]))
    along_tk = [spano_coherence_size(ModelParams(0.0, 0.5, 15.0, tk, big))
                for tk in np.linspace(0.5, 6.0, 12)]
    assert all(x > y for x, y in zip(along_tk, along_tk[1:]))
    along_c = [spano_coherence_size(ModelParams(0.0, 0.5, c, 2.0, big))
               for c in np.linspace(1.0, 40.0, 12)]
    assert all(x < y for x, y in zip(along_c, along_c[1:]))


def test_resonance_values():
    assert resonance_coherence_size(5.0) == pytest.approx(RESONANCE_C5, abs=1e-9)
    assert resonance_coherence_size(15.0) == pytest.approx(RESONANCE_C15, abs=1e-9)


def test_resonance_rejects_nonpositive_rate():
    with pytest.raises(ValueError):
        resonance_coherence_size(0.0)


def test_concurrence_curve_reference_point():
    p = ModelParams(a=0.0, b=0.1, c=15.0, t_k=2.0, N=100)
    curve = dict(concurrence_vs_size_curve(p, [100]))
    assert curve[100] == pytest.approx(CONCURRENCE_CHAIN_N100, abs=1e-9)


def test_concurrence_curve_decreases_beyond_coherence_size():
    p = ModelParams(a=0.0, b=0.1, c=15.0, t_k=2.0, N=60)
    values = [v for _, v in concurrence_vs_size_curve(p, range(60, 201, 5))]
    assert all(x > y for x, y in zip(values, values[1:]))


def test_concurrence_curve_vanishes_at_strong_coupling():
    p = ModelParams(a=0.0, b=40.0, c=1.0, t_k=2.0, N=10)
    assert all(v == 0.0 for _, v in concurrence_vs_size_curve(p, range(10, 101, 10)))
