import pytest

from billiardknots.distributions import BETA, crossing_pmf
from billiardknots.sampler import sample_pmf, tv_distance


def test_tv_distance_basics():
    assert tv_distance({"a": 1.0}, {"a": 1.0}) == 0
    assert tv_distance({"a": 1.0}, {"b": 1.0}) == 1
    assert tv_distance({0: 0.5, 3: 0.5}, {0: 0.75, 3: 0.25}) == pytest.approx(0.25)


def test_empty_report_is_valid():
    report = sample_pmf(6, 0, seed=1)
    assert report.sample_count == 0
    assert report.counts == {}
    assert report.empirical == {}


def test_determinism_is_bitwise():
    a = sample_pmf(12, 3000, seed=99)
    b = sample_pmf(12, 3000, seed=99)
    assert a == b
    c = sample_pmf(12, 3000, seed=100)
    assert a != c


def test_workers_change_the_stream_but_stay_deterministic():
    one = sample_pmf(12, 2000, seed=5, workers=1)
    four_a = sample_pmf(12, 2000, seed=5, workers=4)
    four_b = sample_pmf(12, 2000, seed=5, workers=4)
    assert four_a == four_b
    assert sum(four_a.counts.values()) == sum(one.counts.values()) == 2000


def test_unknot_frequency_near_three_quarters():
    report = sample_pmf(3, 100_000, seed=20260809)
    assert report.empirical[0] == pytest.approx(0.75, abs=0.01)


def test_frequencies_sum_to_one():
    report = sample_pmf(9, 10_000, seed=3)
    assert sum(report.empirical.values()) == pytest.approx(1.0, abs=1e-12)


def test_tv_against_exact_attached_to_report():
    exact = crossing_pmf(12)
    report = sample_pmf(12, 20_000, seed=7, exact=exact)
    assert report.tv_distance_to_exact is not None
    assert report.tv_distance_to_exact < 0.05
    with pytest.raises(ValueError):
        sample_pmf(9, 10, seed=1, exact=exact)


def test_tv_shrinks_with_more_samples():
    exact = crossing_pmf(30)
    small, large = [], []
    for seed in range(5):
        small.append(sample_pmf(30, 1_000, seed=seed, exact=exact).tv_distance_to_exact)
        large.append(sample_pmf(30, 100_000, seed=seed, exact=exact).tv_distance_to_exact)
    assert sum(large) / 5 < sum(small) / 5
    assert sum(1 for s, l in zip(small, large) if l < s) >= 4


def test_concentration_at_large_length():
    report = sample_pmf(3000, 10_000, seed=41)
    stray = sum(
        freq for c, freq in report.empirical.items() if abs(c / 3000 - BETA) > 0.05
    )
    assert stray < 0.02


def test_invalid_inputs():
    with pytest.raises(ValueError):
        sample_pmf(5, 10, seed=1)
    with pytest.raises(ValueError):
        sample_pmf(6, -1, seed=1)
    with pytest.raises(ValueError):
        sample_pmf(6, 10, seed=1, workers=0)


def test_report_json():
    report = sample_pmf(3, 100, seed=2)
    data = report.to_json()
    assert data["n"] == 3 and data["count"] == 100 and data["seed"] == 2
    assert isinstance(data["empirical"], dict)
