# File: tests/test_bench.py
"""Operation-count benchmark"""
import pytest

from config.settings import BenchConfig
from core.exceptions import ConfigurationError
from orchestration.bench import BenchRunner, is_power_of_two, predicted_block_multiplications


@pytest.mark.parametrize("n, expected", [
    (1, 0), (2, 0), (3, 48), (4, 48), (8, 480), (16, 4032), (64, 261888), (128, 2096640),
])
def test_predicted_counts(n, expected):
    assert predicted_block_multiplications(n) == expected


def test_power_of_two_detection():
    assert [n for n in range(1, 20) if is_power_of_two(n)] == [1, 2, 4, 8, 16]
    assert not is_power_of_two(0)


def test_counts_match_prediction(zz, rng):
    report = BenchRunner(zz, BenchConfig(), rng).run([2, 4, 8, 16], seed=7)
    assert report.seed == 7
    assert report.ring == zz.name
    for record in report.records:
        assert record.mults == record.predicted
        assert record.ratio == 1.0
        assert record.seconds >= 0


def test_counts_match_prediction_at_large_orders(zz, rng):
    report = BenchRunner(zz, BenchConfig(entry_bound=3), rng).run([32, 64, 128], seed=None)
    assert [r.predicted for r in report.records] == [32640, 261888, 2096640]
    for record in report.records:
        assert record.mults == record.predicted
        assert record.ratio == 1.0
        assert record.to_dict()["per_n3"] < 1


def test_polynomial_ring_counts(f5x, rng):
    report = BenchRunner(f5x, BenchConfig(entry_bound=2), rng).run([4, 8], seed=None)
    assert [r.mults for r in report.records] == [48, 480]


def test_report_tree(zz, rng):
    tree = BenchRunner(zz, BenchConfig(), rng).run([4], seed=1).to_dict()
    record = tree['records'][0]
    assert tree['seed'] == 1
    assert record['n'] == 4
    assert record['ratio'] == 1.0
    assert record['per_n3'] == 48 / 64
    assert set(record) == {'n', 'mults', 'divs', 'scalings', 'predicted', 'ratio', 'per_n3', 'seconds'}


def test_non_powers_need_permission(zz, rng):
    with pytest.raises(ConfigurationError):
        BenchRunner(zz, BenchConfig(), rng).run([4, 6], seed=None)
    report = BenchRunner(zz, BenchConfig(allow_non_powers=True), rng).run([3, 6], seed=None)
    assert [r.mults for r in report.records] == [48, 480]
