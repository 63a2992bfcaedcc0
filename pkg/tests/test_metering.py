import pytest

from orientations import DelayMeter
from orientations.metering import GapStats


def test_gap_slicing():
    meter = DelayMeter()
    meter.bfs()
    meter.arcs(5)
    meter.emitted()
    meter.arcs(2)
    meter.emitted()
    meter.finished()
    assert meter.emissions == 2
    assert meter.gaps == [GapStats(1, 5), GapStats(0, 2), GapStats(0, 0)]
    assert meter.total_ops == 8
    assert meter.max_delay_ops == 6
    assert meter.max_delay_bfs == 1
    assert meter.amortized_ops() == 4.0


def test_zero_emission_run_has_single_gap():
    meter = DelayMeter()
    meter.bfs()
    meter.finished()
    assert meter.emissions == 0
    assert len(meter.gaps) == 1
    assert meter.amortized_ops() is None


def test_finished_is_single_use():
    meter = DelayMeter()
    meter.finished()
    with pytest.raises(RuntimeError):
        meter.finished()
    with pytest.raises(RuntimeError):
        meter.emitted()


def test_summary_fields():
    meter = DelayMeter()
    meter.arcs(3)
    meter.emitted()
    meter.finished()
    summary = meter.summary()
    assert summary["solutions"] == 1
    assert summary["total_ops"] == 3
    assert summary["max_delay_ops"] == 3
    assert summary["amortized_ops"] == 3.0
