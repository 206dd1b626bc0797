import numpy as np
import pandas as pd
import pytest

from temporal_graph_tools import ConfigurationError, DataUtils, InvalidWindowError, TimeUtils, Window
from tests.conftest import WINDOW_SPECS

TOY_LIFETIME = (TimeUtils.to_instant('1992-03-01'), TimeUtils.to_instant('1995-02-15'))


def iso(cuts):
    return [TimeUtils.to_iso(t) for t in cuts]


@pytest.mark.parametrize('value, expected', [
    ('1992-03-01', 8095),
    ('1970-01-01', 0),
    (pd.Timestamp('1992-03-01 23:59'), 8095),
    (np.datetime64('1992-03-02'), 8096),
    (8095, 8095),
])
def test_to_instant(value, expected):
    assert TimeUtils.to_instant(value) == expected


@pytest.mark.parametrize('value', ['1992-13-45', 'not a date'])
def test_to_instant_invalid(value):
    with pytest.raises(ValueError):
        TimeUtils.to_instant(value)


def test_iso_round_trip():
    assert TimeUtils.to_iso(TimeUtils.to_instant('2003-06-01')) == '2003-06-01'
    assert TimeUtils.to_date(8095).isoformat() == '1992-03-01'


@pytest.mark.parametrize('spec, unit, size', WINDOW_SPECS)
def test_parse_window(spec, unit, size):
    assert TimeUtils.parse_window(spec) == Window(unit, size)


@pytest.mark.parametrize('spec', ['0y', '-1d', 'abc', '', 0])
def test_parse_window_invalid(spec):
    with pytest.raises(ConfigurationError):
        TimeUtils.parse_window(spec)


def test_yearly_partition():
    lifetime = (TimeUtils.to_instant('1992-01-01'), TimeUtils.to_instant('2003-06-01'))
    cuts = TimeUtils.partition(lifetime, '1y')
    assert len(TimeUtils.windows(cuts)) == 12
    assert cuts[0] == lifetime[0] and cuts[-1] == lifetime[1]
    assert TimeUtils.to_iso(cuts[-2]) == '2003-01-01'
    assert [TimeUtils.window_label(t, '1y') for t in cuts[:-1]] == [str(y) for y in range(1992, 2004)]


def test_semester_partition_is_calendar_aligned():
    cuts = TimeUtils.partition(TOY_LIFETIME, '6m')
    assert iso(cuts) == [
        '1992-03-01', '1992-07-01', '1993-01-01', '1993-07-01', '1994-01-01', '1994-07-01', '1995-01-01', '1995-02-15',
    ]
    assert TimeUtils.window_label(cuts[0], '6m') == '1992-03'


def test_day_partition():
    assert TimeUtils.partition((0, 10), '3d') == [0, 3, 6, 9, 10]
    assert TimeUtils.window_label(0, '3d') == '1970-01-01'


def test_partition_of_empty_lifetime():
    with pytest.raises(InvalidWindowError):
        TimeUtils.partition((5, 5), '1y')


def test_snapshot_cuts():
    cuts = TimeUtils.snapshot_cuts(TOY_LIFETIME, '6m')
    assert iso(cuts) == ['1992-09-01', '1993-03-01', '1993-09-01', '1994-03-01', '1994-09-01']
    assert iso(TimeUtils.snapshot_cuts(TOY_LIFETIME, '1y', start='1994-03-01')) == ['1994-03-01']


def test_snapshot_label():
    assert TimeUtils.snapshot_label(TimeUtils.to_instant('2000-10-01')) == 'October 00'
    assert TimeUtils.snapshot_label(TimeUtils.to_instant('2003-04-01')) == 'April 03'


@pytest.mark.parametrize('value, decimals, expected', [
    (100 / 66, 2, 1.51),
    (0.29, 2, 0.29),
    (54.2857, 2, 54.28),
    (40 / 2145, 3, 0.018),
    (-1.555, 2, -1.55),
])
def test_truncate(value, decimals, expected):
    assert DataUtils.truncate(value, decimals) == expected


def test_loglog_slope():
    x = np.array([1, 2, 4, 8])
    assert DataUtils.loglog_slope(x, 16 / x ** 2) == pytest.approx(-2.0)


def test_max_abs_step_skips_undefined():
    before, after, change = DataUtils.max_abs_step(pd.Series([np.nan, 1.0, np.nan, 0.5, 0.4]))
    assert (before, after) == (1, 3)
    assert change == pytest.approx(-0.5)
