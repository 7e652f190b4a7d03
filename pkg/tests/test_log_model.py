import pytest
from hypothesis import given, strategies as st

from fwstatus.log_model import (
    FIELD_NAMES, MONTHS, LogRecord, MalformedTimestamp, Timestamp, compare_timestamps,
    parse_timestamp,
)


@pytest.mark.parametrize("date, time, expected", [
    ("17Nov2006", "14:10:43", (2006, 11, 17, 14, 10, 43)),
    ("20Oct2006", "17:30:36", (2006, 10, 20, 17, 30, 36)),
    ("4Nov2006", " 8:42:14", (2006, 11, 4, 8, 42, 14)),
    ("04nov2006", "08:42:14", (2006, 11, 4, 8, 42, 14)),
    ("30Feb2006", "00:00:00", (2006, 2, 30, 0, 0, 0)),
])
def test_parse_timestamp(date, time, expected):
    assert parse_timestamp(date, time).as_tuple() == expected


@pytest.mark.parametrize("date, time", [
    ("17Xyz2006", "14:10:43"),
    ("17Nov2006", "14:10"),
    ("Nov2006", "14:10:43"),
    ("17Nov06", "14:10:43"),
    ("17Nov2006", "24:00:00"),
    ("32Nov2006", "12:00:00"),
    ("", ""),
])
def test_parse_timestamp_rejects(date, time):
    with pytest.raises(MalformedTimestamp):
        parse_timestamp(date, time)


def test_compare_timestamps_examples():
    a = Timestamp(2006, 2, 17, 7, 13, 2)
    b = Timestamp(2006, 2, 26, 23, 59, 1)
    assert compare_timestamps(a, b) == -1
    assert compare_timestamps(a, a) == 0
    assert compare_timestamps(parse_timestamp("3Nov2006", "13:13:53"),
                              parse_timestamp("20Oct2006", "17:30:36")) == 1


timestamps = st.builds(
    Timestamp,
    year=st.integers(1970, 2100), month=st.integers(1, 12), day=st.integers(1, 31),
    hour=st.integers(0, 23), minute=st.integers(0, 59), second=st.integers(0, 59),
)


@given(timestamps)
def test_render_reparse_roundtrip(ts):
    assert parse_timestamp(*ts.to_fields()) == ts


@given(timestamps, timestamps, timestamps)
def test_compare_is_total_order(a, b, c):
    def oracle(x, y):
        tx = (x.year, x.month, x.day, x.hour, x.minute, x.second)
        ty = (y.year, y.month, y.day, y.hour, y.minute, y.second)
        return -1 if tx < ty else (1 if tx > ty else 0)

    assert compare_timestamps(a, b) == oracle(a, b)
    assert compare_timestamps(a, b) == -compare_timestamps(b, a)
    if compare_timestamps(a, b) <= 0 and compare_timestamps(b, c) <= 0:
        assert compare_timestamps(a, c) <= 0


def test_record_has_21_fields_in_header_order():
    assert len(FIELD_NAMES) == 21
    assert LogRecord._fields == FIELD_NAMES
    assert len(LogRecord().values()) == 21
    assert len(MONTHS) == 12
