import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact.eventlog import (
    EventLog,
    LogFormatError,
    alphabet,
    is_proper_sublog,
    parse_log,
    parse_log_json,
    serialize_log,
    serialize_log_json,
)

traces = st.lists(st.sampled_from("abcde"), min_size=1, max_size=6).map(tuple)
log_entries = st.lists(st.tuples(traces, st.integers(1, 9)),
                       min_size=1, max_size=8)


def test_parse_basic():
    log = parse_log("2;a,b\n1;c\n")
    assert log.count(("a", "b")) == 2
    assert log.count(("c",)) == 1
    assert log.trace_count() == 3
    assert len(log) == 2
    assert alphabet(log) == {"a", "b", "c"}


def test_parse_merges_duplicate_variant_lines():
    log = parse_log("1;a,b\n2;a,b\n")
    assert log.count(("a", "b")) == 3
    assert len(log) == 1


def test_multiset_equality_ignores_order():
    assert parse_log("1;a\n2;b\n") == parse_log("2;b\n1;a\n")
    assert hash(parse_log("1;a\n2;b\n")) == hash(parse_log("2;b\n1;a\n"))


def test_segments_preserve_input_order():
    # Non-adjacent repeats of a variant stay separate segments; adjacent merge.
    log = parse_log("1;a\n1;b\n2;a\n1;a\n")
    assert log.segments == ((("a",), 1), (("b",), 1), (("a",), 3))
    assert log.count(("a",)) == 4


def test_roundtrip_preserves_segments():
    text = "1;a\n1;b\n2;a\n"
    log = parse_log(text)
    assert parse_log(serialize_log(log)).segments == log.segments
    assert parse_log_json(serialize_log_json(log)).segments == log.segments


@pytest.mark.parametrize("bad", ["x;a", "0;a", "-1;a", "1;a,,b",
                                 "2a,b", "1;a;b"])
def test_parse_errors(bad):
    with pytest.raises(LogFormatError):
        parse_log(bad + "\n")


def test_count_overflow_rejected():
    with pytest.raises(LogFormatError):
        parse_log(f"{2**64};a\n")


def test_proper_sublog():
    small = parse_log("1;a\n")
    big = parse_log("2;a\n1;b\n")
    assert is_proper_sublog(small, big)
    assert not is_proper_sublog(big, small)
    assert not is_proper_sublog(small, small)  # irreflexive (proper)
    assert not is_proper_sublog(parse_log("1;c\n"), big)


@given(log_entries)
def test_roundtrip_text(entries):
    log = EventLog(entries)
    again = parse_log(serialize_log(log))
    assert again == log
    assert again.segments == log.segments


@given(log_entries, log_entries)
def test_sublog_antisymmetric(e1, e2):
    l1, l2 = EventLog(e1), EventLog(e2)
    assert not (is_proper_sublog(l1, l2) and is_proper_sublog(l2, l1))
