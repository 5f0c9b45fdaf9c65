import pytest

from artifact.corpus import running_example_log
from artifact.eventlog import parse_log, serialize_log


@pytest.fixture(scope="session")
def fig1():
    """The worked-example log [abc^50, abcd^30, acbd^20]."""
    return running_example_log()


@pytest.fixture()
def write_log(tmp_path):
    counter = [0]

    def _write(log_or_text):
        counter[0] += 1
        path = tmp_path / f"log{counter[0]}.log"
        text = (log_or_text if isinstance(log_or_text, str)
                else serialize_log(log_or_text))
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture(scope="session")
def lz_fixture_log():
    return parse_log("2;a,b,c\n1;a,b,c,d\n1;a,c,b,d\n")
