import functools
import random

import pytest
from hypothesis import HealthCheck, settings

from nlalg.corpus import FIELD_KINDS, CorpusConfig, operator_corpus

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def corpus(per_field=200):
    return tuple(operator_corpus(CorpusConfig(per_field=per_field)))


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture(params=list(FIELD_KINDS), ids=list(FIELD_KINDS))
def field_kind(request):
    return FIELD_KINDS[request.param]


# one line per acceptance criterion, filled in by tests/test_acceptance.py
CRITERIA: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        terminalreporter.write_line(CRITERIA[k])
