import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

from hopfbrace import exhibits  # noqa: E402


@pytest.fixture(scope="session")
def s3():
    return exhibits.builtin_group("S3")


@pytest.fixture(scope="session")
def s3_opposite(s3):
    return exhibits.opposite_skew_brace(s3)


@pytest.fixture(scope="session")
def s3_triple(s3_opposite):
    return exhibits.brace_triple_from_skew_brace(s3_opposite)


@pytest.fixture(scope="session")
def small_corpus():
    """Corpus restricted to order <= 6 to keep module tests quick."""
    return exhibits.corpus(max_order=6)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
