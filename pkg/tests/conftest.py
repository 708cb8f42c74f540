import json
from importlib import resources

import pytest

from modquanta import build_interpretation, major_scale, tonality_orbit


@pytest.fixture(scope="session")
def triadic():
    return build_interpretation(major_scale(), 3)


@pytest.fixture(scope="session")
def tetradic():
    return build_interpretation(major_scale(), 4)


@pytest.fixture(scope="session")
def triadic_orbit(triadic):
    return tonality_orbit(triadic)


@pytest.fixture(scope="session")
def tetradic_orbit(tetradic):
    return tonality_orbit(tetradic)


@pytest.fixture(scope="session")
def golden():
    text = resources.files("modquanta.data").joinpath("tetradic_major_catalog.json").read_text()
    return json.loads(text)


ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record():
    """Store a one-line verdict for an acceptance criterion."""

    def _record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_RESULTS[name] = (ok, detail)

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
