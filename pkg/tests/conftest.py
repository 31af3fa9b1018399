"""Shared fixtures and the per-criterion acceptance summary."""

from collections import defaultdict

import pytest

from sp4zeta.precision import create_context

_OUTCOMES = defaultdict(list)   # criterion -> [(test name, passed)]
CRITERIA = {
    1: "xi and chi reflection identities",
    2: "xi_sp4 functional equation and pole set",
    3: "residue of xi_sp4 at s=2 equals the volume expression",
    4: "f(0), Z = g(s) - g(1-s), polynomial form of Z",
    5: "two zeros of f right of the line, near 0.927 +- 3.20i",
    6: "Z has one zero in [0.51,20]x[-22,22]",
    7: "remainder bounds for Re s >= 10",
    8: "gap check from a census of xi zeros to height 61",
    9: "census of Z to height 50",
    10: "U/V identity and census of V to height 30",
    11: "Weyl engine, rank 2",
    12: "Weyl engine, rank 3",
}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion checked by the test")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _OUTCOMES[marker].append((report.nodeid.split("::")[-1], report.passed))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        outcome.get_result().criterion = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        runs = _OUTCOMES.get(n)
        if not runs:
            terminalreporter.write_line(f"criterion {n:2d}: NOT RUN  {title}")
            continue
        ok = all(p for _, p in runs)
        failed = [name for name, p in runs if not p]
        tail = f"  (failed: {', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}{tail}")


@pytest.fixture(scope="session")
def ctx256():
    return create_context(256)


@pytest.fixture(scope="session")
def xi_census_61(ctx256):
    from sp4zeta.zeros import zero_census
    return zero_census("xi", 61, ctx=ctx256)


@pytest.fixture(scope="session")
def z_census_50(ctx256):
    from sp4zeta.zeros import zero_census
    return zero_census("Z", 50, ctx=ctx256)


@pytest.fixture(scope="session")
def v_census_30(ctx256):
    from sp4zeta.zeros import zero_census
    return zero_census("V", 30, ctx=ctx256)
