import numpy as np
import pytest

from blends import _kernels

BACKENDS = _kernels.available_backends()

_acceptance = {}


@pytest.fixture(params=BACKENDS)
def backend(request):
    with _kernels.use_backend(request.param):
        yield request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20201102)


@pytest.fixture(scope="session")
def warm_kernels():
    """Compile the numba kernels once so timings measure evaluation, not JIT."""
    from blends import eval_grid, gen_step

    b = gen_step(2, 3)
    s = np.linspace(0, 1, 5)
    for be in BACKENDS:
        with _kernels.use_backend(be):
            eval_grid(b, s, 0)
            eval_grid(b, s, 3)
            eval_grid(b, s.astype(complex), 1)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    info = getattr(report, "acceptance", None)
    if info is None:
        return
    number, title = info
    _acceptance.setdefault(number, []).append((title, report.outcome, report.nodeid))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        report.acceptance = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_acceptance):
        for title, outcome, _ in _acceptance[number]:
            verdict = "PASS" if outcome == "passed" else "FAIL"
            tr.write_line(f"criterion {number}: {verdict}  {title}")
