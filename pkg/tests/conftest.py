import pytest

from hopfforge.reptheory import build_apq, build_simples_apq, install_integral, primitive_root
from hopfforge.reptheory.fusion import fusion_closed_form

P, Q, T = 7, 3, 2


@pytest.fixture(scope="session")
def apq():
    ctx = build_apq(P, Q, T)
    install_integral(ctx)
    return ctx


@pytest.fixture(scope="session")
def beta():
    return primitive_root(P)


@pytest.fixture(scope="session")
def simples(apq, beta):
    return build_simples_apq(apq, beta)


@pytest.fixture(scope="session")
def closed_ring(beta):
    return fusion_closed_form(P, Q, T, beta)


class _Criterion:
    def __init__(self, log, number, title):
        self.log, self.number, self.title = log, number, title
        self.details = []

    def note(self, text):
        self.details.append(str(text))

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        line = f"criterion {self.number} [{status}] {self.title}"
        if self.details:
            line += " :: " + "; ".join(self.details)
        if exc_type is not None:
            line += f" :: {exc_type.__name__}: {exc}"
        self.log[self.number] = line
        print(line)
        return False


@pytest.fixture
def criterion(request):
    log = request.config.__dict__.setdefault("_acceptance_log", {})
    return lambda number, title: _Criterion(log, number, title)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.__dict__.get("_acceptance_log")
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(log):
        terminalreporter.write_line(log[k])
