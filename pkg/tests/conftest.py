import pytest

from faceideal import _kernels

BACKENDS = [_kernels.numpy_backend]
if _kernels.numba_backend is not None:
    BACKENDS.append(_kernels.numba_backend)


@pytest.fixture(scope="session", params=BACKENDS, ids=lambda m: m.__name__.rsplit("_", 1)[-1])
def kernels(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.summary_line(i))
