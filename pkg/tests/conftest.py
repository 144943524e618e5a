import pytest

from subspace_designs import make_field


@pytest.fixture(params=[(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2)], ids=lambda x: f"GF({x[0]}^{x[1]})")
def small_field(request):
    p, h = request.param
    return make_field(p, h)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
