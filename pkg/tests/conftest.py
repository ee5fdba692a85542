import pytest

from handlength.game import compile_chain, crapless, craps

from .helpers import CUSTOM_GAMES, GAMES_DIR, acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def craps_chain():
    return compile_chain(craps())


@pytest.fixture(scope="session")
def crapless_chain():
    return compile_chain(crapless())


@pytest.fixture(scope="session")
def games_dir():
    return GAMES_DIR


@pytest.fixture(params=sorted(CUSTOM_GAMES))
def custom_spec(request):
    return CUSTOM_GAMES[request.param]
