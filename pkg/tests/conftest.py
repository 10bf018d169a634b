from pathlib import Path

import pytest
from hypothesis import settings

from graphs import NAMED_GRAPHS

settings.register_profile('defarg', deadline=None, max_examples=100)
settings.load_profile('defarg')

DATA = Path(__file__).parent / 'data'


def pytest_addoption(parser):
    parser.addoption('--run-slow', action='store_true', default=False,
                     help='run the exhaustive and large random sweeps')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--run-slow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --run-slow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(params=sorted(NAMED_GRAPHS))
def named_graph(request):
    return NAMED_GRAPHS[request.param]


@pytest.fixture
def data_dir():
    return DATA
