import pytest
import numpy as np

from spreadlab import create_app
from spreadlab.geometry.parallelisms import Gamma, ParallelismSpec, Placement
from spreadlab.geometry.spreads import build_spread, profile_regular, profile_satz1, profile_satz2


@pytest.fixture(scope='session')
def app():
    """Create test application"""
    return create_app('testing')


@pytest.fixture
def rng(app):
    return np.random.default_rng(app.settings['DEFAULT_SEED'])


@pytest.fixture(scope='session')
def regular_spread():
    return build_spread(profile_regular(1.0), 1)


@pytest.fixture(scope='session')
def satz1_spread():
    return build_spread(profile_satz1(0.5, 1.0), 1)


@pytest.fixture(scope='session')
def satz2_spread():
    return build_spread(profile_satz2(1.0), 1)


@pytest.fixture(params=[profile_regular(1.0), profile_satz1(0.5, 0.0), profile_satz1(0.5, 1.0),
                        profile_satz2(1.0)], ids=lambda p: p.name)
def profile(request):
    """Representative profiles of each closed-form kind"""
    return request.param


@pytest.fixture
def regular_spec():
    return ParallelismSpec(profile_regular(1.0), 1, Placement(), oriented=True, gamma=Gamma.O2)


@pytest.fixture
def satz2_spec():
    return ParallelismSpec(profile_satz2(1.0), 1)


@pytest.fixture
def profile_file(tmp_path):
    """Write a run configuration file and return its path"""
    def write(text, name='run.json'):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write
