import os
import tempfile
from pathlib import Path

# keep preference files out of the user's home
os.environ.setdefault('LBPC_HOME', tempfile.mkdtemp(prefix='lbpc-tests-'))

import pytest
from hypothesis import settings, HealthCheck

from lbpc.liealg import LieAlgebra
from lbpc.bialg import LieBialgebra

settings.register_profile('lbpc', deadline=None,
                          suppress_health_check=[HealthCheck.too_slow,
                                                 HealthCheck.function_scoped_fixture])
settings.load_profile('lbpc')

DATA_DIR = Path(__file__).resolve().parent.parent / 'data'

# basis (e, h, f)
SL2_BRACKETS = {(0, 1): {0: -2}, (0, 2): {1: 1}, (1, 2): {2: -2}}


@pytest.fixture
def sl2():
    return LieAlgebra.from_brackets(['e', 'h', 'f'], SL2_BRACKETS)

@pytest.fixture
def heisenberg():
    return LieAlgebra.from_brackets(['x', 'y', 'z'], {(0, 1): {2: 1}})

@pytest.fixture
def sl2_standard(sl2):
    """delta(e) = e ^ h, delta(f) = f ^ h, delta(h) = 0."""
    return LieBialgebra.from_wedges(sl2, {0: [(0, 1, 1)], 2: [(2, 1, 1)]})

@pytest.fixture
def data_dir():
    return DATA_DIR
