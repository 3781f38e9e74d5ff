import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import helpers  # noqa: E402
from ugb import QQ, ZZ, Zmod, pbw_generators  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def example1_q():
    return helpers.example1_genset(QQ, 3)


@pytest.fixture(scope="session")
def sl2_z():
    return pbw_generators(helpers.sl2(ZZ))


@pytest.fixture(scope="session")
def heis_z4():
    return pbw_generators(helpers.heisenberg(Zmod(4)))


@pytest.fixture(scope="session")
def inverse_pair_q():
    return helpers.inverse_pair_genset(QQ)


@pytest.fixture(scope="session")
def gb_corpora(example1_q, sl2_z, heis_z4, inverse_pair_q):
    """The verified Groebner corpora used across uniqueness and agreement
    tests; the reports are cached on the sets."""
    corpora = {
        "example1/Q": example1_q,
        "sl2/Z": sl2_z,
        "heisenberg/Z4": heis_z4,
        "inverse-pair/Q": inverse_pair_q,
    }
    for G in corpora.values():
        assert G.is_groebner()
    return corpora
