import pytest

from qbist.campaign import CampaignConfig, run_campaign
from qbist.testgen import build_suite


@pytest.fixture(scope="session")
def example_suite(example_oracle):
    return build_suite(example_oracle)


@pytest.fixture(scope="session")
def example_matrix(example_oracle):
    return run_campaign(example_oracle)


@pytest.fixture(scope="session")
def make_matrix(make_oracle):
    def _make_matrix(k=2, minterms=(3,), **config):
        return run_campaign(
            make_oracle(k, list(minterms)), config=CampaignConfig(**config)
        )

    return _make_matrix
