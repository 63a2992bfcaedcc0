import pytest

import families


@pytest.fixture(scope="session")
def family():
    return families.acceptance_family()


@pytest.fixture(scope="session")
def named():
    return dict(families.named_graphs())
