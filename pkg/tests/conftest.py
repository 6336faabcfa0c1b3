import pytest

from bisetkit.groups import (
    cyclic_group,
    klein_four,
    symmetric_group,
    trivial_group,
)


@pytest.fixture(scope="session")
def one():
    return trivial_group()


@pytest.fixture(scope="session")
def c2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def c3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def c4():
    return cyclic_group(4)


@pytest.fixture(scope="session")
def v4():
    return klein_four()


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)
