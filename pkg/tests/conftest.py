import pytest

from simplecurrents import lie, modular


@pytest.fixture(scope="session")
def sl4_level2():
    return modular.build_wzw_data(lie.lie_algebra("A", 3), 2)


@pytest.fixture(scope="session")
def sl6_level2():
    return modular.build_wzw_data(lie.lie_algebra("A", 5), 2)


@pytest.fixture(scope="session")
def so8_level2():
    return modular.build_wzw_data(lie.lie_algebra("D", 4), 2)


@pytest.fixture(scope="session")
def example_categories(sl4_level2, sl6_level2, so8_level2):
    return {"sl4-2": sl4_level2, "sl6-2": sl6_level2, "so8-2": so8_level2}
