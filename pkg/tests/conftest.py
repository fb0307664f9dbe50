import pytest

from wayfinder.fixtures import fixture_graph, load_fixture


@pytest.fixture(scope="session")
def fig2():
    return fixture_graph("fig2")


@pytest.fixture(scope="session")
def fig2_text():
    return load_fixture("fig2").content


@pytest.fixture(scope="session")
def citymap_text():
    return load_fixture("citymap").content


@pytest.fixture(scope="session")
def citygraph():
    return fixture_graph("citymap")
