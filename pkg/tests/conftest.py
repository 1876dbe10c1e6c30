from pathlib import Path

import pytest

from plumbcalc.io import read_graph

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def kt():
    return read_graph(DATA / "kt.plumb").graph


@pytest.fixture(scope="session")
def pair12():
    return read_graph(DATA / "pair12.plumb").graph


@pytest.fixture(scope="session")
def single1():
    return read_graph(DATA / "single1.plumb").graph


@pytest.fixture(scope="session")
def klein():
    return read_graph(DATA / "klein.plumb").graph
