import pytest

from tait_lab.diagram import parse_pd
from tait_lab.tables import bundled_table_path, ingest

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
K5_2 = "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]"
K6_2 = "X[1,4,2,5] X[5,10,6,11] X[3,9,4,8] X[9,3,10,2] X[7,12,8,1] X[11,6,12,7]"


@pytest.fixture(scope="session")
def trefoil():
    return parse_pd(TREFOIL)


@pytest.fixture(scope="session")
def figure8():
    return parse_pd(FIGURE8)


@pytest.fixture(scope="session")
def k52():
    return parse_pd(K5_2)


@pytest.fixture(scope="session")
def k62():
    return parse_pd(K6_2)


@pytest.fixture(scope="session")
def alternating_table():
    entries, errors = ingest(bundled_table_path("alternating_upto9.jsonl"))
    assert not errors
    return entries


@pytest.fixture(scope="session")
def synthetic_table():
    entries, errors = ingest(bundled_table_path("synthetic_semiadequate.jsonl"))
    assert not errors
    return entries


@pytest.fixture(scope="session")
def full_corpus(alternating_table, synthetic_table):
    return list(alternating_table) + list(synthetic_table)
