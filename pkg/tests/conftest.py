import pytest

from nbcolor.classify import classify_corpus, enumerate_cubic


@pytest.fixture(scope="session")
def corpus6():
    return enumerate_cubic(6)


@pytest.fixture(scope="session")
def corpus12():
    return enumerate_cubic(12)


@pytest.fixture(scope="session")
def classified12(corpus12):
    return classify_corpus(corpus12)


@pytest.fixture(scope="session")
def client():
    from fastapi.testclient import TestClient

    from nbcolor.service import app

    return TestClient(app)
