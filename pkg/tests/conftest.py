import pytest


@pytest.fixture(autouse=True)
def _default_term_cap(monkeypatch):
    monkeypatch.delenv("ZETAONE_TERM_CAP", raising=False)
