import pytest


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path_factory, monkeypatch):
    """Keep the on-disk character memo out of the working tree during tests."""
    monkeypatch.setenv(
        "MIRHECKE_CACHE", str(tmp_path_factory.getbasetemp() / "mirhecke-cache")
    )
