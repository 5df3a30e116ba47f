import pytest


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    """Every test gets its own on-disk cache directory."""
    d = tmp_path / "cache"
    monkeypatch.setenv("KRONRED_CACHE_DIR", str(d))
    return d
