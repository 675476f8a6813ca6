import os
import tempfile

import pytest


@pytest.fixture(scope="session", autouse=True)
def _isolated_cache():
    """Keep test runs away from the user's cache directory."""
    old = os.environ.get("CYCLECERT_CACHE_DIR")
    with tempfile.TemporaryDirectory(prefix="cyclecert-test-cache-") as tmp:
        os.environ["CYCLECERT_CACHE_DIR"] = tmp
        yield tmp
    if old is None:
        os.environ.pop("CYCLECERT_CACHE_DIR", None)
    else:
        os.environ["CYCLECERT_CACHE_DIR"] = old
