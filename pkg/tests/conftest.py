import pytest

from cherednik.tables import TableUnavailable, group_table

_cache: dict = {}


@pytest.fixture(scope="session")
def table_of():
    """Session-cached character-table access; skips when bundled data for
    the big types is absent."""

    def get(code: str):
        if code not in _cache:
            try:
                _cache[code] = group_table(code)
            except TableUnavailable:
                _cache[code] = None
        table = _cache[code]
        if table is None:
            pytest.skip(f"bundled table for {code} not available")
        return table

    return get
