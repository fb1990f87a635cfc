import pytest

from conifolddt.settings import ENV_OVERRIDES


#: environment variable of the enumeration cap
CAP_VARIABLE = [var for var, key in ENV_OVERRIDES.items() if key == "cap"][0]


@pytest.fixture(autouse=True)
def cap_env(monkeypatch):
    """
    Runs every test without a cap from the caller's environment.
    The returned function sets the cap variable for a single test;
    monkeypatch restores the environment afterwards.
    """
    monkeypatch.delenv(CAP_VARIABLE, raising=False)

    def set_cap(cap):
        monkeypatch.setenv(CAP_VARIABLE, str(cap))

    return set_cap
