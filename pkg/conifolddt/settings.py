"""Validated package settings with environment overrides"""
import os

from .parse_funcs import fint_nonneg, fint_positive, fprimes


__all__ = ["SETTINGS_FIELDS", "DEF_ALL", "KEYS_VALID", "DEFAULTS",
           "ENV_OVERRIDES", "Settings", "get_settings"]


#: Compendium of all settings, sorted by topic, and including
#: units and validation methods
SETTINGS_FIELDS = {
    # truncation of generating series
    "series": {
        "order": ["Total-degree truncation of series in y0, y1", "",
                  fint_nonneg],
        "s order": ["Truncation of geometric series in s", "", fint_nonneg],
        "t order": ["Truncation of geometric series in T", "", fint_nonneg],
    },
    # stability chambers
    "chambers": {
        "root bound": ["Total degree bound for listed roots", "",
                       fint_positive],
    },
    # finite-field point counting
    "oracle": {
        "cap": ["Maximum exhaustive enumeration size", "elements",
                fint_positive],
        "primes": ["Primes used for point counts", "", fprimes],
        "workers": ["Worker processes for point counts", "", fint_positive],
    },
}

#: A dictionary for all settings definitions
DEF_ALL = {}
for _sec in SETTINGS_FIELDS:
    for _key in SETTINGS_FIELDS[_sec]:
        DEF_ALL[_key] = SETTINGS_FIELDS[_sec][_key]

#: List of all valid settings keys
KEYS_VALID = sorted(DEF_ALL.keys())

#: Default values
DEFAULTS = {
    "order": 8,
    "s order": 6,
    "t order": 3,
    "root bound": 8,
    "cap": 10**9,
    "primes": (2, 3, 5),
    "workers": 1,
}

#: Environment variables that override settings keys
ENV_OVERRIDES = {
    "CONIFOLD_DT_CAP": "cap",
}


class Settings(dict):
    """Management of settings

    Valid key names are defined in :const:`conifolddt.settings.KEYS_VALID`;
    values are converted with the validator given in
    :const:`conifolddt.settings.SETTINGS_FIELDS`.
    """
    valid_keys = KEYS_VALID

    def __init__(self, *args, **kwargs):
        super(Settings, self).__init__()
        # make sure everything goes through __setitem__
        self.update(*args, **kwargs)

    def __setitem__(self, key, value):
        if key not in self.valid_keys:
            raise KeyError("Unknown settings key: '{}'!".format(key))
        value = DEF_ALL[key][2](value)
        super(Settings, self).__setitem__(key, value)

    def copy(self):
        return Settings(self)

    def update(self, *args, **kwargs):
        for k, v in dict(*args, **kwargs).items():
            self[k] = v


def get_settings(environ=None, **overrides):
    """Return the default settings with overrides applied

    Parameters
    ----------
    environ: dict or None
        Environment to read overrides from (defaults to `os.environ`),
        see :const:`ENV_OVERRIDES`.
    overrides:
        Explicit settings that take precedence over the environment;
        keys may use underscores instead of spaces and `None` values
        are ignored.

    Returns
    -------
    settings: Settings
    """
    if environ is None:
        environ = os.environ
    settings = Settings(DEFAULTS)
    for var, key in ENV_OVERRIDES.items():
        if environ.get(var):
            try:
                settings[key] = environ[var]
            except ValueError as exc:
                raise ValueError("Invalid value for environment variable "
                                 "{}: {}".format(var, exc))
    for key, value in overrides.items():
        if value is not None:
            settings[key.replace("_", " ")] = value
    return settings
