# flake8: noqa: F401
from . import settings
from .ring import RatFun, HalfLaurent, ONE, ZERO, Q, L
from .series import TruncSeries, GeomSeries, DimVec
from .plethystic import exp_pleth, log_pleth, pow_pleth
from .torus import FramedSeries, Stability, ray_factorize
from .conifold import (CANONICAL_CHAMBERS, classify_chamber, is_generic,
                       named_series, universal_series, vertex_pt,
                       z_series_framed, z_series_product)
from .oracle import CountQuery, count_cut_reps, predicted_count
from .suites import run_suite, run_suites, suites_available

from ._version import version as __version__
