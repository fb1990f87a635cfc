# flake8: noqa: F401
from .quiver import CONIFOLD, IMAGINARY, REAL, QuiverData, Root, roots_up_to
from .chambers import (CANONICAL_CHAMBERS, CHAMBER_NAMES, ChamberLabel,
                       GenericityResult, chamber_to_json, classify_chamber,
                       is_generic, negative_roots, positive_roots, walls)
from .universal import (FORMS, FirstProofSeries, factor_A,
                        first_proof_series, half_series, universal_series)
from .chamber_series import (FramedSuite, framed_series_suite, root_factor,
                             z_series_framed, z_series_product)
from .geometric import (NAMED_SERIES, euler_closed_form, euler_of_named,
                        named_series, signed, vertex_pt)
