"""Quasimap intersection numbers and the generalized mirror transformation
for degree-k hypersurfaces in CP^{N-1}, in exact rational arithmetic."""

from .chow_ring import build_ring, graded_dim, integrate, integrate_via_socle, residue_certificate
from .exact_core import MultiPoly, QSeries, poly_divide_exact, series_exp, series_mul, series_recip
from .gmt_engine import (CorrelatorKey, CorrelatorSource, general_type_d1, gmt_two_point,
                         instanton_numbers, verify_gmt_identity)
from .mirror_series import check_w_mirror_identity, cy_series_route, mirror_map_series
from .partitions import Partition, enumerate_partitions, multiplicity, symmetry_factor
from .quasimap_w import ek_poly, vsc, w_d1_closed, w_integrand, w_two_point

__version__ = "0.1.0"
