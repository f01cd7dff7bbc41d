"""Exact tools for the doubling map with a hole ``(a, b)``.

Words and eventually periodic expansions, Sturmian substitutions, the
renormalisation tower, the threshold functions phi, chi and psi, a
brute-force survivor oracle and the associated IFS.
"""
from .ifs import apply_F, attractor_dimension, image_complexity, measure_identity_check, phi_limit
from .renorm import (BridgePoint, LimitPoint, delta_interval, enumerate_plateaus, locate, plateau_interval,
                     tilde_delta_interval)
from .sturmian import compose_st, omega_pair, substitute
from .survivor import Hole, boundary_curves, cycle_census, growth_rate, hole_report, orbit_survives
from .thresholds import bound_audit, chi, foch_classify, phi, psi, soch_classify
from .words import PeriodicPoint, inf, parse_point, periodic, rational_to_expansion, word_value

__version__ = "0.1.0"
