"""Exact symbolic calculator for motivic zeta functions, volume Poincare
series, motivic volumes and nearby cycles from SNC resolution combinatorics.
"""

from .laurent import LaurentPoly
from .ring import (GeneratorSymbol, MotivicClass, SpecializationMap,
                   euler_specialization, mc_add, mc_mul, mc_push, mc_specialize, pt)
from .cones import Cone, Constraint, chi, chi_union, cone_dim, feasible
from .series import (ConeSeries, ConeTerm, coefficient, geom, hadamard, limit,
                     orthant_product, series_add, series_mul)
from .resolution import (EXPLICIT, GELFAND_LERAY, GaugeSpec, ResolutionData,
                         StratumDatum, validate)
from .calculus import (delta_cones, delta_union_chi, generalized_poincare,
                       integral_at_level, motivic_volume, mv_at_least,
                       nearby_cycles, poincare_series, smooth_integral,
                       zeta_at_level, zeta_series)
from .verify import (VerifyReport, verify_ell_independence,
                     verify_hadamard_multiplicativity, verify_identity,
                     verify_suite, verify_unit_invariance)

__version__ = "0.1.0"
