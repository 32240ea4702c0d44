"""
Truncated-jet arithmetic for hypergeometric series of Ramanujan type.

The main entry points:

* :func:`evaluate_components` and :func:`relation_residuals` for the
  component series and their identities,
* :func:`mirror_map` and :func:`t_u_k_series` for exact q-expansions,
* :func:`solve_3f2` and :func:`solve_5f4` for solving ``1/pi`` and
  ``1/pi^2`` series from ``k``,
* :func:`extract_signature` for reading ``k, j, l`` back out of a series.
"""
from .errors import (ConfigurationError, DivergenceError, DomainError, InconsistencyError,
                     NoSolutionError, NotInvertibleError, OutOfRegionError, RamanujanJetsError,
                     ScalarKindError, ShapeError, UnsupportedError)
from .numerics import (PrecisionContext, RecognizedConstant, cot_pi, fundamental_constants,
                       make_context, polygamma, recognize)
from .jet import Jet, jet_exp, jet_log, jet_pochhammer_frac, jet_pochhammer_int, jet_pow_base
from .series import PowerSeries, series_compose, series_invert, series_revert
from .hyperseries import (SeriesFamily, all_families, component_series, evaluate_components,
                          parse_family, picard_fuchs_residual, relation_residuals, scalar_series_sum)
from .spectrum import MSpectrum, m_spectrum
from .qexpansion import QExpansion, h_functions, mirror_map, t_u_k_series
from .solver import RamanujanSolution, corollary_check, probe_conjectures, solve_3f2, solve_5f4
from .modular import ThetaValues, closed_form_3f2_half, lambda_alpha, theta
from .expansions import ExpansionSignature, extract_signature, verify_expansion

__version__ = "0.1.0"
