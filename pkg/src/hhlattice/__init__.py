"""Exact arithmetic for linearizable two-dimensional lattice equations.

The package evolves the 2D Heideman-Hogan lattice equation, the two-frieze
equation, and their determinant-defined generalizations over exact rationals
or sparse Laurent polynomials; extracts and verifies their linear relations;
reduces them to one-dimensional Somos-like recurrences; and certifies the
Laurent, coprimeness, and degree-growth properties of the iterates.
"""

from .algebra import (Degrees, ExponentVector, LaurentPolynomial,
                      MonomialSplit, RationalFunction, Variable, anon_var,
                      col_seed, divide_values, evaluate, exact_divide,
                      free_var, row_seed, split_monomial_content,
                      total_degree, variable_from_name, variables)
from .analysis import (CoprimenessResult, EntropyEstimate, ExtendedLaurentReport,
                       IrreducibilityReport, LaurentReport, SiteReport,
                       coprimeness_check, degree_growth, extended_laurent_check,
                       irreducibility_evidence, laurent_report,
                       predicted_denominator)
from .determinants import (DodgsonReport, WindowMatrix, det, dodgson_check,
                           f_window_det, minor, window, x_window_det)
from .errors import (DependencyError, FrameMismatchError, HHLatticeError,
                     InconsistentRecurrenceError, InsufficientDataError,
                     MissingSiteError, NotLinearInXError, PoleError,
                     RankDeficientError, SingularDenominatorError,
                     SingularStepError, SingularSystemError,
                     ZeroPolynomialError)
from .gcd import poly_gcd
from .lattice import (EquationSpec, InitialFrame, LatticeGrid, default_frame,
                      evolve, evolve_det_corner, grid_from_json,
                      grid_from_json_dict, grid_to_json, grid_to_json_dict,
                      grid_to_text, grid_values_from_text, law_residual, seed,
                      seed_ones, seed_random, wavefront_schedule)
from .linearization import (LinearRecurrence, TDirectionCoefficients,
                            alpha_beta_closed_form, alpha_beta_from_solve,
                            extract_line_recurrence, null_vector_recurrence,
                            t_direction_coeffs)
from .parsing import parse_polynomial, parse_value
from .reduction import (ConsistencyReport, ConstantRecurrence,
                        PeriodicityReport, ReductionSpec, Sequence,
                        constant_recurrence_finder, dana_scott,
                        heideman_hogan, hh_linear_constant,
                        iterate_generalized_hh, periodicity_check,
                        reduced_frieze_iterate, reduced_frieze_symbolic,
                        reduction_consistency, sequence_from_csv,
                        sequence_to_csv, sequence_to_json_dict)
from .suites import SUITES, run_suite

__version__ = "0.1.0"
