"""Desk-scale toolkit for twisted Weyl sums and their bound catalogue.

Exact building blocks (rational arithmetic, Vinogradov counting, the
large-sieve double sum) sit next to literal evaluations of the moment,
curve-point and large-sieve bound shapes, so the inequalities relating
them can be verified and explored numerically.
"""

from .bounds import (ArcDecision, BoundValue, ExponentSet, ImprovementRange,
                     LemmaResult, RegimeInput, RegimeReport, best_theorem,
                     exponents, improvement_range, major_arc_classify,
                     predicted_best, rhs_moment, rhs_smooth, sum_lemma_pair,
                     var_sum_lemma_pair)
from .curvepoints import (CloseCount, SmoothCurve, condition_exp_sum,
                          count_close, gorny, greedy_spaced_subset, log_curve,
                          inverse_power_curve, poly_curve, power_curve,
                          rhs_curve, root_inverse_curve, smooth_moment_lhs,
                          spacing_inequality_check, taylor_poly)
from .diophantine import (Rational, RationalApprox, as_rational, convergents,
                          dirichlet_approx, dist_to_nearest_int)
from .errors import BudgetError, CertificateError
from .largesieve import (MonicPoly, make_weights, range_and_setting_check,
                         sieve_bounds, sigma_p)
from .vinogradov import (CountTable, JResult, count_table, cs_step_check,
                         j_exact, translation_check, vmvt_ratio)
from .weylsum import (HolderCheck, MomentReport, PolyCoeffs, WeylSumValue,
                      discrete_moment, holder_check, weyl_sum,
                      weyl_sum_sq_oracle)

__version__ = "0.1.0"
