"""Exact arithmetic for the Denjoy-Tichy-Uitz singular functions.

Evaluation of g_lambda (including the Minkowski question-mark function at
lambda = 1/2 and the golden-field cases lambda = 1/phi, 1/phi^2), continuant
comparison calculus, extremal continuants at fixed length and weighted sum,
derivative classification of quadratic irrationals, and certified bracketing
of the derivative threshold constants.
"""

from .cf import (CFConvention, Orientation, PeriodicCF, cf_of, continuant,
                 periodic_value, quotient_matrix, reverse, value_of,
                 weighted_sum)
from .classify import (Classification, KappaBracket, classify,
                       classify_verdict, growth_rate, kappa, kappa2_bracket)
from .extremal import (ExtremalInstance, balanced_max, brute_extrema,
                       max_construct, min_construct)
from .geval import (CertifiedInterval, LambdaKind, g_finite_series,
                    g_interval, g_mediant, question_mark, sample_farey)
from .golden import PHI, GoldenScalar
from .surd import QuadraticSurd, compare_values

__version__ = "0.1.0"

__all__ = [
    "CFConvention", "CertifiedInterval", "Classification", "ExtremalInstance",
    "GoldenScalar", "KappaBracket", "LambdaKind", "Orientation", "PHI",
    "PeriodicCF", "QuadraticSurd", "balanced_max", "brute_extrema", "cf_of",
    "classify", "classify_verdict", "compare_values", "continuant",
    "g_finite_series", "g_interval", "g_mediant", "growth_rate", "kappa",
    "kappa2_bracket", "max_construct", "min_construct", "periodic_value",
    "question_mark", "quotient_matrix", "reverse", "sample_farey", "value_of",
    "weighted_sum",
]
