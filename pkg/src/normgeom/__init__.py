"""Norm-based tests for inner-product structure and finite-isometry extension.

The hot loops (batched norms, Birkhoff-James line minimisation, bisection) run
in a compiled extension when it is available and in numpy otherwise; see
:mod:`normgeom._backend`.
"""

__version__ = "0.1.0"

from normgeom import errors
from normgeom._backend import current as backend
from normgeom.characterizations import (ConditionId, classify_space,
                                        eval_condition, search_violation)
from normgeom.extension import (Correspondence, certify_nonextendable_flip,
                                check_complex_linearity, extend_isometry,
                                verify_isometry)
from normgeom.geometry import (DistanceMatrix, PointConfig, cayley_menger,
                               cm_determinant, distance_matrix,
                               is_affinely_dependent, trilaterate)
from normgeom.locus import (build_isosceles_config, phi,
                            strict_convexity_search, trace_locus)
from normgeom.polarization import (gram_matrix, polarize_complex,
                                   polarize_real)
from normgeom.spaces import (Field, NormedSpace, complex_structure, euclidean,
                             lp, quadratic, realify, sup, weighted)

__all__ = [
    "__version__", "errors", "backend",
    "ConditionId", "classify_space", "eval_condition", "search_violation",
    "Correspondence", "certify_nonextendable_flip", "check_complex_linearity",
    "extend_isometry", "verify_isometry",
    "DistanceMatrix", "PointConfig", "cayley_menger", "cm_determinant",
    "distance_matrix", "is_affinely_dependent", "trilaterate",
    "build_isosceles_config", "phi", "strict_convexity_search", "trace_locus",
    "gram_matrix", "polarize_complex", "polarize_real",
    "Field", "NormedSpace", "complex_structure", "euclidean", "lp", "quadratic",
    "realify", "sup", "weighted",
]
