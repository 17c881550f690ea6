"""gjmsdet: log-determinants of scalar GJMS operators on odd spheres.

The order-2k GJMS operator on the round unit d-sphere (d odd, integer
1 <= k <= (d-1)/2) has a zeta-regularized determinant that this package
evaluates by four mutually checking routes: a single semi-infinite
integral, a sum of per-factor integrals, a Chebyshev regrouping of the
same integrand, and an integer-power product rule over conformal-Laplacian
determinants at descending dimensions.  Closed forms for the fourth-order
operator on the 5- and 7-spheres provide quadrature-independent anchors.
"""

from .chebyshev import (
    OddChebyshev,
    ProductRule,
    eval_u,
    u_coefficients,
    v_coefficients,
)
from .errors import (
    AccuracyError,
    DivergentIntegralError,
    EvaluationError,
    InternalConsistencyError,
    ParameterError,
    UnsupportedArgumentError,
)
from .quadrature import (
    IntegralResult,
    QuadratureSpec,
    integrate_semi_infinite,
    truncation_point,
)
from .scans import (
    ScanRow,
    read_csv,
    scan_k,
    scan_limiting,
    scan_paneitz,
    write_csv,
    write_svg,
)
from .spectral import (
    METHODS,
    ClosedForm,
    FactorIndex,
    LogDetResult,
    SpherePoint,
    closed_form_p4,
    integrand_direct,
    logdet,
    logdet_chebyshev,
    logdet_direct,
    logdet_factor,
    logdet_product_rule,
    logdet_sum,
    zeta_odd,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "ClosedForm",
    "DivergentIntegralError",
    "EvaluationError",
    "FactorIndex",
    "IntegralResult",
    "InternalConsistencyError",
    "LogDetResult",
    "METHODS",
    "OddChebyshev",
    "ParameterError",
    "ProductRule",
    "QuadratureSpec",
    "ScanRow",
    "SpherePoint",
    "UnsupportedArgumentError",
    "closed_form_p4",
    "eval_u",
    "integrand_direct",
    "integrate_semi_infinite",
    "logdet",
    "logdet_chebyshev",
    "logdet_direct",
    "logdet_factor",
    "logdet_product_rule",
    "logdet_sum",
    "read_csv",
    "scan_k",
    "scan_limiting",
    "scan_paneitz",
    "truncation_point",
    "u_coefficients",
    "v_coefficients",
    "write_csv",
    "write_svg",
    "zeta_odd",
]
