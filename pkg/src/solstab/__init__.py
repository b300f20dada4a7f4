"""Profile curves and Plateau-Rayleigh instability analysis of cylindrical
translating lambda-solitons.

The library exposes three layers:

* :mod:`solstab.numerics` -- adaptive Gauss-Kronrod quadrature and
  bracketed root finding;
* :mod:`solstab.curves` -- the closed-form profile curves with curvature
  and height weight for the three lambda regimes;
* :mod:`solstab.stability` -- the weighted second-variation quadratic
  form for separated test functions, closed-form and root-found critical
  lengths, instability tables and the circular-cylinder comparison.

:mod:`solstab.export` writes CSV/OBJ/table files, :mod:`solstab.verify`
re-runs the numerical contracts, and ``solstab`` on the command line
fronts all of it.
"""

from .curves import (
    CurveSample,
    ProfileCurve,
    SolitonCase,
    curvature,
    graph_bound,
    half_period,
    log_weight,
    make_curve,
    period,
    position,
    sample,
    soliton_residual,
    tangent,
    weight,
)
from .errors import (
    BelowThresholdError,
    EndpointViolationError,
    GraphRegimeError,
    MismatchBeyondToleranceError,
    NoSignChangeError,
    NonConvergenceError,
    NonFiniteError,
    NotFoundInRangeError,
    NotGraphRegimeError,
    OutOfRangeError,
    RadiusTooLargeError,
    SolstabError,
    UnsupportedLambdaError,
    WrongCaseError,
)
from .numerics import (
    DEFAULT_QUADRATURE,
    DEFAULT_ROOT,
    QuadratureConfig,
    QuadratureResult,
    RootConfig,
    find_root,
    integrate,
    scan_sign_change,
)
from .stability import (
    AltVariant,
    CriticalLength,
    CylinderSpec,
    InstabilityTable,
    InstabilityWitness,
    Method,
    PieceSpec,
    QFormBreakdown,
    StabilityMode,
    TestProfile,
    cosine_profile,
    critical_length_eq1,
    critical_length_gt1,
    critical_length_gt1_uniform,
    critical_length_lt1,
    custom_profile,
    cylinder_alt_q,
    cylinder_alt_q_quadrature,
    cylinder_cmc_critical_length,
    cylinder_cmc_q,
    cylinder_sign_factor,
    cylinder_soliton_critical_length,
    cylinder_soliton_q,
    cylinder_soliton_q_closed,
    fundamental_piece,
    fundamental_profile,
    graph_stability_probe,
    instability_certificate,
    instability_table,
    q_closed_eq1,
    q_closed_gt1,
    qform_profile,
    quadratic_profile,
    reduced_I,
    reduced_I_limit_eq1,
    sine_series_profile,
    symmetric_piece,
    zero_weighted_mean_residual,
)

__version__ = "0.1.0"
