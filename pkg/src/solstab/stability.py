"""Weighted second-variation analysis on compact cylindrical pieces.

For a separated test function ``u(s,t) = f(s) g(t)`` on a piece
``[a,b] x [0,L]`` of a cylindrical translating lambda-soliton, the
second-variation quadratic form reduces to one-dimensional integrals in
the profile parameter:

    Q(u) = (L/2) * (G - C + c_g * pi^2 / L^2 * M),

    G = int f'^2 e^{x3} ds      (gradient term)
    C = int kappa^2 f^2 e^{x3} ds   (curvature term)
    M = int f^2 e^{x3} ds       (mass term)

where ``c_g = 4`` for the volume-preserving axial profile
``g = sin(2 pi t/L)`` (zero mean over [0, L]) and ``c_g = 1`` for the
unconstrained profile ``g = sin(pi t/L)``.  A negative Q for an
admissible u certifies instability; the critical length ``L0`` is the
axial length at which Q first turns negative for the built-in per-regime
profile family.  Where a closed form for Q exists (lambda >= 1 and the
circular cylinder) quadrature remains the authoritative route and the
closed form is cross-checked against it.

Circular cylinders of radius r are handled separately: there the density
direction is parallel to the rulings, the weight is ``e^t``, and the
axial profiles acquire an ``e^{-t}`` damping so the zero-weighted-mean
constraint stays satisfiable.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .curves import (
    ProfileCurve,
    SolitonCase,
    curvature,
    graph_bound,
    half_period,
    log_weight,
    make_curve,
    tangent,
    weight,
)
from .errors import (
    BelowThresholdError,
    EndpointViolationError,
    GraphRegimeError,
    MismatchBeyondToleranceError,
    NotFoundInRangeError,
    NotGraphRegimeError,
    OutOfRangeError,
    RadiusTooLargeError,
    WrongCaseError,
)
from .numerics import (
    DEFAULT_QUADRATURE,
    QuadratureConfig,
    RootConfig,
    find_root,
    integrate,
    scan_sign_change,
)

__all__ = [
    "StabilityMode",
    "Method",
    "PieceSpec",
    "CylinderSpec",
    "TestProfile",
    "QFormBreakdown",
    "CriticalLength",
    "InstabilityWitness",
    "InstabilityTable",
    "AltVariant",
    "symmetric_piece",
    "fundamental_piece",
    "fundamental_profile",
    "quadratic_profile",
    "cosine_profile",
    "custom_profile",
    "sine_series_profile",
    "qform_profile",
    "reduced_I",
    "zero_weighted_mean_residual",
    "q_closed_gt1",
    "critical_length_gt1",
    "critical_length_gt1_uniform",
    "reduced_I_limit_eq1",
    "q_closed_eq1",
    "critical_length_eq1",
    "critical_length_lt1",
    "instability_table",
    "cylinder_cmc_q",
    "cylinder_cmc_critical_length",
    "cylinder_soliton_q",
    "cylinder_soliton_q_closed",
    "cylinder_sign_factor",
    "cylinder_soliton_critical_length",
    "cylinder_alt_q",
    "cylinder_alt_q_quadrature",
    "instability_certificate",
    "graph_stability_probe",
]

_PI = math.pi
_MIN_LENGTH = 1e-6  # reject shorter pieces: 1/L^2 would dwarf everything
_ENDPOINT_TOL = 1e-9


class StabilityMode(enum.Enum):
    """Variation class the quadratic form is tested against."""

    VOLUME_PRESERVING = "volume-preserving"
    STRONG = "strong"

    @property
    def axial_harmonic(self) -> int:
        """Harmonic index k of the axial profile ``sin(k pi t/L)``."""
        return 2 if self is StabilityMode.VOLUME_PRESERVING else 1

    @property
    def axial_coefficient(self) -> float:
        """Coefficient ``c_g = k^2`` multiplying ``pi^2/L^2``."""
        k = self.axial_harmonic
        return float(k * k)


class Method(enum.Enum):
    """How a critical length was obtained."""

    CLOSED_FORM = "closed-form"
    ROOT_FOUND = "root-found"


@dataclass(frozen=True)
class PieceSpec:
    """Compact piece ``[a, b] x [0, L]`` of a profile-curve cylinder."""

    curve: ProfileCurve
    s_interval: tuple[float, float]
    length: float

    def __post_init__(self):
        a, b = self.s_interval
        if not a < b:
            raise ValueError(f"need a < b, got interval {self.s_interval!r}")
        if not self.length >= _MIN_LENGTH:
            raise ValueError(f"length must be >= {_MIN_LENGTH}, got {self.length!r}")


@dataclass(frozen=True)
class CylinderSpec:
    """Compact piece of a circular cylinder: radius r, axial length L."""

    radius: float
    length: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius!r}")
        if not self.length >= _MIN_LENGTH:
            raise ValueError(f"length must be >= {_MIN_LENGTH}, got {self.length!r}")


@dataclass(frozen=True)
class TestProfile:
    """Profile factor ``f(s)`` of a separated test function, with derivative."""

    kind: str
    f: Callable[[float], float]
    df: Callable[[float], float]


@dataclass(frozen=True)
class QFormBreakdown:
    """Component integrals and assembled value of the quadratic form.

    ``total = (L/2) * (grad_term - curvature_term
    + c_g * pi^2/L^2 * mass_term)``.
    """

    grad_term: float
    curvature_term: float
    mass_term: float
    total: float


@dataclass(frozen=True)
class CriticalLength:
    """Critical axial length with its provenance and stability mode."""

    value: float
    method: Method
    mode: StabilityMode


@dataclass(frozen=True)
class InstabilityWitness:
    """Admissible separated test function with a negative quadratic form."""

    profile_kind: str
    axial_kind: str
    q_value: float
    zero_mean_residual: float


@dataclass(frozen=True)
class InstabilityTable:
    """Reduced-integral values I(u) on an (s0, L) grid for one lambda < 1.

    ``first_negative[i]`` is the column index of the first negative cell
    in row i, or None when the row stays positive.
    """

    lam: float
    s0_values: tuple[float, ...]
    length_values: tuple[float, ...]
    cells: tuple[tuple[float, ...], ...]
    first_negative: tuple[Optional[int], ...]


class AltVariant(enum.Enum):
    """Alternative cylinder test functions ``f = sin(s/r)`` with axial factor."""

    HALF_SIN_PLAIN = "half-sin-plain"      # g = sin(pi t/L)
    HALF_SIN_DAMPED = "half-sin-damped"    # g = sin(pi t/L) e^{-t}


# ---------------------------------------------------------------------------
# pieces and profile families
# ---------------------------------------------------------------------------

def symmetric_piece(curve: ProfileCurve, s0: float, length: float) -> PieceSpec:
    """Piece over the symmetric interval ``[-s0, s0]``."""
    if not s0 > 0:
        raise ValueError(f"s0 must be positive, got {s0!r}")
    return PieceSpec(curve, (-s0, s0), length)


def fundamental_piece(curve: ProfileCurve, sigma: float, length: float) -> PieceSpec:
    """One-period piece ``[-s0 + sigma, s0 + sigma]`` of a lambda > 1 curve."""
    s0 = half_period(curve)  # raises WrongCaseError for lambda <= 1
    if not 0.0 <= sigma <= s0:
        raise OutOfRangeError(f"sigma must lie in [0, {s0!r}], got {sigma!r}")
    return PieceSpec(curve, (-s0 + sigma, s0 + sigma), length)


def _damped(curve: ProfileCurve, base, dbase, kind: str) -> TestProfile:
    """Profile ``f = base * e^{-x3/2}`` with analytic derivative."""

    def f(s: float) -> float:
        return base(s) * math.exp(-0.5 * log_weight(curve, s))

    def df(s: float) -> float:
        dx3 = tangent(curve, s)[1]
        return (dbase(s) - 0.5 * base(s) * dx3) * math.exp(-0.5 * log_weight(curve, s))

    return TestProfile(kind, f, df)


def fundamental_profile(curve: ProfileCurve, sigma: float) -> TestProfile:
    """Half-wave sine profile on the fundamental piece of a lambda > 1 curve.

    ``f(s) = sin(pi s/(2 s0) + (pi/2)(1 - sigma/s0)) e^{-x3/2}`` vanishes
    at both ends of ``[-s0 + sigma, s0 + sigma]``.
    """
    s0 = half_period(curve)
    if not 0.0 <= sigma <= s0:
        raise OutOfRangeError(f"sigma must lie in [0, {s0!r}], got {sigma!r}")
    rate = 0.5 * _PI / s0
    phase = 0.5 * _PI * (1.0 - sigma / s0)
    return _damped(
        curve,
        lambda s: math.sin(rate * s + phase),
        lambda s: rate * math.cos(rate * s + phase),
        f"fundamental(sigma={sigma!r})",
    )


def quadratic_profile(curve: ProfileCurve, s0: float) -> TestProfile:
    """``f(s) = (s^2 - s0^2) e^{-x3/2}`` for the lambda = 1 symmetric piece."""
    if curve.case is not SolitonCase.EQUAL_ONE:
        raise WrongCaseError("quadratic profile is the lambda = 1 family")
    if not s0 > 0:
        raise ValueError(f"s0 must be positive, got {s0!r}")
    return _damped(
        curve,
        lambda s: s * s - s0 * s0,
        lambda s: 2.0 * s,
        f"quadratic(s0={s0!r})",
    )


def cosine_profile(curve: ProfileCurve, s0: float) -> TestProfile:
    """``f(s) = cos(pi s/(2 s0)) e^{-x3/2}`` for the lambda < 1 symmetric piece."""
    if curve.case is not SolitonCase.LESS_THAN_ONE:
        raise WrongCaseError("cosine profile is the lambda < 1 family")
    if not s0 > 0:
        raise ValueError(f"s0 must be positive, got {s0!r}")
    rate = 0.5 * _PI / s0
    return _damped(
        curve,
        lambda s: math.cos(rate * s),
        lambda s: -rate * math.sin(rate * s),
        f"cosine(s0={s0!r})",
    )


def custom_profile(
    f: Callable[[float], float],
    df: Callable[[float], float],
    kind: str = "custom",
) -> TestProfile:
    """Wrap caller-supplied ``f`` and ``f'`` handles."""
    return TestProfile(kind, f, df)


def sine_series_profile(
    interval: tuple[float, float],
    coefficients: Sequence[float],
) -> TestProfile:
    """Finite sine series on ``interval``, vanishing at both endpoints.

    ``f(s) = sum_k c_k sin(k pi (s - a)/(b - a))``, the profile family the
    random stability probe draws from.
    """
    a, b = interval
    if not a < b:
        raise ValueError(f"need a < b, got {interval!r}")
    coeffs = tuple(float(c) for c in coefficients)
    if not coeffs:
        raise ValueError("need at least one coefficient")
    span = b - a

    def f(s: float) -> float:
        u = _PI * (s - a) / span
        return sum(c * math.sin((k + 1) * u) for k, c in enumerate(coeffs))

    def df(s: float) -> float:
        u = _PI * (s - a) / span
        return sum(
            c * (k + 1) * _PI / span * math.cos((k + 1) * u)
            for k, c in enumerate(coeffs)
        )

    return TestProfile(f"sine-series({len(coeffs)})", f, df)


# ---------------------------------------------------------------------------
# quadratic form by quadrature
# ---------------------------------------------------------------------------

def _component_integrals(
    curve: ProfileCurve,
    profile: TestProfile,
    a: float,
    b: float,
    cfg: QuadratureConfig,
) -> tuple[float, float, float]:
    """The three s-integrals (G, C, M); they do not depend on L."""
    grad = integrate(lambda s: profile.df(s) ** 2 * weight(curve, s), a, b, cfg)
    curv = integrate(
        lambda s: (curvature(curve, s) * profile.f(s)) ** 2 * weight(curve, s),
        a,
        b,
        cfg,
    )
    mass = integrate(lambda s: profile.f(s) ** 2 * weight(curve, s), a, b, cfg)
    return grad.value, curv.value, mass.value


def _assemble(g: float, c: float, m: float, length: float, mode: StabilityMode) -> float:
    return 0.5 * length * (g - c + mode.axial_coefficient * _PI * _PI / (length * length) * m)


def qform_profile(
    piece: PieceSpec,
    profile: TestProfile,
    mode: StabilityMode = StabilityMode.VOLUME_PRESERVING,
    cfg: QuadratureConfig | None = None,
) -> QFormBreakdown:
    """Evaluate the quadratic form for ``u = f(s) g(t)`` on ``piece``.

    The profile must vanish at both ends of the s-interval (to 1e-9);
    otherwise :class:`EndpointViolationError` is raised.  The three
    component integrals are returned alongside the assembled value.
    """
    if cfg is None:
        cfg = DEFAULT_QUADRATURE
    a, b = piece.s_interval
    for endpoint in (a, b):
        if abs(profile.f(endpoint)) > _ENDPOINT_TOL:
            raise EndpointViolationError(
                f"profile {profile.kind} does not vanish at s={endpoint!r}: "
                f"f={profile.f(endpoint)!r}"
            )
    g, c, m = _component_integrals(piece.curve, profile, a, b, cfg)
    return QFormBreakdown(
        grad_term=g,
        curvature_term=c,
        mass_term=m,
        total=_assemble(g, c, m, piece.length, mode),
    )


def reduced_I(
    piece: PieceSpec,
    profile: TestProfile,
    cfg: QuadratureConfig | None = None,
) -> float:
    """Reduced volume-preserving integral ``I(u) = 2 Q(u)/L``.

    ``I(u) = int (f'^2 - (kappa^2 - 4 pi^2/L^2) f^2) e^{x3} ds``.
    """
    bd = qform_profile(piece, profile, StabilityMode.VOLUME_PRESERVING, cfg)
    return 2.0 * bd.total / piece.length


def zero_weighted_mean_residual(
    piece: Union[PieceSpec, CylinderSpec],
    mode: StabilityMode = StabilityMode.VOLUME_PRESERVING,
    cfg: QuadratureConfig | None = None,
) -> float:
    """Residual of the zero-weighted-mean condition for the axial factor.

    Profile pieces use ``g = sin(k pi t/L)`` and the residual is
    ``int_0^L g dt``; cylinder pieces use the damped family
    ``g = sin(k pi t/L) e^{-t}`` against the weight ``e^t``, so the
    residual is ``int_0^L g e^t dt``.  Volume-preserving profiles (k=2)
    integrate to zero; the unconstrained mode (k=1) gives ``2L/pi``,
    reported for information since that mode drops the constraint.
    """
    if cfg is None:
        cfg = DEFAULT_QUADRATURE
    length = piece.length
    k = mode.axial_harmonic
    if isinstance(piece, CylinderSpec):
        integrand = lambda t: math.sin(k * _PI * t / length) * math.exp(-t) * math.exp(t)
    else:
        integrand = lambda t: math.sin(k * _PI * t / length)
    return integrate(integrand, 0.0, length, cfg).value


# ---------------------------------------------------------------------------
# closed forms: lambda > 1
# ---------------------------------------------------------------------------

def q_closed_gt1(
    lam: float,
    sigma: float,
    length: float,
    mode: StabilityMode = StabilityMode.VOLUME_PRESERVING,
) -> float:
    """Closed-form Q for the lambda > 1 fundamental-piece sine profile.

    ``Q = pi/(8 L omega) (4 k^2 pi^2 - 3 L^2 omega (lam + cos(sigma omega)))``
    with ``k`` the mode's axial harmonic.  Defined for every real sigma;
    the value depends on sigma only through ``cos(sigma omega)``, so it is
    even and ``2 pi/omega``-periodic in sigma.
    """
    if not lam > 1.0:
        raise WrongCaseError(f"need lambda > 1, got {lam!r}")
    if not length > 0:
        raise ValueError(f"length must be positive, got {length!r}")
    if not math.isfinite(sigma):
        raise OutOfRangeError(f"sigma must be finite, got {sigma!r}")
    om = math.sqrt(lam * lam - 1.0)
    k = mode.axial_harmonic
    bracket = 4.0 * k * k * _PI * _PI - 3.0 * length * length * om * (lam + math.cos(sigma * om))
    return _PI / (8.0 * length * om) * bracket


def critical_length_gt1(
    lam: float,
    sigma: float,
    mode: StabilityMode = StabilityMode.VOLUME_PRESERVING,
) -> CriticalLength:
    """Critical length of the lambda > 1 fundamental piece at offset sigma.

    Volume-preserving value
    ``L0 = 4 pi / sqrt(3 (lam + cos(sigma omega)) omega)``; the
    unconstrained mode halves it exactly.
    """
    if not lam > 1.0:
        raise WrongCaseError(f"need lambda > 1, got {lam!r}")
    om = math.sqrt(lam * lam - 1.0)
    s0 = _PI / om
    if not 0.0 <= sigma <= s0:
        raise OutOfRangeError(f"sigma must lie in [0, {s0!r}], got {sigma!r}")
    value = 4.0 * _PI / math.sqrt(3.0 * (lam + math.cos(sigma * om)) * om)
    if mode is StabilityMode.STRONG:
        value *= 0.5
    return CriticalLength(value, Method.CLOSED_FORM, mode)


def critical_length_gt1_uniform(
    lam: float,
    mode: StabilityMode = StabilityMode.VOLUME_PRESERVING,
) -> CriticalLength:
    """Largest lambda > 1 critical length over all offsets (at sigma = s0).

    ``L0* = 4 pi / sqrt(3 (lam - 1) omega)``; every fundamental piece is
    unstable beyond it.
    """
    if not lam > 1.0:
        raise WrongCaseError(f"need lambda > 1, got {lam!r}")
    om = math.sqrt(lam * lam - 1.0)
    value = 4.0 * _PI / math.sqrt(3.0 * (lam - 1.0) * om)
    if mode is StabilityMode.STRONG:
        value *= 0.5
    return CriticalLength(value, Method.CLOSED_FORM, mode)


# ---------------------------------------------------------------------------
# closed forms: lambda = 1
# ---------------------------------------------------------------------------

def reduced_I_limit_eq1(s0: float) -> float:
    """Large-L limit of the reduced integral for the lambda = 1 family.

    ``-s0^3/3 - 9 s0 + (9 + 6 s0^2 - 3 s0^4) atan(s0)``: positive below
    the threshold amplitude (~1.0213), negative above it, so its sign
    decides whether a critical length exists.
    """
    if not s0 > 0:
        raise ValueError(f"s0 must be positive, got {s0!r}")
    return (
        -(s0 ** 3) / 3.0
        - 9.0 * s0
        + (9.0 + 6.0 * s0 * s0 - 3.0 * s0 ** 4) * math.atan(s0)
    )


def q_closed_eq1(
    s0: float,
    length: float,
    mode: StabilityMode = StabilityMode.VOLUME_PRESERVING,
) -> float:
    """Closed-form Q for the lambda = 1 quadratic profile on ``[-s0, s0]``.

    ``Q = (L/2) (16 k^2 pi^2 s0^5 / (15 L^2) + limit(s0))`` with
    ``limit`` from :func:`reduced_I_limit_eq1`.
    """
    if not length > 0:
        raise ValueError(f"length must be positive, got {length!r}")
    k = mode.axial_harmonic
    tail = reduced_I_limit_eq1(s0)
    return 0.5 * length * (
        16.0 * k * k * _PI * _PI * s0 ** 5 / (15.0 * length * length) + tail
    )


def critical_length_eq1(
    s0: float,
    mode: StabilityMode = StabilityMode.VOLUME_PRESERVING,
) -> CriticalLength:
    """Critical length of the lambda = 1 symmetric piece of amplitude s0.

    ``L0 = 8 pi s0^{5/2} / sqrt(-15 * limit(s0))`` requires the large-L
    limit to be negative, i.e. ``s0`` above the threshold ~1.0213;
    otherwise :class:`BelowThresholdError` is raised.  The unconstrained
    mode halves the value exactly.
    """
    tail = reduced_I_limit_eq1(s0)
    if tail >= 0.0:
        raise BelowThresholdError(
            f"s0={s0!r} is at or below the threshold amplitude (~1.0213); "
            "the quadratic-profile form stays positive for every length"
        )
    value = 8.0 * _PI * s0 ** 2.5 / math.sqrt(-15.0 * tail)
    if mode is StabilityMode.STRONG:
        value *= 0.5
    return CriticalLength(value, Method.CLOSED_FORM, mode)


# ---------------------------------------------------------------------------
# numerical route: lambda < 1
# ---------------------------------------------------------------------------

def _geometric_grid(start: float, stop: float, ratio: float) -> list[float]:
    grid = [start]
    x = start
    while x * ratio < stop:
        x *= ratio
        grid.append(x)
    grid.append(stop)
    return grid


def critical_length_lt1(
    lam: float,
    s0: float,
    cfg: QuadratureConfig | None = None,
    mode: StabilityMode = StabilityMode.VOLUME_PRESERVING,
    length_max: float = 200.0,
    root_cfg: RootConfig | None = None,
) -> CriticalLength:
    """Root-found critical length for the lambda < 1 cosine family.

    Scans ``L -> I(L)`` on a geometric grid from 1 to ``length_max``
    (ratio 1.2) for a sign change, then bisects to the root tolerance
    (1e-6 by default).  The three s-integrals do not depend on L, so they
    are computed once and only the ``pi^2/L^2`` recombination is scanned;
    the scanned function is exactly the reduced integral of the family.

    Raises
    ------
    GraphRegimeError
        If ``s0 <= s1(lambda)``: the piece is a graph, hence stable.
    NotFoundInRangeError
        If I stays positive on the whole grid (possible just above the
        graph bound, where the family certifies nothing).
    """
    if cfg is None:
        cfg = DEFAULT_QUADRATURE
    if root_cfg is None:
        root_cfg = RootConfig(x_tol=1e-6, max_iterations=200)
    curve = make_curve(lam)
    if curve.case is not SolitonCase.LESS_THAN_ONE:
        raise WrongCaseError(f"need 0 < lambda < 1, got {lam!r}")
    s1 = graph_bound(curve)
    if s0 <= s1:
        raise GraphRegimeError(
            f"s0={s0!r} <= s1={s1!r}: the piece is a graph and stable"
        )
    profile = cosine_profile(curve, s0)
    g, c, m = _component_integrals(curve, profile, -s0, s0, cfg)
    cg = mode.axial_coefficient

    def reduced(length: float) -> float:
        return g - c + cg * _PI * _PI / (length * length) * m

    # reduced(1) > 0 always: kappa <= 1 + lam < 2 bounds C by 4 M < pi^2 M.
    grid = _geometric_grid(1.0, length_max, 1.2)
    bracket = scan_sign_change(reduced, grid)
    if bracket is None:
        raise NotFoundInRangeError(
            f"I(u) stays positive up to L={length_max!r} for lam={lam!r}, "
            f"s0={s0!r}; no certificate from the cosine family in range"
        )
    lo, hi = bracket
    if reduced(lo) == 0.0:
        value = lo
    elif reduced(hi) == 0.0:
        value = hi
    else:
        value = find_root(reduced, lo, hi, root_cfg)
    return CriticalLength(value, Method.ROOT_FOUND, mode)


def instability_table(
    lam: float,
    s0_values: Sequence[float],
    length_values: Sequence[float],
    cfg: QuadratureConfig | None = None,
) -> InstabilityTable:
    """Reduced-integral grid for the lambda < 1 cosine family.

    One row per s0, one column per L.  Cells are independent, so the
    evaluation order is irrelevant; the s-integrals are shared within a
    row because they do not depend on L.
    """
    if cfg is None:
        cfg = DEFAULT_QUADRATURE
    curve = make_curve(lam)
    if curve.case is not SolitonCase.LESS_THAN_ONE:
        raise WrongCaseError(f"need 0 < lambda < 1, got {lam!r}")
    lengths = tuple(float(x) for x in length_values)
    if any(length < _MIN_LENGTH for length in lengths):
        raise ValueError("all lengths must be positive")
    rows = []
    marks: list[Optional[int]] = []
    for s0 in s0_values:
        s0 = float(s0)
        profile = cosine_profile(curve, s0)
        g, c, m = _component_integrals(curve, profile, -s0, s0, cfg)
        row = tuple(
            g - c + 4.0 * _PI * _PI / (length * length) * m for length in lengths
        )
        rows.append(row)
        marks.append(next((j for j, v in enumerate(row) if v < 0.0), None))
    return InstabilityTable(
        lam=lam,
        s0_values=tuple(float(x) for x in s0_values),
        length_values=lengths,
        cells=tuple(rows),
        first_negative=tuple(marks),
    )


# ---------------------------------------------------------------------------
# circular cylinders
# ---------------------------------------------------------------------------

def cylinder_cmc_q(spec: CylinderSpec) -> float:
    """Constant-mean-curvature quadratic form for ``f = 1``,
    ``g = sin(2 pi t/L)``: ``Q = -pi r L (1/r^2 - 4 pi^2/L^2)``."""
    r, length = spec.radius, spec.length
    return -_PI * r * length * (1.0 / (r * r) - 4.0 * _PI * _PI / (length * length))


def cylinder_cmc_critical_length(
    radius: float,
    mode: StabilityMode = StabilityMode.VOLUME_PRESERVING,
) -> CriticalLength:
    """Classical cmc critical length ``2 pi r`` (``pi r`` unconstrained)."""
    if not radius > 0:
        raise ValueError(f"radius must be positive, got {radius!r}")
    value = 2.0 * _PI * radius
    if mode is StabilityMode.STRONG:
        value *= 0.5
    return CriticalLength(value, Method.CLOSED_FORM, mode)


def _cylinder_axial_integrals(
    spec: CylinderSpec,
    mode: StabilityMode,
    cfg: QuadratureConfig,
) -> tuple[float, float]:
    """``int g'^2 e^t dt`` and ``int g^2 e^t dt`` for the damped axial family."""
    length = spec.length
    b = mode.axial_harmonic * _PI / length

    def g(t: float) -> float:
        return math.sin(b * t) * math.exp(-t)

    def dg(t: float) -> float:
        return (b * math.cos(b * t) - math.sin(b * t)) * math.exp(-t)

    int_dg = integrate(lambda t: dg(t) ** 2 * math.exp(t), 0.0, length, cfg).value
    int_g = integrate(lambda t: g(t) ** 2 * math.exp(t), 0.0, length, cfg).value
    return int_dg, int_g


def cylinder_sign_factor(radius: float, length: float) -> float:
    """Sign-determining factor ``8 pi^2 r^2 + L^2 (r^2 - 2)`` of the
    volume-preserving soliton quadratic form."""
    return 8.0 * _PI * _PI * radius * radius + length * length * (radius * radius - 2.0)


def cylinder_soliton_q_closed(
    spec: CylinderSpec,
    mode: StabilityMode = StabilityMode.VOLUME_PRESERVING,
) -> float:
    """Closed-form soliton quadratic form for ``f = 1``,
    ``g = sin(k pi t/L) e^{-t}``.

    ``Q = 2 pi r (1 - e^{-L}) b^2/(1 + 4 b^2) * (1 + 2 b^2 - 2/r^2)`` with
    ``b = k pi / L``; for k = 2 this is
    ``8 pi^3 (1-e^{-L}) (8 pi^2 r^2 + L^2 (r^2-2)) / (r L^2 (L^2+16 pi^2))``.
    """
    r, length = spec.radius, spec.length
    b = mode.axial_harmonic * _PI / length
    b2 = b * b
    prefactor = 2.0 * _PI * r * (-math.expm1(-length)) * b2 / (1.0 + 4.0 * b2)
    return prefactor * (1.0 + 2.0 * b2 - 2.0 / (r * r))


def cylinder_soliton_q(
    spec: CylinderSpec,
    cfg: QuadratureConfig | None = None,
    mode: StabilityMode = StabilityMode.VOLUME_PRESERVING,
) -> float:
    """Soliton quadratic form of the cylinder piece, quadrature route.

    ``Q = 2 pi r int_0^L (g'^2 - g^2/r^2) e^t dt`` for the damped axial
    family.  The closed form is evaluated alongside and the two must agree
    in sign (:class:`MismatchBeyondToleranceError` otherwise); the
    quadrature value is returned as the authoritative one.
    """
    if cfg is None:
        cfg = DEFAULT_QUADRATURE
    int_dg, int_g = _cylinder_axial_integrals(spec, mode, cfg)
    q_quad = 2.0 * _PI * spec.radius * (int_dg - int_g / (spec.radius * spec.radius))
    q_closed = cylinder_soliton_q_closed(spec, mode)
    scale = max(abs(q_quad), abs(q_closed))
    tol = max(1e-9, 1e-7 * scale)
    if q_quad * q_closed < 0.0 and min(abs(q_quad), abs(q_closed)) > tol:
        raise MismatchBeyondToleranceError(
            f"quadrature Q={q_quad!r} and closed form Q={q_closed!r} "
            f"disagree in sign for {spec!r}"
        )
    return q_quad


def cylinder_soliton_critical_length(
    radius: float,
    mode: StabilityMode = StabilityMode.VOLUME_PRESERVING,
) -> CriticalLength:
    """Soliton critical length ``L0 = sqrt(8) pi r / sqrt(2 - r^2)``.

    Only defined for ``r < sqrt(2)``; beyond that the sign factor stays
    positive and the family certifies nothing
    (:class:`RadiusTooLargeError`).  The unconstrained mode halves L0.
    """
    if not radius > 0:
        raise ValueError(f"radius must be positive, got {radius!r}")
    if radius >= math.sqrt(2.0):
        raise RadiusTooLargeError(
            f"radius {radius!r} >= sqrt(2): no instability certificate from "
            "this family"
        )
    value = math.sqrt(8.0) * _PI * radius / math.sqrt(2.0 - radius * radius)
    if mode is StabilityMode.STRONG:
        value *= 0.5
    return CriticalLength(value, Method.CLOSED_FORM, mode)


def cylinder_alt_q(spec: CylinderSpec, variant: AltVariant) -> float:
    """Closed-form Q for the alternative family ``f = sin(s/r)``.

    ``Q = r pi^3 (e^L - 1) (L^2 + 2 pi^2) / (L^4 + 4 pi^2 L^2)`` for the
    plain axial factor ``sin(pi t/L)`` and the same with ``(1 - e^{-L})``
    for the damped one; both are strictly positive for every L, so this
    family never certifies instability.
    """
    r, length = spec.radius, spec.length
    if variant is AltVariant.HALF_SIN_PLAIN:
        num = math.expm1(length)
    else:
        num = -math.expm1(-length)
    return (
        r
        * _PI ** 3
        * num
        * (length * length + 2.0 * _PI * _PI)
        / (length ** 4 + 4.0 * _PI * _PI * length * length)
    )


def cylinder_alt_q_quadrature(
    spec: CylinderSpec,
    variant: AltVariant,
    cfg: QuadratureConfig | None = None,
) -> float:
    """Quadrature route for :func:`cylinder_alt_q` (independent check).

    Assembles ``Q = int f'^2 ds int g^2 e^t dt
    + int f^2 ds int (g'^2 - g^2/r^2) e^t dt`` with all four integrals
    done numerically.
    """
    if cfg is None:
        cfg = DEFAULT_QUADRATURE
    r, length = spec.radius, spec.length
    b = _PI / length
    if variant is AltVariant.HALF_SIN_PLAIN:
        g = lambda t: math.sin(b * t)
        dg = lambda t: b * math.cos(b * t)
    else:
        g = lambda t: math.sin(b * t) * math.exp(-t)
        dg = lambda t: (b * math.cos(b * t) - math.sin(b * t)) * math.exp(-t)
    int_fp = integrate(lambda s: (math.cos(s / r) / r) ** 2, 0.0, 2.0 * _PI * r, cfg).value
    int_f = integrate(lambda s: math.sin(s / r) ** 2, 0.0, 2.0 * _PI * r, cfg).value
    int_g = integrate(lambda t: g(t) ** 2 * math.exp(t), 0.0, length, cfg).value
    int_dg = integrate(lambda t: dg(t) ** 2 * math.exp(t), 0.0, length, cfg).value
    return int_fp * int_g + int_f * (int_dg - int_g / (r * r))


# ---------------------------------------------------------------------------
# certificates and the graph-regime probe
# ---------------------------------------------------------------------------

def _canonical_profile(piece: PieceSpec) -> TestProfile:
    """Per-regime profile family matching the piece geometry."""
    curve = piece.curve
    a, b = piece.s_interval
    if curve.case is SolitonCase.GREATER_THAN_ONE:
        s0 = half_period(curve)
        sigma = 0.5 * (a + b)
        if abs((b - a) - 2.0 * s0) > 1e-9:
            raise ValueError(
                f"lambda > 1 certificate needs a fundamental piece of width "
                f"{2.0 * s0!r}, got {piece.s_interval!r}"
            )
        return fundamental_profile(curve, sigma)
    if abs(a + b) > 1e-9:
        raise ValueError(
            f"lambda <= 1 certificate needs a symmetric interval, got "
            f"{piece.s_interval!r}"
        )
    if curve.case is SolitonCase.EQUAL_ONE:
        return quadratic_profile(curve, b)
    return cosine_profile(curve, b)


def instability_certificate(
    piece: Union[PieceSpec, CylinderSpec],
    mode: StabilityMode = StabilityMode.VOLUME_PRESERVING,
    cfg: QuadratureConfig | None = None,
) -> Optional[InstabilityWitness]:
    """Try the built-in test family on ``piece``; return a witness if Q < 0.

    A volume-preserving witness must also satisfy the zero-weighted-mean
    condition to 1e-9.  ``None`` (no certificate from this family) is a
    valid outcome, including the marginal case Q = 0.
    """
    if cfg is None:
        cfg = DEFAULT_QUADRATURE
    k = mode.axial_harmonic
    if isinstance(piece, CylinderSpec):
        q_value = cylinder_soliton_q(piece, cfg, mode)
        profile_kind = "constant"
        axial_kind = f"sin({k}*pi*t/L)*exp(-t)"
    else:
        profile = _canonical_profile(piece)
        q_value = qform_profile(piece, profile, mode, cfg).total
        profile_kind = profile.kind
        axial_kind = f"sin({k}*pi*t/L)"
    residual = zero_weighted_mean_residual(piece, mode, cfg)
    if q_value >= 0.0:
        return None
    if mode is StabilityMode.VOLUME_PRESERVING and abs(residual) >= 1e-9:
        return None
    return InstabilityWitness(profile_kind, axial_kind, q_value, residual)


DEFAULT_PROBE_LENGTHS = (0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0)


def graph_stability_probe(
    lam: float,
    s0: float,
    n_random: int = 200,
    seed: int = 0,
    cfg: QuadratureConfig | None = None,
    lengths: Sequence[float] = DEFAULT_PROBE_LENGTHS,
) -> float:
    """Minimum Q over random admissible profiles on a graphical piece.

    Draws ``n_random`` unit-norm 5-term sine-series profiles on
    ``[-s0, s0]`` from a seeded PCG64 generator and evaluates the
    unconstrained-mode quadratic form over the length grid (the
    unconstrained mode lower-bounds the volume-preserving one, so it is
    the binding check).  On a graph the result should be nonnegative up
    to quadrature noise.

    Raises :class:`NotGraphRegimeError` unless ``lambda = 1`` with
    ``0 < s0 < 1`` or ``0 < lambda < 1`` with ``0 < s0 < s1(lambda)``.
    """
    if cfg is None:
        cfg = DEFAULT_QUADRATURE
    if n_random < 1:
        raise ValueError(f"n_random must be at least 1, got {n_random!r}")
    curve = make_curve(lam)
    if curve.case is SolitonCase.EQUAL_ONE:
        bound = 1.0
    elif curve.case is SolitonCase.LESS_THAN_ONE:
        bound = graph_bound(curve)
    else:
        raise NotGraphRegimeError(
            f"lambda={lam!r}: only lambda <= 1 pieces have a graphical regime"
        )
    if not 0.0 < s0 < bound:
        raise NotGraphRegimeError(
            f"s0={s0!r} outside the graphical range (0, {bound!r}) "
            f"for lambda={lam!r}"
        )
    rng = np.random.default_rng(seed)
    minimum = math.inf
    for _ in range(n_random):
        coeffs = rng.standard_normal(5)
        coeffs /= np.linalg.norm(coeffs)
        profile = sine_series_profile((-s0, s0), coeffs)
        g, c, m = _component_integrals(curve, profile, -s0, s0, cfg)
        for length in lengths:
            q = _assemble(g, c, m, length, StabilityMode.STRONG)
            if q < minimum:
                minimum = q
    return minimum
