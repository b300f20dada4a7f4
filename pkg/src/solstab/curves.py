"""Closed-form base curves of cylindrical translating lambda-solitons.

A cylindrical translating lambda-soliton sweeps a planar arc-length curve
``s -> (x1(s), x3(s))`` along the x2-axis; the curve obeys the profile
equation ``kappa(s) = x1'(s) + lambda`` and carries the height weight
``e^{x3(s)}`` used by all weighted-area integrals.  For every supported
``lambda`` the curve is explicit, with three qualitatively different
regimes:

* ``lambda > 1``: periodic profile with parameter period
  ``T = 2*pi/sqrt(lambda^2 - 1)``, drifting along the x1-axis.
* ``lambda = 1``: a single symmetric arc, ``(2*atan(s) - s, log(1+s^2))``.
* ``0 < lambda < 1``: symmetric non-graph branch built from hyperbolic
  functions; it is a graph only for ``|s| < s1`` (see
  :func:`graph_bound`).

``lambda = 0`` (the grim reaper, a global graph) and values within 1e-9
of 1 (degenerate frequency) are rejected.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import UnsupportedLambdaError, WrongCaseError

__all__ = [
    "SolitonCase",
    "ProfileCurve",
    "CurveSample",
    "make_curve",
    "position",
    "tangent",
    "curvature",
    "weight",
    "log_weight",
    "period",
    "half_period",
    "graph_bound",
    "soliton_residual",
    "sample",
]

_TWO_PI = 2.0 * math.pi
_LAMBDA_GAP = 1e-9  # reject lambda this close to (but not exactly) 1


class SolitonCase(enum.Enum):
    """Lambda regime of a profile curve."""

    GREATER_THAN_ONE = "greater-than-one"
    EQUAL_ONE = "equal-one"
    LESS_THAN_ONE = "less-than-one"


@dataclass(frozen=True)
class ProfileCurve:
    """Immutable description of one profile curve.

    ``omega = sqrt(|lambda^2 - 1|)`` is the frequency appearing in the
    trigonometric (lambda > 1) and hyperbolic (lambda < 1) closed forms;
    it is 0 for lambda = 1.
    """

    lam: float
    case: SolitonCase
    omega: float


@dataclass(frozen=True)
class CurveSample:
    """All pointwise curve data at one arc-length parameter."""

    s: float
    x1: float
    x3: float
    dx1: float
    dx3: float
    kappa: float
    weight: float


def make_curve(lam: float) -> ProfileCurve:
    """Build the profile curve for soliton constant ``lam``.

    Raises :class:`UnsupportedLambdaError` for ``lam <= 0`` (the grim
    reaper and reversed orientations are excluded) and for values within
    1e-9 of 1 that are not exactly 1, where the closed forms degenerate.
    """
    lam = float(lam)
    if not math.isfinite(lam):
        raise UnsupportedLambdaError(f"lambda must be finite, got {lam!r}")
    if lam <= 0.0:
        raise UnsupportedLambdaError(
            f"lambda={lam!r} unsupported: need lambda > 0 (lambda=0 is the "
            "grim reaper graph, which is strongly stable)"
        )
    if lam == 1.0:
        return ProfileCurve(1.0, SolitonCase.EQUAL_ONE, 0.0)
    if abs(lam - 1.0) <= _LAMBDA_GAP:
        raise UnsupportedLambdaError(
            f"lambda={lam!r} is within {_LAMBDA_GAP} of 1; the period and "
            "graph bound blow up there"
        )
    if lam > 1.0:
        return ProfileCurve(lam, SolitonCase.GREATER_THAN_ONE, math.sqrt(lam * lam - 1.0))
    return ProfileCurve(lam, SolitonCase.LESS_THAN_ONE, math.sqrt(1.0 - lam * lam))


def _reduce_angle(theta: float) -> tuple[float, int]:
    """Split ``theta`` as ``theta_r + 2*pi*m`` with ``theta_r`` in [-pi, pi]."""
    m = round(theta / _TWO_PI)
    return theta - _TWO_PI * m, m


def _sech(x: float) -> float:
    # 1/cosh without overflow for large |x|
    e = math.exp(-abs(x))
    return 2.0 * e / (1.0 + e * e)


def position(curve: ProfileCurve, s: float) -> tuple[float, float]:
    """Closed-form curve point ``(x1(s), x3(s))``.

    For ``lambda > 1`` the arctangent term of ``x1`` is unwrapped by full
    turns of the reduced angle so that ``x1`` is continuously
    differentiable on the whole real line with ``x1(0) = 0``.
    """
    lam = curve.lam
    if curve.case is SolitonCase.EQUAL_ONE:
        return 2.0 * math.atan(s) - s, math.log1p(s * s)
    if curve.case is SolitonCase.GREATER_THAN_ONE:
        theta_r, m = _reduce_angle(curve.omega * s)
        c = math.sqrt((lam + 1.0) / (lam - 1.0))
        x1 = -lam * s + 2.0 * math.atan(c * math.tan(0.5 * theta_r)) + _TWO_PI * m
        return x1, math.log(lam - math.cos(theta_r))
    c = math.sqrt((1.0 + lam) / (1.0 - lam))
    x = curve.omega * s
    x1 = -lam * s + 2.0 * math.atan(c * math.tanh(0.5 * x))
    return x1, _log_weight_lt1(lam, x)


def _log_weight_lt1(lam: float, x: float) -> float:
    # log(cosh(x) - lam), written to stay finite for large |x|
    ax = abs(x)
    if ax > 20.0:
        return ax - math.log(2.0) + math.log1p(math.exp(-2.0 * ax) - 2.0 * lam * math.exp(-ax))
    return math.log(math.cosh(x) - lam)


def tangent(curve: ProfileCurve, s: float) -> tuple[float, float]:
    """Unit tangent ``(x1'(s), x3'(s))``; note ``x3'`` is also d/ds of the
    log-weight, since the weight is ``e^{x3}``."""
    lam = curve.lam
    if curve.case is SolitonCase.EQUAL_ONE:
        den = 1.0 + s * s
        return (1.0 - s * s) / den, 2.0 * s / den
    if curve.case is SolitonCase.GREATER_THAN_ONE:
        theta_r, _ = _reduce_angle(curve.omega * s)
        den = lam - math.cos(theta_r)
        return (lam * math.cos(theta_r) - 1.0) / den, curve.omega * math.sin(theta_r) / den
    # lambda < 1: divide numerator and denominator by cosh for stability
    x = curve.omega * s
    sech = _sech(x)
    den = 1.0 - lam * sech
    return (sech - lam) / den, curve.omega * math.tanh(x) / den


def curvature(curve: ProfileCurve, s: float) -> float:
    """Profile curvature ``kappa(s) = x1'(s) + lambda`` in closed form.

    Always positive: ``(lam^2-1)/(lam - cos(omega s))`` for lambda > 1,
    ``2/(1+s^2)`` for lambda = 1 and ``(1-lam^2)/(cosh(omega s) - lam)``
    for lambda < 1.
    """
    lam = curve.lam
    if curve.case is SolitonCase.EQUAL_ONE:
        return 2.0 / (1.0 + s * s)
    if curve.case is SolitonCase.GREATER_THAN_ONE:
        theta_r, _ = _reduce_angle(curve.omega * s)
        return (lam * lam - 1.0) / (lam - math.cos(theta_r))
    sech = _sech(curve.omega * s)
    return (1.0 - lam * lam) * sech / (1.0 - lam * sech)


def weight(curve: ProfileCurve, s: float) -> float:
    """Height weight ``e^{x3(s)}`` in closed form (always positive)."""
    lam = curve.lam
    if curve.case is SolitonCase.EQUAL_ONE:
        return 1.0 + s * s
    if curve.case is SolitonCase.GREATER_THAN_ONE:
        theta_r, _ = _reduce_angle(curve.omega * s)
        return lam - math.cos(theta_r)
    return math.cosh(curve.omega * s) - lam


def log_weight(curve: ProfileCurve, s: float) -> float:
    """``x3(s) = log(weight)``, stable for large ``|s|`` when lambda < 1."""
    return position(curve, s)[1]


def period(curve: ProfileCurve) -> float:
    """Parameter period ``T = 2*pi/omega`` of the lambda > 1 profile."""
    if curve.case is not SolitonCase.GREATER_THAN_ONE:
        raise WrongCaseError(
            f"period is defined only for lambda > 1, got lambda={curve.lam!r}"
        )
    return _TWO_PI / curve.omega


def half_period(curve: ProfileCurve) -> float:
    """Half period ``s0 = pi/omega``, the natural fundamental-piece radius."""
    return 0.5 * period(curve)


def graph_bound(curve: ProfileCurve) -> float:
    """Half-width ``s1`` of the interval on which the lambda < 1 curve is a
    graph over the x1-axis: ``s1 = acosh(1/lambda)/omega``."""
    if curve.case is not SolitonCase.LESS_THAN_ONE:
        raise WrongCaseError(
            f"graph_bound is defined only for 0 < lambda < 1, got {curve.lam!r}"
        )
    return math.acosh(1.0 / curve.lam) / curve.omega


def soliton_residual(curve: ProfileCurve, s: float, step: float = 1e-5) -> float:
    """Self-consistency probe ``kappa(s) - (x1'(s) + lambda)``.

    The curvature comes from the closed form while ``x1'`` is a central
    finite difference of :func:`position`, so the two sides are
    independent; the residual should vanish to the finite-difference
    accuracy (about ``step**2``).
    """
    fd_dx1 = (position(curve, s + step)[0] - position(curve, s - step)[0]) / (2.0 * step)
    return curvature(curve, s) - (fd_dx1 + curve.lam)


def sample(curve: ProfileCurve, s: float) -> CurveSample:
    """All pointwise data at ``s`` (position, tangent, curvature, weight)."""
    x1, x3 = position(curve, s)
    dx1, dx3 = tangent(curve, s)
    return CurveSample(
        s=s,
        x1=x1,
        x3=x3,
        dx1=dx1,
        dx3=dx3,
        kappa=curvature(curve, s),
        weight=weight(curve, s),
    )
