"""Quadrature and root-finding contracts."""

import math

import pytest

from solstab import (
    NoSignChangeError,
    NonConvergenceError,
    NonFiniteError,
    QuadratureConfig,
    RootConfig,
    cosine_profile,
    find_root,
    instability_table,
    integrate,
    make_curve,
    reduced_I,
    reduced_I_limit_eq1,
    scan_sign_change,
    symmetric_piece,
)


def test_sin_integral():
    result = integrate(math.sin, 0.0, math.pi)
    assert result.value == pytest.approx(2.0, abs=1e-10)
    assert result.error_estimate <= 1e-10 or result.error_estimate <= 1e-10 * abs(result.value)
    assert result.evaluations >= 15


def test_square_integral():
    result = integrate(lambda s: s * s, 0.0, 1.0)
    assert result.value == pytest.approx(1.0 / 3.0, rel=1e-14)


def test_reduced_integrand_value():
    # The reduced instability integrand for lam=1/4, s0=3, L=4 integrates
    # to the golden value 7.1166 (4-decimal rounding).
    curve = make_curve(0.25)
    piece = symmetric_piece(curve, 3.0, 4.0)
    profile = cosine_profile(curve, 3.0)
    assert reduced_I(piece, profile) == pytest.approx(7.1166, abs=1e-3)


def test_polynomial_exactness():
    # The 15-point Kronrod rule is exact through degree 22.
    for degree in range(23):
        result = integrate(lambda x, d=degree: x ** d, 0.0, 1.0)
        assert result.value == pytest.approx(1.0 / (degree + 1), rel=1e-13)


def test_additivity():
    f = lambda x: math.exp(x) * math.cos(3.0 * x)
    full = integrate(f, 0.0, 2.0)
    left = integrate(f, 0.0, 0.7)
    right = integrate(f, 0.7, 2.0)
    budget = full.error_estimate + left.error_estimate + right.error_estimate + 1e-13
    assert abs(full.value - (left.value + right.value)) <= budget


def test_empty_interval():
    result = integrate(math.sin, 1.0, 1.0)
    assert result.value == 0.0
    assert result.evaluations == 0


def test_reversed_bounds_rejected():
    with pytest.raises(ValueError):
        integrate(math.sin, 1.0, 0.0)


def test_error_estimate_within_tolerance():
    cfg = QuadratureConfig(abs_tol=1e-8, rel_tol=1e-8)
    result = integrate(lambda x: math.exp(-x * x), -3.0, 3.0, cfg)
    assert result.error_estimate <= max(cfg.abs_tol, cfg.rel_tol * abs(result.value))


def test_non_finite_integrand():
    def f(x):
        return math.nan if 0.4 < x < 0.6 else 1.0

    with pytest.raises(NonFiniteError):
        integrate(f, 0.0, 1.0)


def test_non_convergence():
    cfg = QuadratureConfig(abs_tol=1e-15, rel_tol=1e-15, max_subdivisions=1)
    with pytest.raises(NonConvergenceError):
        integrate(lambda x: math.sin(40.0 * x) ** 2, 0.0, 10.0, cfg)


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(abs_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureConfig(max_subdivisions=0)
    with pytest.raises(ValueError):
        RootConfig(x_tol=-1.0)


def test_root_sqrt2():
    root = find_root(lambda x: x * x - 2.0, 1.0, 2.0)
    assert root == pytest.approx(1.4142136, abs=1e-6)


def test_root_eq1_threshold():
    # The large-L limit of the lambda = 1 family vanishes near 1.0213.
    root = find_root(reduced_I_limit_eq1, 1.0, 1.05)
    assert root == pytest.approx(1.0213, abs=5e-4)


def test_root_odd_function():
    root = find_root(lambda x: x, -1.0, 1.0)
    assert abs(root) <= 1e-10


def test_root_no_sign_change():
    with pytest.raises(NoSignChangeError):
        find_root(lambda x: x * x + 1.0, -1.0, 1.0)


def test_root_non_convergence():
    cfg = RootConfig(x_tol=1e-15, max_iterations=3)
    with pytest.raises(NonConvergenceError):
        find_root(lambda x: math.tanh(x) - 0.123, -5.0, 5.0, cfg)


def test_root_residual_monotone():
    residuals = []
    for tol in (1e-3, 1e-6, 1e-9, 1e-12):
        root = find_root(lambda x: x * x - 2.0, 1.0, 2.0, RootConfig(x_tol=tol))
        residuals.append(abs(root * root - 2.0))
    assert all(a >= b for a, b in zip(residuals, residuals[1:]))


def _row_function(lam, s0):
    table = None

    def f(length):
        nonlocal table
        curve = make_curve(lam)
        piece = symmetric_piece(curve, s0, length)
        return reduced_I(piece, cosine_profile(curve, s0))

    return f


def test_scan_table_quarter():
    # lam=1/4, s0=3: the golden table turns negative between L=20 and 25.
    f = _row_function(0.25, 3.0)
    assert scan_sign_change(f, [15.0, 20.0, 25.0, 30.0, 35.0, 40.0]) == (20.0, 25.0)


def test_scan_table_half():
    # lam=1/2, s0=4: first negative at L=12.
    f = _row_function(0.5, 4.0)
    assert scan_sign_change(f, [10.0, 12.0, 14.0, 16.0, 18.0, 20.0]) == (10.0, 12.0)


def test_scan_no_change():
    assert scan_sign_change(lambda x: 1.0, [0.0, 1.0, 2.0]) is None


def test_scan_grid_validation():
    with pytest.raises(ValueError):
        scan_sign_change(lambda x: x, [1.0])
    with pytest.raises(ValueError):
        scan_sign_change(lambda x: x, [1.0, 1.0, 2.0])
    with pytest.raises(ValueError):
        scan_sign_change(lambda x: x, [2.0, 1.0])


def test_scan_zero_endpoint():
    assert scan_sign_change(lambda x: x, [0.0, 1.0, 2.0]) == (0.0, 1.0)


def test_determinism():
    f = lambda x: math.exp(math.sin(3.0 * x))
    first = integrate(f, 0.0, 5.0)
    second = integrate(f, 0.0, 5.0)
    assert first == second
