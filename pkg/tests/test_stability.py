"""Quadratic form, closed forms and critical lengths on profile pieces."""

import math

import pytest

from solstab import (
    BelowThresholdError,
    EndpointViolationError,
    GraphRegimeError,
    Method,
    NotFoundInRangeError,
    NotGraphRegimeError,
    OutOfRangeError,
    StabilityMode,
    WrongCaseError,
    cosine_profile,
    critical_length_eq1,
    critical_length_gt1,
    critical_length_gt1_uniform,
    critical_length_lt1,
    custom_profile,
    find_root,
    fundamental_piece,
    fundamental_profile,
    graph_stability_probe,
    instability_certificate,
    instability_table,
    make_curve,
    q_closed_eq1,
    q_closed_gt1,
    qform_profile,
    quadratic_profile,
    reduced_I,
    reduced_I_limit_eq1,
    symmetric_piece,
    zero_weighted_mean_residual,
)

PI = math.pi
VP = StabilityMode.VOLUME_PRESERVING
STRONG = StabilityMode.STRONG


# ---------------------------------------------------------------------------
# quadratic form on profile pieces
# ---------------------------------------------------------------------------

def test_breakdown_assembly():
    curve = make_curve(0.5)
    piece = symmetric_piece(curve, 2.0, 10.0)
    profile = cosine_profile(curve, 2.0)
    for mode in (VP, STRONG):
        bd = qform_profile(piece, profile, mode)
        cg = 4.0 if mode is VP else 1.0
        assembled = 0.5 * 10.0 * (
            bd.grad_term - bd.curvature_term + cg * PI * PI / 100.0 * bd.mass_term
        )
        assert bd.total == pytest.approx(assembled, rel=1e-15)


def test_gt1_component_closed_forms():
    # The fundamental-profile component integrals have elementary values:
    # G = pi (lam + cos(sigma omega))/4, C = 4 G, M = pi/omega.
    for lam, sigma_frac in ((1.5, 0.0), (3.0, 0.5), (2.0, 1.0)):
        curve = make_curve(lam)
        s0 = PI / curve.omega
        sigma = sigma_frac * s0
        bd = qform_profile(
            fundamental_piece(curve, sigma, 1.0), fundamental_profile(curve, sigma)
        )
        expected = PI * (lam + math.cos(sigma * curve.omega)) / 4.0
        assert bd.grad_term == pytest.approx(expected, rel=1e-10)
        assert bd.curvature_term == pytest.approx(4.0 * expected, rel=1e-10)
        assert bd.mass_term == pytest.approx(PI / curve.omega, rel=1e-10)


def test_eq1_mass_term_closed_form():
    # M = 16 s0^5 / 15 exactly for the quadratic profile
    curve = make_curve(1.0)
    for s0 in (1.0, 2.0, 3.0):
        bd = qform_profile(
            symmetric_piece(curve, s0, 5.0), quadratic_profile(curve, s0)
        )
        assert bd.mass_term == pytest.approx(16.0 * s0 ** 5 / 15.0, rel=1e-10)


def test_reduced_I_golden_values():
    # golden cells of the lambda < 1 tables and the quoted spot value
    cases = [
        (0.25, 3.0, 4.0, 7.1166, 1e-3),
        (0.25, 3.0, 15.0, 0.2405, 5e-4),
        (0.5, 2.0, 10.0, 0.2486, 1e-3),
        (0.5, 10.0, 20.0, 0.2851, 1e-3),
        (0.75, 2.0, 8.0, -0.1273, 1e-3),
    ]
    for lam, s0, length, expected, tol in cases:
        curve = make_curve(lam)
        piece = symmetric_piece(curve, s0, length)
        value = reduced_I(piece, cosine_profile(curve, s0))
        assert value == pytest.approx(expected, abs=tol), (lam, s0, length)


def test_qform_matches_closed_form_gt1_spot():
    # frozen from the closed form: Q(lam=3, sigma=0, L=1) = 17.212359519601623
    curve = make_curve(3.0)
    bd = qform_profile(fundamental_piece(curve, 0.0, 1.0), fundamental_profile(curve, 0.0))
    assert bd.total == pytest.approx(17.212359519601623, rel=1e-8)
    assert bd.total == pytest.approx(q_closed_gt1(3.0, 0.0, 1.0), rel=1e-8)


def test_endpoint_violation():
    curve = make_curve(0.5)
    piece = symmetric_piece(curve, 2.0, 5.0)
    flat = custom_profile(lambda s: 1.0, lambda s: 0.0)
    with pytest.raises(EndpointViolationError):
        qform_profile(piece, flat)


def test_zero_weighted_mean_residual():
    curve = make_curve(0.5)
    piece = symmetric_piece(curve, 2.0, 7.0)
    assert abs(zero_weighted_mean_residual(piece, VP)) < 1e-12
    # the unconstrained profile has mean 2L/pi, reported but not required
    assert zero_weighted_mean_residual(piece, STRONG) == pytest.approx(
        2.0 * 7.0 / PI, rel=1e-10
    )


# ---------------------------------------------------------------------------
# lambda > 1 closed forms
# ---------------------------------------------------------------------------

def test_q_closed_gt1_signs():
    assert q_closed_gt1(3.0, 0.0, 1e-3) > 0.0  # positive near L = 0
    L0 = critical_length_gt1(3.0, 0.0).value
    assert abs(q_closed_gt1(3.0, 0.0, L0)) < 1e-9
    # frozen from the closed form: Q(lam=2, sigma=s0, L=10)
    s0 = PI / math.sqrt(3.0)
    assert q_closed_gt1(2.0, s0, 10.0) == pytest.approx(-8.200676013373903, rel=1e-12)
    assert q_closed_gt1(2.0, s0, 10.0) < 0.0


def test_q_closed_gt1_monotone_decreasing_beyond_zero():
    L0 = critical_length_gt1(3.0, 0.0).value
    values = [q_closed_gt1(3.0, 0.0, L) for L in (L0, 2 * L0, 4 * L0, 8 * L0)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_critical_length_gt1():
    crit = critical_length_gt1(3.0, 0.0)
    assert crit.value == pytest.approx(2.156983109134744, rel=1e-12)
    assert crit.method is Method.CLOSED_FORM
    # independent cross-check: root of the closed-form Q in L
    root = find_root(lambda L: q_closed_gt1(3.0, 0.0, L), 1.0, 4.0)
    assert crit.value == pytest.approx(root, abs=1e-9)
    # sigma = s0 gives the uniform bound
    s0 = PI / math.sqrt(8.0)
    assert critical_length_gt1(3.0, s0).value == pytest.approx(3.0504, abs=5e-4)


def test_critical_length_gt1_out_of_range():
    s0 = PI / math.sqrt(8.0)
    for sigma in (-0.1, s0 + 0.1):
        with pytest.raises(OutOfRangeError):
            critical_length_gt1(3.0, sigma)
    with pytest.raises(WrongCaseError):
        critical_length_gt1(0.5, 0.0)


def test_critical_length_gt1_uniform():
    uniform = critical_length_gt1_uniform(3.0).value
    assert uniform == pytest.approx(3.050435, abs=1e-5)
    assert critical_length_gt1_uniform(math.sqrt(2.0)).value == pytest.approx(
        11.272937, abs=1e-5
    )
    s0 = PI / math.sqrt(8.0)
    for k in range(50):
        sigma = s0 * k / 49.0
        assert critical_length_gt1(3.0, sigma).value <= uniform + 1e-12


def test_gt1_limits():
    # L0 -> 0 as lambda grows, -> infinity as lambda -> 1+
    values = [critical_length_gt1(lam, 0.0).value for lam in (1.5, 2.0, 3.0, 5.0, 10.0)]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert critical_length_gt1(100.0, 0.0).value < 0.1
    assert critical_length_gt1_uniform(1.0 + 1e-6).value > 1e4


def test_q_closed_gt1_sigma_symmetry():
    # defined for every sigma, even and 2 pi/omega-periodic
    om = math.sqrt(8.0)
    base = q_closed_gt1(3.0, 0.4, 2.0)
    assert q_closed_gt1(3.0, -0.4, 2.0) == base
    assert q_closed_gt1(3.0, 0.4 + 2.0 * PI / om, 2.0) == pytest.approx(base, abs=1e-9)


# ---------------------------------------------------------------------------
# lambda = 1 closed forms
# ---------------------------------------------------------------------------

def test_reduced_I_limit_eq1_values():
    # exact arithmetic: limit(1) = 3 pi - 28/3
    assert reduced_I_limit_eq1(1.0) == pytest.approx(3.0 * PI - 28.0 / 3.0, rel=1e-14)
    assert reduced_I_limit_eq1(1.0) == pytest.approx(0.091444627436046, rel=1e-12)
    assert reduced_I_limit_eq1(2.0) == pytest.approx(-37.273897433578, rel=1e-12)
    root = find_root(reduced_I_limit_eq1, 1.0, 1.05)
    assert root == pytest.approx(1.0213022259096483, abs=1e-9)


def test_q_closed_eq1_signs():
    L0 = critical_length_eq1(2.0).value
    assert abs(q_closed_eq1(2.0, L0)) < 1e-6
    assert q_closed_eq1(1.0, 1.0) > 0.0
    assert q_closed_eq1(2.0, 20.0) < 0.0


def test_critical_length_eq1():
    crit = critical_length_eq1(2.0)
    assert crit.value == pytest.approx(6.012662354499665, rel=1e-12)
    # cross-check as the root of the closed-form Q in L
    root = find_root(lambda L: q_closed_eq1(2.0, L), 4.0, 9.0)
    assert crit.value == pytest.approx(root, abs=1e-9)
    assert critical_length_eq1(1.5).value == pytest.approx(6.556694, abs=1e-5)
    assert critical_length_eq1(5.0).value == pytest.approx(7.338714, abs=1e-5)


def test_critical_length_eq1_below_threshold():
    for s0 in (1.0, 0.5, 1.0213):
        with pytest.raises(BelowThresholdError):
            critical_length_eq1(s0)


def test_critical_length_eq1_shape():
    # L0 diverges at the threshold, dips to a minimum near s0 ~ 2.13 and
    # grows like sqrt(s0) afterwards; it is NOT monotone on (threshold, 10].
    decreasing = [critical_length_eq1(s0).value for s0 in (1.05, 1.2, 1.5, 1.8, 2.0)]
    assert all(a > b for a, b in zip(decreasing, decreasing[1:]))
    increasing = [critical_length_eq1(s0).value for s0 in (2.4, 3.0, 4.0, 7.0, 10.0)]
    assert all(a < b for a, b in zip(increasing, increasing[1:]))
    assert min(decreasing + increasing) > critical_length_eq1(2.13).value - 1e-9


def test_eq1_closed_vs_quadrature_grid():
    curve = make_curve(1.0)
    for s0 in (1.5, 2.0, 3.0, 5.0):
        profile = quadratic_profile(curve, s0)
        for length in (2.0, 5.0, 10.0, 20.0):
            piece = symmetric_piece(curve, s0, length)
            quad = qform_profile(piece, profile).total
            closed = q_closed_eq1(s0, length)
            assert abs(quad - closed) <= 1e-6 * max(1.0, abs(quad))


# ---------------------------------------------------------------------------
# lambda < 1 numerical route
# ---------------------------------------------------------------------------

def test_critical_length_lt1_values():
    # frozen from an independent scipy.integrate.quad + algebra run
    cases = [
        (0.25, 3.0, 20.3570547, (20.0, 25.0)),
        (0.5, 6.0, 13.9862542, (12.0, 14.0)),
        (0.75, 2.0, 7.6164090, (6.0, 8.0)),
    ]
    for lam, s0, expected, (lo, hi) in cases:
        crit = critical_length_lt1(lam, s0)
        assert crit.method is Method.ROOT_FOUND
        assert crit.value == pytest.approx(expected, abs=1e-4)
        assert lo < crit.value < hi


def test_critical_length_lt1_graph_regime():
    with pytest.raises(GraphRegimeError):
        critical_length_lt1(0.25, 2.0)  # below s1 = 2.1311
    with pytest.raises(GraphRegimeError):
        critical_length_lt1(0.5, 1.5206)


def test_critical_length_lt1_not_found():
    # just above the graph bound the cosine family stays positive
    with pytest.raises(NotFoundInRangeError):
        critical_length_lt1(0.25, 2.2)


def test_critical_length_lt1_strong_halves():
    vp = critical_length_lt1(0.5, 6.0).value
    strong = critical_length_lt1(0.5, 6.0, mode=STRONG).value
    assert strong == pytest.approx(0.5 * vp, abs=2e-6)


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

def test_table_spot_cells():
    table = instability_table(0.25, (3.0, 7.0), (15.0, 40.0))
    assert table.cells[0][0] == pytest.approx(0.2405, abs=5e-4)
    assert table.cells[1][1] == pytest.approx(0.1030, abs=5e-4)
    assert table.first_negative == (1, None)


def test_table_half_spot():
    table = instability_table(0.5, (8.0,), (10.0, 12.0, 14.0, 16.0, 18.0, 20.0))
    assert table.cells[0][4] == pytest.approx(-0.0153, abs=1e-3)
    assert table.first_negative == (4,)


def test_table_three_quarters_spot():
    table = instability_table(0.75, (10.0,), (12.0,))
    assert table.cells[0][0] == pytest.approx(0.4288, abs=1e-3)
    assert table.first_negative == (None,)


def test_table_validation():
    with pytest.raises(WrongCaseError):
        instability_table(1.5, (3.0,), (10.0,))
    with pytest.raises(ValueError):
        instability_table(0.5, (2.0,), (0.0,))


# ---------------------------------------------------------------------------
# certificates and probe
# ---------------------------------------------------------------------------

def test_certificate_found():
    curve = make_curve(0.25)
    witness = instability_certificate(symmetric_piece(curve, 3.0, 30.0))
    assert witness is not None
    assert witness.q_value < 0.0
    assert abs(witness.zero_mean_residual) < 1e-9


def test_certificate_absent():
    curve = make_curve(0.25)
    assert instability_certificate(symmetric_piece(curve, 3.0, 15.0)) is None


def test_certificate_gt1_piece():
    curve = make_curve(3.0)
    long_piece = fundamental_piece(curve, 0.0, 5.0)
    witness = instability_certificate(long_piece)
    assert witness is not None and witness.q_value < 0.0
    short_piece = fundamental_piece(curve, 0.0, 1.0)
    assert instability_certificate(short_piece) is None


def test_certificate_strong_mode():
    curve = make_curve(1.0)
    # L0/2 < 4 < L0 for s0 = 2: strongly unstable but no VP certificate
    piece = symmetric_piece(curve, 2.0, 4.0)
    assert instability_certificate(piece, VP) is None
    witness = instability_certificate(piece, STRONG)
    assert witness is not None and witness.q_value < 0.0


def test_probe_positive_on_graphs():
    assert graph_stability_probe(0.5, 1.0, 25, seed=42) >= -1e-6
    assert graph_stability_probe(1.0, 0.9, 25, seed=42) >= -1e-6


def test_probe_reproducible():
    a = graph_stability_probe(0.5, 1.0, 10, seed=7)
    b = graph_stability_probe(0.5, 1.0, 10, seed=7)
    assert a == b


def test_probe_regime_errors():
    with pytest.raises(NotGraphRegimeError):
        graph_stability_probe(0.5, 2.0, 10, seed=1)  # beyond s1
    with pytest.raises(NotGraphRegimeError):
        graph_stability_probe(1.0, 1.5, 10, seed=1)
    with pytest.raises(NotGraphRegimeError):
        graph_stability_probe(3.0, 0.5, 10, seed=1)
    with pytest.raises(NotGraphRegimeError):
        graph_stability_probe(1.0, 0.0, 10, seed=1)  # degenerate interval
