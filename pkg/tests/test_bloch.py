import math

import numpy as np
import pytest

from blochkit import (
    ball,
    beta_estimate,
    beta_upper_poly,
    bloch_norm_estimate,
    combine,
    constant,
    coordinate,
    disk,
    lipschitz_beta_estimate,
    little_star_membership_diagnostic,
    omega_bounds,
    omega_empirical_lower,
    omega_exact_ball,
    omega_polydisk_bounds,
    parse_symbol,
    polydisk,
    q_value,
    q_value_oracle,
    q_value_via_metric,
    q_values,
    sample_interior,
)
from blochkit.bloch import AGAINST, CONSISTENT
from blochkit.errors import OutsideDomainError, UsageError
from blochkit.symbols import LogFrac

from conftest import mkpoly

ATANH_HALF = 0.5493061443340548


# ---------------------------------------------------------------- Q values


def test_q_disk_closed_form():
    sq = mkpoly(1, {(2,): 1.0})
    # (1 - |z|^2) |f'(z)| with f = z^2 at z = 0.5
    assert q_value(disk(), sq, 0.5) == pytest.approx(0.75, abs=1e-14)
    lin = coordinate(1, 1)
    assert q_value(disk(), lin, 0.3 + 0.4j) == pytest.approx(0.75, abs=1e-14)


def test_q_polydisk_weighted_gradient():
    f = mkpoly(2, {(1, 1): 1.0})  # z1*z2
    assert q_value(polydisk(2), f, (0.5, 0.0)) == pytest.approx(0.5, abs=1e-14)


def test_q_ball_coordinate():
    f = coordinate(1, 2)
    for r in (0.0, 0.3, 0.6, 0.9):
        assert q_value(ball(2), f, (r, 0.0)) == pytest.approx(1 - r * r, abs=1e-12)


def test_q_log_symbol_peaks_at_parameter():
    # The h-form symbol attains invariant derivative one at its own parameter.
    for w in (0.3, 0.5j, 0.2 + 0.4j, -0.7):
        h = LogFrac(1, 1, w, "h")
        assert q_value(disk(), h, w) == pytest.approx(1.0, abs=1e-12)


def test_q_constant_is_zero():
    assert q_value(ball(2), constant(3.0, 2), (0.1, 0.2)) == pytest.approx(0.0, abs=1e-15)


def test_q_invariance_under_constant_shift_and_scaling():
    f = mkpoly(2, {(1, 0): 0.7, (0, 2): -0.4j})
    z = (0.2, 0.3j)
    base = q_value(ball(2), f, z)
    shifted = combine("sum", f, constant(2.5 - 1j, 2))
    assert q_value(ball(2), shifted, z) == pytest.approx(base, abs=1e-12)
    c = -1.5 + 2j
    scaled = combine("product", constant(c, 2), f)
    assert q_value(ball(2), scaled, z) == pytest.approx(abs(c) * base, rel=1e-12)


def test_q_values_batch_matches_scalar():
    f = mkpoly(2, {(2, 1): 1.0, (0, 1): 0.5})
    Z = sample_interior(ball(2), 20, seed=3)
    vals = q_values(ball(2), f, Z)
    for i, z in enumerate(Z):
        assert vals[i] == pytest.approx(q_value(ball(2), f, z), rel=1e-12)


def test_q_via_metric_agrees_with_closed_form():
    rng = np.random.default_rng(1)
    for d in (disk(), ball(2), polydisk(3)):
        f = mkpoly(
            d.ambient_dim,
            {
                tuple(int(k) for k in rng.integers(0, 3, d.ambient_dim)): complex(
                    rng.standard_normal(), rng.standard_normal()
                )
                for _ in range(4)
            },
        )
        for z in sample_interior(d, 10, seed=2):
            assert q_value_via_metric(d, f, z) == pytest.approx(
                q_value(d, f, z), rel=1e-9, abs=1e-12
            )


def test_q_oracle_never_exceeds_closed_form():
    rng = np.random.default_rng(5)
    for d in (disk(), ball(3), polydisk(2)):
        f = mkpoly(
            d.ambient_dim,
            {
                tuple(int(k) for k in rng.integers(0, 4, d.ambient_dim)): complex(
                    rng.standard_normal(), rng.standard_normal()
                )
                for _ in range(4)
            },
        )
        for z in sample_interior(d, 5, seed=6):
            qc = q_value(d, f, z)
            qo = q_value_oracle(d, f, z, ndirs=2048, seed=0)
            assert qo <= qc + 1e-9
            if qc > 1e-12:
                assert (qc - qo) / qc <= 1e-3


def test_q_oracle_exact_on_disk_with_one_direction():
    f = mkpoly(1, {(3,): 1.0, (1,): -0.5j})
    for z in (0.2, 0.5j, -0.3 + 0.3j):
        assert q_value_oracle(disk(), f, z, ndirs=1, seed=0) == pytest.approx(
            q_value(disk(), f, z), abs=1e-12
        )


# ---------------------------------------------------------------- seminorms


def test_beta_constant_is_exactly_zero():
    est = beta_estimate(ball(2), constant(4.2, 2), None)
    assert est.mode == "exact"
    assert est.lower == est.upper == 0.0


def test_beta_disk_coordinate_reaches_one(fast_cfg):
    est = beta_estimate(disk(), coordinate(1, 1), fast_cfg)
    assert est.mode == "sampled-lower"
    assert est.lower == pytest.approx(1.0, abs=1e-9)
    assert est.lower <= 1.0 + 1e-9
    assert abs(complex(est.argmax[0])) < 1e-3  # supremum attained at the center


def test_beta_upper_poly_certificate(fast_cfg):
    f = mkpoly(2, {(1, 0): 0.7 + 0.2j, (0, 1): -0.3j, (2, 1): 0.4})
    cert = beta_upper_poly(f)
    est = beta_estimate(ball(2), f, fast_cfg, certified_upper=cert)
    assert est.lower <= cert + 1e-12
    assert est.upper == pytest.approx(cert)


def test_beta_certificate_contradiction_raises(fast_cfg):
    with pytest.raises(UsageError):
        beta_estimate(disk(), coordinate(1, 1), fast_cfg, certified_upper=0.5)


def test_beta_log_symbol_bounded_by_parameter(fast_cfg):
    # The f-form symbol with parameter w has seminorm at most |w|.
    est = beta_estimate(polydisk(2), parse_symbol("fw(1,0.5)", 2), fast_cfg)
    assert est.lower <= 0.5 + 1e-9
    assert est.lower == pytest.approx(0.5, abs=1e-6)


def test_bloch_norm_adds_center_value(fast_cfg):
    f = combine("sum", constant(1.0, 1), coordinate(1, 1))
    est = bloch_norm_estimate(disk(), f, fast_cfg)
    assert est.lower == pytest.approx(2.0, abs=1e-6)
    const = bloch_norm_estimate(disk(), constant(2.5j, 1), None)
    assert const.lower == const.upper == pytest.approx(2.5)


def test_lipschitz_estimate(fast_cfg):
    assert lipschitz_beta_estimate(disk(), constant(1.0, 1)) == pytest.approx(0.0, abs=1e-15)
    v = lipschitz_beta_estimate(disk(), coordinate(1, 1), npairs=200, seed=42)
    assert 0.95 <= v <= 1.0 + 1e-9
    assert v == pytest.approx(0.9977585085787379, rel=1e-9)


def test_lipschitz_bounded_by_coefficient_certificate():
    rng = np.random.default_rng(11)
    for _ in range(5):
        f = mkpoly(
            2,
            {
                tuple(int(k) for k in rng.integers(0, 3, 2)): complex(
                    rng.standard_normal(), rng.standard_normal()
                )
                for _ in range(3)
            },
        )
        v = lipschitz_beta_estimate(ball(2), f, npairs=100, seed=1)
        assert v <= beta_upper_poly(f) + 1e-9


# ---------------------------------------------------------------- growth scale


def test_omega_exact_ball():
    assert omega_exact_ball((0.3, 0.4)) == pytest.approx(ATANH_HALF, abs=1e-12)
    assert omega_exact_ball(0.0) == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(OutsideDomainError):
        omega_exact_ball((1.0, 0.0))


def test_omega_polydisk_bounds_axis_point():
    est = omega_polydisk_bounds((0.5, 0.0))
    assert est.lower == pytest.approx(ATANH_HALF, abs=1e-12)
    assert est.upper - est.lower <= 2e-8


def test_omega_polydisk_bounds_diagonal():
    est = omega_polydisk_bounds((0.5, 0.5))
    assert est.lower == pytest.approx(ATANH_HALF, abs=1e-12)
    assert est.upper == pytest.approx(0.7768362092120933, rel=1e-9)
    assert est.upper <= 2 * ATANH_HALF + 1e-9


def test_omega_empirical_lower_center_and_witnesses(fast_cfg):
    assert omega_empirical_lower(disk(), 0.0, fast_cfg) == pytest.approx(0.0, abs=1e-12)
    # coordinate witness on the polydisk is exact
    v = omega_empirical_lower(polydisk(2), (0.5, 0.3), fast_cfg)
    assert v >= ATANH_HALF - 1e-12
    assert v <= math.atanh(0.5) + math.atanh(0.3) + 1e-9
    # ball witness reproduces the exact value
    vb = omega_empirical_lower(ball(2), (0.3, 0.4), fast_cfg)
    assert vb == pytest.approx(ATANH_HALF, rel=1e-6)


def test_omega_little_variant_at_most_full(fast_cfg):
    for z in ((0.3, 0.4), (0.1, 0.7)):
        full = omega_empirical_lower(ball(2), z, fast_cfg)
        little = omega_empirical_lower(ball(2), z, fast_cfg, little=True)
        assert little <= full + 1e-12
        assert little >= 0.9 * full


def test_omega_bounds_exact_on_disk_and_ball():
    est = omega_bounds(disk(), 0.5)
    assert est.mode == "exact"
    assert est.lower == pytest.approx(ATANH_HALF, abs=1e-12)
    est2 = omega_bounds(ball(3), (0.3, 0.0, 0.4))
    assert est2.lower == est2.upper == pytest.approx(ATANH_HALF, abs=1e-12)


def test_omega_bounds_interval_on_polydisk():
    est = omega_bounds(polydisk(2), (0.5, 0.5))
    assert est.lower <= est.upper
    assert est.lower >= ATANH_HALF - 1e-9


# ---------------------------------------------------------------- membership diagnostics


def test_little_class_diagnostic_coordinate(fast_cfg):
    profile, verdict = little_star_membership_diagnostic(disk(), coordinate(1, 1), cfg=fast_cfg)
    assert verdict == CONSISTENT
    # boundary samples at |z| = 1 - eps make the profile deterministic
    for eps, mq in zip(profile.eps, profile.max_q):
        assert mq == pytest.approx(1 - (1 - eps) ** 2, abs=1e-12)


def test_little_class_diagnostic_log_symbol(fast_cfg):
    h = parse_symbol("h(1,0.5)", 1)
    profile, verdict = little_star_membership_diagnostic(disk(), h, cfg=fast_cfg)
    assert verdict == AGAINST
    assert profile.max_q[0] > 0.9


def test_little_class_diagnostic_constant(fast_cfg):
    _, verdict = little_star_membership_diagnostic(ball(2), constant(2.0, 2), cfg=fast_cfg)
    assert verdict == CONSISTENT
