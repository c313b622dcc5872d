import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from randers_disc import (
    DomainError,
    NumericalError,
    RandersConfig,
    VolumeForm,
    alpha_norm,
    beta_covector,
    beta_value,
    christoffel,
    disc_grid,
    finsler_norm,
    fundamental_tensor,
    potential,
    sigma_alpha,
    volume_density,
    yasuda_shimada_residual,
)
from randers_disc import fd

# frozen flag-curvature residual at p = (3/10, 0), b = 1/2 (exact rationals)
YS_R11 = -60000.0 / 8281.0
YS_R22 = -131000.0 / 24843.0

points_strategy = st.tuples(
    st.floats(0.05, 0.9), st.floats(0.0, 2.0 * math.pi)
).map(lambda ra: (ra[0] * math.cos(ra[1]), ra[0] * math.sin(ra[1])))
vectors_strategy = st.tuples(
    st.floats(0.1, 3.0), st.floats(0.0, 2.0 * math.pi)
).map(lambda ma: (ma[0] * math.cos(ma[1]), ma[0] * math.sin(ma[1])))


def test_alpha_norm_values():
    assert alpha_norm((0.0, 0.0), (1.0, 0.0)) == 2.0
    assert alpha_norm((0.5, 0.0), (0.0, 3.0)) == pytest.approx(8.0, rel=1e-15)


def test_alpha_norm_rejects_bad_input():
    with pytest.raises(DomainError):
        alpha_norm((1.0, 0.5), (1.0, 0.0))
    with pytest.raises(DomainError):
        alpha_norm((0.2, 0.1), (0.0, 0.0))


def test_beta_value_example():
    cfg = RandersConfig(0.5)
    val = beta_value((0.3, 0.0), (1.0, 0.0), cfg)
    assert val == pytest.approx(1.0 / 0.91, rel=1e-14)


def test_finsler_norm_is_alpha_plus_beta():
    cfg = RandersConfig(0.4)
    p, v = (0.2, -0.3), (0.7, 1.1)
    assert finsler_norm(p, v, cfg) == pytest.approx(
        alpha_norm(p, v) + beta_value(p, v, cfg), rel=1e-15
    )


def test_beta_riemannian_case_is_zero_everywhere():
    cfg = RandersConfig(0.0)
    assert beta_value((0.0, 0.0), (1.0, 2.0), cfg) == 0.0
    assert np.all(beta_covector((0.4, 0.1), cfg) == 0.0)
    assert potential((0.6, 0.2), cfg) == 0.0


def test_beta_covector_rejects_origin_when_drifting():
    with pytest.raises(DomainError):
        beta_covector((0.0, 0.0), RandersConfig(0.5))


@pytest.mark.parametrize("b", [0.1, 0.5, 0.9])
def test_drift_norm_is_constant_on_grid(b):
    cfg = RandersConfig(b)
    worst = 0.0
    for p in disc_grid():
        beta = beta_covector(p, cfg)
        s = 1.0 - float(p @ p)
        norm2 = (0.5 * s) ** 2 * float(beta @ beta)  # inverse metric contraction
        worst = max(worst, abs(norm2 - b * b))
    assert worst <= 1e-12


@pytest.mark.parametrize("b", [0.3, 0.7])
def test_potential_gradient_is_the_drift_covector(b):
    cfg = RandersConfig(b)
    for p in [(0.3, 0.0), (-0.2, 0.5), (0.1, -0.7)]:
        beta = beta_covector(p, cfg)
        for i in range(2):
            def shifted(h, i=i, p=p):
                q = list(p)
                q[i] += h
                return potential(q, cfg)

            assert fd.d1_central(shifted, 0.0, 1e-6) == pytest.approx(beta[i], abs=1e-8)


def test_sigma_alpha_and_density():
    assert sigma_alpha((0.0, 0.0)) == 4.0
    p = (0.5, 0.0)
    assert sigma_alpha(p) == pytest.approx(4.0 / 0.75**2, rel=1e-15)
    for b in (0.0, 0.3, 0.7):
        ht = volume_density(p, RandersConfig(b, VolumeForm.HOLMES_THOMPSON))
        for form in VolumeForm:
            cfg = RandersConfig(b, form)
            assert volume_density(p, cfg) == cfg.kappa * ht  # bitwise by construction


def test_kappa_values():
    b = 0.3
    assert RandersConfig(b, VolumeForm.BUSEMANN_HAUSDORFF).kappa == pytest.approx(
        (1 - b * b) ** 1.5, rel=1e-15
    )
    assert RandersConfig(b, VolumeForm.HOLMES_THOMPSON).kappa == 1.0
    assert RandersConfig(b, VolumeForm.MAX).kappa == pytest.approx(1.3**3, rel=1e-15)
    assert RandersConfig(b, VolumeForm.MIN).kappa == pytest.approx(0.7**3, rel=1e-15)


def test_config_validation():
    with pytest.raises(DomainError, match="b must satisfy 0 <= b < 1"):
        RandersConfig(1.2)
    with pytest.raises(DomainError):
        RandersConfig(-0.1)
    with pytest.raises(DomainError):
        VolumeForm.coerce("euclidean")
    assert RandersConfig(0.2, "max").form is VolumeForm.MAX


def test_christoffel_closed_form():
    p = (0.3, -0.2)
    c = 2.0 / (1.0 - 0.09 - 0.04)
    gam = christoffel(p)
    assert np.allclose(gam.gamma1, c * np.array([[0.3, -0.2], [-0.2, -0.3]]), rtol=1e-15)
    assert np.allclose(gam.gamma2, c * np.array([[0.2, 0.3], [0.3, -0.2]]), rtol=1e-15)


def test_fundamental_tensor_riemannian_diagonal():
    g = fundamental_tensor((0.3, 0.1), (0.4, -1.2), RandersConfig(0.0))
    expect = 4.0 / (1.0 - 0.1) ** 2
    assert g.g11 == pytest.approx(expect, rel=1e-6)
    assert g.g22 == pytest.approx(expect, rel=1e-6)
    assert g.g12 == pytest.approx(0.0, abs=1e-6)


def test_fundamental_tensor_contraction_and_homogeneity():
    cfg = RandersConfig(0.5)
    p, v = (0.3, -0.4), (1.0, 0.7)
    g = fundamental_tensor(p, v, cfg)
    f2 = finsler_norm(p, v, cfg) ** 2
    assert g.contract(v) == pytest.approx(f2, rel=1e-6)
    g2 = fundamental_tensor(p, (2.0, 1.4), cfg)
    assert g2.g11 == pytest.approx(g.g11, rel=1e-6)
    assert g2.g12 == pytest.approx(g.g12, rel=1e-6)
    assert g2.g22 == pytest.approx(g.g22, rel=1e-6)


@given(p=points_strategy, v=vectors_strategy, b=st.floats(0.0, 0.8))
def test_contraction_identity_property(p, v, b):
    cfg = RandersConfig(b)
    g = fundamental_tensor(p, v, cfg)
    f2 = finsler_norm(p, v, cfg) ** 2
    assert abs(g.contract(v) - f2) <= 1e-6 * max(1.0, abs(f2))


def test_fundamental_tensor_positive_definite_near_boundary_of_b():
    # strong convexity survives up to b < 1; a large drift is still fine
    g = fundamental_tensor((0.2, 0.2), (-1.0, 0.3), RandersConfig(0.95))
    assert g.g11 > 0.0 and g.g11 * g.g22 - g.g12**2 > 0.0


def test_yasuda_shimada_frozen_point():
    R = yasuda_shimada_residual((0.3, 0.0), RandersConfig(0.5))
    assert R[0, 0] == pytest.approx(YS_R11, abs=1e-6)
    assert R[1, 1] == pytest.approx(YS_R22, abs=1e-6)
    assert abs(R[0, 1]) <= 1e-6 and abs(R[1, 0]) <= 1e-6


@pytest.mark.parametrize("x,b", [(0.2, 0.3), (0.5, 0.7), (0.7, 0.4)])
def test_yasuda_shimada_axis_closed_forms(x, b):
    R = yasuda_shimada_residual((x, 0.0), RandersConfig(b))
    s = 1.0 - x * x
    assert R[0, 0] == pytest.approx(-8.0 * (1.0 - b * b) / s**2, abs=1e-6)
    assert R[1, 1] == pytest.approx((2.0 * b * (1.0 + x * x) - 8.0 * x) / (x * s**2), abs=1e-6)


def test_yasuda_shimada_domain_errors():
    with pytest.raises(DomainError):
        yasuda_shimada_residual((0.3, 0.0), RandersConfig(0.0))
    with pytest.raises(DomainError):
        yasuda_shimada_residual((0.005, 0.0), RandersConfig(0.5))


def test_disc_grid_shape_and_axis_points():
    pts = disc_grid()
    assert pts.shape == (200, 2)
    on_axis = pts[np.abs(pts[:, 1]) < 1e-15]
    assert len(on_axis) >= 10  # angle 0 row keeps pure-axis points
    radii = np.hypot(pts[:, 0], pts[:, 1])
    assert radii.min() >= 0.1 - 1e-12 and radii.max() <= 0.9 + 1e-12
