"""Sufficiency certificate for candidate circles in the isoperimetric problem.

The constrained Lagrangian is h = f + lam*g, where f is the Green-form area
integrand of the chosen volume form and g the hyperbolic length integrand.
The drift one-form integrates to zero over closed curves and drops out of
every variational quantity, so g carries only the alpha part.

A circle passes when, with its multiplier lam = -2 a kappa/(1 + a^2):
  (i)   the Euler-Lagrange residual vanishes along the curve,
  (ii)  the constraint gradient (P1, P2) never vanishes (normality),
  (iii) the Weierstrass excess is negative off the tangent direction,
  (iv)  second-variation probes are negative and the Jacobi determinant
        D(c) has no interior zero over one period,
  (v)   the velocity Hessian of h is negative off the tangent direction.
"""
from __future__ import annotations

import dataclasses
import math

import numpy as np

from .config import RandersConfig
from .curves import TWO_PI, Circle, _PolarCurve
from .errors import (
    ChartSingularityError,
    DomainError,
    IntegrationError,
    NumericalError,
    ProjectionError,
)
from .functionals import QuadratureGrid
from . import fd

_CHART_COS_MIN = 0.1          # |xdot2|/a floor for the x1-variation chart
_TANGENT_CONE = 1e-3          # rad; excess/Hessian equality cone around the tangent


def lagrangian(x1, x2, v1, v2, kap: float, lam: float):
    """h = f + lam*g; accepts scalars or numpy arrays."""
    s = 1.0 - x1 * x1 - x2 * x2
    return (2.0 * kap * (x1 * v2 - x2 * v1) + 2.0 * lam * np.sqrt(v1 * v1 + v2 * v2)) / s


@dataclasses.dataclass(frozen=True)
class LagrangeSystem:
    lam: float
    cfg: RandersConfig

    @property
    def kappa(self) -> float:
        return self.cfg.kappa


def lambda_for_circle(a: float, cfg: RandersConfig) -> float:
    """Multiplier of the extremal circle: -2 a kappa/(1 + a^2), negative on (0,1)."""
    if not 0.0 < a < 1.0:
        raise DomainError(f"circle radius must lie in (0, 1), got {a}")
    return -2.0 * a * cfg.kappa / (1.0 + a * a)


# -- Euler-Lagrange in the polar chart ---------------------------------------
#    h(r, rdot) = (2 kap r^2 + 2 lam sqrt(r^2 + rdot^2))/(1 - r^2)

def _dh_dr_parts(r: float, rd: float, kap: float) -> tuple[float, float]:
    """(f part, g part per unit lam) of dh/dr."""
    s = 1.0 - r * r
    w = math.hypot(r, rd)
    f_part = 4.0 * kap * r / (s * s)
    g_part = 2.0 * r / (w * s) + 4.0 * r * w / (s * s)
    return f_part, g_part


def _dg_drdot(curve: _PolarCurve, t: float) -> float:
    r = curve.radius(t)
    rd = curve.radius_dot(t)
    return 2.0 * rd / (math.hypot(r, rd) * (1.0 - r * r))


def _el_parts(curve: _PolarCurve, t: float, kap: float, time_step: float) -> tuple[float, float]:
    """Residual = f_part + lam * g_part, both analytic except d/dt by differences."""
    r = curve.radius(t)
    rd = curve.radius_dot(t)
    f_part, g_r = _dh_dr_parts(r, rd, kap)
    dt_term = fd.d1_central(lambda u: _dg_drdot(curve, u), t, time_step)
    return f_part, g_r - dt_term


def el_residual(curve: _PolarCurve, system: LagrangeSystem, t: float, time_step: float = 1e-5) -> float:
    """Polar Euler-Lagrange residual dh/dr - d/dt dh/drdot at parameter t."""
    f_part, g_part = _el_parts(curve, t, system.kappa, time_step)
    return f_part + system.lam * g_part


def solve_lambda_numeric(
    a: float,
    cfg: RandersConfig,
    grid: QuadratureGrid = QuadratureGrid(),
    time_step: float = 1e-5,
) -> float:
    """Least-squares multiplier: the residual is affine in lam, so minimizing
    its L2 norm along the circle is one linear solve."""
    circle = Circle(a)
    fs = np.empty(grid.n)
    gs = np.empty(grid.n)
    for i, t in enumerate(grid.nodes):
        fs[i], gs[i] = _el_parts(circle, float(t), cfg.kappa, time_step)
    denom = float(gs @ gs)
    if denom <= 0.0:
        raise NumericalError("multiplier system is singular: zero constraint response")
    return -float(fs @ gs) / denom


# -- normality ----------------------------------------------------------------

def _g_velocity_gradient(sample) -> np.ndarray:
    x1, x2 = sample.point
    v1, v2 = sample.velocity
    s = 1.0 - x1 * x1 - x2 * x2
    speed = math.hypot(v1, v2)
    return np.array([2.0 * v1 / (s * speed), 2.0 * v2 / (s * speed)])


def normality(curve: _PolarCurve, cfg: RandersConfig, t: float, time_step: float = 1e-5) -> tuple[float, float]:
    """(P1, P2) = g_x - d/dt g_v for the length constraint; must never both vanish."""
    sample = curve.eval(t)
    x1, x2 = sample.point
    v1, v2 = sample.velocity
    s = 1.0 - x1 * x1 - x2 * x2
    speed = math.hypot(v1, v2)
    gx = np.array([4.0 * x1 * speed / (s * s), 4.0 * x2 * speed / (s * s)])

    def gv(u: float, idx: int) -> float:
        return _g_velocity_gradient(curve.eval(u))[idx]

    p1 = gx[0] - fd.d1_central(lambda u: gv(u, 0), t, time_step)
    p2 = gx[1] - fd.d1_central(lambda u: gv(u, 1), t, time_step)
    return float(p1), float(p2)


# -- Weierstrass excess --------------------------------------------------------

def _h_velocity_gradient(p, v, kap: float, lam: float) -> np.ndarray:
    x1, x2 = p
    v1, v2 = v
    s = 1.0 - x1 * x1 - x2 * x2
    speed = math.hypot(v1, v2)
    return np.array(
        [(-2.0 * kap * x2 + 2.0 * lam * v1 / speed) / s, (2.0 * kap * x1 + 2.0 * lam * v2 / speed) / s]
    )


def weierstrass_E(p, xdot, u, system: LagrangeSystem) -> float:
    """Defining excess h(p,u) - h(p,xdot) - (u - xdot) . h_v(p,xdot).

    The area term is linear in velocity and cancels; the closed form is
    weierstrass_closed, and their agreement is a core verification target.
    """
    p = np.asarray(p, dtype=float)
    xdot = np.asarray(xdot, dtype=float)
    u = np.asarray(u, dtype=float)
    kap, lam = system.kappa, system.lam
    h_u = lagrangian(p[0], p[1], u[0], u[1], kap, lam)
    h_x = lagrangian(p[0], p[1], xdot[0], xdot[1], kap, lam)
    grad = _h_velocity_gradient(p, xdot, kap, lam)
    return float(h_u - h_x - (u - xdot) @ grad)


def weierstrass_closed(p, xdot, u, system: LagrangeSystem) -> float:
    """(2 lam/((1-r^2)|xdot|)) (|u||xdot| - <xdot, u>); nonpositive iff lam <= 0."""
    p = np.asarray(p, dtype=float)
    xdot = np.asarray(xdot, dtype=float)
    u = np.asarray(u, dtype=float)
    s = 1.0 - p @ p
    nx = math.hypot(xdot[0], xdot[1])
    nu = math.hypot(u[0], u[1])
    return 2.0 * system.lam * (nu * nx - float(xdot @ u)) / (s * nx)


# -- velocity Hessian of h ------------------------------------------------------

def h1_along(circle: Circle, system: LagrangeSystem, t: float = 0.0, rel_step: float = 2e-3) -> float:
    """Velocity-Hessian trace h_v1v1 + h_v2v2 at (gamma(t), gamma'(t)).

    Along an extremal circle this equals 2 lam/(a (1 - a^2)), the scalar whose
    negativity rules out conjugate points; the chart coefficient of the Jacobi
    system is this value divided by |gamma'|^2 = a^2.
    """
    sample = circle.eval(t)
    x1, x2 = sample.point
    v1, v2 = sample.velocity
    kap, lam = system.kappa, system.lam
    step = rel_step * circle.a
    t11 = fd.d2_5pt(lambda s_: lagrangian(x1, x2, v1 + s_, v2, kap, lam), 0.0, step)
    t22 = fd.d2_5pt(lambda s_: lagrangian(x1, x2, v1, v2 + s_, kap, lam), 0.0, step)
    return t11 + t22


def hessian_velocity_form(circle: Circle, system: LagrangeSystem, t: float, y, rel_step: float = 2e-3) -> float:
    """Quadratic form sum h_{v^i v^j} y^i y^j at (gamma(t), gamma'(t)).

    Evaluated as one directional second derivative along y; vanishes iff y is
    tangent to the circle, and is negative elsewhere when lam < 0.
    """
    y = np.asarray(y, dtype=float)
    ny = math.hypot(y[0], y[1])
    if ny == 0.0:
        return 0.0
    sample = circle.eval(t)
    x1, x2 = sample.point
    v1, v2 = sample.velocity
    kap, lam = system.kappa, system.lam
    step = rel_step * circle.a / ny
    return fd.d2_5pt(
        lambda s_: lagrangian(x1, x2, v1 + s_ * y[0], v2 + s_ * y[1], kap, lam), 0.0, step
    )


def hessian_velocity_closed(circle: Circle, system: LagrangeSystem, t: float, y) -> float:
    """Closed form 2 lam (v2 y1 - v1 y2)^2 / ((1 - r^2) |v|^3)."""
    y = np.asarray(y, dtype=float)
    sample = circle.eval(t)
    v1, v2 = sample.velocity
    s = 1.0 - float(sample.point @ sample.point)
    speed = math.hypot(v1, v2)
    cross = v2 * y[0] - v1 * y[1]
    return 2.0 * system.lam * cross * cross / (s * speed**3)


# -- Jacobi coefficients and the conjugate-point determinant --------------------

@dataclasses.dataclass(frozen=True)
class JacobiCoefficients:
    """Coefficients of the Jacobi system in the x1-variation chart.

    h1, h2, U are t-independent along extremal circles; K oscillates like
    -2 kappa sin(2t)/(1 + a^2) but only its time derivative enters h2.
    """

    h1: float
    h2: float
    K: float
    U: float


def jacobi_coeffs(
    circle: Circle,
    system: LagrangeSystem,
    t: float = 0.0,
    hess_rel_step: float = 2e-3,
    mixed_step: float = 5e-3,
    rate_step: float = 1e-2,
) -> JacobiCoefficients:
    """Chart coefficients at parameter t (requires |cos t| >= 0.1).

    The rate d/dt K is taken with a wide 4th-order stencil (offsets up to
    2*rate_step), so t should sit away from the chart edge by that much.
    """
    if abs(math.cos(t)) < _CHART_COS_MIN:
        raise ChartSingularityError(
            f"x1-chart is degenerate near t={t} (|cos t| < {_CHART_COS_MIN})"
        )
    a = circle.a
    kap, lam = system.kappa, system.lam
    hv = hess_rel_step * a
    hx = mixed_step
    hvm = mixed_step * a

    def kinematics(tau: float):
        x1, x2 = a * math.cos(tau), a * math.sin(tau)
        v1, v2 = -a * math.sin(tau), a * math.cos(tau)
        return x1, x2, v1, v2

    def h_v1v1(tau: float) -> float:
        x1, x2, v1, v2 = kinematics(tau)
        return fd.d2_5pt(lambda s_: lagrangian(x1, x2, v1 + s_, v2, kap, lam), 0.0, hv)

    def h1_at(tau: float) -> float:
        v2 = a * math.cos(tau)
        return h_v1v1(tau) / (v2 * v2)

    def K_at(tau: float) -> float:
        x1, x2, v1, v2 = kinematics(tau)
        mixed = fd.mixed_4th(
            lambda sx, sv: lagrangian(x1 + sx, x2, v1 + sv, v2, kap, lam), 0.0, 0.0, hx, hvm
        )
        xdd2 = -a * math.sin(tau)  # second derivative of x^2 along the circle
        return mixed - xdd2 * h_v1v1(tau) / v2

    x1, x2, v1, v2 = kinematics(t)
    h1 = h1_at(t)
    K = K_at(t)
    dK = fd.d1_4th(K_at, t, rate_step)
    h_x1x1 = fd.d2_5pt(lambda s_: lagrangian(x1 + s_, x2, v1, v2, kap, lam), 0.0, hx)
    xdd2 = -a * math.sin(t)
    h2 = (h_x1x1 - xdd2 * xdd2 * h1 - dK) / (v2 * v2)

    # U is built from the constraint integrand g alone (kap = 0, lam = 1)
    g_x1v2 = fd.mixed_4th(
        lambda sx, sv: lagrangian(x1 + sx, x2, v1, v2 + sv, 0.0, 1.0), 0.0, 0.0, hx, hvm
    )
    g_v1x2 = fd.mixed_4th(
        lambda sv, sx: lagrangian(x1, x2 + sx, v1 + sv, v2, 0.0, 1.0), 0.0, 0.0, hvm, hx
    )
    g_v1v1 = fd.d2_5pt(lambda s_: lagrangian(x1, x2, v1 + s_, v2, 0.0, 1.0), 0.0, hv)
    # d/dt (v1/v2) along the circle, analytically: (a1 v2 - v1 a2)/v2^2 = -1/cos^2
    dtan = -1.0 / (math.cos(t) * math.cos(t))
    U = (g_x1v2 - g_v1x2) - g_v1v1 * dtan
    return JacobiCoefficients(h1=h1, h2=h2, K=K, U=U)


@dataclasses.dataclass(frozen=True)
class ConjugateScanReport:
    c_values: np.ndarray
    D_values: np.ndarray
    zero_crossing: bool
    min_abs_D: float
    step_halving: float


def _rk4_determinants(h1: float, h2: float, U: float, n_steps: int, stride: int) -> np.ndarray:
    """Classical RK4 on the three fundamental Jacobi solutions.

    State per solution: (y, y', z) with y'' = (h2 y + mu U)/h1, z' = U y and
    initial data theta1=(1,0), theta2=(0,1), theta3=(0,0) with mu = (0,0,1).
    Returns D at every stride-th node from step 1 to n_steps, where
    D(c) = theta2(c) z3(c) - theta3(c) z2(c) (the 3x3 determinant with the
    initial-condition row reduced out).
    """
    H = TWO_PI / n_steps
    c1 = h2 / h1
    forcing = (0.0, 0.0, U / h1)
    y = [1.0, 0.0, 0.0]
    yp = [0.0, 1.0, 0.0]
    z = [0.0, 0.0, 0.0]
    out = []
    for k in range(1, n_steps + 1):
        for j in range(3):
            fj = forcing[j]
            yj, pj, zj = y[j], yp[j], z[j]
            k1y = pj
            k1p = c1 * yj + fj
            k1z = U * yj
            y2_ = yj + 0.5 * H * k1y
            k2y = pj + 0.5 * H * k1p
            k2p = c1 * y2_ + fj
            k2z = U * y2_
            y3_ = yj + 0.5 * H * k2y
            k3y = pj + 0.5 * H * k2p
            k3p = c1 * y3_ + fj
            k3z = U * y3_
            y4_ = yj + H * k3y
            k4y = pj + H * k3p
            k4p = c1 * y4_ + fj
            k4z = U * y4_
            y[j] = yj + (H / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
            yp[j] = pj + (H / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
            z[j] = zj + (H / 6.0) * (k1z + 2.0 * k2z + 2.0 * k3z + k4z)
        if k % stride == 0:
            out.append(y[1] * z[2] - y[2] * z[1])
    return np.array(out)


def conjugate_scan(
    circle: Circle,
    system: LagrangeSystem,
    scan_points: int = 512,
    n_steps: int = 4096,
    zero_rel_tol: float = 1e-10,
    min_gap: float = 0.05,
    consistency_tol: float = 1e-8,
) -> ConjugateScanReport:
    """Scan D(0, c) for c in (0, 2*pi] and flag interior zeros or sign changes.

    D vanishes exactly at c = 2*pi (the rotation-neutral Jacobi field), and to
    fourth order at the scan start, so the |D| floor is only applied min_gap
    away from both ends; sign changes are checked on all interior pairs.
    """
    if n_steps % scan_points != 0:
        raise DomainError("scan_points must divide n_steps")
    coeffs = jacobi_coeffs(circle, system, 0.0)
    check = jacobi_coeffs(circle, system, math.pi)
    if abs(check.h1 - coeffs.h1) > 1e-4 * abs(coeffs.h1):
        raise NumericalError("Jacobi coefficients are not constant along the circle")

    stride = n_steps // scan_points
    cs = TWO_PI * np.arange(1, scan_points + 1) / scan_points
    Ds = _rk4_determinants(coeffs.h1, coeffs.h2, coeffs.U, n_steps, stride)
    Ds_half = _rk4_determinants(coeffs.h1, coeffs.h2, coeffs.U, 2 * n_steps, 2 * stride)
    scale = float(np.max(np.abs(Ds)))
    if scale == 0.0:
        raise NumericalError("degenerate scan: D vanishes identically")
    step_halving = float(np.max(np.abs(Ds - Ds_half))) / scale
    if step_halving > consistency_tol:
        raise IntegrationError(
            f"step-halving changed D by {step_halving:.3e} relative (tol {consistency_tol:.1e})"
        )

    interior = Ds[:-1]
    sign_change = bool(np.any(interior[:-1] * interior[1:] < 0.0))
    gap_mask = (cs[:-1] >= min_gap) & (cs[:-1] <= TWO_PI - min_gap)
    gapped = np.abs(interior[gap_mask])
    min_abs = float(gapped.min())
    small = bool(np.any(gapped < zero_rel_tol * scale))
    return ConjugateScanReport(
        c_values=cs,
        D_values=Ds,
        zero_crossing=sign_change or small,
        min_abs_D=min_abs,
        step_halving=step_halving,
    )


# -- second variation ------------------------------------------------------------

_PROBE_HARMONICS = 6


@dataclasses.dataclass(frozen=True)
class VariationProbe:
    """Variation field y(t) = sin(t/2) * (trig polynomial), per component.

    Coefficient layout per component: [const, cos 1..K, sin 1..K]; the window
    enforces vanishing at t = 0 and t = 2*pi.
    """

    coeffs1: tuple[float, ...]
    coeffs2: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs1", tuple(float(c) for c in self.coeffs1))
        object.__setattr__(self, "coeffs2", tuple(float(c) for c in self.coeffs2))
        if len(self.coeffs1) != len(self.coeffs2) or len(self.coeffs1) % 2 != 1:
            raise DomainError("probe components need equal odd coefficient counts")

    @property
    def harmonics(self) -> int:
        return (len(self.coeffs1) - 1) // 2

    @classmethod
    def zero(cls, harmonics: int = _PROBE_HARMONICS) -> "VariationProbe":
        m = 2 * harmonics + 1
        return cls((0.0,) * m, (0.0,) * m)

    @classmethod
    def random(cls, rng: np.random.Generator, harmonics: int = _PROBE_HARMONICS) -> "VariationProbe":
        m = 2 * harmonics + 1
        flat = rng.standard_normal(2 * m)
        return cls(tuple(flat[:m]), tuple(flat[m:]))

    @classmethod
    def tangential(cls, circle: Circle, harmonics: int = _PROBE_HARMONICS) -> "VariationProbe":
        """y = sin(t/2) * gamma'(t): the excluded reparametrization direction."""
        m = 2 * harmonics + 1
        c1 = [0.0] * m
        c2 = [0.0] * m
        c1[1 + harmonics] = -circle.a  # sin t coefficient
        c2[1] = circle.a               # cos t coefficient
        return cls(tuple(c1), tuple(c2))

    def to_vector(self) -> np.ndarray:
        return np.array(self.coeffs1 + self.coeffs2)

    @classmethod
    def from_vector(cls, vec: np.ndarray) -> "VariationProbe":
        m = len(vec) // 2
        return cls(tuple(vec[:m]), tuple(vec[m:]))

    def fields(self, ts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """(y, ydot) arrays of shape (len(ts), 2)."""
        K = self.harmonics
        win = np.sin(0.5 * ts)
        dwin = 0.5 * np.cos(0.5 * ts)
        ys = []
        yds = []
        for ci in (self.coeffs1, self.coeffs2):
            P = np.full(ts.shape, ci[0])
            dP = np.zeros(ts.shape)
            for k in range(1, K + 1):
                ck, sk = ci[k], ci[K + k]
                c_, s_ = np.cos(k * ts), np.sin(k * ts)
                P += ck * c_ + sk * s_
                dP += k * (sk * c_ - ck * s_)
            ys.append(win * P)
            yds.append(dwin * P + win * dP)
        return np.column_stack(ys), np.column_stack(yds)


def _variation_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Closed trapezoid nodes over [0, 2*pi]; the window is not periodic."""
    ts = np.linspace(0.0, TWO_PI, n + 1)
    w = np.full(n + 1, TWO_PI / n)
    w[0] *= 0.5
    w[-1] *= 0.5
    return ts, w


def _circle_g_derivatives(a: float, ts: np.ndarray) -> tuple[np.ndarray, ...]:
    x1, x2 = a * np.cos(ts), a * np.sin(ts)
    v1, v2 = -a * np.sin(ts), a * np.cos(ts)
    s = 1.0 - a * a
    speed = np.hypot(v1, v2)
    return 4.0 * x1 * speed / s**2, 4.0 * x2 * speed / s**2, 2.0 * v1 / (s * speed), 2.0 * v2 / (s * speed)


def constraint_functional(circle: Circle, probe: VariationProbe, n: int = 1024) -> float:
    """Linearized length constraint ell(y) = integral of g_x . y + g_v . ydot."""
    ts, w = _variation_nodes(n)
    gx1, gx2, gv1, gv2 = _circle_g_derivatives(circle.a, ts)
    y, yd = probe.fields(ts)
    return float(np.sum(w * (gx1 * y[:, 0] + gx2 * y[:, 1] + gv1 * yd[:, 0] + gv2 * yd[:, 1])))


def constraint_vector(circle: Circle, harmonics: int = _PROBE_HARMONICS, n: int = 1024) -> np.ndarray:
    """ell evaluated on each coefficient basis element (length 2*(2K+1))."""
    m = 2 * harmonics + 1
    out = np.empty(2 * m)
    for i in range(2 * m):
        vec = np.zeros(2 * m)
        vec[i] = 1.0
        out[i] = constraint_functional(circle, VariationProbe.from_vector(vec), n)
    return out


def project_probe(
    circle: Circle,
    probe: VariationProbe,
    n: int = 1024,
    ell: np.ndarray | None = None,
) -> VariationProbe:
    """Orthogonal projection of the coefficients onto ker(ell)."""
    if ell is None:
        ell = constraint_vector(circle, probe.harmonics, n)
    norm2 = float(ell @ ell)
    if norm2 <= 0.0:
        raise ProjectionError("constraint functional vanishes on the whole probe basis")
    vec = probe.to_vector()
    return VariationProbe.from_vector(vec - (float(ell @ vec) / norm2) * ell)


def hessian_blocks(
    a: float,
    kap: float,
    lam: float,
    ts: np.ndarray,
    hx: float = 1e-5,
    hv: float | None = None,
) -> np.ndarray:
    """All second partials of h along the circle, shape (4, 4, len(ts)).

    Argument order (x1, x2, v1, v2); central differences, vectorized over
    nodes.  Probe-independent, so certificates compute this once.
    """
    if hv is None:
        hv = 1e-4 * a
    base_args = [a * np.cos(ts), a * np.sin(ts), -a * np.sin(ts), a * np.cos(ts)]
    steps = [hx, hx, hv, hv]

    def h_at(shift: list[int]) -> np.ndarray:
        w = [base_args[i] + shift[i] * steps[i] for i in range(4)]
        return lagrangian(w[0], w[1], w[2], w[3], kap, lam)

    H = np.zeros((4, 4, len(ts)))
    base = h_at([0, 0, 0, 0])
    for i in range(4):
        for j in range(i, 4):
            if i == j:
                sh = [0, 0, 0, 0]
                sh[i] = 1
                up = h_at(sh)
                sh[i] = -1
                dn = h_at(sh)
                H[i, i] = (up - 2.0 * base + dn) / steps[i] ** 2
            else:
                acc = np.zeros(len(ts))
                for si in (1, -1):
                    for sj in (1, -1):
                        sh = [0, 0, 0, 0]
                        sh[i] = si
                        sh[j] = sj
                        acc += si * sj * h_at(sh)
                H[i, j] = H[j, i] = acc / (4.0 * steps[i] * steps[j])
    return H


def second_variation(
    circle: Circle,
    system: LagrangeSystem,
    probe: VariationProbe,
    n: int = 1024,
    blocks: np.ndarray | None = None,
) -> float:
    """J'' = integral of the quadratic form 2*omega(t, y, ydot).

    The probe is used as given; project_probe enforces the linearized length
    constraint, and tangential probes (y parallel to gamma') sit in the
    excluded reparametrization direction where J'' = 0.
    """
    ts, w = _variation_nodes(n)
    if blocks is None:
        blocks = hessian_blocks(circle.a, system.kappa, system.lam, ts)
    y, yd = probe.fields(ts)
    y1, y2 = y[:, 0], y[:, 1]
    d1, d2 = yd[:, 0], yd[:, 1]
    H = blocks
    two_omega = (
        H[0, 0] * y1 * y1
        + 2.0 * H[0, 1] * y1 * y2
        + H[1, 1] * y2 * y2
        + 2.0 * (H[0, 2] * y1 * d1 + H[0, 3] * y1 * d2 + H[1, 2] * y2 * d1 + H[1, 3] * y2 * d2)
        + H[2, 2] * d1 * d1
        + 2.0 * H[2, 3] * d1 * d2
        + H[3, 3] * d2 * d2
    )
    return float(np.sum(w * two_omega))


# -- the certificate --------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class ExtremalityCertificate:
    a: float
    cfg: RandersConfig
    lam: float
    el_residual_max: float
    normality_min: float
    weierstrass_max: float
    h1: float
    hess_form_max: float
    conjugate: ConjugateScanReport | None
    second_variation_max: float
    passed: bool
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        conj = {
            "zero_crossing": None if self.conjugate is None else self.conjugate.zero_crossing,
            "min_abs_D": None if self.conjugate is None else self.conjugate.min_abs_D,
        }
        return {
            "a": self.a,
            "b": self.cfg.b,
            "form": self.cfg.form.value,
            "lambda": self.lam,
            "el_residual_max": _none_if_nan(self.el_residual_max),
            "normality_min": _none_if_nan(self.normality_min),
            "weierstrass_max": _none_if_nan(self.weierstrass_max),
            "h1": _none_if_nan(self.h1),
            "hess_form_max": _none_if_nan(self.hess_form_max),
            "conjugate": conj,
            "second_variation_max": _none_if_nan(self.second_variation_max),
            "pass": self.passed,
            "notes": list(self.notes),
        }


def _none_if_nan(x: float):
    return None if math.isnan(x) else x


def _direction_samples(velocity: np.ndarray, magnitudes=(0.5, 1.0, 2.0), n_angles: int = 40) -> np.ndarray:
    """Directions around the velocity, excluding the tangent cone."""
    speed = math.hypot(velocity[0], velocity[1])
    base = math.atan2(velocity[1], velocity[0])
    angles = base + np.linspace(_TANGENT_CONE, TWO_PI - _TANGENT_CONE, n_angles)
    units = np.column_stack([np.cos(angles), np.sin(angles)])
    return np.concatenate([m * speed * units for m in magnitudes])


def build_certificate(
    a: float,
    cfg: RandersConfig,
    tol: float = 1e-6,
    grid: QuadratureGrid = QuadratureGrid(),
    n_probes: int = 50,
    probe_seed: int = 42,
    scan_points: int = 512,
    scan_steps: int = 4096,
    t_samples: int = 64,
    lambda_override: float | None = None,
) -> ExtremalityCertificate:
    """Run all five sufficiency checks for the circle of radius a."""
    circle = Circle(a)
    lam = lambda_for_circle(a, cfg) if lambda_override is None else float(lambda_override)
    system = LagrangeSystem(lam, cfg)
    notes = ["second variation probed on a finite trigonometric basis (harmonics <= 6)"]
    if lambda_override is not None:
        notes.append(f"lambda overridden to {lam}")
    ts = np.linspace(0.0, TWO_PI, t_samples, endpoint=False)

    el_max = normality_min = weier_max = h1_val = hess_max = sv_max = math.nan
    conj = None
    ok = {}

    try:
        el_max = max(abs(el_residual(circle, system, float(t))) for t in ts)
        ok["euler_lagrange"] = el_max <= tol
    except Exception as exc:  # aggregate into the certificate
        notes.append(f"euler_lagrange failed: {exc}")
        ok["euler_lagrange"] = False

    try:
        normality_min = min(math.hypot(*normality(circle, cfg, float(t))) for t in ts)
        ok["normality"] = normality_min > tol
    except Exception as exc:
        notes.append(f"normality failed: {exc}")
        ok["normality"] = False

    try:
        weier_max = -math.inf
        for t in ts[:: max(1, t_samples // 16)]:
            sample = circle.eval(float(t))
            for u in _direction_samples(sample.velocity):
                weier_max = max(weier_max, weierstrass_E(sample.point, sample.velocity, u, system))
        ok["weierstrass"] = weier_max < 0.0
    except Exception as exc:
        notes.append(f"weierstrass failed: {exc}")
        ok["weierstrass"] = False

    try:
        h1_val = h1_along(circle, system, 0.0)
        if not h1_val < 0.0:
            notes.append(f"h1 = {h1_val} is not negative (corroboration only)")
    except Exception as exc:
        notes.append(f"h1 failed: {exc}")

    try:
        hess_max = -math.inf
        for t in ts[:: max(1, t_samples // 16)]:
            sample = circle.eval(float(t))
            for y in _direction_samples(sample.velocity, magnitudes=(1.0,)):
                hess_max = max(hess_max, hessian_velocity_form(circle, system, float(t), y))
        ok["hessian_form"] = hess_max < 0.0
    except Exception as exc:
        notes.append(f"hessian_form failed: {exc}")
        ok["hessian_form"] = False

    try:
        conj = conjugate_scan(circle, system, scan_points=scan_points, n_steps=scan_steps)
        no_conjugate = not conj.zero_crossing
    except Exception as exc:
        notes.append(f"conjugate scan failed: {exc}")
        no_conjugate = False

    try:
        nodes, _ = _variation_nodes(grid.n)
        blocks = hessian_blocks(a, system.kappa, lam, nodes)
        ell = constraint_vector(circle, n=grid.n)
        rng = np.random.default_rng(probe_seed)
        sv_max = -math.inf
        for _ in range(n_probes):
            probe = project_probe(circle, VariationProbe.random(rng), n=grid.n, ell=ell)
            sv_max = max(sv_max, second_variation(circle, system, probe, n=grid.n, blocks=blocks))
        ok["second_variation"] = sv_max < 0.0 and no_conjugate
    except Exception as exc:
        notes.append(f"second variation failed: {exc}")
        ok["second_variation"] = False

    passed = all(ok.values())
    for name, good in ok.items():
        if not good:
            notes.append(f"condition failed: {name}")
    return ExtremalityCertificate(
        a=a,
        cfg=cfg,
        lam=lam,
        el_residual_max=el_max,
        normality_min=normality_min,
        weierstrass_max=weier_max,
        h1=h1_val,
        hess_form_max=hess_max,
        conjugate=conj,
        second_variation_max=sv_max,
        passed=passed,
        notes=tuple(notes),
    )
