"""Stationary metric families with ergoregions, their frame fields, and smooth cutoffs.

Five chart-based families are provided: the 2+1 acoustic vortex, its double across
the inner wall, flat space in polar coordinates, and two 3+1 examples (a bump
ergoregion glued into flat space and an almost-Schwarzschild exterior with a
frame-dragging band).  All components are exact closed forms; inverses and
determinants are computed numerically from the components so that tests can pin
them against independent closed-form evaluation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import (
    ChartDomainError,
    ConstructionError,
    SignatureError,
    UnsupportedModelError,
)

DET_FLOOR = 1e-14


# ---------------------------------------------------------------------------
# smooth cutoffs
# ---------------------------------------------------------------------------

# Degree-9 smoothstep: C^4 contact with both plateaus.
_S9 = np.array([0.0, 0.0, 0.0, 0.0, 0.0, 126.0, -420.0, 540.0, -315.0, 70.0])
_S9_DERIVS = [_S9]
for _ in range(4):
    _S9_DERIVS.append(np.polynomial.polynomial.polyder(_S9_DERIVS[-1]))


def _smoothstep(x, order=0):
    """Degree-9 smoothstep on [0,1] (0 below, 1 above), or its derivative."""
    x = np.asarray(x, dtype=float)
    inside = (x > 0.0) & (x < 1.0)
    out = np.zeros_like(x)
    if order == 0:
        out = np.where(x >= 1.0, 1.0, out)
    vals = np.polynomial.polynomial.polyval(np.clip(x, 0.0, 1.0), _S9_DERIVS[order])
    out = np.where(inside, vals, out)
    return out


def _rise(x, a, b, order=0):
    # 0 for x<=a, 1 for x>=b, C^4 ramp between
    scale = (b - a) ** (-order) if order else 1.0
    return _smoothstep((np.asarray(x, dtype=float) - a) / (b - a), order) * scale


def _fall(x, a, b, order=0):
    val = _rise(x, a, b, order)
    if order == 0:
        return 1.0 - val
    return -val


def _bump(x, a, b, c, d, order=0):
    """0 outside [a,d], 1 on [b,c], C^4 ramps on [a,b] and [c,d]."""
    x = np.asarray(x, dtype=float)
    up = _rise(x, a, b, order)
    down = _fall(x, c, d, order)
    if order == 0:
        return np.where(x <= b, up, np.where(x >= c, down, 1.0))
    return np.where(x <= b, up, np.where(x >= c, down, 0.0))


def _even_plateau(x, order=0):
    """1 on [-1,1], 0 outside [-2,2], even, C^4."""
    x = np.asarray(x, dtype=float)
    ax = np.abs(x)
    val = _fall(ax, 1.0, 2.0, order)
    if order == 0:
        return val
    sign = np.where(x < 0.0, -1.0, 1.0) ** order
    return val * sign


@dataclass(frozen=True)
class CutoffLibrary:
    """Named C^4 transition functions, evaluable with derivatives up to order 4.

    theta1, theta2: unit ramps 0 -> 1 on [0,1].
    theta3: even plateau, 1 on [-1,1] and 0 outside [-2,2].
    theta4: ramp 0 -> 1 on [3/4,1].
    theta_rbar, theta_theta: the bump profiles of the 3+1 example metrics.
    """

    smoothstep_order: int = 9

    def names(self):
        return ("theta1", "theta2", "theta3", "theta4", "theta_rbar", "theta_theta")

    def eval(self, name: str, x, order: int = 0):
        if not 0 <= order <= 4:
            raise ValueError(f"derivative order {order} outside 0..4")
        if name in ("theta1", "theta2"):
            return _rise(x, 0.0, 1.0, order)
        if name == "theta3":
            return _even_plateau(x, order)
        if name == "theta4":
            return _rise(x, 0.75, 1.0, order)
        if name == "theta_rbar":
            return _bump(x, 3.0, 4.0, 5.0, 6.0, order)
        if name == "theta_theta":
            return _bump(x, math.pi / 6, math.pi / 4, 3 * math.pi / 4, 5 * math.pi / 6, order)
        raise KeyError(f"unknown cutoff {name!r}")


DEFAULT_CUTOFFS = CutoffLibrary()


def smooth_cutoff(lib: CutoffLibrary, name: str, x, order: int = 0):
    """Evaluate a named cutoff from the library at x, optionally a derivative."""
    return lib.eval(name, x, order)


# ---------------------------------------------------------------------------
# models and chart points
# ---------------------------------------------------------------------------


class ModelKind(str, Enum):
    HYDRO_VORTEX = "hydro_vortex"
    HYDRO_VORTEX_DOUBLED = "hydro_vortex_doubled"
    BUMP_ERGOREGION_3D = "bump_ergoregion_3d"
    ALMOST_SCHWARZSCHILD_3D = "almost_schwarzschild_3d"
    MINKOWSKI = "minkowski"


_VORTEX_KINDS = (ModelKind.HYDRO_VORTEX, ModelKind.HYDRO_VORTEX_DOUBLED)
_3P1_KINDS = (ModelKind.BUMP_ERGOREGION_3D, ModelKind.ALMOST_SCHWARZSCHILD_3D)


@dataclass(frozen=True)
class SpacetimeModel:
    """A parameterized stationary metric family.

    C is the circulation of the vortex families, delta the inner wall radius,
    M the mass of the almost-Schwarzschild family.  chart_bounds is the radial
    extent of the coordinate chart; inner_bc declares how the wall at
    rbar = delta is treated downstream (dirichlet, neumann, or doubled).
    """

    kind: ModelKind
    C: float = 1.0
    delta: float = 0.2
    M: float = 1.0
    chart_bounds: tuple[float, float] | None = None
    inner_bc: str = "dirichlet"
    bump_profiles: tuple[str, str] = ("theta_rbar", "theta_theta")
    bump_amplitude: float | None = None
    cutoffs: CutoffLibrary = field(default=DEFAULT_CUTOFFS, repr=False, compare=False)

    def __post_init__(self):
        kind = ModelKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if self.bump_amplitude is None:
            # the flat bump example needs the profile product to exceed 1 on its
            # plateau, otherwise {g(T,T)>0} is empty and its boundary is no curve
            amp = 1.25 if kind is ModelKind.BUMP_ERGOREGION_3D else 1.0
            object.__setattr__(self, "bump_amplitude", amp)
        if kind in _VORTEX_KINDS:
            if not (self.C > self.delta > 0.0):
                raise ValueError(
                    f"vortex families need C > delta > 0, got C={self.C}, delta={self.delta}"
                )
        if self.M <= 0.0:
            raise ValueError("M must be positive")
        if self.inner_bc not in ("dirichlet", "neumann", "doubled"):
            raise ValueError(f"unknown inner_bc {self.inner_bc!r}")
        if self.inner_bc == "doubled" and kind is not ModelKind.HYDRO_VORTEX_DOUBLED:
            raise ValueError("inner_bc 'doubled' is reserved for the doubled family")
        if self.chart_bounds is None:
            object.__setattr__(self, "chart_bounds", self._default_bounds())
        lo, hi = self.chart_bounds
        if not lo < hi:
            raise ValueError(f"empty chart {self.chart_bounds}")

    def _default_bounds(self):
        if self.kind is ModelKind.HYDRO_VORTEX:
            return (self.delta, 40.0 * self.C)
        if self.kind is ModelKind.HYDRO_VORTEX_DOUBLED:
            return (2.0 * self.delta - 40.0 * self.C, 40.0 * self.C)
        if self.kind is ModelKind.ALMOST_SCHWARZSCHILD_3D:
            return (2.05 * self.M, 40.0 * self.M)
        if self.kind is ModelKind.BUMP_ERGOREGION_3D:
            return (0.01, 40.0)
        return (0.01, 40.0)

    @property
    def n_coords(self) -> int:
        return 4 if self.kind in _3P1_KINDS else 3

    @property
    def spatial_dim(self) -> int:
        return self.n_coords - 1

    def effective_radius(self, rbar):
        """Radius entering the vortex profile; folds the doubled chart."""
        rbar = np.asarray(rbar, dtype=float)
        if self.kind is ModelKind.HYDRO_VORTEX_DOUBLED:
            return np.abs(rbar - self.delta) + self.delta
        return rbar

    def contains(self, rbar, theta=None) -> bool:
        lo, hi = self.chart_bounds
        ok = bool(np.all((rbar >= lo) & (rbar <= hi)))
        if self.n_coords == 4:
            if theta is None:
                return False
            ok = ok and bool(np.all((theta > 0.0) & (theta < math.pi)))
        return ok


def hydro_vortex(C: float = 1.0, delta: float = 0.2, **kw) -> SpacetimeModel:
    return SpacetimeModel(ModelKind.HYDRO_VORTEX, C=C, delta=delta, **kw)


def hydro_vortex_doubled(C: float = 1.0, delta: float = 0.2, **kw) -> SpacetimeModel:
    kw.setdefault("inner_bc", "doubled")
    return SpacetimeModel(ModelKind.HYDRO_VORTEX_DOUBLED, C=C, delta=delta, **kw)


def minkowski(**kw) -> SpacetimeModel:
    return SpacetimeModel(ModelKind.MINKOWSKI, **kw)


@dataclass(frozen=True)
class ChartPoint:
    """Coordinates (t, rbar, phi) for 2+1 charts, (t, rbar, theta, phi) for 3+1."""

    t: float
    rbar: float
    phi: float
    theta: float | None = None

    def coords(self, model: SpacetimeModel) -> tuple[float, ...]:
        if model.n_coords == 4:
            if self.theta is None:
                raise ChartDomainError("3+1 chart point needs a polar angle theta")
            return (self.t, self.rbar, self.theta, self.phi)
        return (self.t, self.rbar, self.phi)


# ---------------------------------------------------------------------------
# metric evaluation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MetricData:
    """Metric components at a point, with inverse, volume factor, and g(T,T).

    g_ref holds the Riemannian comparison metric dt^2 + (induced slice metric),
    used for distances and norm envelopes.
    """

    g: np.ndarray
    g_inv: np.ndarray
    sqrt_abs_det: float
    gTT: float
    g_ref: np.ndarray


def _bump_factor(model: SpacetimeModel, rbar: float, theta: float) -> float:
    name_r, name_th = model.bump_profiles
    lib = model.cutoffs
    arg_r = rbar / model.M if model.kind is ModelKind.ALMOST_SCHWARZSCHILD_3D else rbar
    return model.bump_amplitude * float(lib.eval(name_r, arg_r) * lib.eval(name_th, theta))


def _components_at(model: SpacetimeModel, p: ChartPoint) -> np.ndarray:
    kind = model.kind
    r = p.rbar
    if kind is ModelKind.MINKOWSKI:
        return np.diag([-1.0, 1.0, r * r])
    if kind in _VORTEX_KINDS:
        rho = float(model.effective_radius(r))
        C = model.C
        g = np.zeros((3, 3))
        g[0, 0] = -(1.0 - C * C / rho**2)
        g[0, 2] = g[2, 0] = -C
        g[1, 1] = 1.0
        g[2, 2] = rho * rho
        return g
    th = p.theta
    b = _bump_factor(model, r, th)
    if kind is ModelKind.BUMP_ERGOREGION_3D:
        g = np.zeros((4, 4))
        g[0, 0] = -(1.0 - b * b)
        g[0, 3] = g[3, 0] = -500.0 * b
        g[1, 1] = 1.0
        g[2, 2] = r * r
        g[3, 3] = r * r * math.sin(th) ** 2
        return g
    if kind is ModelKind.ALMOST_SCHWARZSCHILD_3D:
        M = model.M
        lapse2 = 1.0 - 2.0 * M / r
        g = np.zeros((4, 4))
        g[0, 0] = -(lapse2 - b * b)
        g[0, 3] = g[3, 0] = -500.0 * M * b
        g[1, 1] = 1.0 / lapse2
        g[2, 2] = r * r
        g[3, 3] = r * r * math.sin(th) ** 2
        return g
    raise UnsupportedModelError(str(kind))


def _reference_metric(model: SpacetimeModel, p: ChartPoint, g: np.ndarray) -> np.ndarray:
    # dt^2 plus the induced metric of the constant-t slice
    g_ref = g.copy()
    g_ref[0, :] = 0.0
    g_ref[:, 0] = 0.0
    g_ref[0, 0] = 1.0
    return g_ref


def metric_at(model: SpacetimeModel, p: ChartPoint) -> MetricData:
    """Exact metric components at p with inverse and volume factor.

    Raises ChartDomainError off-chart and SignatureError when the determinant
    collapses below the floor.
    """
    if model.n_coords == 4 and p.theta is None:
        raise ChartDomainError("3+1 chart point needs theta")
    if not model.contains(p.rbar, p.theta):
        raise ChartDomainError(
            f"point rbar={p.rbar}, theta={p.theta} outside chart {model.chart_bounds}"
        )
    g = _components_at(model, p)
    det = float(np.linalg.det(g))
    if abs(det) < DET_FLOOR:
        raise SignatureError(f"degenerate metric at rbar={p.rbar} (det={det:.3e})")
    g_inv = np.linalg.inv(g)
    return MetricData(
        g=g,
        g_inv=g_inv,
        sqrt_abs_det=math.sqrt(abs(det)),
        gTT=float(g[0, 0]),
        g_ref=_reference_metric(model, p, g),
    )


def ergoregion_indicator(model: SpacetimeModel, p: ChartPoint) -> float:
    """g(T,T) at p: positive inside the ergoregion, negative outside."""
    return metric_at(model, p).gTT


def locate_ergosphere(model: SpacetimeModel, n_cells: int = 4096,
                      theta: float | None = None) -> float:
    """Scan the chart radially for the outermost sign change of g(T,T).

    Returns the midpoint of the bracketing cell; the cell width is the
    resolution guarantee.
    """
    lo, hi = model.chart_bounds
    grid = np.linspace(lo, hi, n_cells + 1)
    th = theta if theta is not None else (math.pi / 2 if model.n_coords == 4 else None)
    vals = np.array([
        ergoregion_indicator(model, ChartPoint(0.0, float(r), 0.0, th)) for r in grid
    ])
    sign_change = np.nonzero(np.signbit(vals[:-1]) != np.signbit(vals[1:]))[0]
    if sign_change.size == 0:
        raise ConstructionError("no ergosphere crossing found on the chart")
    i = int(sign_change[-1])
    return 0.5 * (grid[i] + grid[i + 1])


def stationary_radial_components(model: SpacetimeModel, r) -> dict:
    """Closed-form stationary metric data as arrays over radius (2+1 kinds only).

    Returns covariant and inverse components together with the observer
    rotation rate, the volume factor sqrt(-det g), and the induced slice
    volume sqrt(det g_Sigma).
    """
    if model.kind in _3P1_KINDS:
        raise UnsupportedModelError(
            f"{model.kind.value}: no closed-form radial reduction off the equator"
        )
    r = np.asarray(r, dtype=float)
    one = np.ones_like(r)
    if model.kind is ModelKind.MINKOWSKI:
        return {
            "g_tt": -one, "g_tphi": 0.0 * one, "g_phiphi": r * r, "g_rr": one,
            "inv_tt": -one, "inv_tphi": 0.0 * one, "inv_phiphi": 1.0 / r**2,
            "inv_rr": one, "rate": 0.0 * one, "vol": r, "sqrt_det_sigma": r,
        }
    rho = model.effective_radius(r)
    C = model.C
    return {
        "g_tt": -(1.0 - C * C / rho**2), "g_tphi": -C * one, "g_phiphi": rho * rho,
        "g_rr": one,
        "inv_tt": -one, "inv_tphi": -C / rho**2,
        "inv_phiphi": (rho**2 - C * C) / rho**4, "inv_rr": one,
        "rate": C / rho**2, "vol": rho, "sqrt_det_sigma": rho,
    }


def _bump_factor_derivs(model: SpacetimeModel, rbar: float, theta: float):
    name_r, name_th = model.bump_profiles
    lib = model.cutoffs
    scale = 1.0 / model.M if model.kind is ModelKind.ALMOST_SCHWARZSCHILD_3D else 1.0
    arg = rbar * scale
    fr = float(lib.eval(name_r, arg))
    dfr = float(lib.eval(name_r, arg, 1)) * scale
    ft = float(lib.eval(name_th, theta))
    dft = float(lib.eval(name_th, theta, 1))
    A = model.bump_amplitude
    return A * fr * ft, A * dfr * ft, A * fr * dft


def metric_derivatives(model: SpacetimeModel, p: ChartPoint) -> np.ndarray:
    """Coordinate derivatives d_alpha g_munu as an (n, n, n) array.

    Only the radial (and polar, in 3+1) slots are nonzero for these
    stationary axisymmetric families.  The doubled chart has a kink at the
    wall; there the one-sided positive branch is returned.
    """
    n = model.n_coords
    dg = np.zeros((n, n, n))
    r = p.rbar
    kind = model.kind
    if kind in _VORTEX_KINDS:
        rho = float(model.effective_radius(r))
        s = 1.0 if (kind is ModelKind.HYDRO_VORTEX or r >= model.delta) else -1.0
        C = model.C
        dg[1, 0, 0] = -2.0 * C * C / rho**3 * s
        dg[1, 2, 2] = 2.0 * rho * s
        return dg
    if kind is ModelKind.MINKOWSKI:
        dg[1, 2, 2] = 2.0 * r
        return dg
    th = p.theta
    b, b_r, b_th = _bump_factor_derivs(model, r, th)
    sin, cos = math.sin(th), math.cos(th)
    if kind is ModelKind.BUMP_ERGOREGION_3D:
        dg[1, 0, 0] = 2.0 * b * b_r
        dg[2, 0, 0] = 2.0 * b * b_th
        dg[1, 0, 3] = dg[1, 3, 0] = -500.0 * b_r
        dg[2, 0, 3] = dg[2, 3, 0] = -500.0 * b_th
        dg[1, 2, 2] = 2.0 * r
        dg[1, 3, 3] = 2.0 * r * sin**2
        dg[2, 3, 3] = 2.0 * r * r * sin * cos
        return dg
    M = model.M
    lapse2 = 1.0 - 2.0 * M / r
    dlapse2 = 2.0 * M / r**2
    dg[1, 0, 0] = -dlapse2 + 2.0 * b * b_r
    dg[2, 0, 0] = 2.0 * b * b_th
    dg[1, 0, 3] = dg[1, 3, 0] = -500.0 * M * b_r
    dg[2, 0, 3] = dg[2, 3, 0] = -500.0 * M * b_th
    dg[1, 1, 1] = -dlapse2 / lapse2**2
    dg[1, 2, 2] = 2.0 * r
    dg[1, 3, 3] = 2.0 * r * sin**2
    dg[2, 3, 3] = 2.0 * r * r * sin * cos
    return dg


def christoffel(model: SpacetimeModel, p: ChartPoint) -> np.ndarray:
    """Christoffel symbols Gamma^lam_munu at p from the analytic derivatives."""
    md = metric_at(model, p)
    dg = metric_derivatives(model, p)
    # braces[s, m, n] = d_m g_sn + d_n g_sm - d_s g_mn
    braces = np.transpose(dg, (1, 0, 2)) + np.transpose(dg, (1, 2, 0)) - dg
    return 0.5 * np.einsum("ls,smn->lmn", md.g_inv, braces)


# ---------------------------------------------------------------------------
# frame fields
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FrameFields:
    """The stationary field T, a globally timelike observer N, and the axial field Phi.

    Components are returned in the chart coordinate basis.  gNN_max is the
    certificate value: the maximum of g(N,N) over the validation grid (must be
    negative).  N approaches T beyond asymptotic_radius.
    """

    model: SpacetimeModel
    gNN_max: float
    asymptotic_radius: float

    def T_at(self, p: ChartPoint) -> np.ndarray:
        v = np.zeros(self.model.n_coords)
        v[0] = 1.0
        return v

    def Phi_at(self, p: ChartPoint) -> np.ndarray:
        v = np.zeros(self.model.n_coords)
        v[-1] = 1.0
        return v

    def N_at(self, p: ChartPoint) -> np.ndarray:
        v = np.zeros(self.model.n_coords)
        v[0] = 1.0
        v[-1] = self.angular_rate(p.rbar, p.theta)
        return v

    def angular_rate(self, rbar, theta=None):
        """Azimuthal component of N as a function of radius (and theta in 3+1)."""
        model = self.model
        if model.kind in _VORTEX_KINDS:
            rho = model.effective_radius(rbar)
            return model.C / rho**2
        if model.kind is ModelKind.MINKOWSKI:
            return 0.0 * np.asarray(rbar, dtype=float)
        th = theta if theta is not None else math.pi / 2
        return 0.1 * _bump_factor(model, float(rbar), float(th))


def _asymptotic_radius(model: SpacetimeModel) -> float:
    # radius beyond which N agrees with T: exactly for compact rotation bands,
    # to rotation rate below 1e-3 for the vortex tail
    if model.kind in _VORTEX_KINDS:
        return min(math.sqrt(1000.0 * model.C), model.chart_bounds[1])
    if model.kind is ModelKind.BUMP_ERGOREGION_3D:
        return 6.0
    if model.kind is ModelKind.ALMOST_SCHWARZSCHILD_3D:
        return 6.0 * model.M
    return model.chart_bounds[0]


def timelike_observer_N(model: SpacetimeModel, n_check: int = 256) -> FrameFields:
    """Build the globally timelike T-invariant observer field for the family.

    Vortex kinds use rotation rate C/rbar^2, which is exactly unit-timelike;
    the 3+1 examples co-rotate with a tenth of the bump factor.  The returned
    certificate is the grid maximum of g(N,N); a nonnegative value raises.
    """
    lo, hi = model.chart_bounds
    eps = 1e-9 * (hi - lo)
    radii = np.linspace(lo + eps, hi - eps, n_check)
    thetas = (
        np.linspace(0.05, math.pi - 0.05, 33) if model.n_coords == 4 else [None]
    )
    frame = FrameFields(model, gNN_max=0.0, asymptotic_radius=hi)
    worst = -np.inf
    for th in thetas:
        for r in radii:
            p = ChartPoint(0.0, float(r), 0.0, th)
            md = metric_at(model, p)
            n_vec = frame.N_at(p)
            val = float(n_vec @ md.g @ n_vec)
            worst = max(worst, val)
    if worst >= 0.0:
        raise ConstructionError(f"observer field not timelike: max g(N,N) = {worst:.3e}")
    return FrameFields(model, gNN_max=worst, asymptotic_radius=_asymptotic_radius(model))


# ---------------------------------------------------------------------------
# per-mode wave operator coefficients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ModeCoefficients:
    """Radial coefficients of the wave operator acting on u(t, rbar) e^{i m phi}.

    box(u e^{im phi}) = e^{im phi} [ a_tt u_tt + a_tr u_tr + a_rr u_rr
                                     + a_t u_t + a_r u_r + a_0 u ].
    a_t and a_0 are complex in general (frame dragging enters a_t linearly in m).
    """

    model: SpacetimeModel
    m: int

    def _inv(self, r):
        """Closed-form inverse components (g^tt, g^tphi, g^phiphi, g^rr, vol)."""
        c = stationary_radial_components(self.model, r)
        return c["inv_tt"], c["inv_tphi"], c["inv_phiphi"], c["inv_rr"], c["vol"]

    def a_tt(self, r):
        return self._inv(r)[0]

    def a_tr(self, r):
        return np.zeros_like(np.asarray(r, dtype=float))

    def a_rr(self, r):
        return self._inv(r)[3]

    def a_t(self, r):
        g_tphi = self._inv(r)[1]
        return 2j * self.m * g_tphi

    def a_r(self, r):
        # (vol * g^rr)' / vol with g^rr = 1; for the doubled chart the volume
        # factor is |rbar-delta|+delta so the log-derivative carries a sign
        model = self.model
        r = np.asarray(r, dtype=float)
        if model.kind is ModelKind.HYDRO_VORTEX_DOUBLED:
            rho = model.effective_radius(r)
            return np.where(r >= model.delta, 1.0, -1.0) / rho
        return 1.0 / r

    def a_0(self, r):
        g_phiphi = self._inv(r)[2]
        return -(self.m**2) * g_phiphi + 0j

    def characteristic_speed(self, r):
        """Radial characteristic speed of the principal part."""
        g_tt, _, _, g_rr, _ = self._inv(r)
        return np.sqrt(g_rr / (-g_tt))

    def apply(self, r, u, u_t, u_tt, u_r, u_rr, u_tr=None):
        """Evaluate the mode-reduced operator on supplied derivative arrays."""
        out = (
            self.a_tt(r) * u_tt
            + self.a_rr(r) * u_rr
            + self.a_t(r) * u_t
            + self.a_r(r) * u_r
            + self.a_0(r) * u
        )
        if u_tr is not None:
            out = out + self.a_tr(r) * u_tr
        return out


def wave_operator_coefficients(model: SpacetimeModel, m: int) -> ModeCoefficients:
    """Per-azimuthal-mode radial PDE coefficients of the wave operator.

    Only the axisymmetric 2+1 families reduce this way; the 3+1 bump examples
    carry polar-angle dependence and are rejected.
    """
    if model.kind in _3P1_KINDS:
        raise UnsupportedModelError(
            f"{model.kind.value} has angular structure; no single-mode radial reduction"
        )
    return ModeCoefficients(model, int(m))


# ---------------------------------------------------------------------------
# radial covariant calculus (used by the weight certificates)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadialGeometry:
    """Data needed for covariant derivatives of radial functions u(rbar).

    Encodes box u = (1/vol) d_r (vol * grr_inv * u') and the radial Hessian
    contraction through closed-form Christoffel data of the family.
    """

    model: SpacetimeModel

    def grr_inv(self, r):
        model = self.model
        r = np.asarray(r, dtype=float)
        if model.kind is ModelKind.ALMOST_SCHWARZSCHILD_3D:
            return 1.0 - 2.0 * model.M / r
        return np.ones_like(r)

    def volume(self, r):
        """sqrt(-det g) reduced to a function of radius (equatorial in 3+1)."""
        model = self.model
        r = np.asarray(r, dtype=float)
        if model.kind in _VORTEX_KINDS:
            return model.effective_radius(r)
        if model.kind is ModelKind.MINKOWSKI:
            return r
        # equatorial slice of the 3+1 families: area density r^2 with unit lapse
        # times the radial factor; frame-dragging bands do not alter the volume
        if model.kind is ModelKind.BUMP_ERGOREGION_3D:
            return r * r
        return r * r / np.sqrt(self.grr_inv(r))

    def dlog_volume(self, r):
        model = self.model
        r = np.asarray(r, dtype=float)
        if model.kind in _VORTEX_KINDS:
            rho = model.effective_radius(r)
            return np.where(r >= model.delta, 1.0, -1.0) / rho
        if model.kind is ModelKind.MINKOWSKI:
            return 1.0 / r
        if model.kind is ModelKind.BUMP_ERGOREGION_3D:
            return 2.0 / r
        M = model.M
        f = 1.0 - 2.0 * M / r
        return 2.0 / r - (M / r**2) / f

    def box_radial(self, r, du, d2u):
        """box of a t,phi-independent radial function from u' and u''."""
        G = self.grr_inv(r)
        dG = self._d_grr_inv(r)
        return G * d2u + (G * self.dlog_volume(r) + dG) * du

    def _d_grr_inv(self, r):
        model = self.model
        r = np.asarray(r, dtype=float)
        if model.kind is ModelKind.ALMOST_SCHWARZSCHILD_3D:
            return 2.0 * model.M / r**2
        return np.zeros_like(r)

    def hessian_contraction(self, r, du, d2u):
        """(grad grad u)(grad u, grad u) with indices raised, for radial u."""
        G = self.grr_inv(r)
        dG = self._d_grr_inv(r)
        # nabla_r nabla_r u = u'' - Gamma^r_rr u',  Gamma^r_rr = -dG/(2G)
        return (G * du) ** 2 * (d2u + 0.5 * dG / G * du)

    def grad_norm_sq(self, r, du):
        return self.grr_inv(r) * du**2


# ---------------------------------------------------------------------------
# zero-set topology scan for the 3+1 examples
# ---------------------------------------------------------------------------


def ergo_zero_set_scan(model: SpacetimeModel, n_r: int = 160, n_theta: int = 120) -> dict:
    """Check that the g(T,T) zero set is a single simple curve on the (r, theta) chart.

    Returns a report dict; raises ConstructionError on saddle cells (potential
    self-intersection), multiple positive components, or holes.
    """
    if model.n_coords != 4:
        raise UnsupportedModelError("zero-set scan applies to the 3+1 families")
    lo, hi = model.chart_bounds
    radii = np.linspace(lo, hi, n_r)
    thetas = np.linspace(0.02, math.pi - 0.02, n_theta)
    sign = np.zeros((n_r, n_theta), dtype=bool)
    for i, r in enumerate(radii):
        for j, th in enumerate(thetas):
            sign[i, j] = ergoregion_indicator(model, ChartPoint(0.0, float(r), 0.0, float(th))) > 0.0

    # saddle cells: both diagonals mixed, contour would cross itself
    a = sign[:-1, :-1]
    b = sign[1:, :-1]
    c = sign[:-1, 1:]
    d = sign[1:, 1:]
    saddles = int(np.sum((a == d) & (b == c) & (a != b)))

    def n_components(mask):
        seen = np.zeros_like(mask, dtype=bool)
        comps = 0
        for idx in zip(*np.nonzero(mask & ~seen)):
            if seen[idx]:
                continue
            comps += 1
            stack = [idx]
            seen[idx] = True
            while stack:
                i, j = stack.pop()
                for ii, jj in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                    if 0 <= ii < mask.shape[0] and 0 <= jj < mask.shape[1]:
                        if mask[ii, jj] and not seen[ii, jj]:
                            seen[ii, jj] = True
                            stack.append((ii, jj))
        return comps

    pos_comps = n_components(sign)
    # holes: complement cells unreachable from the chart border
    neg = ~sign
    border = np.zeros_like(neg)
    border[0, :] = border[-1, :] = True
    border[:, 0] = border[:, -1] = True
    reach = np.zeros_like(neg)
    stack = [idx for idx in zip(*np.nonzero(neg & border))]
    for idx in stack:
        reach[idx] = True
    while stack:
        i, j = stack.pop()
        for ii, jj in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
            if 0 <= ii < neg.shape[0] and 0 <= jj < neg.shape[1]:
                if neg[ii, jj] and not reach[ii, jj]:
                    reach[ii, jj] = True
                    stack.append((ii, jj))
    holes = int(np.sum(neg & ~reach))

    report = {
        "positive_components": pos_comps,
        "saddle_cells": saddles,
        "hole_cells": holes,
        "ergoregion_nonempty": bool(sign.any()),
    }
    if not sign.any():
        raise ConstructionError("ergoregion empty on scan grid")
    if saddles or pos_comps != 1 or holes:
        raise ConstructionError(f"zero set fails simple-curve scan: {report}")
    return report
