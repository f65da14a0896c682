"""Rotational spreads assembled from coaxial reguli.

A profile ``(a, b)`` assigns to every radius ``r > 0`` the hyperbola in the
xz-half-plane with vertex ``(r, 0, b(r))`` and upper asymptote slope
``a(r)``. Rotating about the z-axis turns it into a one-sheeted hyperboloid
``x^2 + y^2 - (z - b)^2 / a^2 = r^2``; the spread takes one ruling of each
(handedness ``h``) and adds the axis ``Z`` and the horizontal line ``V`` at
infinity.
"""
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache
from typing import List, Optional, Tuple
import logging
import math

import numpy as np
from scipy.interpolate import PchipInterpolator
from scipy.optimize import bisect, minimize_scalar

from ..exceptions import BadParameter, MultipleRoots, NoRoot, NotBracketed, SingularMatrix
from .projective_core import (
    ALGEBRAIC_TOL,
    EQUALITY_TOL,
    HPoint,
    OrientedLine,
    AnyLine,
    affine_frame,
    angular_distance,
    incidence_residual,
    join_oriented,
    line_distance,
    line_from_point_direction,
    random_unit_vectors,
)

logger = logging.getLogger(__name__)

R_MIN = 1e-9
R_MAX = 1e9
SOLVER_XTOL = 1e-12
SOLVER_MAXITER = 200
ROOT_SCAN_POINTS = 64
# exp() stays finite below this
LOG_R_LIMIT = 700.0
Z_LIMIT_RADIUS = 1e-8
V_LIMIT_RADIUS = 1e8


class ProfileKind(Enum):
    REGULAR = 'regular'
    SATZ1 = 'satz1'
    SATZ2 = 'satz2'
    TABLE = 'table'

    def to_dict(self):
        return self.value


@lru_cache(maxsize=64)
def _table_interpolants(samples: tuple):
    table = np.array(samples, dtype=float)
    log_r = np.log(table[:, 0])
    log_a = np.log(table[:, 1])
    b = table[:, 2]
    head_slope = (log_a[1] - log_a[0]) / (log_r[1] - log_r[0])
    tail_slope = (log_a[-1] - log_a[-2]) / (log_r[-1] - log_r[-2])
    return (PchipInterpolator(log_r, log_a, extrapolate=False),
            PchipInterpolator(log_r, b, extrapolate=False),
            log_r, log_a, b, head_slope, tail_slope)


def _table_values(samples: tuple, r: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    log_a_fit, b_fit, log_r, log_a, b, head, tail = _table_interpolants(samples)
    x = np.log(r)
    below = x < log_r[0]
    above = x > log_r[-1]
    inside = ~(below | above)

    la = np.empty_like(x)
    bb = np.empty_like(x)
    la[inside] = log_a_fit(x[inside])
    bb[inside] = b_fit(x[inside])
    # Power law for a and constant b outside the table
    la[below] = log_a[0] + head * (x[below] - log_r[0])
    la[above] = log_a[-1] + tail * (x[above] - log_r[-1])
    bb[below] = b[0]
    bb[above] = b[-1]
    return np.exp(la), bb


@dataclass(frozen=True)
class Profile:
    """Hyperbola family ``a(r) = slope_scale * a0(radius_scale * r)`` and
    ``b(r) = height_scale * b0(radius_scale * r) + shift`` over a base kind.

    Closed-form kinds fold the scales into their parameters where they can,
    so equal families compare equal.
    """
    kind: ProfileKind
    params: tuple
    slope_scale: float = 1.0
    height_scale: float = 1.0
    shift: float = 0.0
    radius_scale: float = 1.0

    def _base(self, r: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        if self.kind is ProfileKind.REGULAR:
            (d,) = self.params
            return d / r, np.zeros_like(r)
        if self.kind is ProfileKind.SATZ1:
            w, c = self.params
            return r ** (-w), c * r ** (1.0 - w)
        if self.kind is ProfileKind.SATZ2:
            (d,) = self.params
            return d / r, -np.log(r)
        return _table_values(self.params, r)

    def evaluate(self, r) -> Tuple[np.ndarray, np.ndarray]:
        rr = np.asarray(r, dtype=float) * self.radius_scale
        a0, b0 = self._base(np.atleast_1d(rr))
        a = self.slope_scale * a0
        b = self.height_scale * b0 + self.shift
        if np.ndim(r) == 0:
            return float(a[0]), float(b[0])
        return a, b

    def a(self, r):
        return self.evaluate(r)[0]

    def b(self, r):
        return self.evaluate(r)[1]

    @property
    def name(self) -> str:
        if self.kind is ProfileKind.TABLE:
            label = f"table[{len(self.params)}]"
        else:
            label = f"{self.kind.value}({', '.join(f'{p:g}' for p in self.params)})"
        scales = []
        if self.slope_scale != 1.0:
            scales.append(f"a*{self.slope_scale:g}")
        if self.height_scale != 1.0:
            scales.append(f"b*{self.height_scale:g}")
        if self.shift != 0.0:
            scales.append(f"b+{self.shift:g}")
        if self.radius_scale != 1.0:
            scales.append(f"r*{self.radius_scale:g}")
        return label + (f" [{' '.join(scales)}]" if scales else '')

    def to_dict(self) -> dict:
        data = {'kind': self.kind.value}
        if self.kind in (ProfileKind.REGULAR, ProfileKind.SATZ2):
            data['d'] = self.params[0]
        elif self.kind is ProfileKind.SATZ1:
            data['w'], data['c'] = self.params
        else:
            data['samples'] = [list(row) for row in self.params]
        for key in ('slope_scale', 'height_scale', 'shift', 'radius_scale'):
            value = getattr(self, key)
            if value != (0.0 if key == 'shift' else 1.0):
                data[key] = value
        return data


def _folded(profile: Profile) -> Profile:
    alpha, beta = profile.slope_scale, profile.height_scale
    tau, mu = profile.shift, profile.radius_scale
    if profile.kind is ProfileKind.REGULAR:
        (d,) = profile.params
        return Profile(ProfileKind.REGULAR, (float(alpha * d / mu),), shift=float(tau))
    if profile.kind is ProfileKind.SATZ1:
        w, c = profile.params
        return Profile(ProfileKind.SATZ1, (float(w), float(beta * c * mu ** (1.0 - w))),
                       slope_scale=float(alpha * mu ** (-w)), shift=float(tau))
    if profile.kind is ProfileKind.SATZ2:
        (d,) = profile.params
        return Profile(ProfileKind.SATZ2, (float(alpha * d / mu),), height_scale=float(beta),
                       shift=float(tau - beta * math.log(mu)))
    return profile


def profile_regular(d: float = 1.0) -> Profile:
    if not d > 0:
        raise BadParameter(f"regular profile needs d > 0, got {d}")
    return Profile(ProfileKind.REGULAR, (float(d),))


def profile_satz1(w: float, c: float = 0.0) -> Profile:
    if not 0.0 < w < 1.0:
        raise BadParameter(f"satz1 profile needs w in (0, 1), got {w}")
    if not satz1_disjoint(w, c):
        logger.warning(f"satz1(w={w}, c={c}) violates (1-w)^2 c^2 < 4w; hyperbolae will cross")
    return Profile(ProfileKind.SATZ1, (float(w), float(c)))


def profile_satz2(d: float = 1.0) -> Profile:
    if not abs(d) >= 0.5:
        raise BadParameter(f"satz2 profile needs |d| >= 1/2, got {d}")
    # d < 0 is the mirror screw sense of |d|
    return Profile(ProfileKind.SATZ2, (float(abs(d)),))


def profile_table(samples) -> Profile:
    """Monotone cubic profile through ``(r, a, b)`` samples."""
    try:
        table = np.array(samples, dtype=float)
    except (TypeError, ValueError) as e:
        raise BadParameter(f"table samples are not numeric: {e}")
    if table.ndim != 2 or table.shape[1] != 3 or table.shape[0] < 3:
        raise BadParameter("table profile needs at least 3 rows of (r, a, b)")
    if not np.all(np.isfinite(table)):
        raise BadParameter("table profile contains non-finite values")
    if np.any(table[:, 0] <= 0) or np.any(np.diff(table[:, 0]) <= 0):
        raise BadParameter("table radii must be positive and strictly increasing")
    if np.any(table[:, 1] <= 0):
        raise BadParameter("table slopes a(r) must be positive")
    return Profile(ProfileKind.TABLE, tuple(tuple(float(v) for v in row) for row in table))


def profile_from_dict(data: dict) -> Profile:
    kind = ProfileKind(data['kind'])
    if kind is ProfileKind.REGULAR:
        base = profile_regular(data.get('d', 1.0))
    elif kind is ProfileKind.SATZ1:
        base = profile_satz1(data['w'], data.get('c', 0.0))
    elif kind is ProfileKind.SATZ2:
        base = profile_satz2(data.get('d', 1.0))
    else:
        base = profile_table(data['samples'])
    scales = {key: float(data[key]) for key in
              ('slope_scale', 'height_scale', 'shift', 'radius_scale') if key in data}
    if scales.get('slope_scale', 1.0) <= 0 or scales.get('radius_scale', 1.0) <= 0:
        raise BadParameter("slope_scale and radius_scale must be positive")
    return _folded(replace(base, **scales)) if scales else base


def satz1_disjoint(w: float, c: float) -> bool:
    return (1.0 - w) ** 2 * c ** 2 < 4.0 * w


def transform_profile(profile: Profile, s: float, t: float) -> Profile:
    """Image of the hyperbola family under ``(x, y, z) -> (x, y, s z + t)``."""
    if not s > 0:
        raise BadParameter(f"placement scale must be positive, got {s}")
    return _folded(replace(
        profile,
        slope_scale=profile.slope_scale * s,
        height_scale=profile.height_scale * s,
        shift=profile.shift * s + t,
    ))


def homothety_normal_form(profile: Profile) -> Profile:
    """Image under the homothety of R^3 that makes ``a(1) == 1``."""
    r1 = _solve_log(lambda x: math.log(profile.a(math.exp(x))), f"a(r) = 1 for {profile.name}")
    # Homothety by 1/r1: radii and heights shrink together, slopes stay
    return _folded(replace(
        profile,
        radius_scale=profile.radius_scale * r1,
        height_scale=profile.height_scale / r1,
        shift=profile.shift / r1,
    ))


def default_grid(n: int = 200) -> np.ndarray:
    return np.logspace(-3, 3, n)


def is_concentric(profile: Profile, grid: Optional[np.ndarray] = None, tol: float = EQUALITY_TOL) -> bool:
    b = profile.b(default_grid() if grid is None else grid)
    return float(np.max(b) - np.min(b)) <= tol


def is_centered(profile: Profile, grid: Optional[np.ndarray] = None, tol: float = EQUALITY_TOL) -> bool:
    b = profile.b(default_grid() if grid is None else grid)
    return float(np.max(np.abs(b))) <= tol


def is_regular(profile: Profile, grid: Optional[np.ndarray] = None, tol: float = EQUALITY_TOL) -> bool:
    grid = default_grid() if grid is None else grid
    return is_concentric(profile, grid, tol) and float(np.std(grid * profile.a(grid))) <= tol


@dataclass(frozen=True)
class RotationalSpread:
    profile: Profile
    handedness: int
    Z_plus: OrientedLine = field(compare=False)
    V_plus: OrientedLine = field(compare=False)

    @property
    def name(self) -> str:
        return f"{self.profile.name} h={self.handedness:+d}"

    def regulus_line(self, r: float, phi: float) -> OrientedLine:
        return regulus_line(self, r, phi)


def _regulus(profile: Profile, handedness: int, r: float, phi: float) -> OrientedLine:
    a, b = profile.evaluate(r)
    c, s = math.cos(phi), math.sin(phi)
    direction = np.array([-s, c, handedness * a])
    return line_from_point_direction([r * c, r * s, b], direction / np.linalg.norm(direction))


def build_spread(profile: Profile, handedness: int = 1) -> RotationalSpread:
    """Spread of one ruling per hyperboloid plus its two limit lines.

    The limit lines take the orientation the reguli converge to: Z_plus from
    a radius near zero, V_plus from a very large radius.
    """
    if handedness not in (1, -1):
        raise BadParameter(f"handedness must be +1 or -1, got {handedness}")
    near_axis = _regulus(profile, handedness, Z_LIMIT_RADIUS, 0.0).pluecker
    far_out = _regulus(profile, handedness, V_LIMIT_RADIUS, 0.0).pluecker
    z_sign = 1.0 if near_axis[5] >= 0 else -1.0
    v_sign = 1.0 if far_out[0] >= 0 else -1.0
    return RotationalSpread(
        profile=profile,
        handedness=handedness,
        Z_plus=OrientedLine([0, 0, 0, 0, 0, z_sign]),
        V_plus=OrientedLine([v_sign, 0, 0, 0, 0, 0]),
    )


def regulus_line(S: RotationalSpread, r: float, phi: float) -> OrientedLine:
    """Line of the ruling ``h`` through ``(r cos phi, r sin phi, b(r))``."""
    if not r > 0:
        raise BadParameter(f"regulus radius must be positive, got {r}")
    return _regulus(S.profile, S.handedness, r, phi)


def hyperboloid_residual(S: RotationalSpread, r: float, L: OrientedLine, n: int = 10) -> float:
    """Worst residual of ``x^2 + y^2 - (z - b)^2 / a^2 - r^2`` on n affine points of L."""
    a, b = S.profile.evaluate(r)
    foot, direction = affine_frame(L)
    worst = 0.0
    for t in np.linspace(-2.0, 2.0, n):
        x, y, z = foot + t * max(1.0, r) * direction
        worst = max(worst, abs(x * x + y * y - (z - b) ** 2 / a ** 2 - r * r) / max(1.0, r * r))
    return worst


def mirror(S: RotationalSpread) -> RotationalSpread:
    """Image under ``(x, y, z) -> (x, -y, z)``: same hyperbolae, other ruling."""
    return build_spread(S.profile, -S.handedness)


def reflect_z(S: RotationalSpread) -> RotationalSpread:
    """Image under ``(x, y, z) -> (x, y, -z)``."""
    flipped = _folded(replace(S.profile, height_scale=-S.profile.height_scale, shift=-S.profile.shift))
    return build_spread(flipped, -S.handedness)


def screw_sense(L: AnyLine) -> int:
    """Sign of ``D_z m_z``; unchanged by reversing L, zero for lines meeting the axis."""
    value = float(L.direction[2] * L.moment[2])
    if abs(value) <= ALGEBRAIC_TOL:
        return 0
    return 1 if value > 0 else -1


def axis_distance(L: AnyLine) -> float:
    d = L.direction
    m = L.moment
    horizontal = math.hypot(d[0], d[1])
    if horizontal <= ALGEBRAIC_TOL:
        return float(np.linalg.norm(m) / np.linalg.norm(d))
    return abs(float(m[2])) / horizontal


def d_of_r(profile: Profile, r):
    """Distance from the origin to the closest point of the hyperbola H_r."""
    a, b = profile.evaluate(r)
    d = np.sqrt(np.asarray(r, dtype=float) ** 2 + b ** 2 / (1.0 + a ** 2))
    return float(d) if np.ndim(r) == 0 else d


def d_by_minimization(profile: Profile, r: float, grid_points: int = 101) -> float:
    """Minimize ``sqrt(x^2 + z^2)`` along the branch: grid scan, then a bounded
    Brent search between the neighbours of the best grid point."""
    a, b = profile.evaluate(r)
    squared = lambda z: r * r + (z - b) ** 2 / (a * a) + z * z
    span = abs(b) + 1.0
    zs = np.linspace(-span, span, grid_points)
    values = squared(zs)
    k = int(np.clip(np.argmin(values), 1, grid_points - 2))
    result = minimize_scalar(squared, bounds=(zs[k - 1], zs[k + 1]), method='bounded',
                             options={'xatol': 1e-12})
    return math.sqrt(float(result.fun))


def _value(f, x: float) -> float:
    """``f(x)``, or nan once the profile leaves the floating range."""
    try:
        with np.errstate(all='ignore'):
            value = float(f(x))
    except (ArithmeticError, ValueError):
        return math.nan
    return value if math.isfinite(value) else math.nan


def _solve_log(f, label: str, lo: float = R_MIN, hi: float = R_MAX) -> float:
    """Root of ``f(log r)``, requiring exactly one sign change on a scan.

    The scan starts on [lo, hi] and widens geometrically on each side until
    a sign change shows up or ``f`` stops being finite there.
    """
    xs = np.linspace(math.log(lo), math.log(hi), ROOT_SCAN_POINTS)
    values = np.array([_value(f, x) for x in xs])
    width = xs[-1] - xs[0]
    while True:
        exact = np.nonzero(values == 0.0)[0]
        if len(exact):
            return math.exp(xs[exact[0]])
        signs = np.sign(values)
        changes = np.nonzero((signs[:-1] * signs[1:]) < 0)[0]
        if len(changes) > 1:
            raise MultipleRoots(f"{label}: {len(changes)} sign changes for r in "
                                f"[{math.exp(xs[0]):g}, {math.exp(xs[-1]):g}]")
        if len(changes) == 1:
            break

        grow_down = math.isfinite(values[0]) and xs[0] > -LOG_R_LIMIT
        grow_up = math.isfinite(values[-1]) and xs[-1] < LOG_R_LIMIT
        if not (grow_down or grow_up):
            raise NoRoot(f"{label}: no sign change for r in [{math.exp(xs[0]):g}, {math.exp(xs[-1]):g}]")
        if grow_down:
            below = np.linspace(max(xs[0] - width, -LOG_R_LIMIT), xs[0], ROOT_SCAN_POINTS)[:-1]
            xs = np.concatenate([below, xs])
            values = np.concatenate([[_value(f, x) for x in below], values])
        if grow_up:
            above = np.linspace(xs[-1], min(xs[-1] + width, LOG_R_LIMIT), ROOT_SCAN_POINTS)[1:]
            xs = np.concatenate([xs, above])
            values = np.concatenate([values, [_value(f, x) for x in above]])
        width *= 2.0

    k = int(changes[0])
    x = bisect(f, xs[k], xs[k + 1], xtol=SOLVER_XTOL, maxiter=SOLVER_MAXITER)
    logger.debug(f"{label}: root at r={math.exp(x):.17g}")
    return math.exp(x)


def r_of_d(profile: Profile, d: float) -> float:
    """Radius of the hyperbola whose closest point to the origin is at distance d."""
    if not d > 0:
        raise BadParameter(f"distance must be positive, got {d}")
    return _solve_log(lambda x: d_of_r(profile, math.exp(x)) - d, f"d={d:g} for {profile.name}")


def _as_homogeneous(p) -> np.ndarray:
    if isinstance(p, HPoint):
        return np.array(p.coords)
    vector = np.asarray(p, dtype=float).reshape(-1)
    if vector.shape == (3,):
        vector = np.append(vector, 1.0)
    return vector / np.linalg.norm(vector)


def containing_line(S: RotationalSpread, p) -> OrientedLine:
    """The spread member through the point ``p`` (HPoint, 4-vector or affine 3-vector)."""
    x = _as_homogeneous(p)
    profile, h = S.profile, S.handedness

    if abs(x[3]) <= ALGEBRAIC_TOL:
        u1, u2, u3 = x[:3]
        rho = math.hypot(u1, u2)
        if rho <= ALGEBRAIC_TOL:
            return S.Z_plus
        if abs(u3) <= ALGEBRAIC_TOL:
            return S.V_plus
        log_slope = math.log(abs(u3) / rho)
        r = _solve_log(lambda t: math.log(profile.a(math.exp(t))) - log_slope,
                       f"slope {abs(u3) / rho:.6g}")
        sigma = h * (1.0 if u3 > 0 else -1.0)
        return regulus_line(S, r, math.atan2(-sigma * u1, sigma * u2))

    px, py, pz = x[:3] / x[3]
    rho = math.hypot(px, py)
    if rho <= ALGEBRAIC_TOL * max(1.0, abs(pz)):
        return S.Z_plus

    def excess(t):
        r = math.exp(t)
        a, b = profile.evaluate(r)
        return r * r + ((pz - b) / a) ** 2 - rho * rho

    r = _solve_log(excess, f"point ({px:.6g}, {py:.6g}, {pz:.6g})")
    a, b = profile.evaluate(r)
    t = (pz - b) / (h * a)
    phi = math.atan2(py, px) - math.atan2(t, r)
    return regulus_line(S, r, phi)


def limit_gap(S: RotationalSpread, r: float, n_phi: int = 8) -> float:
    target = S.Z_plus if r < 1.0 else S.V_plus
    return max(angular_distance(regulus_line(S, r, phi).pluecker, target.pluecker)
               for phi in np.linspace(0.0, 2.0 * math.pi, n_phi, endpoint=False))


def graph_point(A, tau: float) -> HPoint:
    """Point of ``{(v, A v)}`` with ``v = (1, tau)`` (``v = (0, 1)`` for tau = inf)."""
    A = np.asarray(A, dtype=float)
    v = np.array([0.0, 1.0]) if math.isinf(tau) else np.array([1.0, tau])
    X = np.concatenate([v, A @ v])
    # The third coordinate of R^4 = W + S plays the role of x4
    return HPoint(np.array([X[0], X[1], X[3], X[2]]))


def graph_line(A, tau: float = 0.0) -> OrientedLine:
    """The 2-subspace ``{(v, A v) | v in W}`` as an oriented line of PG(3,R).

    The orientation is that of W's standard basis; ``tau`` only selects the
    anchor point and does not change the result.
    """
    A = np.asarray(A, dtype=float)
    if A.shape != (2, 2) or abs(np.linalg.det(A)) <= ALGEBRAIC_TOL:
        raise SingularMatrix(f"graph matrix must be a regular 2x2 matrix, got {A.tolist()}")
    if math.isinf(tau):
        basis = (np.array([0.0, 1.0]), np.array([-1.0, 0.0]))
    else:
        basis = (np.array([1.0, tau]), np.array([0.0, 1.0]))
    points = []
    for v in basis:
        X = np.concatenate([v, A @ v])
        points.append(np.array([X[0], X[1], X[3], X[2]]))
    return join_oriented(points[0], points[1])


def satz1_matrix(w: float, c: float, s: float) -> np.ndarray:
    return np.array([[s, 0.0], [s ** w * c, s ** w]])


def satz2_matrix(d: float, t: float) -> np.ndarray:
    e = math.exp(t)
    return np.array([[e, 0.0], [t * e, d * e]])


def _graph_gap(A: np.ndarray, regulus: OrientedLine) -> float:
    """Line distance between the graph subspace and the regulus line, or the
    worst incidence residual of sampled graph points, whichever is larger."""
    gap = line_distance(graph_line(A).pluecker, regulus.pluecker)
    for tau in (0.0, 1.0, math.inf):
        gap = max(gap, incidence_residual(graph_point(A, tau), regulus))
    return gap


def satz_crosscheck(w: float, c: float, s: float) -> Tuple[bool, float]:
    """Compare the graph subspace A(s) with the regulus line at ``r = 1/s``."""
    if not s > 0:
        raise BadParameter(f"cross section parameter must be positive, got {s}")
    regulus = regulus_line(build_spread(profile_satz1(w, c), 1), 1.0 / s, 0.0)
    gap = _graph_gap(satz1_matrix(w, c, s), regulus)
    return gap <= EQUALITY_TOL, gap


def satz2_crosscheck(d: float, t: float) -> Tuple[bool, float]:
    """Compare the graph subspace A(t) with the regulus line at ``r = exp(-t)``."""
    handedness = 1 if d > 0 else -1
    regulus = regulus_line(build_spread(profile_satz2(d), handedness), math.exp(-t), 0.0)
    gap = _graph_gap(satz2_matrix(d, t), regulus)
    return gap <= EQUALITY_TOL, gap


@dataclass
class ProfileCheck:
    name: str
    passed: bool
    value: float
    detail: str = ''

    def to_dict(self) -> dict:
        return {'name': self.name, 'passed': self.passed, 'value': self.value, 'detail': self.detail}


@dataclass
class ProfileReport:
    profile: str
    checks: List[ProfileCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failed(self) -> List[ProfileCheck]:
        return [check for check in self.checks if not check.passed]

    def to_dict(self) -> dict:
        return {'profile': self.profile, 'passed': self.passed,
                'checks': [check.to_dict() for check in self.checks]}


def disjointness_margin(profile: Profile, grid: np.ndarray, z_grid: np.ndarray) -> Tuple[float, float, float]:
    """Smallest ``X_{r2}(z) - X_{r1}(z)`` over adjacent radii, with its (r1, z)."""
    a, b = profile.evaluate(grid)
    X = np.sqrt(grid[:, None] ** 2 + ((z_grid[None, :] - b[:, None]) / a[:, None]) ** 2)
    gaps = X[1:] - X[:-1]
    i, j = np.unravel_index(int(np.argmin(gaps)), gaps.shape)
    return float(gaps[i, j]), float(grid[i]), float(z_grid[j])


def default_z_grid(n: int = 121) -> np.ndarray:
    positive = np.logspace(-3, 3, n)
    return np.concatenate([-positive[::-1], [0.0], positive])


def validate_profile(profile: Profile, grid: Optional[np.ndarray] = None,
                     z_grid: Optional[np.ndarray] = None, n_cover: int = 50,
                     seed: int = 0) -> ProfileReport:
    """Numeric spread conditions of a profile; failures are report entries."""
    grid = default_grid() if grid is None else np.sort(np.asarray(grid, dtype=float))
    z_grid = default_z_grid() if z_grid is None else np.asarray(z_grid, dtype=float)
    report = ProfileReport(profile=profile.name)
    a, _ = profile.evaluate(grid)

    steps = np.diff(a)
    worst = int(np.argmax(steps))
    report.checks.append(ProfileCheck(
        'a_strictly_decreasing', bool(np.all(steps < 0)), float(steps[worst]),
        f"largest step at r={grid[worst]:.6g}"))

    a1 = profile.a(1.0)
    report.checks.append(ProfileCheck(
        'a_limit_at_zero', profile.a(1e-6) >= 10.0 * a1, float(profile.a(1e-6)), 'a(1e-6) >= 10 a(1)'))
    report.checks.append(ProfileCheck(
        'a_limit_at_infinity', profile.a(1e6) <= a1 / 10.0, float(profile.a(1e6)), 'a(1e6) <= a(1)/10'))

    margin, r1, z = disjointness_margin(profile, grid, z_grid)
    report.checks.append(ProfileCheck(
        'hyperbolae_disjoint', margin > 0.0, margin, f"closest approach after r={r1:.6g} at z={z:.6g}"))

    if profile.kind is ProfileKind.SATZ1 and profile.slope_scale == 1.0 and profile.shift == 0.0:
        w, c = profile.params
        value = 4.0 * w - (1.0 - w) ** 2 * c ** 2
        report.checks.append(ProfileCheck('satz1_discriminant', value > 0, value, '(1-w)^2 c^2 < 4w'))

    d = d_of_r(profile, grid)
    d_steps = np.diff(d)
    report.checks.append(ProfileCheck(
        'd_injective', bool(np.all(d_steps > 0)), float(np.min(d_steps)), 'd(r) strictly increasing on grid'))

    spread = build_spread(profile, 1)
    rng = np.random.default_rng(seed)
    worst_residual, failure = 0.0, ''
    for point in random_unit_vectors(rng, n_cover, 4):
        try:
            residual = incidence_residual(point, containing_line(spread, point))
        except (NoRoot, MultipleRoots, NotBracketed) as e:
            residual, failure = math.inf, str(e)
            break
        worst_residual = max(worst_residual, residual)
    report.checks.append(ProfileCheck(
        'covering', worst_residual <= EQUALITY_TOL, worst_residual, failure))

    if not report.passed:
        logger.info(f"profile {profile.name} failed: {[c.name for c in report.failed()]}")
    return report
