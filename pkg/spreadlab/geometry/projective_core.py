"""Points, lines and oriented lines of real projective 3-space.

Conventions, fixed here and nowhere else:

* A point is a nonzero 4-vector ``(x1, x2, x3, x4)``; the affine point
  ``(x, y, z)`` is ``(x, y, z, 1)`` and the plane at infinity is ``x4 = 0``.
* The line spanned by ``x`` and ``y`` has Pluecker vector
  ``p_ij = x_i y_j - x_j y_i`` in the order ``(p12, p13, p14, p23, p24, p34)``
  and satisfies ``p12 p34 - p13 p24 + p14 p23 = 0`` (the Klein quadric).
* An oriented line is a unit Pluecker vector whose sign is significant:
  the ordered pair ``(x, y)`` fixes the orientation, and bases related by a
  positive determinant give positive multiples of the same vector.
* For an affine line through ``P`` with direction ``d`` the vector carries
  ``d = -(p14, p24, p34)`` and the moment ``m = P x d = (p23, -p13, p12)``.
"""
from dataclasses import dataclass
from typing import Tuple, Union
import logging
import math

import numpy as np

from ..exceptions import DegenerateJoin, InfiniteLine, NotOnQuadric, SingularMatrix

logger = logging.getLogger(__name__)

ALGEBRAIC_TOL = 1e-12
EQUALITY_TOL = 1e-9
# Norms this close to 1 are taken as exact
UNIT_TOL = 1e-15

# Index pairs (i, j) of the Pluecker coordinates p_ij, zero-based
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_I = np.array([p[0] for p in PAIRS])
_J = np.array([p[1] for p in PAIRS])

# Polarity of the Klein quadric: pairing(p, q) = p @ KLEIN_FORM @ q
KLEIN_FORM = np.array([
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, -1, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, -1, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
], dtype=float)


def _as_vector(values, size: int) -> np.ndarray:
    vector = np.asarray(values, dtype=float).reshape(-1)
    if vector.shape != (size,):
        raise ValueError(f"expected {size} coordinates, got {vector.shape}")
    if not np.all(np.isfinite(vector)):
        raise ValueError(f"non-finite coordinates: {vector}")
    return vector


def _frozen(vector: np.ndarray) -> np.ndarray:
    vector = np.array(vector, dtype=float)
    vector.setflags(write=False)
    return vector


def _unit(vector: np.ndarray, norm: float) -> np.ndarray:
    # Unit inputs keep their bits, so negation and sign flips round-trip exactly
    return vector if abs(norm - 1.0) <= UNIT_TOL else vector / norm


def canonical_sign(vector: np.ndarray, tol: float = ALGEBRAIC_TOL) -> np.ndarray:
    """Flip ``vector`` so its first coordinate of magnitude > tol is positive."""
    for value in vector:
        if abs(value) > tol:
            return vector if value > 0 else -vector
    return vector


def quadric_residual(pluecker) -> float:
    p = np.asarray(pluecker, dtype=float)
    return float(abs(p[0] * p[5] - p[1] * p[4] + p[2] * p[3]))


def angular_distance(p, q) -> float:
    """Angle between two unit vectors, stable for nearly equal inputs."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    half = min(1.0, float(np.linalg.norm(p - q)) / 2.0)
    return 2.0 * math.asin(half)


@dataclass(frozen=True, eq=False)
class HPoint:
    """A point of PG(3,R), stored as a unit vector with positive leading entry."""
    coords: np.ndarray

    def __post_init__(self):
        vector = _as_vector(self.coords, 4)
        norm = np.linalg.norm(vector)
        if norm <= ALGEBRAIC_TOL:
            raise ValueError("the zero vector is not a projective point")
        object.__setattr__(self, 'coords', _frozen(canonical_sign(_unit(vector, norm))))

    @classmethod
    def affine(cls, xyz) -> 'HPoint':
        x, y, z = _as_vector(xyz, 3)
        return cls(np.array([x, y, z, 1.0]))

    @classmethod
    def at_infinity(cls, direction) -> 'HPoint':
        x, y, z = _as_vector(direction, 3)
        return cls(np.array([x, y, z, 0.0]))

    @property
    def is_at_infinity(self) -> bool:
        return abs(self.coords[3]) <= ALGEBRAIC_TOL

    def affine_coords(self) -> np.ndarray:
        if self.is_at_infinity:
            raise InfiniteLine(f"point {self.coords} lies at infinity")
        return self.coords[:3] / self.coords[3]

    def is_close(self, other: 'HPoint', tol: float = EQUALITY_TOL) -> bool:
        return angular_distance(self.coords, other.coords) <= tol

    def __repr__(self):
        return f"HPoint({np.array2string(self.coords, precision=6)})"


@dataclass(frozen=True, eq=False)
class OrientedLine:
    """A line with a preferred sense of traversal: a signed unit Pluecker vector."""
    pluecker: np.ndarray

    def __post_init__(self):
        vector = _as_vector(self.pluecker, 6)
        norm = np.linalg.norm(vector)
        if norm <= ALGEBRAIC_TOL:
            raise NotOnQuadric("the zero vector is not a line")
        object.__setattr__(self, 'pluecker', _frozen(_unit(vector, norm)))

    @classmethod
    def from_vector(cls, values, tol: float = ALGEBRAIC_TOL) -> 'OrientedLine':
        """Build from user data, rejecting vectors off the Klein quadric."""
        line = cls(values)
        residual = quadric_residual(line.pluecker)
        if residual > tol:
            raise NotOnQuadric(f"quadric residual {residual:.3e} exceeds {tol:.0e}")
        return line

    def __neg__(self) -> 'OrientedLine':
        return OrientedLine(-self.pluecker)

    @property
    def direction(self) -> np.ndarray:
        return pluecker_direction(self.pluecker)

    @property
    def moment(self) -> np.ndarray:
        return pluecker_moment(self.pluecker)

    @property
    def is_at_infinity(self) -> bool:
        return float(np.linalg.norm(self.direction)) <= ALGEBRAIC_TOL

    def is_close(self, other: 'OrientedLine', tol: float = EQUALITY_TOL) -> bool:
        return same_oriented_line(self, other, tol)

    def to_list(self) -> list:
        return [float(v) for v in self.pluecker]

    def __repr__(self):
        return f"OrientedLine({np.array2string(self.pluecker, precision=6)})"


@dataclass(frozen=True, eq=False)
class Line:
    """An unoriented line: the Pluecker vector with canonical sign."""
    pluecker: np.ndarray

    def __post_init__(self):
        vector = _as_vector(self.pluecker, 6)
        norm = np.linalg.norm(vector)
        if norm <= ALGEBRAIC_TOL:
            raise NotOnQuadric("the zero vector is not a line")
        object.__setattr__(self, 'pluecker', _frozen(canonical_sign(_unit(vector, norm))))

    @property
    def direction(self) -> np.ndarray:
        return pluecker_direction(self.pluecker)

    @property
    def moment(self) -> np.ndarray:
        return pluecker_moment(self.pluecker)

    def is_close(self, other: 'Line', tol: float = EQUALITY_TOL) -> bool:
        return line_distance(self.pluecker, other.pluecker) <= tol

    def __repr__(self):
        return f"Line({np.array2string(self.pluecker, precision=6)})"


AnyLine = Union[OrientedLine, Line]
PointLike = Union[HPoint, np.ndarray, list, tuple]


def line_distance(p, q) -> float:
    """Angular distance between the unoriented lines with vectors p and q."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    return min(angular_distance(p, q), angular_distance(p, -q))


def same_oriented_line(L: OrientedLine, M: OrientedLine, tol: float = EQUALITY_TOL) -> bool:
    return angular_distance(L.pluecker, M.pluecker) <= tol


def same_line(L: AnyLine, M: AnyLine, tol: float = EQUALITY_TOL) -> bool:
    return line_distance(L.pluecker, M.pluecker) <= tol


def _representative(x: PointLike) -> np.ndarray:
    if isinstance(x, HPoint):
        return np.array(x.coords)
    vector = _as_vector(x, 4)
    norm = np.linalg.norm(vector)
    if norm <= ALGEBRAIC_TOL:
        raise DegenerateJoin("cannot join the zero vector")
    return vector / norm


def wedge(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Raw Pluecker vector p_ij = x_i y_j - x_j y_i (no normalization)."""
    return x[_I] * y[_J] - x[_J] * y[_I]


def join_oriented(x: PointLike, y: PointLike, tol: float = EQUALITY_TOL) -> OrientedLine:
    """Oriented line from ``x`` towards ``y``.

    The orientation is that of the ordered pair of representatives; an
    ``HPoint`` contributes its canonical representative. Swapping the
    arguments negates the result.
    """
    u = _representative(x)
    v = _representative(y)
    p = wedge(u, v)
    # |u ^ v| is the sine of the angle between the unit representatives
    if np.linalg.norm(p) <= tol:
        raise DegenerateJoin(f"points {u} and {v} are projectively equal")
    return OrientedLine(p)


def meet_pairing(p: AnyLine, q: AnyLine) -> float:
    """Polar form of the Klein quadric; zero iff the two lines intersect."""
    a = p.pluecker
    b = q.pluecker
    return float(a[0] * b[5] - a[1] * b[4] + a[2] * b[3]
                 + a[5] * b[0] - a[4] * b[1] + a[3] * b[2])


def forget_orientation(L: OrientedLine) -> Line:
    return Line(L.pluecker)


def orientations_of(M: Line) -> Tuple[OrientedLine, OrientedLine]:
    return OrientedLine(M.pluecker), OrientedLine(-M.pluecker)


def reverse(L: OrientedLine) -> OrientedLine:
    return -L


def line_from_point_direction(p, u) -> OrientedLine:
    """Oriented affine line through ``p`` traversed along ``u``."""
    p = _as_vector(p, 3)
    u = _as_vector(u, 3)
    return join_oriented(np.append(p, 1.0), np.append(u, 0.0))


def affine_frame(L: AnyLine) -> Tuple[np.ndarray, np.ndarray]:
    """Closest point to the origin and unit direction of an affine line."""
    d = L.direction
    dd = float(d @ d)
    if dd <= ALGEBRAIC_TOL ** 2:
        raise InfiniteLine(f"{L!r} lies in the plane at infinity")
    foot = np.cross(d, L.moment) / dd
    return foot, d / math.sqrt(dd)


def dist_point_line(c, L: AnyLine) -> Tuple[float, np.ndarray]:
    """Euclidean distance from the affine point ``c`` to ``L`` and the foot."""
    c = _as_vector(c, 3)
    d = L.direction
    dd = float(d @ d)
    if dd <= ALGEBRAIC_TOL ** 2:
        raise InfiniteLine(f"{L!r} lies in the plane at infinity")
    moment_about_c = L.moment - np.cross(c, d)
    offset = np.cross(d, moment_about_c) / dd
    return float(np.linalg.norm(offset)), c + offset


def compound_matrix(M: np.ndarray) -> np.ndarray:
    """Second compound of a 4x4 matrix: the induced map on Pluecker vectors."""
    M = np.asarray(M, dtype=float)
    rows_i, rows_j = _I[:, None], _J[:, None]
    cols_k, cols_l = _I[None, :], _J[None, :]
    return M[rows_i, cols_k] * M[rows_j, cols_l] - M[rows_i, cols_l] * M[rows_j, cols_k]


def apply_collineation(M, L: OrientedLine, tol: float = ALGEBRAIC_TOL) -> OrientedLine:
    """Image of ``L`` under the collineation ``x -> M x``.

    The image is renormalized with a positive factor, so scaling ``M`` by
    any nonzero scalar leaves the result unchanged.
    """
    M = np.asarray(M, dtype=float)
    if M.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got {M.shape}")
    if abs(np.linalg.det(M)) <= tol:
        raise SingularMatrix(f"determinant {np.linalg.det(M):.3e} is too small")
    return OrientedLine(compound_matrix(M) @ L.pluecker)


def rotation_collineation(R: np.ndarray) -> np.ndarray:
    """The 4x4 matrix diag(R, 1) of a linear map of affine 3-space."""
    M = np.eye(4)
    M[:3, :3] = np.asarray(R, dtype=float)
    return M


def affine_collineation(A: np.ndarray, t) -> np.ndarray:
    """The 4x4 matrix of the affine map x -> A x + t."""
    M = rotation_collineation(A)
    M[:3, 3] = _as_vector(t, 3)
    return M


def plane_basis(L: AnyLine) -> Tuple[np.ndarray, np.ndarray]:
    """Oriented orthonormal basis (u, v) of the 2-subspace of ``L``.

    With P the antisymmetric matrix of a unit decomposable bivector u ^ v,
    ``P w`` turns any unit vector ``w`` of the plane by a quarter turn
    against the orientation, so ``(w, -P w)`` is an oriented basis.
    """
    p = L.pluecker
    P = np.zeros((4, 4))
    P[_I, _J] = p
    P[_J, _I] = -p
    column = int(np.argmax(np.linalg.norm(P, axis=0)))
    u = P[:, column] / np.linalg.norm(P[:, column])
    v = -P @ u
    v = v - (v @ u) * u
    v = v / np.linalg.norm(v)
    return u, v


def incidence_residual(point: PointLike, L: AnyLine) -> float:
    """Distance of the unit point representative from the plane of ``L``."""
    x = _representative(point)
    u, v = plane_basis(L)
    return float(np.linalg.norm(x - (x @ u) * u - (x @ v) * v))


def point_on_line(L: AnyLine, t: float = 0.0) -> np.ndarray:
    """Homogeneous point ``cos(t) u + sin(t) v`` of the plane of ``L``."""
    u, v = plane_basis(L)
    return math.cos(t) * u + math.sin(t) * v


def random_unit_vectors(rng: np.random.Generator, n: int, dim: int) -> np.ndarray:
    vectors = rng.normal(size=(n, dim))
    return vectors / np.linalg.norm(vectors, axis=1, keepdims=True)


def random_oriented_lines(rng: np.random.Generator, n: int, min_sine: float = 1e-6) -> list:
    """Lines through two independent uniform points of S^3, skipping near-equal pairs."""
    lines = []
    while len(lines) < n:
        x, y = random_unit_vectors(rng, 2, 4)
        p = wedge(x, y)
        if np.linalg.norm(p) > min_sine:
            lines.append(OrientedLine(p))
    return lines


def pluecker_direction(p) -> np.ndarray:
    """Affine direction ``-(p14, p24, p34)``; zero for a line at infinity."""
    return -np.array([p[2], p[4], p[5]])


def pluecker_moment(p) -> np.ndarray:
    return np.array([p[3], -p[1], p[0]])
