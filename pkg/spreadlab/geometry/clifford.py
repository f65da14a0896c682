"""Quaternion model of R^4, the Study map and oriented Clifford parallelism.

Homogeneous point coordinates are read as quaternions with
``e1 <-> 1, e2 <-> i, e3 <-> j, e4 <-> k``. An oriented line with oriented
orthonormal basis ``(u, v)`` gets the labels ``left = conj(u) v`` and
``right = v conj(u)``, both pure unit quaternions. The left label is
constant on orbits of ``x -> a x`` and the right label on orbits of
``x -> x b``.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple
import logging
import math

import numpy as np
from scipy.spatial.transform import Rotation

from .projective_core import (
    EQUALITY_TOL,
    OrientedLine,
    angular_distance,
    apply_collineation,
    join_oriented,
    plane_basis,
)

logger = logging.getLogger(__name__)

UNIT_TOL = 1e-12


@dataclass(frozen=True)
class Quaternion:
    w: float = 1.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, values) -> 'Quaternion':
        w, x, y, z = (float(v) for v in np.asarray(values, dtype=float).reshape(4))
        return cls(w, x, y, z)

    @classmethod
    def pure(cls, vector) -> 'Quaternion':
        x, y, z = (float(v) for v in np.asarray(vector, dtype=float).reshape(3))
        return cls(0.0, x, y, z)

    @classmethod
    def from_axis_angle(cls, axis, angle: float) -> 'Quaternion':
        axis = np.asarray(axis, dtype=float)
        axis = axis / np.linalg.norm(axis)
        half = angle / 2.0
        return cls(math.cos(half), *(math.sin(half) * axis))

    def to_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def __iter__(self):
        return iter((self.w, self.x, self.y, self.z))

    def __neg__(self) -> 'Quaternion':
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __add__(self, other: 'Quaternion') -> 'Quaternion':
        return Quaternion.from_array(self.to_array() + other.to_array())

    def __sub__(self, other: 'Quaternion') -> 'Quaternion':
        return Quaternion.from_array(self.to_array() - other.to_array())

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            return Quaternion.from_array(self.to_array() * float(other))
        return Quaternion.from_array(left_matrix(self) @ other.to_array())

    __rmul__ = __mul__

    def conjugate(self) -> 'Quaternion':
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return float(np.linalg.norm(self.to_array()))

    def normalized(self) -> 'Quaternion':
        n = self.norm()
        if n <= UNIT_TOL:
            raise ValueError("cannot normalize the zero quaternion")
        return Quaternion.from_array(self.to_array() / n)

    def is_unit(self, tol: float = UNIT_TOL) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def is_pure(self, tol: float = UNIT_TOL) -> bool:
        return abs(self.w) <= tol

    def rotation_matrix(self) -> np.ndarray:
        """Matrix of ``p -> q p conj(q)`` on pure quaternions."""
        return Rotation.from_quat([self.x, self.y, self.z, self.w]).as_matrix()

    def __repr__(self):
        return f"Quaternion({self.w:.6g}, {self.x:.6g}, {self.y:.6g}, {self.z:.6g})"


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def left_matrix(a: Quaternion) -> np.ndarray:
    """4x4 matrix of ``q -> a q``."""
    w, x, y, z = a
    return np.array([
        [w, -x, -y, -z],
        [x, w, -z, y],
        [y, z, w, -x],
        [z, -y, x, w],
    ])


def right_matrix(b: Quaternion) -> np.ndarray:
    """4x4 matrix of ``q -> q b``."""
    w, x, y, z = b
    return np.array([
        [w, -x, -y, -z],
        [x, w, z, -y],
        [y, -z, w, x],
        [z, y, -x, w],
    ])


class Side(Enum):
    LEFT = 'left'
    RIGHT = 'right'

    def to_dict(self):
        return self.value


@dataclass(frozen=True)
class StudyPair:
    left: Quaternion
    right: Quaternion

    def __neg__(self) -> 'StudyPair':
        return StudyPair(-self.left, -self.right)

    def component(self, side: Side) -> Quaternion:
        return self.left if Side(side) is Side.LEFT else self.right

    def distance(self, other: 'StudyPair') -> float:
        """Larger of the two component angles on S^2."""
        return max(
            angular_distance(self.left.vector, other.left.vector),
            angular_distance(self.right.vector, other.right.vector),
        )

    def to_dict(self) -> dict:
        return {
            'left': [float(v) for v in self.left.vector],
            'right': [float(v) for v in self.right.vector],
        }


def oriented_basis(L: OrientedLine) -> Tuple[np.ndarray, np.ndarray]:
    """Orthonormal ``(u, v)`` with ``join_oriented(u, v) == L``."""
    return plane_basis(L)


def study_map(L: OrientedLine) -> StudyPair:
    u, v = oriented_basis(L)
    qu = Quaternion.from_array(u)
    qv = Quaternion.from_array(v)
    left = qu.conjugate() * qv
    right = qv * qu.conjugate()
    # Orthonormality makes both products pure; drop the rounding residue
    return StudyPair(Quaternion.pure(left.vector).normalized(),
                     Quaternion.pure(right.vector).normalized())


def _perpendicular(vector: np.ndarray) -> np.ndarray:
    helper = np.eye(3)[int(np.argmin(np.abs(vector)))]
    perp = np.cross(vector, helper)
    return perp / np.linalg.norm(perp)


def line_from_study(pair: StudyPair) -> OrientedLine:
    """The unique oriented line whose labels are ``pair``.

    ``u`` rotates the left label onto the right one, so the line spanned by
    ``u`` and ``u * left`` has left label ``left`` and right label
    ``u left conj(u) = right``.
    """
    left = Quaternion.pure(pair.left.vector).normalized()
    right = Quaternion.pure(pair.right.vector).normalized()
    u = ONE - right * left
    if u.norm() <= 1e-9:
        # right == -left: any half turn about an axis perpendicular to left
        u = Quaternion.pure(_perpendicular(left.vector))
    u = u.normalized()
    return join_oriented((u).to_array(), (u * left).to_array())


def left_parallel(L: OrientedLine, M: OrientedLine, tol: float = EQUALITY_TOL) -> bool:
    return angular_distance(study_map(L).left.vector, study_map(M).left.vector) <= tol


def right_parallel(L: OrientedLine, M: OrientedLine, tol: float = EQUALITY_TOL) -> bool:
    return angular_distance(study_map(L).right.vector, study_map(M).right.vector) <= tol


def clifford_orbit(L: OrientedLine, a: Quaternion, side) -> OrientedLine:
    """Image of ``L`` under ``x -> a x`` (left) or ``x -> x a`` (right)."""
    if not a.is_unit(1e-9):
        raise ValueError(f"{a!r} is not a unit quaternion")
    matrix = left_matrix(a) if Side(side) is Side.LEFT else right_matrix(a)
    return apply_collineation(matrix, L)


def clifford_side(handedness: int) -> Side:
    """Study component matched by centered regular spreads of this screw sense."""
    return Side.LEFT if handedness > 0 else Side.RIGHT
