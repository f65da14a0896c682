"""Parallelisms as orbits of a rotational spread under the rotation group.

Everything is computed in canonical coordinates: the placement
``(x, y, z) -> (x, y, s z + t)`` is folded into the profile, so the group is
always SO(3) fixing the origin. The class of ``omega(C)`` is labelled by
``omega((0, 0, h))``, the image of the oriented axis; in the non-oriented
case antipodal labels are identified.
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import List, Optional, Tuple
import logging
import math

import numpy as np
from scipy.spatial.transform import Rotation

from ..exceptions import (
    BadParameter,
    NotAcentric,
    NotO2Admissible,
    NotRegular,
    OrientationMismatch,
    PartitionFailure,
)
from .clifford import Quaternion, Side, StudyPair, clifford_orbit, clifford_side, study_map
from .projective_core import (
    ALGEBRAIC_TOL,
    EQUALITY_TOL,
    Line,
    OrientedLine,
    angular_distance,
    apply_collineation,
    canonical_sign,
    dist_point_line,
    forget_orientation,
    line_distance,
    point_on_line,
    random_oriented_lines,
    random_unit_vectors,
    rotation_collineation,
)
from .spreads import (
    Profile,
    RotationalSpread,
    build_spread,
    containing_line,
    default_grid,
    homothety_normal_form,
    is_centered,
    is_regular,
    r_of_d,
    regulus_line,
    transform_profile,
)

logger = logging.getLogger(__name__)

CLASSIFY_TOL = 1e-8
DISTINCT_TOL = 1e-6

# Half turn about the x-axis
OMEGA_X = Quaternion(0.0, 1.0, 0.0, 0.0)


class Gamma(Enum):
    SO2 = 'SO2'
    O2 = 'O2'

    def to_dict(self):
        return self.value


@dataclass(frozen=True)
class Placement:
    s: float = 1.0
    t: float = 0.0

    def __post_init__(self):
        if not self.s > 0:
            raise BadParameter(f"placement scale must be positive, got {self.s}")

    def to_dict(self) -> dict:
        return {'s': self.s, 't': self.t}


@dataclass(frozen=True)
class ParallelismSpec:
    profile: Profile
    handedness: int = 1
    placement: Placement = Placement()
    oriented: bool = True
    gamma: Gamma = Gamma.SO2

    def __post_init__(self):
        if self.handedness not in (1, -1):
            raise BadParameter(f"handedness must be +1 or -1, got {self.handedness}")
        if not self.oriented and self.gamma is not Gamma.O2:
            raise BadParameter("a non-oriented parallelism needs the O2 symmetry group")

    def to_dict(self) -> dict:
        return {
            'profile': self.profile.to_dict(),
            'handedness': self.handedness,
            'placement': self.placement.to_dict(),
            'oriented': self.oriented,
            'gamma': self.gamma.value,
        }


@dataclass(frozen=True, eq=False)
class ClassId:
    axis: np.ndarray
    oriented: bool = True

    def __post_init__(self):
        axis = np.asarray(self.axis, dtype=float).reshape(3)
        axis = axis / np.linalg.norm(axis)
        if not self.oriented:
            axis = canonical_sign(axis)
        axis.setflags(write=False)
        object.__setattr__(self, 'axis', axis)

    def distance(self, other: 'ClassId') -> float:
        if self.oriented and other.oriented:
            return angular_distance(self.axis, other.axis)
        return min(angular_distance(self.axis, other.axis), angular_distance(self.axis, -other.axis))

    def is_close(self, other: 'ClassId', tol: float = CLASSIFY_TOL) -> bool:
        return self.distance(other) <= tol

    def to_list(self) -> list:
        return [float(v) for v in self.axis]

    def __repr__(self):
        kind = '' if self.oriented else '+-'
        return f"ClassId({kind}{np.array2string(self.axis, precision=6)})"


def canonical_profile(spec: ParallelismSpec) -> Profile:
    return transform_profile(spec.profile, spec.placement.s, spec.placement.t)


def canonicalize(spec: ParallelismSpec) -> Tuple[Profile, int]:
    """Fold the placement into the profile."""
    profile = canonical_profile(spec)
    if spec.gamma is Gamma.O2 and not is_centered(profile):
        raise NotO2Admissible(
            f"{profile.name} is not centered at the origin; only SO2 is admissible")
    return profile, spec.handedness


@lru_cache(maxsize=128)
def _spread_of(spec: ParallelismSpec) -> RotationalSpread:
    """Base spread in canonical coordinates; oriented O2 specs must be centered."""
    if spec.oriented:
        return canonical_spread(spec)
    # Off-center non-oriented specs stay buildable for the partition failure
    return build_spread(canonical_profile(spec), spec.handedness)


@lru_cache(maxsize=128)
def canonical_spread(spec: ParallelismSpec) -> RotationalSpread:
    return build_spread(*canonicalize(spec))


def rotate_line(q: Quaternion, L: OrientedLine) -> OrientedLine:
    return apply_collineation(rotation_collineation(q.rotation_matrix()), L)


def rotate_line_by_matrix(R: np.ndarray, L: OrientedLine) -> OrientedLine:
    return apply_collineation(rotation_collineation(R), L)


def class_id_of_rotation(q: Quaternion, handedness: int = 1, oriented: bool = True) -> ClassId:
    return ClassId(q.rotation_matrix() @ np.array([0.0, 0.0, float(handedness)]), oriented)


def class_member_rotation(class_id: ClassId, handedness: int) -> np.ndarray:
    """A rotation matrix carrying ``(0, 0, h)`` to the class axis."""
    source = np.array([0.0, 0.0, float(handedness)])
    target = class_id.axis
    axis = np.cross(source, target)
    sine = float(np.linalg.norm(axis))
    cosine = float(source @ target)
    if sine <= ALGEBRAIC_TOL:
        if cosine > 0:
            return np.eye(3)
        return Rotation.from_rotvec([math.pi, 0.0, 0.0]).as_matrix()
    return Rotation.from_rotvec(axis / sine * math.atan2(sine, cosine)).as_matrix()


def class_spread(spec: ParallelismSpec, class_id: ClassId,
                 radii: Optional[np.ndarray] = None, n_phi: int = 8) -> List[OrientedLine]:
    """Sampled members of the class: the images of Z, V and a grid of reguli."""
    spread = _spread_of(spec)
    R = class_member_rotation(class_id, spread.handedness)
    radii = np.logspace(-2, 2, 9) if radii is None else radii
    lines = [spread.Z_plus, spread.V_plus]
    for r in radii:
        for phi in np.linspace(0.0, 2.0 * math.pi, n_phi, endpoint=False):
            lines.append(regulus_line(spread, float(r), float(phi)))
    return [rotate_line_by_matrix(R, line) for line in lines]


def class_line_through(spec: ParallelismSpec, class_id: ClassId, point) -> OrientedLine:
    """The member of the class through ``point`` (affine 3-vector or homogeneous 4-vector)."""
    spread = _spread_of(spec)
    R = class_member_rotation(class_id, spread.handedness)
    x = np.asarray(point, dtype=float).reshape(-1)
    if x.shape == (3,):
        x = np.append(x, 1.0)
    x = np.concatenate([R.T @ x[:3], x[3:]])
    return rotate_line_by_matrix(R, containing_line(spread, x))


def _frame(foot: np.ndarray, direction: np.ndarray) -> np.ndarray:
    f = foot / np.linalg.norm(foot)
    d = direction / np.linalg.norm(direction)
    d = d - (d @ f) * f
    d = d / np.linalg.norm(d)
    return np.column_stack([f, d, np.cross(f, d)])


def _classify_oriented(spread: RotationalSpread, L: OrientedLine) -> Tuple[np.ndarray, float]:
    h = spread.handedness
    direction = L.direction
    dd = float(np.linalg.norm(direction))

    if dd <= ALGEBRAIC_TOL:
        # Line at infinity: the image of V_plus under the rotation carrying e3 to its normal
        normal = L.moment / np.linalg.norm(L.moment)
        axis = h * normal
        R = class_member_rotation(ClassId(axis), h)
        member = rotate_line_by_matrix(R, spread.V_plus)
        return axis, angular_distance(member.pluecker, L.pluecker)

    distance, foot = dist_point_line(np.zeros(3), L)
    if distance <= ALGEBRAIC_TOL * max(1.0, dd):
        axis = direction / dd
        R = class_member_rotation(ClassId(axis), h)
        member = rotate_line_by_matrix(R, spread.Z_plus)
        return axis, angular_distance(member.pluecker, L.pluecker)

    r = r_of_d(spread.profile, distance)
    base = regulus_line(spread, r, 0.0)
    _, base_foot = dist_point_line(np.zeros(3), base)
    R = _frame(foot, direction) @ _frame(base_foot, base.direction).T
    member = rotate_line_by_matrix(R, base)
    axis = R @ np.array([0.0, 0.0, float(h)])
    return axis, angular_distance(member.pluecker, L.pluecker)


def parallel_class_of(spec: ParallelismSpec, L: OrientedLine,
                      expected: Optional[ClassId] = None) -> Tuple[ClassId, float]:
    """Class of ``L`` and the angular residual of its reconstruction.

    Non-oriented classification needs a centered canonical profile; for an
    off-center family the two orientations of a line fall into classes that
    are not antipodal and PartitionFailure is raised. With ``expected`` in
    the oriented case, a line that lies in the expected class only with its
    orientation reversed raises OrientationMismatch carrying its own class.
    """
    if isinstance(L, Line):
        L = OrientedLine(L.pluecker)
    spread = _spread_of(spec)
    if not spec.oriented and not is_centered(spread.profile):
        raise PartitionFailure(
            f"{spread.profile.name} is off center; non-oriented classes overlap")

    axis, residual = _classify_oriented(spread, L)
    class_id = ClassId(axis, spec.oriented)
    if residual > CLASSIFY_TOL:
        logger.warning(f"class reconstruction residual {residual:.3e} for {L!r}")

    if expected is not None and spec.oriented and not class_id.is_close(expected):
        reversed_axis, _ = _classify_oriented(spread, -L)
        if ClassId(reversed_axis).is_close(expected):
            raise OrientationMismatch(
                f"{L!r} lies in class {expected!r} only with reversed orientation",
                actual=class_id)
    return class_id, residual


def same_class(spec: ParallelismSpec, L: OrientedLine, M: OrientedLine) -> bool:
    first, _ = parallel_class_of(spec, L)
    second, _ = parallel_class_of(spec, M)
    return first.is_close(second)


@dataclass
class PartitionWitness:
    line: Line
    identity_class: ClassId
    rotated_class: ClassId
    rotated_line: OrientedLine
    spread_line: OrientedLine
    sample_point: np.ndarray
    gap: float
    axis_fixed: bool

    def to_dict(self) -> dict:
        return {
            'line': [float(v) for v in self.line.pluecker],
            'identity_class': self.identity_class.to_list(),
            'rotated_class': self.rotated_class.to_list(),
            'rotated_line': self.rotated_line.to_list(),
            'spread_line': self.spread_line.to_list(),
            'sample_point': [float(v) for v in self.sample_point],
            'gap': self.gap,
            'axis_fixed': self.axis_fixed,
        }


def partition_failure_witness(spec: ParallelismSpec) -> PartitionWitness:
    """Line Z lies in both C and omega_x(C) although the two spreads differ."""
    spread = _spread_of(spec)
    profile = spread.profile
    if is_centered(profile):
        raise NotAcentric(f"{profile.name} is centered; its non-oriented classes partition")

    Z = forget_orientation(spread.Z_plus)
    rotated_Z = rotate_line(OMEGA_X, spread.Z_plus)
    axis_fixed = line_distance(rotated_Z.pluecker, Z.pluecker) <= EQUALITY_TOL

    grid = default_grid()
    r = float(grid[int(np.argmax(np.abs(profile.b(grid))))])
    rotated_line = rotate_line(OMEGA_X, regulus_line(spread, r, 0.0))
    point = np.array([r, 0.0, -profile.b(r)])
    spread_line = containing_line(spread, point)
    gap = line_distance(spread_line.pluecker, rotated_line.pluecker)

    h = float(spread.handedness)
    witness = PartitionWitness(
        line=Z,
        identity_class=ClassId([0.0, 0.0, h]),
        rotated_class=ClassId([0.0, 0.0, -h]),
        rotated_line=rotated_line,
        spread_line=spread_line,
        sample_point=point,
        gap=gap,
        axis_fixed=axis_fixed,
    )
    logger.info(f"partition failure witness for {profile.name}: gap {gap:.3e} at r={r:.6g}")
    return witness


@dataclass
class StabilizerReport:
    invariant: bool
    worst_gap: float
    samples: int


def stabilizer_check(spec: ParallelismSpec, samples: int = 32, seed: int = 0) -> StabilizerReport:
    """Whether the half turn about the x-axis maps the base spread onto itself."""
    spread = _spread_of(spec)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        r = float(np.exp(rng.uniform(math.log(1e-2), math.log(1e2))))
        phi = float(rng.uniform(0.0, 2.0 * math.pi))
        image = rotate_line(OMEGA_X, regulus_line(spread, r, phi))
        member = containing_line(spread, point_on_line(image, 0.3))
        worst = max(worst, line_distance(member.pluecker, image.pluecker))
    return StabilizerReport(invariant=worst <= CLASSIFY_TOL, worst_gap=worst, samples=samples)


def _comparison_spec(spec: ParallelismSpec, normalize: bool) -> ParallelismSpec:
    if not normalize:
        return spec
    normal = homothety_normal_form(canonical_profile(spec))
    return ParallelismSpec(normal, spec.handedness, Placement(), spec.oriented, spec.gamma)


@dataclass
class CliffordComparison:
    side: Side
    samples: int
    agreements: int
    max_deviation: float
    worst_line: Optional[OrientedLine] = None

    @property
    def agreement(self) -> float:
        return self.agreements / self.samples if self.samples else 0.0

    @property
    def all_agree(self) -> bool:
        return self.agreements == self.samples

    def to_dict(self) -> dict:
        return {
            'side': self.side.value,
            'samples': self.samples,
            'agreements': self.agreements,
            'agreement': self.agreement,
            'max_deviation': self.max_deviation,
            'worst_line': self.worst_line.to_list() if self.worst_line is not None else None,
        }


def clifford_compare(spec: ParallelismSpec, samples: int = 500, seed: int = 0,
                     normalize: bool = True, require_regular: bool = False,
                     tol: float = DISTINCT_TOL) -> CliffordComparison:
    """Compare the parallelism with the Clifford parallelism of the matching side.

    For every sampled line L two partners are built: a member of L's class
    through a random point, which must share L's Study label, and a Clifford
    translate of L, which must share L's class. The deviation is the larger
    of the two mismatches.
    """
    target = _comparison_spec(spec, normalize)
    profile = canonical_profile(target)
    if require_regular and not (is_regular(profile) and is_centered(profile)):
        raise NotRegular(f"{profile.name} is not a centered regular profile")

    side = clifford_side(target.handedness)
    rng = np.random.default_rng(seed)
    lines = random_oriented_lines(rng, samples)
    points = random_unit_vectors(rng, samples, 4)
    quaternions = random_unit_vectors(rng, samples, 4)

    agreements, worst, worst_line = 0, 0.0, None
    for L, point, a in zip(lines, points, quaternions):
        class_id, _ = parallel_class_of(target, L)
        partner = class_line_through(target, class_id, point)
        label_gap = angular_distance(study_map(L).component(side).vector,
                                     study_map(partner).component(side).vector)
        translate = clifford_orbit(L, Quaternion.from_array(a), side)
        translate_id, _ = parallel_class_of(target, translate)
        deviation = max(label_gap, class_id.distance(translate_id))
        if deviation <= tol:
            agreements += 1
        if deviation > worst:
            worst, worst_line = deviation, L

    logger.info(f"clifford comparison {profile.name}: {agreements}/{samples} agree, "
                f"max deviation {worst:.3e}")
    return CliffordComparison(side, samples, agreements, worst, worst_line)


@dataclass
class DistinctnessWitness:
    line: OrientedLine
    member: OrientedLine
    class_in_first: ClassId
    class_in_second: ClassId
    member_class_in_second: ClassId
    gap: float
    first_contains: str

    def to_dict(self) -> dict:
        return {
            'line': self.line.to_list(),
            'member': self.member.to_list(),
            'class_in_first': self.class_in_first.to_list(),
            'class_in_second': self.class_in_second.to_list(),
            'member_class_in_second': self.member_class_in_second.to_list(),
            'gap': self.gap,
            'first_contains': self.first_contains,
        }


def _search(first: ParallelismSpec, second: ParallelismSpec, lines: List[OrientedLine],
            label: str) -> Optional[DistinctnessWitness]:
    for line in lines:
        first_id, _ = parallel_class_of(first, line)
        second_id, _ = parallel_class_of(second, line)
        for member in class_spread(first, first_id):
            member_id, _ = parallel_class_of(second, member)
            gap = member_id.distance(second_id)
            if gap > DISTINCT_TOL:
                return DistinctnessWitness(line, member, first_id, second_id, member_id, gap, label)
    return None


def distinctness_witness(spec_a: ParallelismSpec, spec_b: ParallelismSpec, trials: int = 16,
                         seed: int = 0, normalize: bool = True) -> Optional[DistinctnessWitness]:
    """A random line whose classes in the two parallelisms differ as line sets.

    A member of the first parallelism's class through that line which the
    second parallelism puts into another class separates the two sets.
    Returns None when none of the ``trials`` lines separates them at this resolution.
    """
    first = _comparison_spec(spec_a, normalize)
    second = _comparison_spec(spec_b, normalize)
    lines = random_oriented_lines(np.random.default_rng(seed), trials)
    witness = _search(first, second, lines, 'a') or _search(second, first, lines, 'b')
    if witness is None:
        logger.info("no distinctness witness found at this resolution")
    return witness
