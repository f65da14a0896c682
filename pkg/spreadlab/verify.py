"""Property suites over spreads, parallelisms and the Study map.

Every suite draws its samples up front from ``numpy.random.default_rng(seed)``
and reduces per-sample results with max/count, so a report depends only on
its seed and parameters, never on the worker count.
"""
from dataclasses import dataclass, field, fields
from functools import wraps
from typing import Dict, List, Optional
import inspect
import logging
import math

import numpy as np

from .config import Config
from .exceptions import ConfigurationError, GeometryError, NotO2Admissible
from .statistics import ResidualStatistics
from .tasks import run_partitioned
from .geometry.clifford import (
    Quaternion,
    Side,
    clifford_orbit,
    line_from_study,
    oriented_basis,
    study_map,
)
from .geometry.parallelisms import (
    Gamma,
    ParallelismSpec,
    Placement,
    canonical_profile,
    canonicalize,
    class_line_through,
    clifford_compare,
    distinctness_witness,
    parallel_class_of,
    partition_failure_witness,
    rotate_line,
)
from .geometry.projective_core import (
    OrientedLine,
    angular_distance,
    dist_point_line,
    forget_orientation,
    incidence_residual,
    join_oriented,
    line_distance,
    meet_pairing,
    orientations_of,
    point_on_line,
    quadric_residual,
    random_oriented_lines,
    random_unit_vectors,
    reverse,
)
from .geometry.spreads import (
    Profile,
    RotationalSpread,
    build_spread,
    containing_line,
    d_by_minimization,
    d_of_r,
    default_grid,
    is_centered,
    profile_regular,
    profile_satz1,
    profile_satz2,
    r_of_d,
    reflect_z,
    regulus_line,
    screw_sense,
    validate_profile,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tolerances:
    algebraic: float = 1e-12
    solver: float = 1e-9
    classify: float = 1e-8
    accept: float = 1e-6

    @classmethod
    def from_overrides(cls, overrides: Optional[Dict[str, float]] = None) -> 'Tolerances':
        values = dict(Config.TOLERANCES)
        for key, value in (overrides or {}).items():
            if key not in values:
                raise ConfigurationError(f"Unknown tolerance '{key}'")
            values[key] = float(value)
        return cls(**values)

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass
class CheckReport:
    name: str
    passed: bool
    residual: float
    samples: int
    seed: Optional[int]
    parameters: dict = field(default_factory=dict)
    witness: Optional[dict] = None
    details: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return 'pass' if self.passed else 'fail'

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'status': self.status,
            'residual': self.residual,
            'samples': self.samples,
            'seed': self.seed,
            'parameters': self.parameters,
            'witness': self.witness,
            'details': self.details,
        }


def _worst(values) -> float:
    values = list(values)
    return max(values) if values else 0.0


def _first_failure(outcomes: List[dict]) -> Optional[dict]:
    for outcome in outcomes:
        if not outcome['ok']:
            return outcome
    return None


def spread_parameters(S: RotationalSpread) -> dict:
    return {'profile': S.profile.to_dict(), 'handedness': S.handedness}


def _describe(value):
    if isinstance(value, RotationalSpread):
        return spread_parameters(value)
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    if isinstance(value, (list, tuple)):
        return [_describe(v) for v in value]
    if isinstance(value, np.ndarray):
        return value.tolist()
    return value


def handle_solver_errors(name: str):
    """Turn a solver or geometry error inside a check into a failing report."""
    def decorator(check):
        signature = inspect.signature(check)

        @wraps(check)
        def wrapper(*args, **kwargs):
            try:
                return check(*args, **kwargs)
            except (GeometryError, ArithmeticError, ValueError) as e:
                bound = signature.bind(*args, **kwargs)
                bound.apply_defaults()
                arguments = {k: v for k, v in bound.arguments.items() if k not in ('tolerances', 'workers')}
                logger.error(f"{name} aborted: {type(e).__name__}: {e}")
                return CheckReport(
                    name=name, passed=False, residual=math.inf, samples=0,
                    seed=arguments.get('seed'),
                    parameters={k: _describe(v) for k, v in arguments.items()},
                    witness={'error': f"{type(e).__name__}: {e}"},
                )
        return wrapper
    return decorator


def sample_points(rng: np.random.Generator, n: int) -> np.ndarray:
    """Uniform points of S^3 with every tenth on the axis and every tenth at infinity"""
    points = random_unit_vectors(rng, n, 4)
    heights = rng.normal(size=n)
    for k in range(n):
        if k % 10 == 3:
            points[k] = np.array([0.0, 0.0, heights[k], 1.0])
        elif k % 10 == 7:
            points[k, 3] = 0.0
        points[k] /= np.linalg.norm(points[k])
    return points


@handle_solver_errors('spread')
def check_spread(S: RotationalSpread, n_points: int = 1000, n_pairs: int = 1000, seed: int = 7,
                 tolerances: Tolerances = Tolerances(), workers: int = 1) -> CheckReport:
    """Every sampled point lies on exactly one member; sampled members are pairwise skew."""
    logger.info(f"check_spread {S.name}: {n_points} points, {n_pairs} pairs, seed {seed}")
    rng = np.random.default_rng(seed)
    points = sample_points(rng, n_points)
    log_r = rng.uniform(math.log(1e-3), math.log(1e3), size=(n_pairs, 2))
    phis = rng.uniform(0.0, 2.0 * math.pi, size=(n_pairs, 2))

    def cover(point):
        try:
            line = containing_line(S, point)
        except GeometryError as e:
            return {'ok': False, 'residual': math.inf, 'point': point.tolist(), 'error': str(e)}
        residual = incidence_residual(point, line)
        return {'ok': residual <= tolerances.classify, 'residual': residual,
                'point': point.tolist(), 'line': line.to_list()}

    def disjoint(k):
        first = regulus_line(S, math.exp(log_r[k, 0]), phis[k, 0])
        second = regulus_line(S, math.exp(log_r[k, 1]), phis[k, 1])
        pairing = abs(meet_pairing(first, second))
        return {'ok': pairing > tolerances.solver, 'pairing': pairing,
                'lines': [first.to_list(), second.to_list()]}

    covering = run_partitioned(cover, list(points), workers)
    pairs = run_partitioned(disjoint, range(n_pairs), workers)
    profile_report = validate_profile(S.profile, seed=seed)

    residuals = [o['residual'] for o in covering]
    min_pairing = min((o['pairing'] for o in pairs), default=math.inf)
    cover_fail = _first_failure(covering)
    pair_fail = _first_failure(pairs)
    passed = cover_fail is None and pair_fail is None and profile_report.passed

    witness = None
    if not passed:
        witness = {
            'covering': cover_fail,
            'disjointness': pair_fail,
            'profile': [c.to_dict() for c in profile_report.failed()],
        }
    return CheckReport(
        name='spread',
        passed=passed,
        residual=_worst(residuals),
        samples=n_points + n_pairs,
        seed=seed,
        parameters=spread_parameters(S),
        witness=witness,
        details={
            'covering': ResidualStatistics.summarize(residuals),
            'min_pairing': min_pairing,
            'profile': profile_report.to_dict(),
        },
    )


def _special_lines(rng: np.random.Generator) -> List[OrientedLine]:
    """Lines through the origin, at infinity and close to both"""
    lines = []
    for direction in random_unit_vectors(rng, 3, 3):
        lines.append(join_oriented(np.array([0.0, 0.0, 0.0, 1.0]), np.append(direction, 0.0)))
        lines.append(join_oriented(np.append(direction, 0.0), np.append(np.cross(direction, [0.3, 0.1, 0.9]), 0.0)))
        lines.append(join_oriented(np.append(1e-4 * rng.normal(size=3), 1.0), np.append(direction, 0.0)))
    return lines


def _round_trip_point(line: OrientedLine) -> np.ndarray:
    if line.is_at_infinity:
        return point_on_line(line, 0.4)
    _, foot = dist_point_line(np.zeros(3), line)
    return foot


@handle_solver_errors('parallelism')
def check_parallelism(spec: ParallelismSpec, n_lines: int = 1000, seed: int = 7,
                      tolerances: Tolerances = Tolerances(), workers: int = 1) -> CheckReport:
    """Each sampled line gets exactly one class and the class member through its foot is the line."""
    logger.info(f"check_parallelism {canonical_profile(spec).name}: {n_lines} lines, seed {seed}")
    parameters = spec.to_dict()

    if not spec.oriented and not is_centered(canonical_profile(spec)):
        witness = partition_failure_witness(spec)
        logger.warning(f"non-oriented classes overlap for {canonical_profile(spec).name}")
        return CheckReport(
            name='parallelism', passed=False, residual=witness.gap, samples=0, seed=seed,
            parameters=parameters, witness={'partition_failure': witness.to_dict()},
        )
    try:
        canonicalize(spec)
    except NotO2Admissible as e:
        return CheckReport(name='parallelism', passed=False, residual=math.inf, samples=0,
                           seed=seed, parameters=parameters, witness={'error': str(e)})

    rng = np.random.default_rng(seed)
    lines = _special_lines(rng) + random_oriented_lines(rng, n_lines)

    def classify(line):
        try:
            class_id, residual = parallel_class_of(spec, line)
            member = class_line_through(spec, class_id, _round_trip_point(line))
        except GeometryError as e:
            return {'ok': False, 'residual': math.inf, 'line': line.to_list(), 'error': str(e)}
        if spec.oriented:
            gap = angular_distance(member.pluecker, line.pluecker)
            reversed_id, _ = parallel_class_of(spec, reverse(line))
            separated = class_id.distance(reversed_id) > tolerances.accept
        else:
            gap = line_distance(member.pluecker, line.pluecker)
            separated = True
        ok = residual <= tolerances.classify and gap <= 10 * tolerances.classify and separated
        return {'ok': ok, 'residual': max(residual, gap), 'line': line.to_list(),
                'class': class_id.to_list(), 'member': member.to_list(), 'separated': separated}

    outcomes = run_partitioned(classify, lines, workers)
    residuals = [o['residual'] for o in outcomes]
    failure = _first_failure(outcomes)
    return CheckReport(
        name='parallelism',
        passed=failure is None,
        residual=_worst(residuals),
        samples=len(lines),
        seed=seed,
        parameters=parameters,
        witness=None if failure is None else {'line': failure},
        details={'residuals': ResidualStatistics.summarize(residuals)},
    )


@handle_solver_errors('clifford')
def check_clifford(spec: ParallelismSpec, n: int = 500, seed: int = 7,
                   tolerances: Tolerances = Tolerances(), expect_clifford: bool = True) -> CheckReport:
    """Class agreement with the Clifford parallelism of the matching Study side.

    With ``expect_clifford`` false the check passes when a disagreement is found.
    """
    comparison = clifford_compare(spec, samples=n, seed=seed, tol=tolerances.accept)
    clifford = comparison.all_agree and comparison.max_deviation < tolerances.accept
    passed = clifford if expect_clifford else not clifford
    witness = None
    if not passed:
        witness = {'worst_line': comparison.worst_line.to_list() if comparison.worst_line else None,
                   'max_deviation': comparison.max_deviation}
    return CheckReport(
        name='clifford' if expect_clifford else 'non_clifford',
        passed=passed,
        residual=comparison.max_deviation,
        samples=n,
        seed=seed,
        parameters=spec.to_dict(),
        witness=witness,
        details=comparison.to_dict(),
    )


@handle_solver_errors('alpha')
def check_alpha(n: int = 1000, seed: int = 7, tolerances: Tolerances = Tolerances()) -> CheckReport:
    """Study map: flip law, basis independence, injectivity and orbit identities."""
    rng = np.random.default_rng(seed)
    lines = random_oriented_lines(rng, 2 * n)
    angles = rng.uniform(0.0, 2.0 * math.pi, size=n)
    quaternions = random_unit_vectors(rng, n, 4)

    flip_ok, worst_basis, worst_purity, worst_inverse, worst_orbit = True, 0.0, 0.0, 0.0, 0.0
    min_separation, closest = math.inf, None
    for k in range(n):
        L, M = lines[k], lines[n + k]
        labels = study_map(L)

        flipped = study_map(reverse(L))
        flip_ok &= bool(np.array_equal(flipped.left.vector, -labels.left.vector)
                        and np.array_equal(flipped.right.vector, -labels.right.vector))

        u, v = oriented_basis(L)
        c, s = math.cos(angles[k]), math.sin(angles[k])
        qu = Quaternion.from_array(c * u + s * v)
        qv = Quaternion.from_array(-s * u + c * v)
        product = qu.conjugate() * qv
        worst_purity = max(worst_purity, abs(product.w))
        worst_basis = max(worst_basis,
                          angular_distance(product.vector / np.linalg.norm(product.vector), labels.left.vector))

        worst_inverse = max(worst_inverse, angular_distance(line_from_study(labels).pluecker, L.pluecker))

        separation = labels.distance(study_map(M))
        if separation < min_separation:
            min_separation, closest = separation, (L, M)

        a = Quaternion.from_array(quaternions[k])
        left_image = study_map(clifford_orbit(L, a, Side.LEFT))
        right_image = study_map(clifford_orbit(L, a, Side.RIGHT))
        conjugated_right = a * labels.right * a.conjugate()
        conjugated_left = a.conjugate() * labels.left * a
        worst_orbit = max(
            worst_orbit,
            angular_distance(left_image.left.vector, labels.left.vector),
            angular_distance(left_image.right.vector, conjugated_right.vector),
            angular_distance(right_image.right.vector, labels.right.vector),
            angular_distance(right_image.left.vector, conjugated_left.vector),
        )

    passed = (flip_ok and worst_basis <= tolerances.solver and worst_purity <= tolerances.algebraic
              and worst_inverse <= tolerances.solver and worst_orbit <= tolerances.solver
              and min_separation > tolerances.accept)
    witness = None
    if not passed:
        witness = {'flip_law': flip_ok, 'closest_pair': [line.to_list() for line in closest]}
    return CheckReport(
        name='alpha',
        passed=passed,
        residual=max(worst_basis, worst_inverse, worst_orbit),
        samples=n,
        seed=seed,
        witness=witness,
        details={
            'flip_law': flip_ok,
            'basis_independence': worst_basis,
            'purity': worst_purity,
            'reconstruction': worst_inverse,
            'orbit_identities': worst_orbit,
            'min_separation': min_separation,
        },
    )


@handle_solver_errors('d_function')
def check_d_function(profile: Profile, grid: Optional[np.ndarray] = None, seed: int = 7,
                     tolerances: Tolerances = Tolerances(), n_tangency: int = 50) -> CheckReport:
    """Closed-form d(r) against a minimizer, injectivity, inversion and tangency."""
    grid = default_grid(101) if grid is None else np.asarray(grid, dtype=float)
    closed = d_of_r(profile, grid)
    oracle = np.array([d_by_minimization(profile, float(r)) for r in grid])
    oracle_gap = float(np.max(np.abs(closed - oracle) / np.maximum(1.0, closed)))
    injective = bool(np.all(np.diff(closed) > 0))

    inversion = 0.0
    for r in (1e-3, 1.0, 1e3):
        inversion = max(inversion, abs(r_of_d(profile, d_of_r(profile, r)) - r) / r)

    rng = np.random.default_rng(seed)
    spread = build_spread(profile, 1)
    tangency = 0.0
    for r, phi in zip(np.exp(rng.uniform(math.log(1e-3), math.log(1e3), n_tangency)),
                      rng.uniform(0.0, 2.0 * math.pi, n_tangency)):
        distance, _ = dist_point_line(np.zeros(3), regulus_line(spread, float(r), float(phi)))
        tangency = max(tangency, abs(distance - d_of_r(profile, float(r))))

    passed = (oracle_gap <= tolerances.solver and injective
              and inversion <= tolerances.classify and tangency <= tolerances.classify)
    witness = None
    if not passed:
        k = int(np.argmax(np.abs(closed - oracle)))
        witness = {'r': float(grid[k]), 'closed_form': float(closed[k]), 'minimizer': float(oracle[k]),
                   'injective': injective}
    return CheckReport(
        name='d_function',
        passed=passed,
        residual=max(oracle_gap, inversion, tangency),
        samples=len(grid) + n_tangency,
        seed=seed,
        parameters={'profile': profile.to_dict()},
        witness=witness,
        details={'oracle_gap': oracle_gap, 'injective': injective,
                 'inversion': inversion, 'tangency': tangency},
    )


@handle_solver_errors('reflection')
def check_reflection(S: RotationalSpread, n: int = 100, seed: int = 7,
                     tolerances: Tolerances = Tolerances()) -> CheckReport:
    """The z-reflection of S shares only Z and V with S."""
    image = reflect_z(S)
    shares_axis = line_distance(image.Z_plus.pluecker, S.Z_plus.pluecker) <= tolerances.solver
    shares_infinity = line_distance(image.V_plus.pluecker, S.V_plus.pluecker) <= tolerances.solver

    rng = np.random.default_rng(seed)
    closest, witness_line = math.inf, None
    screws_ok = True
    for r, phi in zip(np.exp(rng.uniform(math.log(1e-2), math.log(1e2), n)),
                      rng.uniform(0.0, 2.0 * math.pi, n)):
        M = regulus_line(image, float(r), float(phi))
        screws_ok &= screw_sense(M) == -S.handedness
        screws_ok &= screw_sense(regulus_line(S, float(r), float(phi))) == S.handedness
        member = containing_line(S, point_on_line(M, 0.7))
        gap = line_distance(member.pluecker, M.pluecker)
        if gap < closest:
            closest, witness_line = gap, M

    passed = shares_axis and shares_infinity and screws_ok and closest > tolerances.accept
    return CheckReport(
        name='reflection',
        passed=passed,
        residual=closest,
        samples=n,
        seed=seed,
        parameters=spread_parameters(S),
        witness=None if passed else {'line': witness_line.to_list() if witness_line else None,
                                     'shares_axis': shares_axis, 'shares_infinity': shares_infinity,
                                     'screw_senses': screws_ok},
        details={'closest_gap': closest, 'shares_axis': shares_axis,
                 'shares_infinity': shares_infinity, 'screw_senses': screws_ok},
    )


@handle_solver_errors('klein_quadric')
def check_klein_quadric(spreads: List[RotationalSpread], n: int = 10000, seed: int = 7,
                        tolerances: Tolerances = Tolerances()) -> CheckReport:
    """Quadric residual and unit norm of joins, regulus lines and rotated lines."""
    rng = np.random.default_rng(seed)
    third = n // 3
    lines = random_oriented_lines(rng, third)
    for k in range(third):
        S = spreads[k % len(spreads)]
        lines.append(regulus_line(S, float(np.exp(rng.uniform(-7, 7))), float(rng.uniform(0, 2 * math.pi))))
    for q, L in zip(random_unit_vectors(rng, n - 2 * third, 4), random_oriented_lines(rng, n - 2 * third)):
        lines.append(rotate_line(Quaternion.from_array(q), L))

    quadric = [quadric_residual(L.pluecker) for L in lines]
    norm = [abs(float(np.linalg.norm(L.pluecker)) - 1.0) for L in lines]
    worst = int(np.argmax(np.maximum(quadric, norm)))
    passed = max(quadric) <= tolerances.algebraic and max(norm) <= tolerances.algebraic
    witness = None
    if not passed:
        witness = {'index': worst, 'line': lines[worst].to_list(),
                   'quadric': quadric[worst], 'norm': norm[worst]}
    return CheckReport(name='klein_quadric', passed=passed, residual=max(max(quadric), max(norm)),
                       samples=len(lines), seed=seed, parameters={'n': n}, witness=witness,
                       details={'quadric': max(quadric), 'norm': max(norm)})


@handle_solver_errors('double_cover')
def check_double_cover(n: int = 1000, seed: int = 7) -> CheckReport:
    """forget_orientation / orientations_of round trips are exact."""
    rng = np.random.default_rng(seed)
    exact, witness = 0, None
    for k, L in enumerate(random_oriented_lines(rng, n)):
        first, second = orientations_of(forget_orientation(L))
        pair = {tuple(first.pluecker), tuple(second.pluecker)}
        if pair == {tuple(L.pluecker), tuple(-L.pluecker)} and \
                np.array_equal(reverse(reverse(L)).pluecker, L.pluecker):
            exact += 1
        elif witness is None:
            witness = {'index': k, 'line': L.to_list(),
                       'orientations': [first.to_list(), second.to_list()]}
    return CheckReport(name='double_cover', passed=exact == n, residual=float(n - exact),
                       samples=n, seed=seed, parameters={'n': n}, witness=witness,
                       details={'exact': exact})


@handle_solver_errors('distinct')
def check_distinctness(spec_a: ParallelismSpec, spec_b: ParallelismSpec, expect_distinct: bool,
                       trials: int = 16, seed: int = 7) -> CheckReport:
    witness = distinctness_witness(spec_a, spec_b, trials=trials, seed=seed)
    found = witness is not None
    passed = found == expect_distinct
    return CheckReport(
        name='distinct' if expect_distinct else 'not_distinct',
        passed=passed,
        residual=witness.gap if found else 0.0,
        samples=trials,
        seed=seed,
        parameters={'a': spec_a.to_dict(), 'b': spec_b.to_dict()},
        witness=witness.to_dict() if found else None,
    )


@handle_solver_errors('partition_failure')
def check_partition_failure(spec: ParallelismSpec, tolerances: Tolerances = Tolerances()) -> CheckReport:
    """Non-oriented classes of an off-center family overlap in the axis."""
    non_oriented = ParallelismSpec(spec.profile, spec.handedness, spec.placement, False, Gamma.O2)
    report = check_parallelism(non_oriented, n_lines=0)
    witness = partition_failure_witness(non_oriented)
    passed = (not report.passed and witness.axis_fixed and witness.gap > tolerances.accept)
    return CheckReport(name='partition_failure', passed=passed, residual=witness.gap, samples=1,
                       seed=None, parameters=non_oriented.to_dict(), witness=witness.to_dict())


def _named(report: CheckReport, label: str) -> CheckReport:
    report.name = f"{report.name}[{label}]"
    return report


def run_acceptance(tolerances: Tolerances = Tolerances(), seed: int = 7, scale: float = 1.0,
                   workers: int = 1) -> List[CheckReport]:
    """The named acceptance families; ``scale`` shrinks sample counts for quick runs."""
    def count(n):
        return max(10, int(n * scale))

    regular = [profile_regular(d) for d in (0.5, 1.0, 2.0)]
    satz1 = [profile_satz1(w, c) for w in (0.25, 0.5, 0.75) for c in (0.0, 1.0)]
    satz2 = [profile_satz2(d) for d in (0.5, 1.0, 2.0)]
    profiles = regular + satz1 + satz2
    spreads = [build_spread(p, 1) for p in profiles]
    reports = []

    reports.append(check_klein_quadric(spreads, count(10000), seed, tolerances))
    reports.append(check_double_cover(count(1000), seed))
    reports.append(check_alpha(count(1000), seed, tolerances))

    for profile in (profile_regular(1.0), profile_satz1(0.5, 0.0), profile_satz1(0.5, 1.0), profile_satz2(1.0)):
        reports.append(_named(check_d_function(profile, seed=seed, tolerances=tolerances), profile.name))

    for S in spreads:
        reports.append(_named(check_spread(S, count(1000), count(1000), seed, tolerances, workers), S.name))

    concentric = [p for p in profiles if is_centered(p)]
    for profile in concentric:
        spec = ParallelismSpec(profile, 1, Placement(), oriented=False, gamma=Gamma.O2)
        reports.append(_named(check_parallelism(spec, count(1000), seed, tolerances, workers), profile.name))

    acentric = [ParallelismSpec(p, 1) for p in profiles if not is_centered(p)]
    acentric.append(ParallelismSpec(profile_regular(1.0), 1, Placement(1.0, 1.0)))
    for spec in acentric:
        label = canonical_profile(spec).name
        reports.append(_named(check_parallelism(spec, count(1000), seed, tolerances, workers), label))
        reports.append(_named(check_partition_failure(spec, tolerances), label))

    clifford_specs = [
        (ParallelismSpec(profile_regular(1.0), 1, gamma=Gamma.O2), True),
        (ParallelismSpec(profile_regular(2.0), 1, gamma=Gamma.O2), True),
        (ParallelismSpec(profile_regular(1.0), 1, Placement(2.0, 0.0), gamma=Gamma.O2), True),
        (ParallelismSpec(profile_satz1(0.5, 0.0), 1, gamma=Gamma.O2), False),
        (ParallelismSpec(profile_regular(1.0), 1, Placement(1.0, 1.0)), False),
    ]
    for spec, expected in clifford_specs:
        report = check_clifford(spec, count(500), seed, tolerances, expect_clifford=expected)
        reports.append(_named(report, canonical_profile(spec).name))

    satz2_base = ParallelismSpec(profile_satz2(1.0), 1)
    for placement in (Placement(2.0, 0.0), Placement(1.0, 1.0)):
        other = ParallelismSpec(profile_satz2(1.0), 1, placement)
        reports.append(_named(check_distinctness(satz2_base, other, True, seed=seed),
                              f"satz2(1) vs s={placement.s:g} t={placement.t:g}"))
    regular_o2 = ParallelismSpec(profile_regular(1.0), 1, gamma=Gamma.O2)
    regular_scaled = ParallelismSpec(profile_regular(1.0), 1, Placement(2.0, 0.0), gamma=Gamma.O2)
    reports.append(_named(check_distinctness(regular_o2, regular_scaled, False, seed=seed),
                          "regular(1) vs s=2"))

    for S in spreads:
        reports.append(_named(check_reflection(S, count(100), seed, tolerances), S.name))

    failed = [r.name for r in reports if not r.passed]
    logger.info(f"acceptance: {len(reports) - len(failed)}/{len(reports)} passed")
    if failed:
        logger.warning(f"acceptance failures: {failed}")
    return reports
