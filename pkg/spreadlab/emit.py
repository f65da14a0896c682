from typing import Iterator, List, Optional, Sequence, Tuple
import math

import numpy as np

from .geometry.parallelisms import ClassId, ParallelismSpec, class_spread
from .geometry.spreads import Profile, d_of_r, default_grid

CURVE_HEADER = ('r', 'z', 'x')
DTABLE_HEADER = ('r', 'd')
CLASSES_HEADER = ('class_axis_x', 'class_axis_y', 'class_axis_z',
                  'p12', 'p13', 'p14', 'p23', 'p24', 'p34')


def curve_rows(profile: Profile, radii: Optional[Sequence[float]] = None,
               z_values: Optional[Sequence[float]] = None) -> Iterator[Tuple[float, float, float]]:
    """Points (r, z, X_r(z)) on the hyperbola branches of the profile"""
    radii = np.logspace(-1, 1, 9) if radii is None else np.asarray(radii, dtype=float)
    z_values = np.linspace(-5.0, 5.0, 41) if z_values is None else np.asarray(z_values, dtype=float)
    a, b = profile.evaluate(radii)
    for r, slope, height in zip(radii, a, b):
        for z in z_values:
            yield float(r), float(z), math.sqrt(r * r + ((z - height) / slope) ** 2)


def dtable_rows(profile: Profile, radii: Optional[Sequence[float]] = None) -> Iterator[Tuple[float, float]]:
    radii = default_grid(61) if radii is None else np.asarray(radii, dtype=float)
    for r, d in zip(radii, d_of_r(profile, radii)):
        yield float(r), float(d)


def class_grid(n_polar: int = 4, n_azimuth: int = 8, oriented: bool = True) -> List[ClassId]:
    """Class axes on a latitude/longitude grid (upper hemisphere when unoriented)"""
    top = math.pi if oriented else math.pi / 2.0
    ids = [ClassId([0.0, 0.0, 1.0], oriented)]
    for theta in np.linspace(0.0, top, n_polar + 1)[1:]:
        if math.isclose(theta, math.pi):
            ids.append(ClassId([0.0, 0.0, -1.0], oriented))
            continue
        # Antipodal equator points name the same unoriented class
        half_turn = not oriented and math.isclose(theta, top)
        span = math.pi if half_turn else 2.0 * math.pi
        count = n_azimuth // 2 if half_turn else n_azimuth
        for psi in np.linspace(0.0, span, count, endpoint=False):
            axis = np.array([math.sin(theta) * math.cos(psi), math.sin(theta) * math.sin(psi), math.cos(theta)])
            ids.append(ClassId(axis, oriented))
    return ids


def class_rows(spec: ParallelismSpec, ids: Optional[List[ClassId]] = None,
               radii: Optional[Sequence[float]] = None, n_phi: int = 4) -> Iterator[Tuple[float, ...]]:
    ids = class_grid(oriented=spec.oriented) if ids is None else ids
    radii = np.logspace(-1, 1, 3) if radii is None else radii
    for class_id in ids:
        for line in class_spread(spec, class_id, radii=radii, n_phi=n_phi):
            yield tuple(class_id.to_list()) + tuple(line.to_list())
