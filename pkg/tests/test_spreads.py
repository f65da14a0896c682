import math

import numpy as np
import pytest

from spreadlab.exceptions import BadParameter, NotBracketed, SingularMatrix
from spreadlab.geometry.projective_core import (
    angular_distance,
    apply_collineation,
    forget_orientation,
    incidence_residual,
    join_oriented,
    point_on_line,
    random_unit_vectors,
    reverse,
)
from spreadlab.geometry.spreads import (
    ProfileKind,
    axis_distance,
    build_spread,
    containing_line,
    d_by_minimization,
    d_of_r,
    graph_line,
    graph_point,
    homothety_normal_form,
    hyperboloid_residual,
    is_centered,
    is_concentric,
    is_regular,
    limit_gap,
    mirror,
    profile_from_dict,
    profile_regular,
    profile_satz1,
    profile_satz2,
    profile_table,
    r_of_d,
    reflect_z,
    regulus_line,
    satz2_crosscheck,
    satz_crosscheck,
    screw_sense,
    transform_profile,
    validate_profile,
)


def same_oriented(first, second, tol=1e-9):
    return angular_distance(first.pluecker, second.pluecker) <= tol


class TestProfiles:
    def test_satz1_values(self):
        profile = profile_satz1(0.5, 1.0)
        assert profile.a(4.0) == pytest.approx(0.5)
        assert profile.b(4.0) == pytest.approx(2.0)

    def test_satz2_values(self):
        a, b = profile_satz2(1.0).evaluate(math.e)
        assert a == pytest.approx(1.0 / math.e)
        assert b == pytest.approx(-1.0)

    def test_vector_evaluation(self):
        a, b = profile_regular(2.0).evaluate([1.0, 2.0, 4.0])
        np.testing.assert_allclose(a, [2.0, 1.0, 0.5])
        np.testing.assert_allclose(b, 0.0)

    def test_parameter_ranges(self):
        with pytest.raises(BadParameter):
            profile_regular(0.0)
        with pytest.raises(BadParameter):
            profile_satz1(1.0)
        with pytest.raises(BadParameter):
            profile_satz2(0.25)
        with pytest.raises(BadParameter):
            profile_table([[1, 1, 0], [0.5, 1, 0], [2, 1, 0]])

    def test_negative_satz2_parameter_folds_to_positive(self):
        assert profile_satz2(-2.0) == profile_satz2(2.0)

    def test_from_dict_folds_scales(self):
        assert profile_from_dict({'kind': 'regular', 'd': 1.0, 'slope_scale': 2.0}) == profile_regular(2.0)
        assert profile_from_dict(profile_satz1(0.5, 1.0).to_dict()) == profile_satz1(0.5, 1.0)

    def test_table_reproduces_power_law(self):
        radii = np.logspace(-2, 2, 9)
        table = profile_table([[r, 1.0 / r, 0.0] for r in radii])
        assert table.kind is ProfileKind.TABLE
        assert table.a(3.7) == pytest.approx(1.0 / 3.7, rel=1e-12)
        assert table.a(1e-4) == pytest.approx(1e4, rel=1e-9)

    def test_placement_transform(self):
        assert transform_profile(profile_regular(1.0), 2.0, 0.0) == profile_regular(2.0)
        shifted = transform_profile(profile_satz2(1.0), 1.0, 1.0)
        assert shifted.b(1.0) == pytest.approx(1.0)
        with pytest.raises(BadParameter):
            transform_profile(profile_regular(1.0), 0.0, 0.0)

    def test_homothety_normal_form(self):
        regular = homothety_normal_form(profile_regular(2.0))
        assert regular.kind is ProfileKind.REGULAR
        assert regular.params[0] == pytest.approx(1.0, rel=1e-10)
        normal = homothety_normal_form(profile_satz2(2.0))
        assert normal.a(1.0) == pytest.approx(1.0)
        assert normal.b(1.0) == pytest.approx(-0.5 * math.log(2.0))

    def test_predicates(self):
        assert is_regular(profile_regular(1.0))
        assert is_centered(profile_satz1(0.5, 0.0))
        assert not is_regular(profile_satz1(0.5, 0.0))
        assert not is_concentric(profile_satz2(1.0))
        assert is_concentric(transform_profile(profile_regular(1.0), 1.0, 1.0))
        assert not is_centered(transform_profile(profile_regular(1.0), 1.0, 1.0))


class TestReguli:
    def test_regulus_example(self, regular_spread):
        L = regulus_line(regular_spread, 1.0, 0.0)
        assert same_oriented(L, join_oriented([1, 0, 0, 1], [0, 1, 1, 0]))
        np.testing.assert_allclose(L.direction / np.linalg.norm(L.direction), np.array([0, 1, 1]) / math.sqrt(2))

    def test_lines_lie_on_hyperboloid(self, profile):
        S = build_spread(profile, 1)
        for r in (0.1, 1.0, 7.0):
            for phi in (0.0, 1.0, 4.0):
                assert hyperboloid_residual(S, r, regulus_line(S, r, phi)) < 1e-10

    def test_limit_lines(self, regular_spread):
        np.testing.assert_allclose(regular_spread.Z_plus.pluecker, [0, 0, 0, 0, 0, -1])
        np.testing.assert_allclose(regular_spread.V_plus.pluecker, [1, 0, 0, 0, 0, 0])
        flipped = build_spread(profile_regular(1.0), -1)
        assert same_oriented(flipped.Z_plus, reverse(regular_spread.Z_plus))

    @pytest.mark.parametrize('profile', [profile_regular(1.0), profile_satz2(1.0), profile_satz1(0.5, 0.0)],
                             ids=lambda p: p.name)
    def test_reguli_converge_to_limits(self, profile):
        S = build_spread(profile, 1)
        assert limit_gap(S, 1e-8) < 1e-3
        assert limit_gap(S, 1e8) < 1e-3

    def test_screw_sense_and_axis_distance(self, regular_spread):
        L = regulus_line(regular_spread, 2.0, 0.5)
        assert screw_sense(L) == 1
        assert screw_sense(reverse(L)) == 1
        assert screw_sense(regulus_line(mirror(regular_spread), 2.0, 0.5)) == -1
        assert screw_sense(regular_spread.Z_plus) == 0
        assert axis_distance(L) == pytest.approx(2.0)
        assert screw_sense(forget_orientation(L)) == 1
        assert axis_distance(forget_orientation(L)) == pytest.approx(2.0)

    def test_bad_radius(self, regular_spread):
        with pytest.raises(BadParameter):
            regulus_line(regular_spread, 0.0, 0.0)
        with pytest.raises(BadParameter):
            build_spread(profile_regular(1.0), 0)

    def test_reflection_maps_members_to_members(self, satz2_spread):
        reflected = reflect_z(satz2_spread)
        M = np.diag([1.0, 1.0, -1.0, 1.0])
        for r, phi in ((0.3, 0.0), (1.0, 2.0), (4.0, 5.0)):
            image = apply_collineation(M, regulus_line(satz2_spread, r, phi))
            member = containing_line(reflected, point_on_line(image, 0.4))
            assert angular_distance(member.pluecker, image.pluecker) < 1e-8 or \
                angular_distance(member.pluecker, -image.pluecker) < 1e-8


class TestDistanceFunction:
    def test_regular_distance_is_radius(self):
        np.testing.assert_allclose(d_of_r(profile_regular(1.0), [0.5, 1.0, 3.0]), [0.5, 1.0, 3.0])

    def test_closed_form_example(self):
        assert d_of_r(profile_satz1(0.5, 2.0), 1.0) == pytest.approx(math.sqrt(3.0))

    def test_closed_form_matches_minimization(self, profile):
        for r in (0.2, 1.0, 5.0):
            assert d_by_minimization(profile, r) == pytest.approx(d_of_r(profile, r), rel=1e-7)

    def test_minimizer_with_tied_grid_neighbours(self):
        # The minimum z = 0.5 sits midway between two grid points
        profile = profile_satz1(0.5, 1.0)
        assert d_by_minimization(profile, 1.0) == pytest.approx(math.sqrt(1.5), rel=1e-10)

    def test_inverse(self):
        assert r_of_d(profile_satz1(0.5, 2.0), math.sqrt(3.0)) == pytest.approx(1.0, rel=1e-9)
        assert r_of_d(profile_regular(1.0), 2.0) == pytest.approx(2.0, rel=1e-9)
        for r in (0.01, 0.5, 30.0):
            assert r_of_d(profile_satz2(1.0), d_of_r(profile_satz2(1.0), r)) == pytest.approx(r, rel=1e-8)

    def test_inverse_rejects_bad_distance(self):
        with pytest.raises(BadParameter):
            r_of_d(profile_regular(1.0), 0.0)
        with pytest.raises(NotBracketed):
            r_of_d(profile_regular(1.0), 1e200)

    def test_inverse_far_from_unit_radius(self):
        assert r_of_d(profile_regular(1.0), 1e12) == pytest.approx(1e12, rel=1e-9)
        assert r_of_d(profile_satz1(0.25, 0.0), 1e-11) == pytest.approx(1e-11, rel=1e-6)


class TestContainingLine:
    def test_affine_point(self, regular_spread):
        assert same_oriented(containing_line(regular_spread, [1.0, 0.0, 0.0]),
                             regulus_line(regular_spread, 1.0, 0.0))

    def test_axis_points(self, regular_spread):
        assert containing_line(regular_spread, [0.0, 0.0, 5.0]) is regular_spread.Z_plus
        assert containing_line(regular_spread, [0.0, 0.0, 1.0, 0.0]) is regular_spread.Z_plus

    def test_points_at_infinity(self, regular_spread):
        assert containing_line(regular_spread, [1.0, 0.0, 0.0, 0.0]) is regular_spread.V_plus
        assert same_oriented(containing_line(regular_spread, [0.0, 1.0, 1.0, 0.0]),
                             regulus_line(regular_spread, 1.0, 0.0))

    @pytest.mark.parametrize('c', [0.0, 1.0])
    def test_points_beyond_the_first_scan(self, c):
        S = build_spread(profile_satz1(0.25, c), 1)
        steep = [1.0, 0.0, 1000.0, 1.0]
        assert incidence_residual(steep, containing_line(S, steep[:3])) < 1e-9
        flat = [1.0, 0.0, 0.001, 0.0]
        line = containing_line(S, flat)
        assert incidence_residual(flat, line) < 1e-9
        assert axis_distance(line) > 1e9

    def test_random_points_are_covered(self, profile, rng):
        S = build_spread(profile, 1)
        for point in random_unit_vectors(rng, 50, 4):
            assert incidence_residual(point, containing_line(S, point)) < 1e-9


class TestGraphSubspaces:
    def test_singular_matrix(self):
        with pytest.raises(SingularMatrix):
            graph_line(np.zeros((2, 2)))

    def test_graph_points_lie_on_graph_line(self):
        A = np.array([[2.0, 0.0], [1.0, 3.0]])
        for tau in (0.0, -2.0, math.inf):
            assert incidence_residual(graph_point(A, tau), graph_line(A)) < 1e-12

    @pytest.mark.parametrize('w,c,s', [(0.5, 0.0, 1.0), (0.5, 1.0, 2.0), (0.25, 0.5, 0.3)])
    def test_satz1_crosscheck(self, w, c, s):
        ok, gap = satz_crosscheck(w, c, s)
        assert ok, gap

    @pytest.mark.parametrize('d,t', [(1.0, 0.0), (2.0, 0.7), (-1.0, -0.4)])
    def test_satz2_crosscheck(self, d, t):
        ok, gap = satz2_crosscheck(d, t)
        assert ok, gap


class TestValidateProfile:
    @pytest.mark.parametrize('profile', [profile_regular(1.0), profile_satz1(0.5, 1.0), profile_satz2(1.0)],
                             ids=lambda p: p.name)
    def test_spread_profiles_pass(self, profile):
        report = validate_profile(profile)
        assert report.passed, [c.to_dict() for c in report.failed()]

    def test_constant_slope_fails(self):
        table = profile_table([[0.1, 1.0, 0.0], [1.0, 1.0, 0.0], [10.0, 1.0, 0.0]])
        report = validate_profile(table)
        assert not report.passed
        assert 'a_strictly_decreasing' in [c.name for c in report.failed()]

    def test_crossing_satz1_fails_discriminant(self):
        report = validate_profile(profile_satz1(0.5, 3.0))
        assert 'satz1_discriminant' in [c.name for c in report.failed()]
