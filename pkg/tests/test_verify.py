import unittest
from unittest.mock import patch

import numpy as np

from spreadlab.exceptions import ConfigurationError
from spreadlab.geometry.projective_core import OrientedLine
from spreadlab.geometry.parallelisms import Gamma, ParallelismSpec, Placement
from spreadlab.geometry.spreads import build_spread, profile_regular, profile_satz1, profile_satz2, profile_table
from spreadlab.storage import dumps_report
from spreadlab.verify import (
    CheckReport,
    Tolerances,
    check_alpha,
    check_clifford,
    check_d_function,
    check_distinctness,
    check_double_cover,
    check_klein_quadric,
    check_parallelism,
    check_partition_failure,
    check_reflection,
    check_spread,
    run_acceptance,
    sample_points,
)
from tests import BaseTestCase


class TestTolerances(BaseTestCase):
    def test_defaults_follow_config(self):
        self.assertEqual(Tolerances.from_overrides().to_dict(), self.app.tolerances)

    def test_override(self):
        tolerances = Tolerances.from_overrides({'accept': 1e-5})
        self.assertEqual(tolerances.accept, 1e-5)
        self.assertEqual(tolerances.algebraic, 1e-12)

    def test_unknown_key(self):
        with self.assertRaises(ConfigurationError):
            Tolerances.from_overrides({'loose': 1.0})


class TestReports(BaseTestCase):
    def test_report_dict(self):
        report = CheckReport(name='spread', passed=False, residual=0.5, samples=3, seed=1,
                             witness={'point': [0, 0, 0, 1]})
        data = report.to_dict()
        self.assertEqual(data['status'], 'fail')
        self.assertEqual(data['witness'], {'point': [0, 0, 0, 1]})

    def test_solver_errors_become_failing_reports(self):
        with patch('spreadlab.verify.d_by_minimization', side_effect=ValueError('bad bracket')):
            report = check_d_function(profile_satz2(1.0), seed=3)
        self.assertFalse(report.passed)
        self.assertEqual(report.name, 'd_function')
        self.assertEqual(report.seed, 3)
        self.assertEqual(report.witness['error'], 'ValueError: bad bracket')
        self.assertEqual(report.parameters['profile'], profile_satz2(1.0).to_dict())

    def test_failing_algebraic_suites_carry_witnesses(self):
        with patch('spreadlab.verify.quadric_residual', return_value=1.0):
            report = check_klein_quadric([build_spread(profile_regular(1.0), 1)], 30, seed=2)
        self.assertFalse(report.passed)
        self.assertEqual(len(report.witness['line']), 6)
        self.assertEqual(report.witness['quadric'], 1.0)

        nudged = lambda M: (OrientedLine(M.pluecker + 1e-9), OrientedLine(-M.pluecker))
        with patch('spreadlab.verify.orientations_of', side_effect=nudged):
            report = check_double_cover(5, seed=2)
        self.assertFalse(report.passed)
        self.assertEqual(report.witness['index'], 0)
        self.assertEqual(report.seed, 2)

    def test_d_function_with_tied_minimizer_grid(self):
        report = check_d_function(profile_satz1(0.5, 1.0), seed=1)
        self.assertTrue(report.passed, report.witness)

    def test_sample_points_include_special_points(self):
        points = sample_points(self.rng, 20)
        np.testing.assert_allclose(np.linalg.norm(points, axis=1), 1.0)
        self.assertEqual(points[7, 3], 0.0)
        self.assertEqual(points[3, 0], 0.0)


class TestSuites(BaseTestCase):
    def test_spread_suite(self):
        for profile in (profile_regular(1.0), profile_satz2(1.0)):
            report = check_spread(build_spread(profile, 1), 30, 30, seed=1, workers=2)
            self.assertTrue(report.passed, report.witness)
            self.assertEqual(report.samples, 60)

    def test_corrupted_profile_fails_with_witness(self):
        bumped = profile_table([[0.1, 10.0, 0.0], [1.0, 1.0, 0.0], [2.0, 1.5, 0.0], [10.0, 0.1, 0.0]])
        report = check_spread(build_spread(bumped, 1), 10, 10, seed=1)
        self.assertFalse(report.passed)
        self.assertIn('a_strictly_decreasing', [c['name'] for c in report.witness['profile']])

    def test_reports_are_byte_identical_for_a_seed(self):
        first = dumps_report(check_alpha(20, seed=1))
        self.assertEqual(first, dumps_report(check_alpha(20, seed=1)))
        self.assertNotEqual(first, dumps_report(check_alpha(20, seed=2)))

    def test_spread_suite_is_independent_of_workers(self):
        S = build_spread(profile_satz1(0.5, 1.0), 1)
        single = check_spread(S, 20, 20, seed=4, workers=1)
        threaded = check_spread(S, 20, 20, seed=4, workers=3)
        self.assertEqual(single.to_dict(), threaded.to_dict())

    def test_parallelism_suite(self):
        spec = ParallelismSpec(profile_satz2(1.0), 1, Placement(1.5, 0.5))
        report = check_parallelism(spec, 20, seed=2, workers=2)
        self.assertTrue(report.passed, report.witness)

    def test_unoriented_acentric_parallelism_fails_with_witness(self):
        spec = ParallelismSpec(profile_satz2(1.0), 1, oriented=False, gamma=Gamma.O2)
        report = check_parallelism(spec, 10)
        self.assertFalse(report.passed)
        self.assertIn('partition_failure', report.witness)

    def test_clifford_suites(self):
        regular = ParallelismSpec(profile_regular(1.0), 1, gamma=Gamma.O2)
        self.assertTrue(check_clifford(regular, 10, seed=5).passed)
        satz1 = ParallelismSpec(profile_satz1(0.5, 0.0), 1, gamma=Gamma.O2)
        report = check_clifford(satz1, 10, seed=5, expect_clifford=False)
        self.assertTrue(report.passed)
        self.assertEqual(report.name, 'non_clifford')

    def test_study_map_suite(self):
        report = check_alpha(50, seed=3)
        self.assertTrue(report.passed, report.details)
        self.assertTrue(report.details['flip_law'])

    def test_d_function_suite(self):
        for profile in (profile_regular(1.0), profile_satz1(0.5, 1.0)):
            report = check_d_function(profile, grid=np.logspace(-2, 2, 21), n_tangency=10)
            self.assertTrue(report.passed, report.details)

    def test_small_suites(self):
        spreads = [build_spread(profile_regular(1.0), 1), build_spread(profile_satz2(1.0), -1)]
        self.assertTrue(check_klein_quadric(spreads, 90).passed)
        self.assertTrue(check_double_cover(50).passed)
        self.assertTrue(check_reflection(spreads[1], 10).passed)

    def test_partition_failure_suite(self):
        report = check_partition_failure(ParallelismSpec(profile_regular(1.0), 1, Placement(1.0, 1.0)))
        self.assertTrue(report.passed, report.witness)

    def test_distinctness_suite(self):
        base = ParallelismSpec(profile_satz2(1.0), 1)
        other = ParallelismSpec(profile_satz2(1.0), 1, Placement(1.0, 1.0))
        report = check_distinctness(base, other, expect_distinct=True, trials=4)
        self.assertTrue(report.passed)
        self.assertIsNotNone(report.witness)


class TestAcceptance(BaseTestCase):
    def test_quick_acceptance_run(self):
        reports = run_acceptance(seed=7, scale=0.01, workers=self.app.settings['THREADS'])
        names = [report.name for report in reports]
        self.assertIn('klein_quadric', names)
        self.assertTrue(any(name.startswith('distinct[') for name in names))
        failed = [report.to_dict() for report in reports if not report.passed]
        self.assertEqual(failed, [])


if __name__ == '__main__':
    unittest.main()
