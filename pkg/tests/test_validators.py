import unittest

from spreadlab.exceptions import ConfigurationError
from spreadlab.geometry.parallelisms import Gamma
from spreadlab.geometry.spreads import profile_regular, profile_satz1, profile_satz2
from spreadlab.validators import (
    Command,
    load_run_config,
    validate_placement,
    validate_profile_spec,
    validate_run_config,
    validate_tolerances,
)


class TestProfileValidation(unittest.TestCase):
    def test_valid_profiles(self):
        for data in ({'kind': 'regular'}, {'kind': 'satz1', 'w': 0.5, 'c': 1.0},
                     {'kind': 'satz2', 'd': -1.0, 'shift': 2.0},
                     {'kind': 'table', 'samples': [[0.1, 10, 0], [1, 1, 0], [10, 0.1, 0]]}):
            is_valid, message = validate_profile_spec(data)
            self.assertTrue(is_valid, message)

    def test_invalid_profiles(self):
        cases = {
            'Unknown profile kind': {'kind': 'cubic'},
            'Unknown keys': {'kind': 'regular', 'w': 0.5},
            'needs w': {'kind': 'satz1'},
            'must be a number': {'kind': 'regular', 'd': 'one'},
            '|d| >= 1/2': {'kind': 'satz2', 'd': 0.25},
            'at least 3 samples': {'kind': 'table', 'samples': [[1, 1, 0]]},
            'must be positive': {'kind': 'regular', 'radius_scale': -1.0},
        }
        for expected, data in cases.items():
            is_valid, message = validate_profile_spec(data)
            self.assertFalse(is_valid)
            self.assertIn(expected, message)

    def test_booleans_are_not_numbers(self):
        is_valid, _ = validate_profile_spec({'kind': 'regular', 'd': True})
        self.assertFalse(is_valid)


class TestRunConfig(unittest.TestCase):
    def test_placement_and_tolerances(self):
        self.assertTrue(validate_placement({'s': 2, 't': -1})[0])
        self.assertFalse(validate_placement({'s': 0})[0])
        self.assertFalse(validate_placement({'z': 1})[0])
        self.assertTrue(validate_tolerances({'accept': 1e-5})[0])
        self.assertFalse(validate_tolerances({'accept': -1})[0])
        self.assertFalse(validate_tolerances({'slack': 1})[0])

    def test_collects_every_error(self):
        result = validate_run_config({'profile': {'kind': 'regular'}, 'handedness': 2,
                                      'samples': -1, 'gamma': 'SO3', 'colour': 'red'})
        self.assertFalse(result.is_valid)
        self.assertEqual(len(result.errors), 4)
        self.assertEqual(result.to_dict()['valid'], False)

    def test_unoriented_needs_o2(self):
        result = validate_run_config({'profile': {'kind': 'regular'}, 'oriented': False, 'gamma': 'SO2'})
        self.assertFalse(result.is_valid)

    def test_load_bare_profile(self):
        config = load_run_config({'kind': 'regular', 'd': 2.0})
        self.assertEqual(config.profile, profile_regular(2.0))
        self.assertEqual(config.handedness, 1)
        self.assertIs(config.gamma, Gamma.SO2)

    def test_load_full_config(self):
        config = load_run_config({
            'profile': {'kind': 'satz1', 'w': 0.5},
            'handedness': -1,
            'placement': {'s': 2.0, 't': 1.0},
            'oriented': False,
            'samples': 10,
            'seed': 11,
            'tol': {'accept': 1e-5},
            'command': 'parallelism check',
        })
        self.assertEqual(config.profile, profile_satz1(0.5))
        self.assertIs(config.gamma, Gamma.O2)
        self.assertIs(config.command, Command.PARALLELISM_CHECK)
        self.assertEqual(config.spec().placement.t, 1.0)
        self.assertEqual(config.to_dict()['tol'], {'accept': 1e-5})

    def test_negative_satz2_d_mirrors_handedness(self):
        config = load_run_config({'profile': {'kind': 'satz2', 'd': -2.0}, 'handedness': 1})
        self.assertEqual(config.profile, profile_satz2(2.0))
        self.assertEqual(config.handedness, -1)
        mirrored = load_run_config({'kind': 'satz2', 'd': -2.0, 'shift': 1.0})
        self.assertEqual(mirrored.handedness, -1)
        self.assertEqual(load_run_config({'kind': 'satz2', 'd': 2.0}).handedness, 1)

    def test_load_rejects_invalid(self):
        with self.assertRaises(ConfigurationError):
            load_run_config({'profile': {'kind': 'satz1', 'w': 1.5}})
        with self.assertRaises(ConfigurationError):
            load_run_config([1, 2, 3])


if __name__ == '__main__':
    unittest.main()
