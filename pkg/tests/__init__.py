import shutil
import tempfile
import unittest
from pathlib import Path

import numpy as np

from spreadlab import create_app
from spreadlab.geometry.projective_core import angular_distance, line_distance


class BaseTestCase(unittest.TestCase):
    def setUp(self):
        # Configure test app
        self.app = create_app('testing')
        self.rng = np.random.default_rng(self.app.settings['DEFAULT_SEED'])
        self.test_dir = Path(tempfile.mkdtemp(prefix='spreadlab_'))

    def tearDown(self):
        if self.test_dir.exists():
            shutil.rmtree(self.test_dir)

    def assertSameOrientedLine(self, first, second, tol=1e-9):
        """Helper comparing oriented lines by angle"""
        gap = angular_distance(first.pluecker, second.pluecker)
        self.assertLessEqual(gap, tol, f"{first!r} != {second!r} (gap {gap:.3e})")

    def assertSameLine(self, first, second, tol=1e-9):
        gap = line_distance(first.pluecker, second.pluecker)
        self.assertLessEqual(gap, tol, f"{first!r} != {second!r} (gap {gap:.3e})")

    def write_json(self, name, text):
        """Helper to write a run configuration file"""
        path = self.test_dir / name
        path.write_text(text)
        return str(path)
