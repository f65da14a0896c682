import json
import math

import numpy as np

from spreadlab import create_app
from spreadlab.config import Config, config
from spreadlab.error_logger import FailureLogger
from spreadlab.geometry.clifford import Side
from spreadlab.statistics import ResidualStatistics
from spreadlab.storage import ReportStore, dumps_csv, dumps_report, to_jsonable
from spreadlab.tasks import _chunks, resolve_workers, run_partitioned
from spreadlab.verify import CheckReport
from tests import BaseTestCase


class TestStorage(BaseTestCase):
    def test_jsonable(self):
        data = to_jsonable({'a': np.array([1.0, np.inf]), 'side': Side.LEFT, 'n': np.int64(3),
                            'ok': np.bool_(True)})
        self.assertEqual(data, {'a': [1.0, None], 'side': 'left', 'n': 3, 'ok': True})

    def test_report_bytes_are_stable(self):
        report = CheckReport(name='x', passed=True, residual=0.1 + 0.2, samples=1, seed=7)
        text = dumps_report(report)
        self.assertEqual(text, dumps_report(report))
        self.assertIn('0.30000000000000004', text)
        self.assertTrue(text.endswith('\n'))
        self.assertEqual(json.loads(text)['status'], 'pass')

    def test_csv(self):
        text = dumps_csv(('r', 'd'), [(1.0, 1.0 / 3.0)])
        self.assertEqual(text, 'r,d\n1,0.33333333333333331\n')

    def test_store_round_trip(self):
        store = ReportStore(self.test_dir)
        path, error = store.save_report({'value': 1.5}, 'nested/report.json')
        self.assertIsNone(error)
        data, error = store.load_json('nested/report.json')
        self.assertEqual(data, {'value': 1.5})
        _, error = store.load_json('missing.json')
        self.assertIsNotNone(error)

    def test_store_reports_write_errors(self):
        blocker = self.test_dir / 'file'
        blocker.write_text('')
        path, error = ReportStore(self.test_dir).save_csv(('r',), [(1.0,)], 'file/data.csv')
        self.assertIsNone(path)
        self.assertIsNotNone(error)


class TestStatistics(BaseTestCase):
    def test_decade_bins(self):
        self.assertEqual(ResidualStatistics.decade_bin(0.5), '1e-1..1e0')
        self.assertEqual(ResidualStatistics.decade_bin(0.0), 'zero')
        self.assertEqual(ResidualStatistics.decade_bin(math.inf), 'non-finite')

    def test_summary(self):
        stats = ResidualStatistics.summarize([1e-13, 3e-13, math.inf, 0.0])
        self.assertEqual(stats['count'], 4)
        self.assertEqual(stats['non_finite'], 1)
        self.assertEqual(stats['max'], 3e-13)
        self.assertEqual(stats['distribution']['1e-13..1e-12'], 2)
        self.assertEqual(ResidualStatistics.pass_rate(1, 3), 33.33)
        self.assertEqual(ResidualStatistics.pass_rate(0, 0), 0.0)


class TestTasks(BaseTestCase):
    def test_order_is_kept(self):
        items = list(range(23))
        self.assertEqual(run_partitioned(lambda x: x * x, items, workers=4), [x * x for x in items])
        self.assertEqual(run_partitioned(lambda x: x, [], workers=4), [])

    def test_chunks_cover_items(self):
        chunks = _chunks(list(range(10)), 3)
        self.assertEqual([len(c) for c in chunks], [4, 3, 3])

    def test_resolve_workers(self):
        self.assertEqual(resolve_workers(3), 3)
        self.assertGreaterEqual(resolve_workers(0), 1)


class TestApp(BaseTestCase):
    def test_testing_config(self):
        self.assertTrue(self.app.testing)
        self.assertIsNone(self.app.settings['LOG_DIR'])
        self.assertEqual(self.app.tolerances, Config.TOLERANCES)

    def test_file_logging(self):
        class LoggingConfig(Config):
            LOG_DIR = str(self.test_dir / 'logs')
        config['logging'] = LoggingConfig
        app = create_app('logging')
        try:
            self.assertTrue((self.test_dir / 'logs' / 'spreadlab.log').exists())
        finally:
            for handler in list(app.logger.handlers):
                app.logger.removeHandler(handler)
                handler.close()
            del config['logging']

    def test_failure_logger(self):
        logger = FailureLogger(self.test_dir / 'logs')
        logger.log_failure(CheckReport(name='spread', passed=False, residual=1.0, samples=1, seed=9,
                                       witness={'point': [1, 0, 0, 0]}))
        for handler in logger.logger.handlers:
            handler.flush()
        text = logger.log_file.read_text()
        self.assertIn('Check: spread - Seed: 9', text)
        self.assertIn('"point"', text)
        for handler in list(logger.logger.handlers):
            logger.logger.removeHandler(handler)
            handler.close()

    def test_error_log(self):
        logger = FailureLogger(self.test_dir / 'logs')
        logger.log_error('Satz1 profile needs w', 'ConfigurationError', 'spread check')
        logger.log_error('no root', 'NoRoot')
        for handler in logger.logger.handlers:
            handler.flush()
        text = logger.log_file.read_text()
        self.assertIn('Check: spread check - Type: ConfigurationError - Message: Satz1 profile needs w', text)
        self.assertIn('ERROR - Type: NoRoot - Message: no root', text)
        for handler in list(logger.logger.handlers):
            logger.logger.removeHandler(handler)
            handler.close()
