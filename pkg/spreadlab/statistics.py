from collections import defaultdict
from typing import Dict, Iterable
import math


class ResidualStatistics:
    @staticmethod
    def decade_bin(value: float) -> str:
        """Decade bucket label such as '1e-12..1e-11'"""
        if value is None or not math.isfinite(value):
            return 'non-finite'
        if value <= 0.0:
            return 'zero'
        exponent = math.floor(math.log10(value))
        return f"1e{exponent}..1e{exponent + 1}"

    @staticmethod
    def summarize(residuals: Iterable[float]) -> Dict:
        """Min/max/mean and decade distribution of a residual sample"""
        values = list(residuals)

        stats = {
            'count': len(values),
            'min': None,
            'max': None,
            'mean': None,
            'distribution': defaultdict(int),
            'non_finite': 0
        }

        finite = []
        for value in values:
            stats['distribution'][ResidualStatistics.decade_bin(value)] += 1
            if value is None or not math.isfinite(value):
                stats['non_finite'] += 1
            else:
                finite.append(value)

        if finite:
            stats['min'] = min(finite)
            stats['max'] = max(finite)
            stats['mean'] = math.fsum(finite) / len(finite)

        stats['distribution'] = dict(sorted(stats['distribution'].items()))
        return stats

    @staticmethod
    def pass_rate(passed: int, total: int) -> float:
        if total == 0:
            return 0.0
        return round(passed * 100 / total, 2)
