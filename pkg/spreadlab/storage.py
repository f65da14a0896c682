from enum import Enum
from pathlib import Path
from typing import Iterable, Optional, Sequence, Tuple
import csv
import io
import json
import math

import numpy as np


def to_jsonable(value):
    """Plain JSON types; non-finite floats become null"""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    if hasattr(value, 'to_dict'):
        return to_jsonable(value.to_dict())
    return value


def dumps_report(data) -> str:
    # repr floats round-trip exactly, so identical runs give identical bytes
    return json.dumps(to_jsonable(data), indent=2, sort_keys=True, allow_nan=False) + '\n'


def format_float(value: float) -> str:
    return format(float(value), '.17g')


def dumps_csv(header: Sequence[str], rows: Iterable[Sequence[float]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) for v in row])
    return buffer.getvalue()


class ReportStore:
    def __init__(self, base_path: Optional[str] = None):
        self.base_path = Path(base_path) if base_path else None

    def _resolve(self, filename: str) -> Path:
        path = Path(filename)
        if self.base_path is not None and not path.is_absolute():
            path = self.base_path / path
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    def save_report(self, report, filename: str) -> Tuple[Optional[str], Optional[str]]:
        """Save a report (dict or object with to_dict) as JSON"""
        try:
            file_path = self._resolve(filename)
            with open(file_path, 'w', newline='\n') as f:
                f.write(dumps_report(report))
            return str(file_path), None
        except Exception as e:
            return None, str(e)

    def save_csv(self, header: Sequence[str], rows: Iterable[Sequence[float]],
                 filename: str) -> Tuple[Optional[str], Optional[str]]:
        """Save plot data as CSV with a header row"""
        try:
            file_path = self._resolve(filename)
            with open(file_path, 'w', newline='') as f:
                f.write(dumps_csv(header, rows))
            return str(file_path), None
        except Exception as e:
            return None, str(e)

    def load_json(self, filename: str) -> Tuple[Optional[dict], Optional[str]]:
        try:
            path = Path(filename)
            if self.base_path is not None and not path.is_absolute():
                path = self.base_path / path
            with open(path) as f:
                return json.load(f), None
        except Exception as e:
            return None, str(e)
