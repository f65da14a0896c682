import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Optional


class FailureLogger:
    def __init__(self, log_dir: Optional[str] = 'logs'):
        self.logger = logging.getLogger('spreadlab.failures')
        self.logger.setLevel(logging.WARNING)
        self.log_file = None

        # No file output without a log directory (testing)
        if log_dir is None:
            return
        log_dir = Path(log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)

        self.log_file = log_dir / f"check_failures_{datetime.now().strftime('%Y%m%d')}.log"
        if not any(getattr(h, 'baseFilename', None) == str(self.log_file.resolve())
                   for h in self.logger.handlers):
            handler = logging.FileHandler(self.log_file)
            handler.setLevel(logging.WARNING)
            handler.setFormatter(logging.Formatter(
                '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
            ))
            self.logger.addHandler(handler)

    def log_failure(self, report) -> None:
        """Log a failing check with its reproduction data"""
        witness = json.dumps(report.witness, sort_keys=True, default=str) if report.witness else '{}'
        self.logger.warning(
            f"Check: {report.name} - Seed: {report.seed} - Residual: {report.residual!r} - "
            f"Witness: {witness}"
        )

    def log_error(self, error_message: str, error_type: str, check: Optional[str] = None) -> None:
        """Log an error with context"""
        context = f"Check: {check} - " if check else ""
        self.logger.error(f"{context}Type: {error_type} - Message: {error_message}")
