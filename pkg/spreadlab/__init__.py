from .config import config
from .exceptions import ConfigurationError
from dataclasses import dataclass, field
import logging
from logging.handlers import RotatingFileHandler
import os

__version__ = '0.3.0'


@dataclass
class App:
    """Configured runtime shared by the command line and the suites."""
    name: str
    settings: dict = field(default_factory=dict)
    logger: logging.Logger = None

    @property
    def testing(self) -> bool:
        return bool(self.settings.get('TESTING'))

    @property
    def tolerances(self) -> dict:
        return dict(self.settings['TOLERANCES'])


def _settings_from(config_class) -> dict:
    return {key: getattr(config_class, key) for key in dir(config_class) if key.isupper()}


def create_app(config_name='default'):
    if config_name not in config:
        raise ConfigurationError(f"Unknown configuration '{config_name}'")

    app = App(name=__name__, settings=_settings_from(config[config_name]))
    app.logger = logging.getLogger(__name__)

    level = getattr(logging, str(app.settings.get('LOG_LEVEL', 'INFO')).upper(), logging.INFO)
    logging.basicConfig(level=level)

    # File logging is off in testing (LOG_DIR is None)
    log_dir = app.settings.get('LOG_DIR')
    if log_dir and not any(isinstance(h, RotatingFileHandler) for h in app.logger.handlers):
        if not os.path.exists(log_dir):
            os.makedirs(log_dir)

        handler = RotatingFileHandler(
            os.path.join(log_dir, 'spreadlab.log'),
            maxBytes=10240000,
            backupCount=10
        )
        handler.setFormatter(logging.Formatter(
            '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'
        ))
        handler.setLevel(level)
        app.logger.addHandler(handler)

    app.logger.setLevel(level)
    app.logger.debug(f'Application startup ({config_name})')
    return app
