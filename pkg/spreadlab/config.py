import os
from dotenv import load_dotenv

load_dotenv()

class Config:
    # Common configurations
    TESTING = False

    # Worker pool (0 = one worker per CPU)
    THREADS = int(os.getenv('SPREADLAB_THREADS', '0'))

    # Logging
    LOG_DIR = os.getenv('SPREADLAB_LOG_DIR', 'logs')
    LOG_LEVEL = os.getenv('SPREADLAB_LOG_LEVEL', 'INFO')

    # Sampling defaults
    DEFAULT_SEED = int(os.getenv('SPREADLAB_SEED', '7'))
    DEFAULT_SAMPLES = int(os.getenv('SPREADLAB_SAMPLES', '1000'))

    # Tolerance ladder: one decade of slack between producer and consumer
    TOLERANCES = {
        'algebraic': 1e-12,
        'solver': 1e-9,
        'classify': 1e-8,
        'accept': 1e-6,
    }

class DevelopmentConfig(Config):
    DEBUG = True
    LOG_LEVEL = os.getenv('SPREADLAB_LOG_LEVEL', 'DEBUG')

class TestingConfig(Config):
    TESTING = True
    LOG_DIR = None
    THREADS = 2
    DEFAULT_SAMPLES = 200

class ProductionConfig(Config):
    DEBUG = False
    TESTING = False

config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': ProductionConfig
}
