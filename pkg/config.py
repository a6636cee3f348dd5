import os

from dotenv import load_dotenv

load_dotenv()


class Config:
    # Logging Configuration
    LOG_LEVEL = os.environ.get('EXSTAB_LOG_LEVEL') or 'WARNING'
    LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

    # Instance Generation
    SEED = int(os.environ.get('EXSTAB_SEED') or 0)

    # Solver Configuration
    THREADS = int(os.environ.get('EXSTAB_THREADS') or 1)
    SAT_SOLVER = os.environ.get('EXSTAB_SAT_SOLVER') or 'glucose42'

    # Oracle limits (agents); larger instances are refused by the brute-force oracle
    ORACLE_MAX_AGENTS = int(os.environ.get('EXSTAB_ORACLE_MAX_AGENTS') or 20)

    # JSON report schema version
    JSON_SCHEMA = 1

    # Exit codes
    EXIT_OK = 0
    EXIT_FAILED = 1
    EXIT_NO_SOLUTION = 2
    EXIT_USAGE = 64
    EXIT_DATA = 65
    EXIT_SOFTWARE = 70


class DevelopmentConfig(Config):
    LOG_LEVEL = os.environ.get('EXSTAB_LOG_LEVEL') or 'INFO'


class TestingConfig(Config):
    LOG_LEVEL = 'DEBUG'
    ORACLE_MAX_AGENTS = 24


class ProductionConfig(Config):
    pass


config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': ProductionConfig
}
