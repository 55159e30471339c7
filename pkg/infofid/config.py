"""
Centralized configuration for infofid.
Loads environment variables using python-dotenv.
"""
import os
from pathlib import Path
from dotenv import load_dotenv

from infofid.utils.helpers import parse_bool

# Load environment variables from .env file
BASE_DIR = Path(__file__).resolve().parent.parent
load_dotenv(BASE_DIR / '.env')


class Config:
    """Base configuration class."""

    INFOFID_ENV = os.getenv('INFOFID_ENV', 'production')

    # Logging settings
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    LOG_JSON = parse_bool(os.getenv('LOG_JSON', '0'))
    LOG_DIR = os.getenv('LOG_DIR', '')

    # Sampling settings
    SEED_ENV_VAR = 'INFOFID_SEED'
    DEFAULT_SEED = 20110518
    DEFAULT_SAMPLES = 10 ** 6
    MIN_VERIFY_SAMPLES = 10 ** 4
    CHUNK_SIZE = int(os.getenv('INFOFID_CHUNK_SIZE', 2 ** 16))
    N_JOBS = int(os.getenv('INFOFID_N_JOBS', 1))

    # Verification settings
    Z_THRESHOLD = 5.0
    QUADRATURE_EPSABS = 1e-12
    QUADRATURE_MAX_DIM = 3

    # Output settings
    CSV_SIGNIFICANT_DIGITS = 12
    DEFAULT_FIGURE_DIMS = (2, 4, 6, 8, 10)


class DevelopmentConfig(Config):
    """Development configuration."""
    INFOFID_ENV = 'development'
    LOG_LEVEL = 'DEBUG'


class ProductionConfig(Config):
    """Production configuration."""
    INFOFID_ENV = 'production'


class TestingConfig(Config):
    """Testing configuration."""
    INFOFID_ENV = 'testing'
    LOG_LEVEL = 'WARNING'
    CHUNK_SIZE = 2 ** 12


# Configuration mapping
config_by_name = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}


def get_config():
    """
    Get the configuration object based on INFOFID_ENV.

    Returns:
        Config: The configuration object
    """
    env = os.getenv('INFOFID_ENV', 'production')
    return config_by_name.get(env, ProductionConfig)
