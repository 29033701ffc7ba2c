"""
Settings for the hieroglyphs toolkit.

Flat module of constants; anything an algorithm guards on is read from here
at call time so that tests and the command line can override it.
"""
import os
from pathlib import Path

# Build paths inside the package like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent

FIXTURES_DIR = BASE_DIR / 'fixtures'
OUTPUT_DIR = os.environ.get('HIEROGLYPHS_OUTPUT_DIR', 'outputs')

# Oracle-scale guards
MAX_TAYLOR_GENERATORS = 20
MAX_ENUMERATION_SIZE = 7
MAX_HARNESS_SIZE = 5

# Harness sweeps
DEFAULT_WORKERS = int(os.environ.get('HIEROGLYPHS_WORKERS', '1'))

# Tests
RUN_SLOW_TESTS = os.environ.get('HIEROGLYPHS_SLOW_TESTS', '') not in ('', '0')
RANDOM_SEED = 20240501

# Logging
LOG_LEVEL = os.environ.get('HIEROGLYPHS_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': LOG_LEVEL,
    },
}
