from enum import Enum

# Capacity defaults
DEFAULT_TABLE_CAP = 12
DEFAULT_ORACLE_CAP = 6
EXTENDED_ORACLE_CAP = 7
DEFAULT_EXACT_CAP = 5
EXTENDED_EXACT_CAP = 6

# Float oracle
JACOBI_REL_TOL = 1e-10
JACOBI_MAX_SWEEPS = 30
JACOBI_EARLY_SWEEPS = 3
JACOBI_EARLY_SKIP = 0.2
DEFAULT_FLOAT_TOL = 1e-6

# Environment
ENV_CACHE_DIR = 'SYMCAYLEY_CACHE_DIR'
ENV_TABLE_CAP = 'SYMCAYLEY_TABLE_CAP'
ENV_LOG_LEVEL = 'SYMCAYLEY_LOG_LEVEL'
ENV_LOG_DIR = 'SYMCAYLEY_LOG_DIR'

DEFAULT_CACHE_DIR = '~/.symcayley/cache'
CACHE_FILE_PATTERN = 'chartable_{n}.json'

TABLE = 'table'
JSON = 'json'
CSV = 'csv'

EXACT_MOMENTS = 'exact-moments'
FLOAT_EIGENSOLVE = 'float-eigensolve'


# Enums
class OutputFormat(Enum):
    TABLE = TABLE
    JSON = JSON
    CSV = CSV


class VerdictMethod(Enum):
    EXACT_MOMENTS = EXACT_MOMENTS
    FLOAT_EIGENSOLVE = FLOAT_EIGENSOLVE


class CapKind(Enum):
    """Which size cap guards an operation, and the flag that lifts it"""
    TABLE = 'table'
    ORACLE = 'oracle'
    EXACT = 'exact'
