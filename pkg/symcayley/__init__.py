from . import utils
from . import exceptions
from . import models
from . import engine
from . import managers
import os

from dotenv import load_dotenv

__version__ = "0.3.0"

from .constants import ENV_CACHE_DIR, ENV_TABLE_CAP, ENV_LOG_LEVEL
from .models import Partition, Permutation, ClassSpec

Engine = engine.Engine
logger = utils.SpectraLogger(
    name=utils.SpectraLogger.PACKAGE_LOG_NAME,
    stdout_level='WARNING'
)


def get_engine(**kwargs) -> Engine:
    """Initialize an :class:`~.Engine` using settings stored in environment variables

    Values are read from the environment after loading a ``.env`` file, if one exists.
    Any valid :class:`~.Engine` kwargs can be used in addition to and/or instead of environment variables

    **Usage**::

      import symcayley

      engine = symcayley.get_engine(cache_dir='/tmp/tables')

    :param kwargs: any valid kwargs for :class:`~.Engine`
    :raises ValueError: if an environment variable holds an invalid value
    """
    load_dotenv()
    settings = dict(kwargs)

    if 'cache_dir' not in settings and os.getenv(ENV_CACHE_DIR):
        settings['cache_dir'] = os.getenv(ENV_CACHE_DIR)

    if 'table_cap' not in settings and os.getenv(ENV_TABLE_CAP):
        raw = os.getenv(ENV_TABLE_CAP)
        if not raw.strip().isdigit():
            raise ValueError(f"Invalid {ENV_TABLE_CAP}: expected a non-negative integer, got {raw!r}")
        settings['table_cap'] = int(raw)

    if 'log_level' not in settings and os.getenv(ENV_LOG_LEVEL):
        level = os.getenv(ENV_LOG_LEVEL).upper()
        if level not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            raise ValueError(f"Invalid {ENV_LOG_LEVEL}: {level!r}")
        settings['log_level'] = level

    return Engine.from_dict(settings)


logger.debug('Initialized SymCayley')
