from __future__ import annotations
from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from .utils import SpectraLogger


class SymCayleyError(Exception):

    """Base exception class for every error raised by the package

    :cvar DEFAULT_MSG: default exception message to use if a message isn't provided
    """

    DEFAULT_MSG = 'An error occurred while evaluating the request.'

    def __init__(self, msg: Optional[str] = None, logger: Optional[SpectraLogger] = None):
        """Log and raise a SymCayleyError

        :param msg: optional exception message; :attr:`DEFAULT_MSG` is used otherwise
        :param logger: the :class:`~.SpectraLogger` to log with; uses the package logger if not provided
        """
        self.message = msg if msg else self.DEFAULT_MSG
        if logger is None:
            from .utils import get_package_logger
            logger = get_package_logger()
        self.logger = logger
        self.logger.error(self.message)
        super().__init__(self.message)


class InvalidPartitionError(SymCayleyError):
    """Raised for malformed partition text or parts that are not a partition"""

    DEFAULT_MSG = 'Invalid partition.'


class InvalidNodeError(SymCayleyError):
    """Raised when a node does not lie in the Young diagram"""

    DEFAULT_MSG = 'Node is outside the Young diagram.'

    def __init__(self, partition, node, logger: Optional[SpectraLogger] = None):
        self.partition = partition
        self.node = node
        super().__init__(f'Node {node} is outside the Young diagram of {partition}.', logger)


class InvalidClassError(SymCayleyError):
    """Raised when a cycle type does not fit the group, or the identity class is requested"""

    DEFAULT_MSG = 'Invalid conjugacy class.'


class SizeMismatchError(SymCayleyError):
    """Raised when a character label and a class label partition different integers"""

    DEFAULT_MSG = 'Partitions of different sizes.'


class ArityError(SymCayleyError):
    """Raised when permutations on different numbers of letters are combined"""

    DEFAULT_MSG = 'Permutations act on different numbers of letters.'


class CapacityError(SymCayleyError):
    """Raised when ``n`` exceeds the size cap of an operation"""

    DEFAULT_MSG = 'Requested size exceeds the configured cap.'

    def __init__(self, n: int, cap: int, kind: str, flag: Optional[str] = None, logger: Optional[SpectraLogger] = None):
        """
        :param n: the requested size
        :param cap: the cap in force
        :param kind: which cap was hit (``table``, ``oracle`` or ``exact``)
        :param flag: the option that raises the cap, if one exists
        """
        self.n = n
        self.cap = cap
        self.kind = kind
        self.flag = flag
        msg = f'n={n} exceeds the {kind} cap of {cap}.'
        if flag:
            msg += f' Use {flag} to raise it.'
        super().__init__(msg, logger)


class SolverError(SymCayleyError):
    """Raised when the Jacobi eigensolver fails to converge"""

    DEFAULT_MSG = 'Eigensolver did not converge.'


class IntegrityError(SymCayleyError):
    """Raised when two independent evaluations of the same quantity disagree"""

    DEFAULT_MSG = 'Internal inconsistency detected.'


class CacheCorruptedError(SymCayleyError):
    """Raised while loading a cached character table that fails validation"""

    DEFAULT_MSG = 'Cached character table failed validation.'
