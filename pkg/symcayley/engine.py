from __future__ import annotations

import hashlib
import json
import os
import tempfile
from typing import Optional, Dict

from .constants import (
    CapKind, DEFAULT_TABLE_CAP, DEFAULT_ORACLE_CAP, EXTENDED_ORACLE_CAP,
    DEFAULT_EXACT_CAP, EXTENDED_EXACT_CAP, DEFAULT_CACHE_DIR, CACHE_FILE_PATTERN
)
from .exceptions import CapacityError, CacheCorruptedError
from .managers import Manager, PartitionManager, GroupManager, CharacterManager, SpectrumManager, OracleManager
from .models import CharacterTable
from .utils import SpectraLogger


class Engine:

    """The class that owns the configuration shared by every operation

    An :class:`Engine` holds the size caps, the logger and the character table store.
    Operations are reached through the manager properties::

        >> engine = Engine()
        >> report = engine.spectra.spectrum(ClassSpec.n_cycles(5))
        >> report.energy
        Fraction(384, 1)
    """

    def __init__(
            self,
            table_cap: int = DEFAULT_TABLE_CAP,
            oracle_cap: int = DEFAULT_ORACLE_CAP,
            exact_cap: int = DEFAULT_EXACT_CAP,
            enable_exact_n6: bool = False,
            enable_n7: bool = False,
            cache_dir: Optional[str] = None,
            use_cache: bool = True,
            log_level: str = 'WARNING',
            log_file: Optional[str] = None,
    ):
        """Initialize an Engine

        :param table_cap: largest ``n`` for character tables and spectra
        :param oracle_cap: largest ``n`` for explicit Cayley graphs and the float oracle
        :param exact_cap: largest ``n`` for the exact moment oracle
        :param enable_exact_n6: raises ``exact_cap`` to 6
        :param enable_n7: raises ``oracle_cap`` to 7
        :param cache_dir: directory for cached character tables; defaults to ``~/.symcayley/cache``
        :param use_cache: if ``False``, tables are neither read from nor written to disk
        :param log_level: the console logging level
        :param log_file: log file to use for the engine's :attr:`logger`
        """
        if min(table_cap, oracle_cap, exact_cap) < 0:
            raise ValueError('Caps must be non-negative')
        self.table_cap: int = table_cap
        self.oracle_cap: int = max(oracle_cap, EXTENDED_ORACLE_CAP) if enable_n7 else oracle_cap
        self.exact_cap: int = max(exact_cap, EXTENDED_EXACT_CAP) if enable_exact_n6 else exact_cap
        self.enable_exact_n6: bool = enable_exact_n6
        self.enable_n7: bool = enable_n7
        self.cache_dir: str = os.path.expanduser(cache_dir or DEFAULT_CACHE_DIR)
        self.use_cache: bool = use_cache
        self.log_level: str = log_level
        #: The :class:`~.SpectraLogger` for the engine
        self.logger: SpectraLogger = SpectraLogger(
            name=SpectraLogger.ENGINE_LOG_NAME,
            log_file=log_file,
            stdout_level=log_level,
        )
        #: The :class:`TableStore` holding computed character tables
        self.store: TableStore = TableStore(self)

    def __repr__(self):
        return f'<Engine table_cap={self.table_cap} oracle_cap={self.oracle_cap} exact_cap={self.exact_cap}>'

    @classmethod
    def from_json(cls, json_str: str) -> Engine:
        """Initialize an :class:`~.Engine` from a JSON string of settings"""
        return cls.from_dict(json.loads(json_str))

    @classmethod
    def from_dict(cls, d: dict) -> Engine:
        """Initialize an :class:`~.Engine` from a dictionary of settings"""
        return cls(**d)

    def to_dict(self) -> Dict:
        """The settings needed to rebuild this engine

        ``oracle_cap`` and ``exact_cap`` are stored before the override flags are applied.
        """
        return {
            'table_cap': self.table_cap,
            'oracle_cap': DEFAULT_ORACLE_CAP if self.enable_n7 else self.oracle_cap,
            'exact_cap': DEFAULT_EXACT_CAP if self.enable_exact_n6 else self.exact_cap,
            'enable_exact_n6': self.enable_exact_n6,
            'enable_n7': self.enable_n7,
            'cache_dir': self.cache_dir,
            'use_cache': self.use_cache,
            'log_level': self.log_level,
            'log_file': self.logger.log_file,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def check_cap(self, n: int, kind: CapKind) -> None:
        """Raises :class:`~.CapacityError` when ``n`` exceeds the cap of the given kind"""
        if kind is CapKind.TABLE:
            cap, flag = self.table_cap, None
        elif kind is CapKind.ORACLE:
            cap, flag = self.oracle_cap, None if self.enable_n7 else '--enable-n7'
        else:
            cap, flag = self.exact_cap, None if self.enable_exact_n6 else '--enable-exact-n6'
        if n > cap:
            raise CapacityError(n, cap, kind.value, flag, self.logger)

    def manager(self, name: str) -> Manager:
        """Returns the :class:`~.Manager` registered under ``name``

        :param name: one of ``partitions``, ``symgroup``, ``characters``, ``spectrum`` or ``oracle``
        """
        managers = {
            'partitions': PartitionManager,
            'symgroup': GroupManager,
            'characters': CharacterManager,
            'spectrum': SpectrumManager,
            'oracle': OracleManager,
        }
        if name.lower() not in managers:
            raise ValueError(f'Unknown manager {name!r}; expected one of {", ".join(managers)}')
        return managers[name.lower()](self)

    @property
    def partitions(self) -> PartitionManager:
        """Initializes a :class:`~.PartitionManager`"""
        return PartitionManager(self)

    @property
    def groups(self) -> GroupManager:
        """Initializes a :class:`~.GroupManager`"""
        return GroupManager(self)

    @property
    def characters(self) -> CharacterManager:
        """Initializes a :class:`~.CharacterManager`"""
        return CharacterManager(self)

    @property
    def spectra(self) -> SpectrumManager:
        """Initializes a :class:`~.SpectrumManager`"""
        return SpectrumManager(self)

    @property
    def oracle(self) -> OracleManager:
        """Initializes an :class:`~.OracleManager`"""
        return OracleManager(self)


class TableStore:

    """Character tables held in memory and, when enabled, in a checksummed file cache

    A cache file holds ``{"checksum": sha256 of the table JSON, "table": {...}}``. Files are
    replaced atomically; a file failing the checksum or the degree check is recomputed.
    """

    def __init__(self, engine: Engine):
        self.engine = engine
        self._tables: Dict[int, CharacterTable] = {}

    def __repr__(self):
        return f'<TableStore {self.engine.cache_dir}: {sorted(self._tables)} in memory>'

    def path_for(self, n: int) -> str:
        return os.path.join(self.engine.cache_dir, CACHE_FILE_PATTERN.format(n=n))

    def get(self, n: int) -> CharacterTable:
        """The table of ``Sym(n)`` from memory, then disk, else freshly built and saved"""
        if n in self._tables:
            return self._tables[n]

        table = None
        if self.engine.use_cache:
            try:
                table = self.load(n)
            except CacheCorruptedError:
                self.engine.logger.warning(f'Discarding corrupted cache file {self.path_for(n)}')

        if table is None:
            table = self.engine.characters.build_table(n)
            if self.engine.use_cache:
                try:
                    self.save(table)
                except OSError as e:
                    self.engine.logger.warning(f'Could not cache the table of Sym({n}): {e}')

        self._tables[n] = table
        return table

    @staticmethod
    def checksum(payload: dict) -> str:
        canonical = json.dumps(payload, sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(canonical.encode('utf-8')).hexdigest()

    def load(self, n: int) -> Optional[CharacterTable]:
        """Reads a cached table; ``None`` when no file exists

        :raises CacheCorruptedError: if the file is unreadable or fails validation
        """
        path = self.path_for(n)
        if not os.path.exists(path):
            return None
        try:
            with open(path, encoding='utf-8') as f:
                data = json.load(f)
            if data['checksum'] != self.checksum(data['table']):
                raise CacheCorruptedError(f'Checksum mismatch in {path}', self.engine.logger)
            table = CharacterTable.from_dict(data['table'])
        except CacheCorruptedError:
            raise
        except (OSError, ValueError, KeyError, TypeError) as e:
            raise CacheCorruptedError(f'Unreadable cache file {path}: {e}', self.engine.logger) from e

        if table.n != n or not table.is_consistent():
            raise CacheCorruptedError(f'Cached table in {path} fails the degree check', self.engine.logger)
        self.engine.logger.debug(f'Loaded character table of Sym({n}) from {path}')
        return table

    def save(self, table: CharacterTable) -> str:
        """Writes ``table`` through a temporary file and :func:`os.replace`"""
        os.makedirs(self.engine.cache_dir, exist_ok=True)
        payload = table.to_dict()
        document = {'checksum': self.checksum(payload), 'table': payload}
        path = self.path_for(table.n)

        fd, tmp_path = tempfile.mkstemp(dir=self.engine.cache_dir, suffix='.tmp')
        try:
            with os.fdopen(fd, 'w', encoding='utf-8') as f:
                json.dump(document, f)
            os.replace(tmp_path, path)
        except OSError:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise
        self.engine.logger.debug(f'Cached character table of Sym({table.n}) at {path}')
        return path

    def clear(self) -> int:
        """Drops every table from memory and deletes the cache files; returns the number of files removed"""
        self._tables.clear()
        if not os.path.isdir(self.engine.cache_dir):
            return 0
        prefix, suffix = CACHE_FILE_PATTERN.split('{n}')
        removed = 0
        for name in os.listdir(self.engine.cache_dir):
            if name.startswith(prefix) and name.endswith(suffix):
                os.remove(os.path.join(self.engine.cache_dir, name))
                removed += 1
        self.engine.logger.info(f'Removed {removed} cached tables from {self.engine.cache_dir}')
        return removed
