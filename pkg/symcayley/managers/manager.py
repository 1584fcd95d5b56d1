from __future__ import annotations
from typing import TYPE_CHECKING

from .. import engine as engines

if TYPE_CHECKING:
    from ..engine import Engine
    from ..utils import SpectraLogger


class Manager:
    """Binds a family of operations to an :class:`~.Engine`. Parent of all operation classes

    The engine supplies the size caps, the logger and the character table store.
    """

    def __init__(self, engine: Engine, name: str):
        """Initialize a Manager object

        :param engine: an initialized :class:`~.Engine` object
        :param name: short name used in log messages
        """
        if not isinstance(engine, engines.Engine):
            raise TypeError(f'`engine` must be of type {engines.Engine}')

        #: The :class:`~.Engine` supplying caps, logging and caches
        self.engine = engine
        #: Short name used in log messages
        self.name = name

    def __repr__(self):
        return f'<{self.__class__.__name__} for {self.engine}>'

    @property
    def logger(self) -> SpectraLogger:
        return self.engine.logger
