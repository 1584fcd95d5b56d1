from __future__ import annotations

import json
from abc import ABC, abstractmethod
from typing import List


class Model(ABC):

    """The abstract base class of all serializable result classes

    **Overview**

    * A :class:`Model` is an immutable value produced by a :class:`~.Manager`
    * :meth:`to_dict` gives the canonical payload, with big integers as decimal strings
      and rationals as reduced ``p/q`` strings, so JSON never truncates
    * :meth:`to_json` is deterministic: keys keep the order of :meth:`to_dict` and no timestamps are added
    """

    @abstractmethod
    def to_dict(self) -> dict:
        """Converts the model instance to a dictionary of JSON-safe values"""

    @classmethod
    @abstractmethod
    def from_dict(cls, data: dict) -> Model:
        """Rebuilds an instance from the output of :meth:`to_dict`"""

    def to_json(self) -> str:
        """Converts the model instance to a JSON string"""
        return json.dumps(self.to_dict(), indent=2) + '\n'

    @classmethod
    def from_json(cls, json_str: str) -> Model:
        return cls.from_dict(json.loads(json_str))

    def to_csv_rows(self) -> List[List[str]]:
        """Rows for CSV export, header first"""
        raise NotImplementedError(f'{self.__class__.__name__} has no CSV layout')

    def to_text(self) -> str:
        """Human-readable rendering used by the ``table`` output format"""
        return render_rows(self.to_csv_rows())


def render_rows(rows: List[List[str]]) -> str:
    """Aligns rows into right-justified columns"""
    if not rows:
        return ''
    widths = [max(len(row[i]) for row in rows if i < len(row)) for i in range(max(len(row) for row in rows))]
    lines = ['  '.join(cell.rjust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in rows]
    return '\n'.join(lines) + '\n'
