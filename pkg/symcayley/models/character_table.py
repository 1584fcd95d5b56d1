from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Tuple, List, Optional

from .model import Model
from .partition import Partition


@dataclass(frozen=True)
class CharacterTable(Model):

    """Exact character table of ``Sym(n)``

    Rows are the irreducible characters ``χ^α`` and columns the cycle types ``β``,
    both in reverse lexicographic order. ``values[r][c]`` is ``χ^{rows[r]}(cols[c])``.
    """

    n: int
    rows: Tuple[Partition, ...]
    cols: Tuple[Partition, ...]
    values: Tuple[Tuple[int, ...], ...]
    degrees: Tuple[int, ...]
    class_sizes: Tuple[int, ...]

    def __repr__(self):
        return f'<CharacterTable of Sym({self.n}): {len(self.rows)}x{len(self.cols)}>'

    def row_index(self, alpha: Partition) -> int:
        return self.rows.index(alpha)

    def col_index(self, beta: Partition) -> int:
        return self.cols.index(beta)

    def value(self, alpha: Partition, beta: Partition) -> int:
        return self.values[self.row_index(alpha)][self.col_index(beta)]

    def row(self, alpha: Partition) -> Tuple[int, ...]:
        return self.values[self.row_index(alpha)]

    def column(self, beta: Partition) -> Tuple[int, ...]:
        c = self.col_index(beta)
        return tuple(row[c] for row in self.values)

    def degree(self, alpha: Partition) -> int:
        return self.degrees[self.row_index(alpha)]

    @property
    def order(self) -> int:
        """``|Sym(n)| = n!``"""
        return factorial(self.n)

    def is_consistent(self) -> bool:
        """Cheap validation: the identity column equals the degrees and ``Σ deg² = n!``"""
        if len(self.values) != len(self.rows) or any(len(row) != len(self.cols) for row in self.values):
            return False
        if self.column(Partition.column(self.n)) != self.degrees:
            return False
        return sum(d * d for d in self.degrees) == self.order and sum(self.class_sizes) == self.order

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'rows': [str(alpha) for alpha in self.rows],
            'cols': [str(beta) for beta in self.cols],
            'values': [[str(v) for v in row] for row in self.values],
            'class_sizes': [str(size) for size in self.class_sizes],
        }

    @classmethod
    def from_dict(cls, data: dict) -> CharacterTable:
        """Rebuilds a table; degrees are read from the identity column"""
        n = int(data['n'])
        rows = tuple(Partition.parse(text) for text in data['rows'])
        cols = tuple(Partition.parse(text) for text in data['cols'])
        values = tuple(tuple(int(v) for v in row) for row in data['values'])
        identity = cols.index(Partition.column(n))
        return cls(
            n=n,
            rows=rows,
            cols=cols,
            values=values,
            degrees=tuple(row[identity] for row in values),
            class_sizes=tuple(int(size) for size in data['class_sizes']),
        )

    def to_csv_rows(self) -> List[List[str]]:
        """Header of class labels, a ``class_size`` row, then one row per character"""
        rows = [['chi'] + [str(beta) for beta in self.cols]]
        rows.append(['class_size'] + [str(size) for size in self.class_sizes])
        for alpha, values in zip(self.rows, self.values):
            rows.append([str(alpha)] + [str(v) for v in values])
        return rows


@dataclass(frozen=True)
class OrthogonalityReport(Model):

    """Outcome of checking both orthogonality relations of a :class:`CharacterTable`

    ``first_violation`` names the relation and the pair of labels that failed, when any did.
    """

    n: int
    passed: bool
    row_pairs_checked: int
    column_pairs_checked: int
    first_violation: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'passed': self.passed,
            'row_pairs_checked': self.row_pairs_checked,
            'column_pairs_checked': self.column_pairs_checked,
            'first_violation': self.first_violation,
        }

    @classmethod
    def from_dict(cls, data: dict) -> OrthogonalityReport:
        return cls(**data)
