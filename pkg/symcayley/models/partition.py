from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Optional, Tuple, FrozenSet, Dict

from ..exceptions import InvalidPartitionError, InvalidNodeError, IntegrityError

_TOKEN = re.compile(r'(\d+)(?:\^(\d+))?')


@dataclass(frozen=True, order=True)
class Node:
    """The ``(row, col)`` node of a Young diagram; both indices are 1-based"""

    row: int
    col: int

    def __str__(self):
        return f'({self.row},{self.col})'


@dataclass(frozen=True)
class Partition:

    """An integer partition: weakly decreasing positive parts

    Partitions label both the irreducible characters and the conjugacy classes (cycle types) of ``Sym(n)``.
    Instances are immutable and hashable, so they serve directly as memo keys.

    The empty partition ``()`` is the unique partition of 0.
    """

    parts: Tuple[int, ...]
    n: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(type(p) is not int or p < 1 for p in parts):
            raise InvalidPartitionError(f'Parts must be positive integers, got {parts}')
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidPartitionError(f'Parts must be weakly decreasing, got {parts}')
        object.__setattr__(self, 'parts', parts)
        object.__setattr__(self, 'n', sum(parts))

    # ------------------------------------------------- CONSTRUCTORS

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """Canonical partition from parts in any order; zero parts are dropped"""
        return cls(tuple(sorted((p for p in parts if p != 0), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse the text syntax for partitions

        Accepts comma-separated parts with optional parentheses and exponents, e.g.
        ``3,1,1``, ``(3,1,1)`` and ``3,1^2`` are the same partition. ``()`` or the
        empty string denote the empty partition. Parts are sorted, so ``1,3,1`` is accepted as well.

        :raises InvalidPartitionError: if a token is not a positive part
        """
        body = text.strip()
        if body.startswith('(') and body.endswith(')'):
            body = body[1:-1].strip()
        if not body:
            return cls(())

        parts = []
        for token in body.split(','):
            match = _TOKEN.fullmatch(token.strip())
            if not match:
                raise InvalidPartitionError(f'Invalid partition "{text}": bad part "{token.strip()}"')
            part = int(match.group(1))
            times = int(match.group(2)) if match.group(2) is not None else 1
            if part < 1 or times < 1:
                raise InvalidPartitionError(f'Invalid partition "{text}": parts and exponents must be positive')
            parts.extend([part] * times)
        return cls.from_parts(parts)

    @classmethod
    def row(cls, n: int) -> Partition:
        """The one-row partition ``(n)``"""
        return cls((n,) if n else ())

    @classmethod
    def column(cls, n: int) -> Partition:
        """The one-column partition ``(1^n)``"""
        return cls((1,) * n)

    @classmethod
    def hook(cls, n: int, m: int) -> Partition:
        """The hook shape ``(m+1, 1^(n-m-1))`` for ``0 <= m <= n-1``"""
        if not 0 <= m <= n - 1:
            raise InvalidPartitionError(f'Hook index m={m} out of range for n={n}')
        return cls((m + 1,) + (1,) * (n - m - 1))

    # ------------------------------------------------- TEXT

    def __str__(self):
        return '(' + ','.join(str(p) for p in self.parts) + ')'

    def __repr__(self):
        return f'<Partition {self}>'

    def multiplicities(self) -> Dict[int, int]:
        """Maps each part ``i`` to ``t_i``, the number of parts equal to ``i``"""
        return dict(sorted(Counter(self.parts).items(), reverse=True))

    def exponent_form(self) -> str:
        """Exponent notation, e.g. ``(3,1^2)`` for ``(3,1,1)``"""
        terms = [str(i) if t == 1 else f'{i}^{t}' for i, t in self.multiplicities().items()]
        return '(' + ','.join(terms) + ')'

    # ------------------------------------------------- DIAGRAM

    def __len__(self):
        return len(self.parts)

    def part(self, i: int) -> int:
        """The 1-based part ``α_i``; 0 beyond the last row"""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, node: Node) -> bool:
        """Diagram membership: ``1 <= i <= len(α)`` and ``1 <= j <= α_i``"""
        return 1 <= node.row <= len(self.parts) and 1 <= node.col <= self.parts[node.row - 1]

    def _require(self, node: Node) -> None:
        if not self.contains(node):
            raise InvalidNodeError(self, node)

    def nodes(self) -> Iterator[Node]:
        for i, part in enumerate(self.parts, 1):
            for j in range(1, part + 1):
                yield Node(i, j)

    @cached_property
    def conjugate(self) -> Partition:
        """The conjugate ``α^T``: ``α^T_i`` counts the parts of ``α`` that are ``>= i``"""
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= i) for i in range(1, self.parts[0] + 1)))

    @property
    def is_self_conjugate(self) -> bool:
        return self.conjugate == self

    def arm_length(self, node: Node) -> int:
        self._require(node)
        return self.parts[node.row - 1] - node.col

    def leg_length(self, node: Node) -> int:
        """``α^T_j - i``: the number of nodes strictly below ``node`` in its column"""
        self._require(node)
        return self.conjugate.part(node.col) - node.row

    def hook_length(self, node: Node) -> int:
        """``(α_i - j) + (α^T_j - i) + 1``"""
        return self.arm_length(node) + self.leg_length(node) + 1

    def hook_lengths(self) -> Tuple[Tuple[int, ...], ...]:
        """Row-major table of hook lengths, e.g. ``((4, 2, 1), (1,))`` for ``(3,1)``"""
        return tuple(
            tuple(self.hook_length(Node(i, j)) for j in range(1, part + 1))
            for i, part in enumerate(self.parts, 1)
        )

    def hooks_of_length(self, k: int) -> FrozenSet[Node]:
        """The nodes whose hook length equals ``k``; possibly empty"""
        return frozenset(node for node in self.nodes() if self.hook_length(node) == k)

    def rim(self, node: Node) -> FrozenSet[Node]:
        """The ``(i,j)``-rim: nodes ``(l,k)``, ``l >= i``, ``k >= j``, with ``(l+1,k+1)`` outside the diagram"""
        self._require(node)
        return frozenset(
            cell for cell in self.nodes()
            if cell.row >= node.row and cell.col >= node.col
            and not self.contains(Node(cell.row + 1, cell.col + 1))
        )

    def remove_rim_hook(self, node: Node) -> Partition:
        """The partition whose diagram is this one with the ``(i,j)``-rim removed

        Rows ``i .. i+leg-1`` take the length of the row below minus one and row ``i+leg`` is cut back to ``j-1``.
        """
        leg = self.leg_length(node)
        size = self.n - self.hook_length(node)
        i, j = node.row, node.col

        parts = list(self.parts)
        for r in range(i, i + leg):
            parts[r - 1] = self.parts[r] - 1
        parts[i + leg - 1] = j - 1
        parts = [p for p in parts if p]

        if any(parts[r] < parts[r + 1] for r in range(len(parts) - 1)) or sum(parts) != size:
            raise IntegrityError(f'Removing the rim of {node} from {self} gave {parts}')
        return Partition(tuple(parts))

    def content_sum(self) -> int:
        """Sum of the contents ``j - i`` over all nodes"""
        return sum(node.col - node.row for node in self.nodes())

    def hook_partition_index(self) -> Optional[int]:
        """``m`` when this is the hook ``(m+1, 1^(n-m-1))``, else ``None``"""
        if not self.parts or any(p > 1 for p in self.parts[1:]):
            return None
        return self.parts[0] - 1


def _partitions(n: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> Tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, e.g. ``(4),(3,1),(2,2),(2,1,1),(1,1,1,1)``"""
    if n < 0:
        raise ValueError('n must be non-negative')
    return tuple(Partition(parts) for parts in _partitions(n, n))


@lru_cache(maxsize=None)
def partition_number(n: int) -> int:
    """``p(n)`` from Euler's pentagonal number recurrence"""
    if n < 0:
        return 0
    counts = [1]
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            for pentagonal in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
                if pentagonal > m:
                    break
                total += (-1) ** (k + 1) * counts[m - pentagonal]
            if k * (3 * k - 1) // 2 > m:
                break
            k += 1
        counts.append(total)
    return counts[n]
