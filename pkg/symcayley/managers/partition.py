from __future__ import annotations
from typing import Tuple, Optional, TYPE_CHECKING

from .manager import Manager
from ..models import Partition, enumerate_partitions, partition_number

if TYPE_CHECKING:
    from ..engine import Engine


class PartitionManager(Manager):

    """:class:`Manager` subclass for partition enumeration and lookup"""

    def __init__(self, engine: Engine):
        super().__init__(engine=engine, name='partitions')

    def enumerate(self, n: int) -> Tuple[Partition, ...]:
        """All partitions of ``n``, reverse lexicographic

        :param n: a non-negative integer
        """
        partitions = enumerate_partitions(n)
        self.logger.debug(f'Enumerated {len(partitions)} partitions of {n}')
        return partitions

    def count(self, n: int) -> int:
        """The partition number ``p(n)``"""
        return partition_number(n)

    def hooks(self, n: int) -> Tuple[Partition, ...]:
        """The hook shapes ``α_0 = (1^n), ..., α_{n-1} = (n)``, indexed by ``m``"""
        return tuple(Partition.hook(n, m) for m in range(n))

    def by_text(self, text: str) -> Partition:
        return Partition.parse(text)

    def hook_index(self, partition: Partition) -> Optional[int]:
        return partition.hook_partition_index()
