from __future__ import annotations

import itertools
from collections import deque
from typing import Tuple, Optional, TYPE_CHECKING

import numpy as np

from .manager import Manager
from ..constants import CapKind
from ..decorators import enforce_cap, log_duration
from ..exceptions import InvalidClassError
from ..models import Partition, Permutation, ClassSpec, AdjacencyMatrix, class_size

if TYPE_CHECKING:
    from ..engine import Engine


def all_permutations(n: int) -> Tuple[Permutation, ...]:
    """Every element of ``Sym(n)`` ordered by lexicographic one-line rank"""
    return tuple(Permutation(images) for images in itertools.permutations(range(1, n + 1)))


class GroupManager(Manager):

    """:class:`Manager` subclass for the concrete group ``Sym(n)`` and its Cayley graphs"""

    def __init__(self, engine: Engine):
        super().__init__(engine=engine, name='symgroup')

    def class_size(self, n: int, t: Partition) -> int:
        """``|C_t| = n!/z_t``

        :raises InvalidClassError: if ``t`` is not a partition of ``n``
        """
        return class_size(n, t)

    @enforce_cap(CapKind.ORACLE)
    def enumerate_class(self, n: int, t: Partition) -> Tuple[Permutation, ...]:
        """The permutations of cycle type ``t``, in lexicographic order

        :raises CapacityError: if ``n`` is above the oracle cap
        """
        if t.n != n:
            raise InvalidClassError(f'Cycle type {t} is not a partition of {n}', self.logger)
        return tuple(perm for perm in all_permutations(n) if perm.cycle_type() == t)

    @enforce_cap(CapKind.ORACLE)
    @log_duration('build adjacency')
    def build_adjacency(self, spec: ClassSpec) -> AdjacencyMatrix:
        """Adjacency matrix of ``Cay(Sym(n), S)`` with edges ``u ~ a·u`` for ``a ∈ S``

        :param spec: the classes whose union is ``S``
        :raises CapacityError: if ``n`` is above the oracle cap
        """
        vertices = all_permutations(spec.n)
        rank = {perm.images: r for r, perm in enumerate(vertices)}
        connection = [a.images for t in spec.ordered for a in self.enumerate_class(spec.n, t)]

        matrix = np.zeros((len(vertices), len(vertices)), dtype=np.uint8)
        for r, u in enumerate(vertices):
            for a in connection:
                matrix[r, rank[tuple(a[i - 1] for i in u.images)]] = 1

        self.logger.debug(f'Built {len(vertices)}x{len(vertices)} adjacency for {spec} with degree {len(connection)}')
        return AdjacencyMatrix(spec=spec, vertices=vertices, matrix=matrix)

    def component_count(self, adjacency: AdjacencyMatrix) -> int:
        """Number of connected components, by breadth-first search"""
        seen = np.zeros(adjacency.size, dtype=bool)
        components = 0
        for start in range(adjacency.size):
            if seen[start]:
                continue
            components += 1
            seen[start] = True
            queue = deque([start])
            while queue:
                for v in adjacency.neighbours(queue.popleft()):
                    if not seen[v]:
                        seen[v] = True
                        queue.append(v)
        return components

    def export_edges(self, adjacency: AdjacencyMatrix, path: Optional[str] = None) -> str:
        """Edge list text, one ``"u_rank v_rank"`` pair per line; also written to ``path`` if given"""
        text = adjacency.to_edge_list()
        if path:
            with open(path, 'w', encoding='utf-8') as f:
                f.write(text)
            self.logger.info(f'Wrote {text.count(chr(10))} edges of {adjacency.spec} to {path}')
        return text
