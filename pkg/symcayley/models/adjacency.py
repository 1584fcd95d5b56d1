from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Iterator, List

import numpy as np

from .permutation import Permutation, ClassSpec


@dataclass(frozen=True, eq=False)
class AdjacencyMatrix:

    """Explicit adjacency matrix of ``Cay(Sym(n), S)``

    Vertex ``r`` is ``vertices[r]``, the permutation of lexicographic one-line rank ``r``.
    ``matrix`` is a read-only ``uint8`` array with ``matrix[u, v] = 1`` iff ``v·u^{-1} ∈ S``.
    """

    spec: ClassSpec
    vertices: Tuple[Permutation, ...]
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix.setflags(write=False)

    def __repr__(self):
        return f'<AdjacencyMatrix {self.spec}: {self.size} vertices, degree {self.degree}>'

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    @property
    def degree(self) -> int:
        """Row sum of the first vertex; every row has the same sum ``|S|``"""
        return int(self.matrix[0].sum()) if self.size else 0

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.matrix, self.matrix.T))

    def neighbours(self, rank: int) -> List[int]:
        return [int(v) for v in np.flatnonzero(self.matrix[rank])]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges as ``(u_rank, v_rank)`` with ``u_rank < v_rank``, sorted"""
        us, vs = np.nonzero(np.triu(self.matrix, k=1))
        for u, v in zip(us, vs):
            yield int(u), int(v)

    def to_edge_list(self) -> str:
        """One ``"u_rank v_rank"`` line per edge"""
        return ''.join(f'{u} {v}\n' for u, v in self.edges())
