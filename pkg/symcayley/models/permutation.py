from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, lcm, prod
from collections import Counter
from typing import Tuple, FrozenSet, Iterable, List

from .model import Model
from .partition import Partition
from ..exceptions import ArityError, InvalidClassError


@dataclass(frozen=True, order=True)
class Permutation:

    """An element of ``Sym(n)`` in one-line notation: ``images[i-1]`` is the image of ``i``"""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f'{images} is not a permutation of 1..{len(images)}')
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Iterable[int]) -> Permutation:
        """Build from disjoint cycles, e.g. ``from_cycles(4, (1, 2, 3, 4))`` maps 1→2→3→4→1"""
        images = list(range(1, n + 1))
        for cycle in cycles:
            cycle = list(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __str__(self):
        return '[' + ' '.join(str(i) for i in self.images) + ']'

    def cycles(self) -> List[Tuple[int, ...]]:
        """Disjoint cycles including fixed points, each starting at its smallest point"""
        seen, cycles = set(), []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle, point = [], start
            while point not in seen:
                seen.add(point)
                cycle.append(point)
                point = self(point)
            cycles.append(tuple(cycle))
        return cycles

    def cycle_type(self) -> Partition:
        return Partition.from_parts(len(cycle) for cycle in self.cycles())

    def order(self) -> int:
        return lcm(*(len(cycle) for cycle in self.cycles())) if self.n else 1

    def compose(self, other: Permutation) -> Permutation:
        """``self · other``: apply ``other`` first, then ``self``"""
        return compose(self, other)

    def inverse(self) -> Permutation:
        return inverse(self)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """The product ``a·b`` with ``(a·b)(i) = a(b(i))``

    :raises ArityError: if ``a`` and ``b`` act on different numbers of letters
    """
    if a.n != b.n:
        raise ArityError(f'Cannot compose permutations on {a.n} and {b.n} letters')
    return Permutation(tuple(a.images[i - 1] for i in b.images))


def inverse(a: Permutation) -> Permutation:
    images = [0] * a.n
    for i, image in enumerate(a.images, 1):
        images[image - 1] = i
    return Permutation(tuple(images))


def cycle_type(perm: Permutation) -> Partition:
    """The cycle lengths of ``perm``, fixed points included, as a partition of ``n``"""
    return perm.cycle_type()


def centralizer_order(t: Partition) -> int:
    """``z_t = prod(i^(t_i) * t_i!)``"""
    return prod(i ** k * factorial(k) for i, k in Counter(t.parts).items())


def class_size(n: int, t: Partition) -> int:
    """Number of permutations of cycle type ``t`` in ``Sym(n)``: ``n!/z_t``

    :raises InvalidClassError: if ``t`` is not a partition of ``n``
    """
    if t.n != n:
        raise InvalidClassError(f'Cycle type {t} is not a partition of {n}')
    return factorial(n) // centralizer_order(t)


@dataclass(frozen=True)
class ClassSpec(Model):

    """A union of conjugacy classes of ``Sym(n)``: the connection set ``S`` of a normal Cayley graph

    ``S`` is inverse closed because every class is, and conjugation closed by construction.
    The identity class ``(1^n)`` is excluded, which keeps ``1`` out of ``S``.
    """

    n: int
    cycle_types: FrozenSet[Partition] = field(default_factory=frozenset)

    def __post_init__(self):
        cycle_types = frozenset(self.cycle_types)
        object.__setattr__(self, 'cycle_types', cycle_types)
        if self.n < 1:
            raise InvalidClassError(f'A class spec needs n >= 1, got n={self.n}')
        if not cycle_types:
            raise InvalidClassError('A class spec needs at least one cycle type')
        for t in cycle_types:
            if t.n != self.n:
                raise InvalidClassError(f'Cycle type {t} is not a partition of {self.n}')
            if t == Partition.column(self.n):
                raise InvalidClassError(f'The identity class {t} cannot be part of the connection set')

    @classmethod
    def of(cls, n: int, *cycle_types: str) -> ClassSpec:
        """Shorthand from partition text, e.g. ``ClassSpec.of(4, '4')``"""
        return cls(n, frozenset(Partition.parse(t) for t in cycle_types))

    @classmethod
    def n_cycles(cls, n: int) -> ClassSpec:
        """The class of all ``n``-cycles"""
        return cls(n, frozenset({Partition.row(n)}))

    @property
    def ordered(self) -> Tuple[Partition, ...]:
        """The cycle types in enumeration (reverse lexicographic) order"""
        return tuple(sorted(self.cycle_types, key=lambda t: t.parts, reverse=True))

    @property
    def size(self) -> int:
        """``|S|``, the sum of the class sizes"""
        return sum(class_size(self.n, t) for t in self.cycle_types)

    def __str__(self):
        return f'n={self.n} {{' + '; '.join(str(t) for t in self.ordered) + '}'

    def to_dict(self) -> dict:
        return {'n': self.n, 'classes': [str(t) for t in self.ordered]}

    @classmethod
    def from_dict(cls, data: dict) -> ClassSpec:
        return cls(int(data['n']), frozenset(Partition.parse(t) for t in data['classes']))
