from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Tuple, TYPE_CHECKING

from .manager import Manager
from ..constants import CapKind
from ..decorators import enforce_cap, log_duration
from ..exceptions import SizeMismatchError, IntegrityError
from ..models import Partition, CharacterTable, OrthogonalityReport, enumerate_partitions, class_size

if TYPE_CHECKING:
    from ..engine import Engine


@lru_cache(maxsize=None)
def _murnaghan_nakayama(alpha: Partition, cycles: Tuple[int, ...]) -> int:
    """``χ^α`` at the cycle type listed by ``cycles``, consuming ``cycles[0]`` first

    Memoized on ``(α, remaining cycles)``; ``lru_cache`` is safe to share between threads.
    """
    if not cycles:
        return 1
    k, rest = cycles[0], cycles[1:]
    total = 0
    for node in alpha.hooks_of_length(k):
        sign = -1 if alpha.leg_length(node) % 2 else 1
        total += sign * _murnaghan_nakayama(alpha.remove_rim_hook(node), rest)
    return total


def mn_character(alpha: Partition, beta: Partition, smallest_first: bool = False) -> int:
    """Exact character value ``χ^α(β)`` by the Murnaghan–Nakayama rule

    Each step removes one cycle of length ``k`` from ``β`` and sums ``(-1)^leg · χ^{α∖rim}`` over the
    nodes of ``α`` with hook length ``k``; no such node means the value is 0.

    :param alpha: the character label
    :param beta: the cycle type
    :param smallest_first: consume the cycles of ``β`` in increasing length instead of the default decreasing order
    :raises SizeMismatchError: if ``|α| != |β|``
    """
    if alpha.n != beta.n:
        raise SizeMismatchError(f'Cannot evaluate χ^{alpha} at {beta}: sizes {alpha.n} and {beta.n} differ')
    cycles = tuple(reversed(beta.parts)) if smallest_first else beta.parts
    return _murnaghan_nakayama(alpha, cycles)


def degree(alpha: Partition) -> int:
    """``χ^α(1) = n! / prod(hook lengths)``"""
    return factorial(alpha.n) // prod(h for row in alpha.hook_lengths() for h in row)


class CharacterManager(Manager):

    """:class:`Manager` subclass for irreducible characters of ``Sym(n)``"""

    def __init__(self, engine: Engine):
        super().__init__(engine=engine, name='characters')

    def mn_character(self, alpha: Partition, beta: Partition, smallest_first: bool = False) -> int:
        """See :func:`mn_character`"""
        return mn_character(alpha, beta, smallest_first)

    def degree(self, alpha: Partition) -> int:
        """See :func:`degree`"""
        return degree(alpha)

    @enforce_cap(CapKind.TABLE)
    def character_table(self, n: int) -> CharacterTable:
        """The full character table of ``Sym(n)``, from the engine's table store

        :raises CapacityError: if ``n`` is above the table cap
        """
        return self.engine.store.get(n)

    @log_duration('build character table')
    def build_table(self, n: int) -> CharacterTable:
        """Computes the table from scratch; :meth:`character_table` is the cached entry point"""
        partitions = enumerate_partitions(n)
        table = CharacterTable(
            n=n,
            rows=partitions,
            cols=partitions,
            values=tuple(tuple(mn_character(alpha, beta) for beta in partitions) for alpha in partitions),
            degrees=tuple(degree(alpha) for alpha in partitions),
            class_sizes=tuple(class_size(n, beta) for beta in partitions),
        )
        if not table.is_consistent():
            raise IntegrityError(f'Character table of Sym({n}) disagrees with the hook length degrees', self.logger)
        self.logger.debug(f'Character table of Sym({n}) has {len(partitions)} rows')
        return table

    def check_orthogonality(self, table: CharacterTable) -> OrthogonalityReport:
        """Checks both orthogonality relations exactly

        * rows: ``Σ_β |C_β|·χ^λ(β)·χ^μ(β) = n!·δ(λ, μ)``
        * columns: ``Σ_α χ^α(β)·χ^α(γ) = (n!/|C_β|)·δ(β, γ)``

        Failures are reported, not raised.
        """
        order = table.order
        size = len(table.rows)
        violation = None
        row_pairs = column_pairs = 0

        for a in range(size):
            for b in range(a, size):
                row_pairs += 1
                inner = sum(c * x * y for c, x, y in zip(table.class_sizes, table.values[a], table.values[b]))
                expected = order if a == b else 0
                if inner != expected and violation is None:
                    violation = f'rows {table.rows[a]}, {table.rows[b]}: {inner} != {expected}'

        for c in range(len(table.cols)):
            for d in range(c, len(table.cols)):
                column_pairs += 1
                inner = sum(row[c] * row[d] for row in table.values)
                expected = order // table.class_sizes[c] if c == d else 0
                if inner != expected and violation is None:
                    violation = f'columns {table.cols[c]}, {table.cols[d]}: {inner} != {expected}'

        if violation:
            self.logger.warning(f'Orthogonality failed for Sym({table.n}): {violation}')
        return OrthogonalityReport(
            n=table.n,
            passed=violation is None,
            row_pairs_checked=row_pairs,
            column_pairs_checked=column_pairs,
            first_violation=violation,
        )
