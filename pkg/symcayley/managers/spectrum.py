from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, TYPE_CHECKING

from .manager import Manager
from .character import mn_character
from ..constants import CapKind
from ..decorators import enforce_cap
from ..exceptions import SizeMismatchError, IntegrityError
from ..models import Partition, ClassSpec, SpectrumLine, SpectrumReport, EnergyBounds, IdentityCheck, class_size

if TYPE_CHECKING:
    from ..engine import Engine

#: Smallest ``n`` for which the closed forms for ``Cay(Sym(n), n-cycles)`` are asserted
THEOREM_MIN_N = 4


class SpectrumManager(Manager):

    """:class:`Manager` subclass for spectra of normal Cayley graphs on ``Sym(n)``

    All arithmetic is exact: eigenvalues are :class:`~fractions.Fraction` objects and
    every count is a Python ``int``.
    """

    def __init__(self, engine: Engine):
        super().__init__(engine=engine, name='spectrum')

    def character_eigenvalue(self, alpha: Partition, spec: ClassSpec) -> Fraction:
        """The eigenvalue ``η = Σ_{t ∈ S} |C_t|·χ^α(t) / χ^α(1)`` attached to ``χ^α``

        :raises SizeMismatchError: if ``alpha`` does not partition ``spec.n``
        """
        if alpha.n != spec.n:
            raise SizeMismatchError(f'{alpha} is not a partition of {spec.n}', self.logger)
        total = sum(class_size(spec.n, t) * mn_character(alpha, t) for t in spec.ordered)
        return Fraction(total, self.engine.characters.degree(alpha))

    @enforce_cap(CapKind.TABLE)
    def spectrum(self, spec: ClassSpec) -> SpectrumReport:
        """Groups the eigenvalues of every ``χ^α`` into a :class:`~.SpectrumReport`

        The eigenvalue of ``χ^α`` has multiplicity ``χ^α(1)²``.

        :raises CapacityError: if ``spec.n`` is above the table cap
        """
        table = self.engine.characters.character_table(spec.n)
        columns = [(table.col_index(t), class_size(spec.n, t)) for t in spec.ordered]

        grouped: Dict[Fraction, List[Partition]] = {}
        for alpha, row, deg in zip(table.rows, table.values, table.degrees):
            eigenvalue = Fraction(sum(size * row[c] for c, size in columns), deg)
            grouped.setdefault(eigenvalue, []).append(alpha)

        lines = tuple(
            SpectrumLine(
                eigenvalue=eigenvalue,
                multiplicity=sum(table.degree(alpha) ** 2 for alpha in grouped[eigenvalue]),
                contributors=tuple(grouped[eigenvalue]),
            )
            for eigenvalue in sorted(grouped, reverse=True)
        )
        vertex_count = table.order
        energy = sum((line.multiplicity * abs(line.eigenvalue) for line in lines), Fraction(0))
        nullity = sum(line.multiplicity for line in lines if line.eigenvalue == 0)

        report = SpectrumReport(
            n=spec.n,
            spec=spec,
            lines=lines,
            vertex_count=vertex_count,
            regularity=spec.size,
            energy=energy,
            nullity=nullity,
            is_integral=all(line.eigenvalue.denominator == 1 for line in lines),
            is_hyperenergetic=energy > 2 * vertex_count - 2,
        )
        self._check_moments(report)
        self.logger.debug(f'Spectrum of {spec}: {len(lines)} distinct eigenvalues, energy {energy}')
        return report

    def _check_moments(self, report: SpectrumReport) -> None:
        """Multiplicities sum to ``N``, the trace vanishes and the second moment counts edges"""
        lines = report.lines
        if sum(line.multiplicity for line in lines) != report.vertex_count:
            raise IntegrityError(f'Multiplicities of {report.spec} do not sum to {report.vertex_count}', self.logger)
        if sum(line.multiplicity * line.eigenvalue for line in lines) != 0:
            raise IntegrityError(f'Spectrum of {report.spec} has nonzero trace', self.logger)
        if sum(line.multiplicity * line.eigenvalue ** 2 for line in lines) != report.vertex_count * report.regularity:
            raise IntegrityError(f'Second moment of {report.spec} disagrees with the edge count', self.logger)
        if lines[0].eigenvalue != report.regularity:
            raise IntegrityError(f'Largest eigenvalue of {report.spec} is not the degree', self.logger)

    def theorem_hypothesis(self, n: int) -> bool:
        """Whether the closed forms for the ``n``-cycle graph are asserted at ``n``"""
        return n >= THEOREM_MIN_N

    def closed_form_energy(self, n: int) -> int:
        """``E(Γ_n) = 2^(n-1)·(n-1)!`` for the Cayley graph generated by all ``n``-cycles"""
        self._warn_outside_hypothesis(n, 'energy')
        return 2 ** (n - 1) * factorial(n - 1)

    def closed_form_nullity(self, n: int) -> int:
        """``η(Γ_n) = n! - C(2n-2, n-1)``"""
        self._warn_outside_hypothesis(n, 'nullity')
        return factorial(n) - comb(2 * n - 2, n - 1)

    def _warn_outside_hypothesis(self, n: int, what: str) -> None:
        if n < 1:
            raise ValueError(f'n must be positive, got {n}')
        if not self.theorem_hypothesis(n):
            self.logger.warning(f'Closed form {what} is only asserted for n >= {THEOREM_MIN_N}, got n={n}')

    def vandermonde_check(self, n: int) -> bool:
        """``Σ_{m=0}^{n-1} C(n-1, m)² == C(2n-2, n-1)``"""
        return sum(comb(n - 1, m) ** 2 for m in range(n)) == comb(2 * n - 2, n - 1)

    def corollary_a(self, n: int) -> int:
        """``a_n = Σ_{k=0}^{n-1} (C(2n, n) - 2·C(2n, k))``, checked against ``(n+1)·C(2n, n) - 4^n``

        :raises IntegrityError: if the sum and the closed form disagree
        """
        if n < 1:
            raise ValueError(f'n must be positive, got {n}')
        central = comb(2 * n, n)
        a_n = sum(central - 2 * comb(2 * n, k) for k in range(n))
        closed = (n + 1) * central - 4 ** n
        if a_n != closed:
            raise IntegrityError(f'a_{n}: sum form {a_n} != closed form {closed}', self.logger)
        return a_n

    def energy_bound_check(self, n: int) -> bool:
        """``4^n·(n!)² <= (n+1)!·n!·C(2n, n)``, the squared form of ``2^n·n! <= sqrt((n+1)!·n!·C(2n, n))``

        :raises ValueError: for ``n < 3``
        """
        if n < 3:
            raise ValueError(f'The energy bound is only asserted for n >= 3, got {n}')
        return 4 ** n * factorial(n) ** 2 <= factorial(n + 1) * factorial(n) * comb(2 * n, n)

    def energy_bounds(self, report: SpectrumReport) -> EnergyBounds:
        """Rank and McClelland upper bounds on the energy of ``report``, both squared"""
        trace_a2 = report.vertex_count * report.regularity
        return EnergyBounds(
            energy=report.energy,
            rank_bound_squared=report.rank * trace_a2,
            mcclelland_bound_squared=report.vertex_count * trace_a2,
            complete_graph_energy=report.complete_graph_energy,
        )

    def identity_check(self, n: int) -> IdentityCheck:
        """Every binomial identity at ``n`` gathered into one :class:`~.IdentityCheck`"""
        a_n = self.corollary_a(n)
        return IdentityCheck(
            n=n,
            a_n=a_n,
            a_n_closed_form=(n + 1) * comb(2 * n, n) - 4 ** n,
            vandermonde=self.vandermonde_check(n),
            energy_bound=self.energy_bound_check(n) if n >= 3 else None,
        )
