from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, List, Optional

from .model import Model, render_rows
from .partition import Partition
from .permutation import ClassSpec
from ..utils import format_rational, parse_rational


@dataclass(frozen=True)
class SpectrumLine:

    """One distinct eigenvalue with its multiplicity and the characters producing it

    ``multiplicity`` is the sum of ``χ^α(1)²`` over the ``contributors``.
    """

    eigenvalue: Fraction
    multiplicity: int
    contributors: Tuple[Partition, ...]

    def to_dict(self) -> dict:
        return {
            'eigenvalue': format_rational(self.eigenvalue),
            'multiplicity': str(self.multiplicity),
            'contributors': [str(alpha) for alpha in self.contributors],
        }

    @classmethod
    def from_dict(cls, data: dict) -> SpectrumLine:
        return cls(
            eigenvalue=parse_rational(data['eigenvalue']),
            multiplicity=int(data['multiplicity']),
            contributors=tuple(Partition.parse(text) for text in data['contributors']),
        )


@dataclass(frozen=True)
class SpectrumReport(Model):

    """The spectrum of a normal Cayley graph on ``Sym(n)`` and the quantities derived from it

    :ivar lines: :class:`SpectrumLine` s sorted by eigenvalue, descending
    :ivar vertex_count: ``N = n!``
    :ivar regularity: ``|S|``
    :ivar energy: exact sum of ``|λ|`` over the spectrum with multiplicity
    :ivar nullity: multiplicity of the eigenvalue 0
    :ivar is_hyperenergetic: ``energy > 2N - 2``
    """

    n: int
    spec: ClassSpec
    lines: Tuple[SpectrumLine, ...]
    vertex_count: int
    regularity: int
    energy: Fraction
    nullity: int
    is_integral: bool
    is_hyperenergetic: bool

    def __repr__(self):
        return f'<SpectrumReport {self.spec}: {len(self.lines)} distinct eigenvalues, energy {format_rational(self.energy)}>'

    @property
    def rank(self) -> int:
        """Rank of the adjacency matrix: ``N - nullity``"""
        return self.vertex_count - self.nullity

    @property
    def energy_is_integer(self) -> bool:
        return self.energy.denominator == 1

    @property
    def complete_graph_energy(self) -> int:
        """``2N - 2``, the energy of the complete graph on the same vertex count"""
        return 2 * self.vertex_count - 2

    def multiplicity_of(self, eigenvalue) -> int:
        for line in self.lines:
            if line.eigenvalue == eigenvalue:
                return line.multiplicity
        return 0

    def eigenvalues(self) -> Tuple[Fraction, ...]:
        return tuple(line.eigenvalue for line in self.lines)

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'classes': [str(t) for t in self.spec.ordered],
            'vertices': str(self.vertex_count),
            'degree': str(self.regularity),
            'lines': [line.to_dict() for line in self.lines],
            'energy': format_rational(self.energy),
            'nullity': str(self.nullity),
            'integral': self.is_integral,
            'hyperenergetic': self.is_hyperenergetic,
        }

    @classmethod
    def from_dict(cls, data: dict) -> SpectrumReport:
        n = int(data['n'])
        return cls(
            n=n,
            spec=ClassSpec(n, frozenset(Partition.parse(t) for t in data['classes'])),
            lines=tuple(SpectrumLine.from_dict(line) for line in data['lines']),
            vertex_count=int(data['vertices']),
            regularity=int(data['degree']),
            energy=parse_rational(data['energy']),
            nullity=int(data['nullity']),
            is_integral=bool(data['integral']),
            is_hyperenergetic=bool(data['hyperenergetic']),
        )

    def to_csv_rows(self) -> List[List[str]]:
        rows = [['eigenvalue', 'multiplicity', 'contributors']]
        for line in self.lines:
            rows.append([
                format_rational(line.eigenvalue),
                str(line.multiplicity),
                ' '.join(str(alpha) for alpha in line.contributors),
            ])
        return rows

    def to_text(self) -> str:
        summary = [
            ['graph', f'Cay(Sym({self.n}), S)'],
            ['classes', ' '.join(str(t) for t in self.spec.ordered)],
            ['vertices', str(self.vertex_count)],
            ['degree', str(self.regularity)],
            ['energy', format_rational(self.energy)],
            ['nullity', str(self.nullity)],
            ['integral', str(self.is_integral).lower()],
            ['hyperenergetic', str(self.is_hyperenergetic).lower()],
        ]
        width = max(len(key) for key, _ in summary)
        head = ''.join(f'{key.ljust(width)}  {value}\n' for key, value in summary)
        return head + '\n' + render_rows(self.to_csv_rows())


@dataclass(frozen=True)
class EnergyBounds(Model):

    """Exact checks of upper bounds on the energy of a regular graph

    * rank bound: ``E² <= rank(A)·trace(A²) = rank·N·|S|``
    * McClelland bound: ``E² <= N·trace(A²) = N²·|S|``
    """

    energy: Fraction
    rank_bound_squared: int
    mcclelland_bound_squared: int
    complete_graph_energy: int

    @property
    def rank_bound_holds(self) -> bool:
        return self.energy ** 2 <= self.rank_bound_squared

    @property
    def mcclelland_bound_holds(self) -> bool:
        return self.energy ** 2 <= self.mcclelland_bound_squared

    def to_dict(self) -> dict:
        return {
            'energy': format_rational(self.energy),
            'rank_bound_squared': str(self.rank_bound_squared),
            'mcclelland_bound_squared': str(self.mcclelland_bound_squared),
            'complete_graph_energy': str(self.complete_graph_energy),
            'rank_bound_holds': self.rank_bound_holds,
            'mcclelland_bound_holds': self.mcclelland_bound_holds,
        }

    @classmethod
    def from_dict(cls, data: dict) -> EnergyBounds:
        return cls(
            energy=parse_rational(data['energy']),
            rank_bound_squared=int(data['rank_bound_squared']),
            mcclelland_bound_squared=int(data['mcclelland_bound_squared']),
            complete_graph_energy=int(data['complete_graph_energy']),
        )


@dataclass(frozen=True)
class IdentityCheck(Model):

    """Per-``n`` results of the binomial identity checks

    ``energy_bound`` is ``None`` below ``n = 3``, where the inequality is not asserted.
    """

    n: int
    a_n: int
    a_n_closed_form: int
    vandermonde: bool
    energy_bound: Optional[bool]

    @property
    def non_negative(self) -> bool:
        return self.a_n >= 0

    @property
    def passed(self) -> bool:
        return (self.non_negative and self.a_n == self.a_n_closed_form and self.vandermonde
                and self.energy_bound is not False)

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'a_n': str(self.a_n),
            'a_n_closed_form': str(self.a_n_closed_form),
            'non_negative': self.non_negative,
            'vandermonde': self.vandermonde,
            'energy_bound': self.energy_bound,
        }

    @classmethod
    def from_dict(cls, data: dict) -> IdentityCheck:
        return cls(
            n=int(data['n']),
            a_n=int(data['a_n']),
            a_n_closed_form=int(data['a_n_closed_form']),
            vandermonde=bool(data['vandermonde']),
            energy_bound=data['energy_bound'],
        )

    def to_csv_rows(self) -> List[List[str]]:
        row = self.to_dict()
        return [list(row.keys()), [_cell(v) for v in row.values()]]


def _cell(value) -> str:
    if value is None:
        return '-'
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)
