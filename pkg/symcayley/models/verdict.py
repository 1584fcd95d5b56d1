from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Dict, Any, List, Tuple

from .model import Model
from .permutation import ClassSpec
from ..constants import VerdictMethod
from ..utils import format_rational, parse_rational


@dataclass(frozen=True)
class Verdict(Model):

    """Outcome of comparing a predicted spectrum with a brute-force oracle

    :ivar method: which oracle produced the verdict
    :ivar match: ``True`` when the oracle agrees with the prediction
    :ivar detail: the first discrepancy; always ``None`` on a match
    :ivar parameters: ``{'K': ...}`` for moment matching, ``{'tol': ...}`` for the eigensolver
    """

    spec: ClassSpec
    method: VerdictMethod
    match: bool
    detail: Optional[str] = None
    parameters: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.match and self.detail is not None:
            raise ValueError('A matching verdict cannot carry a discrepancy')

    def __repr__(self):
        return f'<Verdict {self.method.value} {self.spec}: {"match" if self.match else "MISMATCH"}>'

    def to_dict(self) -> dict:
        data = {
            'spec': self.spec.to_dict(),
            'method': self.method.value,
            'match': self.match,
        }
        data.update(self.parameters)
        data['detail'] = self.detail
        return data

    @classmethod
    def from_dict(cls, data: dict) -> Verdict:
        parameters = {key: data[key] for key in ('K', 'tol') if key in data}
        return cls(
            spec=ClassSpec.from_dict(data['spec']),
            method=VerdictMethod(data['method']),
            match=bool(data['match']),
            detail=data.get('detail'),
            parameters=parameters,
        )

    def to_csv_rows(self) -> List[List[str]]:
        data = self.to_dict()
        data['spec'] = str(self.spec)
        return [list(data.keys()), ['' if v is None else str(v) for v in data.values()]]


@dataclass(frozen=True)
class VerificationResult(Model):

    """Everything ``verify`` checks for one ``n``: closed forms, integrality, hyperenergy and oracle verdicts

    Hyperenergy only counts as a failure when ``hypothesis_met`` is set, so ``n = 3``
    reports ``is_hyperenergetic = False`` and still passes.
    """

    n: int
    spec: ClassSpec
    energy: Fraction
    closed_form_energy: int
    nullity: int
    closed_form_nullity: int
    is_integral: bool
    is_hyperenergetic: bool
    hypothesis_met: bool
    verdicts: Tuple[Verdict, ...] = ()

    @property
    def closed_forms_match(self) -> bool:
        return self.energy == self.closed_form_energy and self.nullity == self.closed_form_nullity

    @property
    def first_failure(self) -> Optional[str]:
        """Description of the first failed check, or ``None``"""
        if self.energy != self.closed_form_energy:
            return f'n={self.n}: energy {format_rational(self.energy)} != closed form {self.closed_form_energy}'
        if self.nullity != self.closed_form_nullity:
            return f'n={self.n}: nullity {self.nullity} != closed form {self.closed_form_nullity}'
        if not self.is_integral:
            return f'n={self.n}: spectrum is not integral'
        if self.hypothesis_met and not self.is_hyperenergetic:
            return f'n={self.n}: graph is not hyperenergetic'
        for verdict in self.verdicts:
            if not verdict.match:
                return f'n={self.n}: {verdict.method.value} oracle: {verdict.detail}'
        return None

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    def verdict(self, method: VerdictMethod) -> Optional[Verdict]:
        return next((v for v in self.verdicts if v.method is method), None)

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'spec': self.spec.to_dict(),
            'energy': format_rational(self.energy),
            'closed_form_energy': str(self.closed_form_energy),
            'nullity': str(self.nullity),
            'closed_form_nullity': str(self.closed_form_nullity),
            'integral': self.is_integral,
            'hyperenergetic': self.is_hyperenergetic,
            'hypothesis_met': self.hypothesis_met,
            'verdicts': [v.to_dict() for v in self.verdicts],
            'passed': self.passed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> VerificationResult:
        return cls(
            n=int(data['n']),
            spec=ClassSpec.from_dict(data['spec']),
            energy=parse_rational(data['energy']),
            closed_form_energy=int(data['closed_form_energy']),
            nullity=int(data['nullity']),
            closed_form_nullity=int(data['closed_form_nullity']),
            is_integral=bool(data['integral']),
            is_hyperenergetic=bool(data['hyperenergetic']),
            hypothesis_met=bool(data['hypothesis_met']),
            verdicts=tuple(Verdict.from_dict(v) for v in data['verdicts']),
        )

    def to_csv_rows(self) -> List[List[str]]:
        def outcome(method):
            verdict = self.verdict(method)
            return '-' if verdict is None else ('match' if verdict.match else 'mismatch')

        header = ['n', 'energy', 'closed_form_energy', 'nullity', 'closed_form_nullity',
                  'integral', 'hyperenergetic', 'exact', 'float', 'passed']
        row = [
            str(self.n), format_rational(self.energy), str(self.closed_form_energy),
            str(self.nullity), str(self.closed_form_nullity),
            str(self.is_integral).lower(), str(self.is_hyperenergetic).lower(),
            outcome(VerdictMethod.EXACT_MOMENTS), outcome(VerdictMethod.FLOAT_EIGENSOLVE),
            str(self.passed).lower(),
        ]
        return [header, row]
