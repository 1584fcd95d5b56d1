"""Command line front end: ``symcayley {spectrum,chartable,verify,identities,cache}``

Reports go to stdout (or ``--output``); diagnostics go to stderr. Exit status is 0 when
every requested check passes, 1 when a check fails and 2 on invalid input, capacity errors
or an unwritable output path.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from . import get_engine, logger as package_logger
from .constants import OutputFormat, DEFAULT_FLOAT_TOL
from .engine import Engine
from .exceptions import SymCayleyError
from .models import Model, ClassSpec, Partition, Verdict, VerificationResult, IdentityCheck, render_rows
from .utils import parse_range

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


@dataclass
class RunConfig:

    """Parsed command line options shared by every command"""

    command: str
    n_values: range = field(default_factory=lambda: range(0))
    classes: List[str] = field(default_factory=list)
    output_format: OutputFormat = OutputFormat.TABLE
    output: Optional[str] = None
    cache_dir: Optional[str] = None
    K: Optional[int] = None
    tol: float = DEFAULT_FLOAT_TOL
    with_float: bool = False
    enable_exact_n6: bool = False
    enable_n7: bool = False
    edges: Optional[str] = None
    verbose: int = 0

    @property
    def n(self) -> int:
        """The single ``n`` of ``spectrum`` and ``chartable``"""
        return self.n_values.start

    @property
    def log_level(self) -> str:
        return {0: 'CRITICAL', 1: 'INFO'}.get(self.verbose, 'DEBUG')

    def class_spec(self) -> ClassSpec:
        """The connection set from ``--classes``, semicolon separated"""
        texts = [text for text in self.classes if text.strip()]
        if not texts:
            raise ValueError('--classes needs at least one cycle type')
        return ClassSpec(self.n, frozenset(Partition.parse(text) for text in texts))

    def engine(self) -> Engine:
        settings = {
            'enable_exact_n6': self.enable_exact_n6,
            'enable_n7': self.enable_n7,
            'log_level': self.log_level,
        }
        if self.cache_dir:
            settings['cache_dir'] = self.cache_dir
        return get_engine(**settings)


def render(model: Model, output_format: OutputFormat) -> str:
    if output_format is OutputFormat.JSON:
        return model.to_json()
    if output_format is OutputFormat.CSV:
        return to_csv(model.to_csv_rows())
    return model.to_text()


def render_many(key: str, models: Sequence, passed: bool, output_format: OutputFormat) -> str:
    """One document for a list of results: a JSON object, or CSV/table rows under a single header"""
    if output_format is OutputFormat.JSON:
        return json.dumps({key: [m.to_dict() for m in models], 'passed': passed}, indent=2) + '\n'
    rows = []
    for m in models:
        header, *body = m.to_csv_rows()
        rows.extend(body if rows else [header] + body)
    return to_csv(rows) if output_format is OutputFormat.CSV else render_rows(rows)


def to_csv(rows: List[List[str]]) -> str:
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator='\n').writerows(rows)
    return buffer.getvalue()


def emit(text: str, config: RunConfig) -> None:
    if config.output:
        with open(config.output, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_spectrum(config: RunConfig) -> int:
    """Emits the :class:`~.SpectrumReport` of ``Cay(Sym(n), S)``; ``--edges`` also writes the edge list"""
    engine = config.engine()
    spec = config.class_spec()
    report = engine.spectra.spectrum(spec)
    if config.edges:
        engine.groups.export_edges(engine.groups.build_adjacency(spec), config.edges)
    emit(render(report, config.output_format), config)
    return EXIT_OK


def cmd_chartable(config: RunConfig) -> int:
    """Emits the character table of ``Sym(n)``, read from or written to the cache"""
    engine = config.engine()
    table = engine.characters.character_table(config.n)
    emit(render(table, config.output_format), config)
    return EXIT_OK


def verify_n(engine: Engine, n: int, config: RunConfig) -> VerificationResult:
    """Closed forms and oracles for the ``n``-cycle graph at one ``n``"""
    spec = ClassSpec.n_cycles(n)
    report = engine.spectra.spectrum(spec)

    verdicts: List[Verdict] = []
    if n <= engine.exact_cap:
        verdicts.append(engine.oracle.verify_exact(spec, config.K))
    else:
        engine.logger.info(f'Skipping the exact oracle for n={n} above cap {engine.exact_cap}')
    if config.with_float:
        verdicts.append(engine.oracle.verify_float(spec, config.tol))

    return VerificationResult(
        n=n,
        spec=spec,
        energy=report.energy,
        closed_form_energy=engine.spectra.closed_form_energy(n),
        nullity=report.nullity,
        closed_form_nullity=engine.spectra.closed_form_nullity(n),
        is_integral=report.is_integral,
        is_hyperenergetic=report.is_hyperenergetic,
        hypothesis_met=engine.spectra.theorem_hypothesis(n),
        verdicts=tuple(verdicts),
    )


def cmd_verify(config: RunConfig) -> int:
    """Checks the ``n``-cycle graph for every ``n`` in the range; exit 1 with the first failure"""
    engine = config.engine()
    results = [verify_n(engine, n, config) for n in config.n_values]
    passed = all(r.passed for r in results)
    emit(render_many('results', results, passed, config.output_format), config)
    if not passed:
        failure = next(r.first_failure for r in results if not r.passed)
        print(f'FAILED: {failure}', file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_identities(config: RunConfig) -> int:
    """Binomial identity checks for every ``n`` in the range"""
    engine = config.engine()
    checks: List[IdentityCheck] = [engine.spectra.identity_check(n) for n in config.n_values]
    passed = all(c.passed for c in checks)
    emit(render_many('checks', checks, passed, config.output_format), config)
    if not passed:
        failure = next(c for c in checks if not c.passed)
        print(f'FAILED: identities at n={failure.n}', file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_cache_clear(config: RunConfig) -> int:
    engine = config.engine()
    removed = engine.store.clear()
    print(f'Removed {removed} cached tables from {engine.cache_dir}', file=sys.stderr)
    return EXIT_OK


COMMANDS = {
    'spectrum': cmd_spectrum,
    'chartable': cmd_chartable,
    'verify': cmd_verify,
    'identities': cmd_identities,
    'cache': cmd_cache_clear,
}


def single_n(text: str) -> range:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError('n must be non-negative')
    return range(n, n + 1)


def n_range(text: str) -> range:
    try:
        return parse_range(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', dest='output_format', choices=[f.value for f in OutputFormat],
                        default=OutputFormat.TABLE.value, help='output format (default: table)')
    common.add_argument('--output', help='write the report here instead of stdout')
    common.add_argument('--cache-dir', help='character table cache directory')
    common.add_argument('--enable-exact-n6', action='store_true', help='allow the exact oracle at n=6')
    common.add_argument('--enable-n7', action='store_true', help='allow explicit graphs at n=7')
    common.add_argument('-v', '--verbose', action='count', default=0, help='log to stderr (-vv for debug)')

    parser = argparse.ArgumentParser(prog='symcayley', description='Spectra of normal Cayley graphs on Sym(n)')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('spectrum', parents=[common], help='spectrum, energy and nullity of Cay(Sym(n), S)')
    p.add_argument('--n', dest='n_values', type=single_n, required=True)
    p.add_argument('--classes', required=True, help='cycle types separated by ";", e.g. "4" or "3,1;2,2"')
    p.add_argument('--edges', help='also write the edge list of the explicit graph to this file')

    p = sub.add_parser('chartable', parents=[common], help='character table of Sym(n)')
    p.add_argument('--n', dest='n_values', type=single_n, required=True)

    p = sub.add_parser('verify', parents=[common], help='check the n-cycle graph against closed forms and oracles')
    p.add_argument('--n', dest='n_values', type=n_range, required=True, help='"a..b" inclusive, or a single n')
    p.add_argument('--K', type=int, help='highest moment for the exact oracle (default p(n)+2)')
    p.add_argument('--tol', type=float, default=DEFAULT_FLOAT_TOL, help='float oracle tolerance')
    p.add_argument('--with-float', action='store_true', help='also run the Jacobi eigensolver')

    p = sub.add_parser('identities', parents=[common], help='binomial identity checks')
    p.add_argument('--n', dest='n_values', type=n_range, required=True, help='"a..b" inclusive, or a single n')

    p = sub.add_parser('cache', parents=[common], help='manage the character table cache')
    p.add_argument('action', choices=['clear'])
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = vars(build_parser().parse_args(argv))
    args.pop('action', None)
    if 'classes' in args:
        args['classes'] = args['classes'].split(';')
    args['output_format'] = OutputFormat(args['output_format'])
    return RunConfig(**args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    config = parse_config(argv)
    package_logger.set_level(config.log_level)
    try:
        return COMMANDS[config.command](config)
    except (SymCayleyError, ValueError, OSError) as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_ERROR
