from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import List, Optional, Tuple, Union, TYPE_CHECKING

import numpy as np

from .manager import Manager
from ..constants import (
    CapKind, VerdictMethod, DEFAULT_FLOAT_TOL,
    JACOBI_REL_TOL, JACOBI_MAX_SWEEPS, JACOBI_EARLY_SWEEPS, JACOBI_EARLY_SKIP
)
from ..decorators import enforce_cap, log_duration
from ..exceptions import SolverError
from ..models import AdjacencyMatrix, ClassSpec, SpectrumReport, Verdict, partition_number

if TYPE_CHECKING:
    from ..engine import Engine

INT64_LIMIT = 2 ** 63


def _initial_layout(size: int) -> np.ndarray:
    """Original index at each position of the working matrix, padded to even length

    Positions ``k`` and ``k + h`` hold the pair rotated together in a round. An odd
    ``size`` gets the dummy index ``size``, whose row and column stay zero.
    """
    half = (size + 1) // 2
    return np.array(list(range(half)) + list(range(2 * half - 1, half - 1, -1)))


def _advance(src: np.ndarray, dst: np.ndarray, half: int) -> None:
    """Writes ``src`` into ``dst`` with every position but the first moved one step around the circle

    Works along the first axis; pass transposed views to move columns.
    """
    if half == 1:
        dst[...] = src
        return
    size = 2 * half
    dst[0] = src[0]
    dst[1] = src[half]
    dst[2:half] = src[1:half - 1]
    dst[half:size - 1] = src[half + 1:size]
    dst[size - 1] = src[half - 1]


def round_robin_pairs(size: int) -> List[Tuple[np.ndarray, np.ndarray]]:
    """Pivot pairs of one cyclic Jacobi sweep, grouped into rounds of disjoint pairs

    Every pair ``p < q`` appears exactly once per sweep. Index ``0`` stays fixed while
    the others rotate; pairs with the dummy index of an odd ``size`` are dropped.
    """
    layout = _initial_layout(size)
    half = len(layout) // 2
    spare = np.empty_like(layout)
    rounds = []
    for _ in range(len(layout) - 1):
        top, bottom = layout[:half], layout[half:]
        keep = (top < size) & (bottom < size)
        if keep.any():
            rounds.append((np.minimum(top, bottom)[keep], np.maximum(top, bottom)[keep]))
        _advance(layout, spare, half)
        layout, spare = spare, layout
    return rounds


def _off_norm(matrix: np.ndarray) -> float:
    return float(np.sqrt(max(np.sum(matrix * matrix) - np.sum(np.diag(matrix) ** 2), 0.0)))


def _rotation(app: np.ndarray, aqq: np.ndarray, apq: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Cosines and sines that annihilate each ``apq``; zero entries give the identity"""
    active = apq != 0
    theta = np.divide(aqq - app, 2 * apq, out=np.zeros_like(apq), where=active)
    t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
    t = np.where(active, t, 0.0)
    c = 1 / np.sqrt(t * t + 1)
    return c, t * c


def _rotate_slabs(x: np.ndarray, y: np.ndarray, c: np.ndarray, s: np.ndarray,
                  sx: np.ndarray, sy: np.ndarray) -> None:
    """In place: ``x <- c·x - s·y`` and ``y <- s·x + c·y``"""
    np.multiply(y, s, out=sy)
    np.multiply(x, s, out=sx)
    x *= c
    x -= sy
    y *= c
    y += sx


def _jacobi_round(a: np.ndarray, half: int, skip: float, sx: np.ndarray, sy: np.ndarray) -> None:
    """Rotates the planes ``(k, k + half)`` whose pivot exceeds ``skip`` in absolute value"""
    apq = np.diagonal(a[:half, half:]).copy()
    active = np.abs(apq) > skip
    count = int(active.sum())
    if not count:
        return
    diagonal = np.diagonal(a)

    if 4 * count < half:
        p = np.flatnonzero(active)
        q = p + half
        c, s = _rotation(diagonal[p], diagonal[q], apq[p])
        col_p, col_q = a[:, p], a[:, q]
        a[:, p] = c * col_p - s * col_q
        a[:, q] = s * col_p + c * col_q
        row_p, row_q = a[p, :], a[q, :]
        a[p, :] = c[:, None] * row_p - s[:, None] * row_q
        a[q, :] = s[:, None] * row_p + c[:, None] * row_q
    else:
        c, s = _rotation(diagonal[:half].copy(), diagonal[half:].copy(), np.where(active, apq, 0.0))
        size = 2 * half
        _rotate_slabs(a[:, :half], a[:, half:], c[None, :], s[None, :],
                      sx.reshape(size, half), sy.reshape(size, half))
        _rotate_slabs(a[:half], a[half:], c[:, None], s[:, None],
                      sx.reshape(half, size), sy.reshape(half, size))
        p = np.flatnonzero(active)

    a[p, p + half] = 0.0
    a[p + half, p] = 0.0


def jacobi_eigenvalues(matrix: np.ndarray,
                       rel_tol: float = JACOBI_REL_TOL,
                       max_sweeps: int = JACOBI_MAX_SWEEPS,
                       logger=None) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, sorted descending

    The matrix is kept permuted so that each round rotates the disjoint planes ``(k, k + h)``
    through contiguous row and column slabs, then moves every index one step around the
    round-robin circle. Pivots below a per-sweep threshold are skipped: a fraction of the
    off-diagonal RMS during the first sweeps, then ``rel_tol·‖A‖/N``, which cannot stall
    convergence. Iteration stops when the off-diagonal Frobenius norm drops below
    ``rel_tol`` times the norm of the input.

    :raises SolverError: if ``max_sweeps`` sweeps do not reach the tolerance
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f'Expected a square matrix, got shape {a.shape}')
    size = a.shape[0]
    if size == 0:
        return np.zeros(0)

    threshold = rel_tol * float(np.linalg.norm(a))
    layout = _initial_layout(size)
    half = len(layout) // 2
    padded = np.zeros((len(layout), len(layout)))
    padded[:size, :size] = a
    work = padded[np.ix_(layout, layout)]
    spare = np.empty_like(work)
    sx, sy = np.empty(work.size // 2), np.empty(work.size // 2)

    for sweep in range(max_sweeps + 1):
        off = _off_norm(work)
        if logger:
            logger.debug(f'Jacobi sweep {sweep}: off-diagonal norm {off:.3e}')
        if off <= threshold:
            if logger:
                logger.debug(f'Jacobi converged after {sweep} sweeps')
            return np.sort(np.diagonal(work)[layout < size])[::-1]
        if sweep == max_sweeps:
            break

        if sweep < JACOBI_EARLY_SWEEPS:
            skip = JACOBI_EARLY_SKIP * off / len(layout)
        else:
            skip = threshold / len(layout)
        for _ in range(len(layout) - 1):
            _jacobi_round(work, half, skip, sx, sy)
            _advance(work, spare, half)
            _advance(spare.T, work.T, half)

    raise SolverError(f'Jacobi did not converge in {max_sweeps} sweeps (off-diagonal norm {_off_norm(work):.3e})', logger)


class OracleManager(Manager):

    """:class:`Manager` subclass that checks predicted spectra against the explicit Cayley graph

    Two independent checks are offered: exact traces of adjacency powers and a
    floating point Jacobi eigensolve.
    """

    def __init__(self, engine: Engine):
        super().__init__(engine=engine, name='oracle')

    @enforce_cap(CapKind.EXACT)
    def exact_moments(self, adjacency: AdjacencyMatrix, K: int) -> List[int]:
        """``[trace(A^0), ..., trace(A^K)]`` in exact integer arithmetic

        Powers are taken in ``int64`` while ``degree^k`` stays below ``2^63`` and with
        Python integers (``dtype=object``) afterwards.
        """
        if K < 0:
            raise ValueError(f'K must be non-negative, got {K}')
        base = adjacency.matrix.astype(np.int64)
        power = np.eye(adjacency.size, dtype=np.int64)
        moments = [adjacency.size]

        for k in range(1, K + 1):
            if power.dtype != object and adjacency.degree ** k >= INT64_LIMIT:
                self.logger.debug(f'Switching to arbitrary precision at k={k}')
                power = power.astype(object)
                base = base.astype(object)
            power = power @ base
            moments.append(sum(int(v) for v in np.diag(power)))
        return moments

    def predicted_moments(self, report: SpectrumReport, K: int) -> List[Fraction]:
        """``[Σ mult·λ^k for k = 0..K]`` from a character-theoretic report"""
        return [sum((line.multiplicity * line.eigenvalue ** k for line in report.lines), Fraction(0))
                for k in range(K + 1)]

    @enforce_cap(CapKind.EXACT)
    @log_duration('exact moment oracle')
    def verify_exact(self, spec: ClassSpec, K: Optional[int] = None) -> Verdict:
        """Compares walk counts of the explicit graph with the predicted spectrum

        :param K: highest moment; defaults to ``p(n) + 2``, more than the number of distinct eigenvalues
        """
        if K is None:
            K = partition_number(spec.n) + 2
        report = self.engine.spectra.spectrum(spec)
        actual = self.exact_moments(self.engine.groups.build_adjacency(spec), K)
        predicted = self.predicted_moments(report, K)

        detail = None
        for k, (a, b) in enumerate(zip(actual, predicted)):
            if a != b:
                detail = f'moment k={k}: oracle {a} != predicted {b}'
                break
        if detail:
            self.logger.warning(f'Exact oracle mismatch for {spec}: {detail}')
        return Verdict(spec=spec, method=VerdictMethod.EXACT_MOMENTS, match=detail is None,
                       detail=detail, parameters={'K': K})

    def eig_float(self, target: Union[AdjacencyMatrix, np.ndarray]) -> np.ndarray:
        """All eigenvalues, descending, of an adjacency matrix or any real symmetric array

        :raises CapacityError: if an :class:`~.AdjacencyMatrix` is above the oracle cap
        :raises SolverError: if Jacobi does not converge
        """
        if isinstance(target, AdjacencyMatrix):
            self.engine.check_cap(target.n, CapKind.ORACLE)
            target = target.matrix
        return jacobi_eigenvalues(target, logger=self.logger)

    @enforce_cap(CapKind.ORACLE)
    @log_duration('float eigensolve oracle')
    def verify_float(self, spec: ClassSpec, tol: float = DEFAULT_FLOAT_TOL) -> Verdict:
        """Assigns each computed eigenvalue to the nearest predicted one and compares multiplicities

        :raises ValueError: if two predicted eigenvalues are within ``4·tol`` of each other
        """
        report = self.engine.spectra.spectrum(spec)
        predicted = np.array([float(v) for v in report.eigenvalues()])
        if len(predicted) > 1 and np.min(np.abs(np.diff(predicted))) <= 4 * tol:
            raise ValueError(f'Predicted eigenvalues of {spec} are closer than 4*tol={4 * tol}')

        computed = self.eig_float(self.engine.groups.build_adjacency(spec))
        distance = np.abs(computed[:, None] - predicted[None, :])
        nearest = np.argmin(distance, axis=1)

        detail = None
        worst = int(np.argmax(distance[np.arange(len(computed)), nearest]))
        if distance[worst, nearest[worst]] > tol:
            detail = (f'eigenvalue {computed[worst]:.9g} is {distance[worst, nearest[worst]]:.3g} '
                      f'from the nearest predicted value {report.lines[nearest[worst]].eigenvalue}')
        else:
            counts = Counter(int(i) for i in nearest)
            for i, line in enumerate(report.lines):
                if counts[i] != line.multiplicity:
                    detail = f'eigenvalue {line.eigenvalue}: oracle multiplicity {counts[i]} != predicted {line.multiplicity}'
                    break

        if detail:
            self.logger.warning(f'Float oracle mismatch for {spec}: {detail}')
        return Verdict(spec=spec, method=VerdictMethod.FLOAT_EIGENSOLVE, match=detail is None,
                       detail=detail, parameters={'tol': tol})
