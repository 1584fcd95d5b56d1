import re
import time
import unittest
from itertools import combinations

import numpy as np

from symcayley.constants import VerdictMethod
from symcayley.exceptions import CapacityError, SolverError
from symcayley.managers.oracle import jacobi_eigenvalues, round_robin_pairs
from symcayley.models import ClassSpec, enumerate_partitions, partition_number
from symcayley.utils import SpectraLogger
from tests.mixins import TestEngineMixin


class TestJacobi(unittest.TestCase):

    def test_round_robin_covers_each_pair_once(self):
        for size in (1, 2, 5, 8):
            with self.subTest(size=size):
                seen = []
                for p, q in round_robin_pairs(size):
                    indices = list(p) + list(q)
                    self.assertEqual(len(indices), len(set(indices)))
                    seen.extend(zip(p.tolist(), q.tolist()))
                self.assertEqual(sorted(seen), list(combinations(range(size), 2)))

    def test_matches_numpy_on_random_symmetric(self):
        rng = np.random.default_rng(7)
        a = rng.normal(size=(9, 9))
        a = a + a.T
        np.testing.assert_allclose(jacobi_eigenvalues(a), np.linalg.eigvalsh(a)[::-1], atol=1e-8)

    def test_even_size_and_sparse_pivots(self):
        rng = np.random.default_rng(11)
        a = rng.normal(size=(12, 12))
        a = a + a.T
        np.testing.assert_allclose(jacobi_eigenvalues(a), np.linalg.eigvalsh(a)[::-1], atol=1e-8)

        nearly_diagonal = np.diag(np.arange(40, dtype=float))
        for p, q in ((0, 39), (5, 7), (12, 30)):
            nearly_diagonal[p, q] = nearly_diagonal[q, p] = 0.5
        np.testing.assert_allclose(jacobi_eigenvalues(nearly_diagonal),
                                   np.linalg.eigvalsh(nearly_diagonal)[::-1], atol=1e-8)

    def test_one_by_one(self):
        np.testing.assert_array_equal(jacobi_eigenvalues(np.zeros((1, 1))), [0.0])

    def test_diagonal_input_returns_immediately(self):
        np.testing.assert_array_equal(jacobi_eigenvalues(np.diag([1.0, 3.0, 2.0]), max_sweeps=0), [3.0, 2.0, 1.0])

    def test_non_convergence(self):
        with self.assertRaises(SolverError):
            jacobi_eigenvalues(np.array([[0.0, 1.0], [1.0, 0.0]]), max_sweeps=0)

    def test_rejects_non_square(self):
        with self.assertRaises(ValueError):
            jacobi_eigenvalues(np.zeros((2, 3)))


class TestExactOracle(TestEngineMixin, unittest.TestCase):

    def test_moments_of_sym4(self):
        adjacency = self.engine.groups.build_adjacency(self.n_cycles(4))
        moments = self.engine.oracle.exact_moments(adjacency, 4)
        self.assertEqual(moments[:3], [24, 0, 144])
        self.assertEqual(moments[3], 0)

    def test_predicted_moments(self):
        report4 = self.engine.spectra.spectrum(self.n_cycles(4))
        self.assertEqual(self.engine.oracle.predicted_moments(report4, 3), [24, 0, 144, 0])
        report5 = self.engine.spectra.spectrum(self.n_cycles(5))
        self.assertEqual(self.engine.oracle.predicted_moments(report5, 2)[2], 2880)

    def test_big_integer_moments(self):
        adjacency = self.engine.groups.build_adjacency(self.n_cycles(5))
        report = self.engine.spectra.spectrum(self.n_cycles(5))
        K = 16
        self.assertEqual(self.engine.oracle.exact_moments(adjacency, K),
                         self.engine.oracle.predicted_moments(report, K))

    def test_named_verdicts(self):
        for spec, K in ((self.n_cycles(4), 12), (self.n_cycles(3), 8), (ClassSpec.of(5, '2,1,1,1'), 14)):
            with self.subTest(spec=str(spec)):
                verdict = self.engine.oracle.verify_exact(spec, K)
                self.assertTrue(verdict.match)
                self.assertEqual(verdict.parameters, {'K': K})
                self.assertEqual(verdict.method, VerdictMethod.EXACT_MOMENTS)

    def test_every_single_class(self):
        for n in (3, 4, 5):
            for t in enumerate_partitions(n)[:-1]:
                spec = ClassSpec(n, frozenset({t}))
                with self.subTest(spec=str(spec)):
                    verdict = self.engine.oracle.verify_exact(spec)
                    self.assertTrue(verdict.match, verdict.detail)
                    self.assertEqual(verdict.parameters['K'], partition_number(n) + 2)

    def test_multi_class_specs(self):
        for spec in (ClassSpec.of(4, '4', '2,1,1'), ClassSpec.of(5, '5', '2,1,1,1'), ClassSpec.of(5, '3,1,1', '2,2,1')):
            with self.subTest(spec=str(spec)):
                self.assertTrue(self.engine.oracle.verify_exact(spec).match)

    def test_handshake(self):
        for spec in (self.n_cycles(5), ClassSpec.of(5, '3,2')):
            adjacency = self.engine.groups.build_adjacency(spec)
            self.assertEqual(self.engine.oracle.exact_moments(adjacency, 2)[2], 120 * spec.size)

    def test_exact_cap(self):
        with self.assertRaises(CapacityError) as ctx:
            self.engine.oracle.verify_exact(self.n_cycles(6))
        self.assertEqual(ctx.exception.flag, '--enable-exact-n6')


class TestFloatOracle(TestEngineMixin, unittest.TestCase):

    def test_sym4_rounds_to_integers(self):
        values = self.engine.oracle.eig_float(self.engine.groups.build_adjacency(self.n_cycles(4)))
        np.testing.assert_allclose(values, np.round(values), atol=1e-8)
        rounded, counts = np.unique(np.round(values).astype(int), return_counts=True)
        self.assertEqual(dict(zip(rounded.tolist(), counts.tolist())), {-6: 1, -2: 9, 0: 4, 2: 9, 6: 1})

    def test_verify_float_agrees_with_exact(self):
        for spec in (self.n_cycles(4), self.n_cycles(5), ClassSpec.of(5, '2,1,1,1')):
            with self.subTest(spec=str(spec)):
                verdict = self.engine.oracle.verify_float(spec)
                self.assertTrue(verdict.match, verdict.detail)
                self.assertEqual(verdict.match, self.engine.oracle.verify_exact(spec).match)
                self.assertEqual(verdict.parameters, {'tol': 1e-6})

    def test_sym6(self):
        lines = {line.eigenvalue: line.multiplicity for line in self.engine.spectra.spectrum(self.n_cycles(6)).lines}
        self.assertEqual(lines, {120: 1, 24: 25, 12: 100, 0: 468, -12: 100, -24: 25, -120: 1})

        start = time.perf_counter()
        with self.assertLogs(SpectraLogger.ENGINE_LOG_NAME, level='DEBUG') as logs:
            verdict = self.engine.oracle.verify_float(self.n_cycles(6), 1e-6)
        elapsed = time.perf_counter() - start
        self.assertTrue(verdict.match, verdict.detail)
        self.assertLess(elapsed, 120)

        sweeps = [int(m.group(1)) for m in (re.search(r'converged after (\d+) sweeps', line) for line in logs.output) if m]
        self.assertEqual(len(sweeps), 1)
        self.assertLessEqual(sweeps[0], 20)

    def test_gap_guard(self):
        with self.assertRaises(ValueError):
            self.engine.oracle.verify_float(self.n_cycles(4), tol=1.0)

    def test_oracle_cap(self):
        with self.assertRaises(CapacityError):
            self.engine.oracle.verify_float(self.n_cycles(7))


if __name__ == '__main__':
    unittest.main()
