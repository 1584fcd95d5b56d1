import unittest
from math import factorial

from hypothesis import given, strategies as st

from symcayley.exceptions import SizeMismatchError, CapacityError
from symcayley.managers.character import mn_character, degree
from symcayley.models import Partition, CharacterTable, enumerate_partitions
from tests.mixins import TestEngineMixin

P = Partition.parse

SYM4_VALUES = (
    (1, 1, 1, 1, 1),
    (-1, 0, -1, 1, 3),
    (0, -1, 2, 0, 2),
    (1, 0, -1, -1, 3),
    (-1, 1, 1, -1, 1),
)

pairs = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.tuples(st.sampled_from(enumerate_partitions(n)), st.sampled_from(enumerate_partitions(n)))
)


class TestMurnaghanNakayama(unittest.TestCase):

    def test_known_values(self):
        self.assertEqual(mn_character(P('2,1'), P('3')), -1)
        self.assertEqual(mn_character(P('2,1'), P('1,1,1')), 2)
        self.assertEqual(mn_character(P('3,1,1'), P('5')), 1)
        self.assertEqual(mn_character(P('2,2'), P('4')), 0)
        self.assertEqual(mn_character(P('3,2'), P('2,2,1')), 1)
        self.assertEqual(mn_character(Partition(()), Partition(())), 1)

    def test_size_mismatch(self):
        with self.assertRaises(SizeMismatchError):
            mn_character(P('3'), P('2,1,1'))

    def test_degree(self):
        self.assertEqual(degree(P('3,1')), 3)
        self.assertEqual(degree(P('3,2,1')), 16)
        self.assertEqual(degree(P('4,3,2,1')), 768)
        self.assertEqual(degree(Partition(())), 1)

    def test_n_cycle_vanishes_off_hooks(self):
        n = 7
        for alpha in enumerate_partitions(n):
            m = alpha.hook_partition_index()
            expected = 0 if m is None else (-1) ** (n - m - 1)
            with self.subTest(alpha=str(alpha)):
                self.assertEqual(mn_character(alpha, P(str(n))), expected)

    @given(pairs)
    def test_consumption_order_does_not_matter(self, pair):
        alpha, beta = pair
        self.assertEqual(mn_character(alpha, beta), mn_character(alpha, beta, smallest_first=True))

    @given(pairs)
    def test_conjugate_twists_by_sign(self, pair):
        alpha, beta = pair
        sign = (-1) ** (beta.n - len(beta))
        self.assertEqual(mn_character(alpha.conjugate, beta), sign * mn_character(alpha, beta))

    @given(st.integers(min_value=0, max_value=9).flatmap(lambda n: st.sampled_from(enumerate_partitions(n))))
    def test_identity_value_is_hook_length_degree(self, alpha):
        self.assertEqual(mn_character(alpha, Partition.column(alpha.n)), degree(alpha))


class TestCharacterTables(TestEngineMixin, unittest.TestCase):

    def test_sym3(self):
        table = self.engine.characters.character_table(3)
        self.assertEqual(table.values, ((1, 1, 1), (-1, 0, 2), (1, -1, 1)))
        self.assertEqual(table.class_sizes, (2, 3, 1))

    def test_sym4(self):
        table = self.engine.characters.character_table(4)
        self.assertEqual(table.values, SYM4_VALUES)
        self.assertEqual(table.degrees, (1, 3, 2, 3, 1))

    def test_sym0(self):
        table = self.engine.characters.character_table(0)
        self.assertEqual(table.values, ((1,),))
        self.assertTrue(table.is_consistent())

    def test_n_cycle_column_of_sym5(self):
        column = self.engine.characters.character_table(5).column(P('5'))
        self.assertEqual(sum(1 for v in column if v), 5)
        self.assertTrue(all(v in (1, -1) for v in column if v))

    def test_sym12_is_consistent(self):
        table = self.engine.characters.character_table(12)
        self.assertEqual(len(table.rows), 77)
        self.assertEqual(sum(d * d for d in table.degrees), factorial(12))

    def test_cap(self):
        with self.assertRaises(CapacityError):
            self.engine.characters.character_table(13)

    def test_orthogonality(self):
        for n in range(0, 9):
            with self.subTest(n=n):
                report = self.engine.characters.check_orthogonality(self.engine.characters.character_table(n))
                self.assertTrue(report.passed)
                self.assertIsNone(report.first_violation)

    def test_orthogonality_reports_violation(self):
        table = self.engine.characters.character_table(3)
        values = ((1, 1, 1), (-1, 1, 2), (1, -1, 1))
        broken = CharacterTable(3, table.rows, table.cols, values, table.degrees, table.class_sizes)
        report = self.engine.characters.check_orthogonality(broken)
        self.assertFalse(report.passed)
        self.assertTrue(report.first_violation.startswith('rows'))
        self.assertEqual(report.row_pairs_checked, 6)


class TestTableCache(TestEngineMixin, unittest.TestCase):

    def test_written_and_reloaded(self):
        table = self.engine.characters.character_table(6)
        self.assertEqual(self.engine.store.load(6), table)

    def test_corrupted_file_is_recomputed(self):
        table = self.engine.characters.character_table(5)
        with open(self.engine.store.path_for(5), 'w', encoding='utf-8') as f:
            f.write('{"checksum": "0", "table": {}}')

        fresh = type(self.engine).from_dict(self.engine.to_dict())
        self.assertEqual(fresh.characters.character_table(5), table)
        self.assertEqual(fresh.store.load(5), table)

    def test_clear(self):
        self.engine.characters.character_table(4)
        self.assertGreaterEqual(self.engine.store.clear(), 1)
        self.assertIsNone(self.engine.store.load(4))


if __name__ == '__main__':
    unittest.main()
