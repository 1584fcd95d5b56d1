import unittest

from hypothesis import given, strategies as st

from symcayley.exceptions import InvalidPartitionError, InvalidNodeError
from symcayley.models import Partition, Node, enumerate_partitions, partition_number

partitions = st.integers(min_value=0, max_value=9).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


class TestPartitionText(unittest.TestCase):

    def test_parse_variants(self):
        expected = Partition((3, 1, 1))
        for text in ('3,1,1', '(3,1,1)', ' 3, 1, 1 ', '3,1^2', '1,3,1'):
            with self.subTest(text=text):
                self.assertEqual(Partition.parse(text), expected)

    def test_parse_empty(self):
        self.assertEqual(Partition.parse('()'), Partition(()))
        self.assertEqual(Partition.parse(''), Partition(()))
        self.assertEqual(Partition(()).n, 0)

    def test_parse_rejects_bad_parts(self):
        for text in ('3,a', '3,,1', '3,-1', '0', '2^', '1^0', '4,2^0'):
            with self.subTest(text=text):
                with self.assertRaises(InvalidPartitionError):
                    Partition.parse(text)

    def test_constructor_requires_canonical_parts(self):
        with self.assertRaises(InvalidPartitionError):
            Partition((1, 3))
        with self.assertRaises(InvalidPartitionError):
            Partition((2, 0))
        with self.assertRaises(InvalidPartitionError):
            Partition((True,))

    def test_str_and_exponent_form(self):
        alpha = Partition.parse('4,2,2,1,1,1')
        self.assertEqual(str(alpha), '(4,2,2,1,1,1)')
        self.assertEqual(alpha.exponent_form(), '(4,2^2,1^3)')
        self.assertEqual(alpha.multiplicities(), {4: 1, 2: 2, 1: 3})
        self.assertEqual(str(Partition(())), '()')

    def test_shapes(self):
        self.assertEqual(Partition.row(4), Partition((4,)))
        self.assertEqual(Partition.column(3), Partition((1, 1, 1)))
        self.assertEqual(Partition.hook(5, 2), Partition((3, 1, 1)))
        with self.assertRaises(InvalidPartitionError):
            Partition.hook(3, 3)


class TestEnumeration(unittest.TestCase):

    def test_reverse_lexicographic_order(self):
        self.assertEqual(
            [str(p) for p in enumerate_partitions(4)],
            ['(4)', '(3,1)', '(2,2)', '(2,1,1)', '(1,1,1,1)']
        )

    def test_counts(self):
        self.assertEqual([len(enumerate_partitions(n)) for n in range(8)], [1, 1, 2, 3, 5, 7, 11, 15])
        self.assertEqual(partition_number(12), 77)
        self.assertEqual(len(enumerate_partitions(12)), 77)

    def test_counts_match_pentagonal_recurrence(self):
        for n in range(41):
            with self.subTest(n=n):
                self.assertEqual(len(enumerate_partitions(n)), partition_number(n))
        self.assertEqual(partition_number(40), 37338)

    def test_zero_and_negative(self):
        self.assertEqual(enumerate_partitions(0), (Partition(()),))
        with self.assertRaises(ValueError):
            enumerate_partitions(-1)


class TestDiagram(unittest.TestCase):

    def test_conjugate(self):
        self.assertEqual(Partition((4, 2, 1)).conjugate, Partition((3, 2, 1, 1)))
        self.assertEqual(Partition(()).conjugate, Partition(()))
        self.assertTrue(Partition((2, 1)).is_self_conjugate)
        self.assertFalse(Partition((3, 1)).is_self_conjugate)

    def test_hook_lengths(self):
        self.assertEqual(Partition((3, 1)).hook_lengths(), ((4, 2, 1), (1,)))
        self.assertEqual(Partition((2, 2)).hook_lengths(), ((3, 2), (2, 1)))

    def test_arm_and_leg(self):
        alpha = Partition((4, 2, 1))
        self.assertEqual(alpha.arm_length(Node(1, 2)), 2)
        self.assertEqual(alpha.leg_length(Node(1, 2)), 1)
        self.assertEqual(alpha.hook_length(Node(1, 1)), 6)

    def test_node_outside_diagram(self):
        with self.assertRaises(InvalidNodeError):
            Partition((2, 1)).hook_length(Node(2, 2))

    def test_hooks_of_length(self):
        alpha = Partition((3, 1))
        self.assertEqual(alpha.hooks_of_length(2), frozenset({Node(1, 2)}))
        self.assertEqual(alpha.hooks_of_length(3), frozenset())
        self.assertEqual(alpha.hooks_of_length(4), frozenset({Node(1, 1)}))

    def test_remove_rim_hook(self):
        alpha = Partition((4, 2, 1))
        self.assertEqual(alpha.remove_rim_hook(Node(1, 2)), Partition((1, 1, 1)))
        self.assertEqual(alpha.remove_rim_hook(Node(1, 1)), Partition((1,)))
        self.assertEqual(Partition((3, 1)).remove_rim_hook(Node(1, 1)), Partition(()))
        self.assertEqual(Partition((3, 3)).remove_rim_hook(Node(1, 2)), Partition((2, 1)))

    def test_rim(self):
        self.assertEqual(
            Partition((3, 2)).rim(Node(1, 2)),
            frozenset({Node(1, 2), Node(1, 3), Node(2, 2)})
        )

    def test_hook_partition_index(self):
        self.assertEqual(Partition((5,)).hook_partition_index(), 4)
        self.assertEqual(Partition((1, 1, 1, 1, 1)).hook_partition_index(), 0)
        self.assertEqual(Partition((3, 1, 1)).hook_partition_index(), 2)
        self.assertIsNone(Partition((2, 2)).hook_partition_index())
        self.assertIsNone(Partition(()).hook_partition_index())

    def test_content_sum(self):
        self.assertEqual(Partition((3, 1)).content_sum(), 2)
        self.assertEqual(Partition((2, 2)).content_sum(), 0)


class TestPartitionProperties(unittest.TestCase):

    def test_hook_lengths_transpose_under_conjugation(self):
        for n in range(11):
            for alpha in enumerate_partitions(n):
                beta = alpha.conjugate
                for node in alpha.nodes():
                    self.assertEqual(alpha.hook_length(node), beta.hook_length(Node(node.col, node.row)))
                self.assertEqual(
                    sorted(h for row in alpha.hook_lengths() for h in row),
                    sorted(h for row in beta.hook_lengths() for h in row)
                )

    def test_hook_index_exactly_for_full_corner_hook(self):
        for n in range(1, 11):
            for alpha in enumerate_partitions(n):
                is_hook = alpha.hook_length(Node(1, 1)) == n
                self.assertEqual(alpha.hook_partition_index() is not None, is_hook, str(alpha))
                if is_hook:
                    self.assertEqual(Partition.hook(n, alpha.hook_partition_index()), alpha)

    @given(partitions)
    def test_conjugate_is_an_involution(self, alpha):
        self.assertEqual(alpha.conjugate.conjugate, alpha)
        self.assertEqual(alpha.conjugate.n, alpha.n)

    @given(partitions)
    def test_content_sum_negates_under_conjugation(self, alpha):
        self.assertEqual(alpha.conjugate.content_sum(), -alpha.content_sum())

    @given(partitions, st.integers(min_value=1, max_value=9))
    def test_rim_hook_removal_shrinks_by_k(self, alpha, k):
        for node in alpha.hooks_of_length(k):
            smaller = alpha.remove_rim_hook(node)
            self.assertEqual(smaller.n, alpha.n - k)
            self.assertEqual(len(alpha.rim(node)), k)

    @given(partitions)
    def test_parse_inverts_str(self, alpha):
        self.assertEqual(Partition.parse(str(alpha)), alpha)
        self.assertEqual(Partition.parse(alpha.exponent_form()), alpha)


if __name__ == '__main__':
    unittest.main()
