import unittest
from math import factorial

from hypothesis import given, strategies as st

from symcayley.exceptions import ArityError, InvalidClassError
from symcayley.models import Permutation, ClassSpec, Partition, compose, inverse, class_size, enumerate_partitions


def permutations_of(n):
    return st.permutations(list(range(1, n + 1))).map(lambda images: Permutation(tuple(images)))


class TestPermutation(unittest.TestCase):

    def test_from_cycles_and_cycle_type(self):
        perm = Permutation.from_cycles(5, (1, 2, 3), (4, 5))
        self.assertEqual(perm.images, (2, 3, 1, 5, 4))
        self.assertEqual(perm.cycles(), [(1, 2, 3), (4, 5)])
        self.assertEqual(perm.cycle_type(), Partition((3, 2)))
        self.assertEqual(perm.order(), 6)
        self.assertEqual(str(perm), '[2 3 1 5 4]')

    def test_identity(self):
        e = Permutation.identity(4)
        self.assertEqual(e.cycle_type(), Partition.column(4))
        self.assertEqual(e.order(), 1)

    def test_compose_applies_right_factor_first(self):
        a = Permutation.from_cycles(3, (1, 2))
        b = Permutation.from_cycles(3, (2, 3))
        ab = compose(a, b)
        self.assertEqual(ab(2), a(b(2)))
        self.assertEqual(ab.images, (2, 3, 1))
        self.assertNotEqual(ab, compose(b, a))

    def test_compose_arity(self):
        with self.assertRaises(ArityError):
            compose(Permutation.identity(3), Permutation.identity(4))

    def test_rejects_non_permutation(self):
        with self.assertRaises(ValueError):
            Permutation((1, 1, 2))

    @given(st.integers(min_value=1, max_value=8).flatmap(permutations_of))
    def test_inverse(self, perm):
        self.assertEqual(compose(perm, inverse(perm)), Permutation.identity(perm.n))
        self.assertEqual(inverse(perm).cycle_type(), perm.cycle_type())


class TestClassSize(unittest.TestCase):

    def test_values(self):
        self.assertEqual(class_size(4, Partition((4,))), 6)
        self.assertEqual(class_size(4, Partition((2, 2))), 3)
        self.assertEqual(class_size(5, Partition((2, 1, 1, 1))), 10)
        self.assertEqual(class_size(6, Partition((6,))), 120)
        self.assertEqual(class_size(0, Partition(())), 1)

    def test_size_mismatch(self):
        with self.assertRaises(InvalidClassError):
            class_size(5, Partition((4,)))

    @given(st.integers(min_value=0, max_value=12))
    def test_class_sizes_sum_to_group_order(self, n):
        self.assertEqual(sum(class_size(n, t) for t in enumerate_partitions(n)), factorial(n))


class TestClassSpec(unittest.TestCase):

    def test_of_and_size(self):
        spec = ClassSpec.of(5, '5', '2,1,1,1')
        self.assertEqual(spec.size, 34)
        self.assertEqual(spec.ordered, (Partition((5,)), Partition((2, 1, 1, 1))))
        self.assertEqual(str(spec), 'n=5 {(5); (2,1,1,1)}')

    def test_identity_class_is_forbidden(self):
        with self.assertRaises(InvalidClassError):
            ClassSpec.of(4, '1,1,1,1')

    def test_invalid_specs(self):
        with self.assertRaises(InvalidClassError):
            ClassSpec(4, frozenset())
        with self.assertRaises(InvalidClassError):
            ClassSpec.of(4, '3')
        with self.assertRaises(InvalidClassError):
            ClassSpec.n_cycles(1)

    def test_equality_ignores_order(self):
        self.assertEqual(ClassSpec.of(4, '4', '2,2'), ClassSpec.of(4, '2,2', '4'))

    def test_serialization(self):
        spec = ClassSpec.of(4, '2,2', '4')
        self.assertEqual(spec.to_dict(), {'n': 4, 'classes': ['(4)', '(2,2)']})
        self.assertEqual(ClassSpec.from_json(spec.to_json()), spec)


if __name__ == '__main__':
    unittest.main()
