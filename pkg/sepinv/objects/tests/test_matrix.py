# -*- coding: utf-8 -*-
"""
Copyright 2019 CS Systèmes d'Information

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.

"""

from unittest import TestCase

from sepinv.exceptions import DimensionMismatch
from sepinv.objects.matrix_ import EchelonSpace, ScalarMatrix
from sepinv.objects.scalar_ import CyclotomicField, galois_field

Q = CyclotomicField(1)


def dense(values, field=Q):
    """
    Matrix from integer entries
    """
    return ScalarMatrix.from_dense([[field.from_int(v) for v in row] for row in values])


class TestScalarMatrix(TestCase):
    """
    Sparse exact matrices
    """

    def test_products(self):
        """
        Products, identity and application to vectors
        """
        a = dense([[1, 2], [3, 4]])
        b = dense([[0, 1], [1, 0]])
        self.assertEqual(a * b, dense([[2, 1], [4, 3]]))
        self.assertEqual(a * ScalarMatrix.identity(2, Q.one), a)
        self.assertTrue((b * b).is_identity())
        self.assertEqual(a.apply([Q.one, Q.zero]), [1, 3])
        self.assertEqual(a.trace(Q.zero), 5)

        with self.assertRaises(DimensionMismatch):
            a.apply([Q.one])
        with self.assertRaises(DimensionMismatch):
            _ = a * dense([[1, 2, 3]])
        with self.assertRaises(DimensionMismatch):
            ScalarMatrix.from_dense([[Q.one], [Q.one, Q.zero]])

    def test_structure(self):
        """
        Monomial matrices, block sums and rank
        """
        w = CyclotomicField(3).root_of_unity(3)
        zero = CyclotomicField(3).zero
        perm = ScalarMatrix.from_dense([[zero, w], [w * w, zero]])
        self.assertTrue(perm.is_monomial())
        self.assertFalse(dense([[1, 1], [0, 1]]).is_monomial())

        block = ScalarMatrix.block_diagonal([dense([[2]]), dense([[0, 1], [1, 0]])])
        self.assertEqual(block, dense([[2, 0, 0], [0, 0, 1], [0, 1, 0]]))
        self.assertEqual(block.to_dense(Q.zero)[1], [0, 0, 1])
        self.assertEqual(block.entry(0, 0, Q.zero), 2)

        self.assertEqual(dense([[1, 2], [2, 4]]).rank(), 1)
        self.assertEqual(dense([[1, 2], [3, 4]]).rank(), 2)
        self.assertEqual(dense([[1, 1], [1, 1]], galois_field(2)).rank(), 1)
        self.assertEqual(dense([[1, 1], [1, -1]], galois_field(2)).rank(), 1)
        self.assertEqual(dense([[1, 1], [1, -1]]).rank(), 2)

    def test_hashable(self):
        """
        Equal matrices share their hash
        """
        self.assertEqual(len({dense([[1, 0], [0, 1]]), ScalarMatrix.identity(2, Q.one)}), 1)


class TestEchelonSpace(TestCase):
    """
    Incremental row reduction
    """

    def test_span(self):
        """
        Rank grows only for independent vectors
        """
        space = EchelonSpace()
        self.assertTrue(space.insert({0: Q.from_int(1), 1: Q.from_int(2)}))
        self.assertFalse(space.insert({0: Q.from_int(3), 1: Q.from_int(6)}))
        self.assertTrue(space.insert({1: Q.from_int(1)}))
        self.assertEqual(space.rank, 2)
        self.assertTrue(space.contains({0: Q.from_int(5)}))
        self.assertEqual(space.reduce({0: Q.from_int(1), 1: Q.from_int(2)}), {})

    def test_custom_key(self):
        """
        The key selects the pivot column
        """
        space = EchelonSpace(key=lambda col: col)
        space.insert({0: Q.from_int(1), 1: Q.from_int(2)})
        reduced = space.reduce({1: Q.from_int(1)})
        self.assertEqual(list(reduced), [0])
        self.assertEqual(reduced[0], Q.from_int(-1) / 2)
