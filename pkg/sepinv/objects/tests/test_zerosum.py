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

from sepinv.objects.group_ import Character, FiniteGroup
from sepinv.objects.matrix_ import ScalarMatrix
from sepinv.objects.scalar_ import CyclotomicField
from sepinv.objects.zerosum_ import AbelianGroupTable, CharSequence


class TestAbelianGroupTable(TestCase):
    """
    Operation tables of finite abelian groups
    """

    def test_from_spec(self):
        """
        Cyclic products are parsed from their names
        """
        table = AbelianGroupTable.from_spec("C3xC3")
        self.assertEqual(table.order, 9)
        self.assertEqual(table.identity, 0)
        self.assertEqual(table.labels[0], "0,0")
        self.assertEqual(AbelianGroupTable.from_spec("C2 x C4").order, 8)
        self.assertEqual(AbelianGroupTable.from_spec("C1").order, 1)
        for spec in ("C3xD4", "3x3", "C6x", "C0"):
            with self.assertRaises(ValueError):
                AbelianGroupTable.from_spec(spec)

    def test_operations(self):
        """
        Products, inverses and subgroups
        """
        table = AbelianGroupTable.from_spec("C6")
        self.assertEqual(table.mul(4, 5), 3)
        self.assertEqual(table.inv(2), 4)
        self.assertEqual(table.inv(0), 0)
        self.assertEqual(table.product([1, 2, 3]), 0)
        self.assertEqual(table.product([]), 0)
        sub = table.subgroup([2])
        self.assertEqual(sub.order, 3)
        self.assertEqual(sub.labels, ("0", "2", "4"))

    def test_refused_tables(self):
        """
        Non-commutative tables and wrong identities are refused
        """
        with self.assertRaises(ValueError):
            AbelianGroupTable(["e", "x"], [[0, 1], [0, 1]])
        with self.assertRaises(ValueError):
            AbelianGroupTable(["e", "x"], [[0, 1], [1, 0]], identity=1)
        with self.assertRaises(ValueError):
            AbelianGroupTable(["e", "x"], [[0, 1, 1], [1, 0, 1]])

    def test_from_characters(self):
        """
        Characters generate a group under pointwise product
        """
        field = CyclotomicField(3)
        w = field.root_of_unity(3)
        a = ScalarMatrix.from_dense([[w, field.zero], [field.zero, w * w]])
        b = ScalarMatrix.from_dense([[field.zero, field.one], [field.one, field.zero]])
        group = FiniteGroup([a, b], order_bound=6)
        sgn = Character.from_generators(group, [field.one, -field.one], "sgn")
        table, elements = AbelianGroupTable.from_characters([sgn])
        self.assertEqual(table.order, 2)
        self.assertTrue(elements[0].is_trivial())
        self.assertEqual(elements[1], sgn)
        self.assertEqual(table.mul(1, 1), 0)
        with self.assertRaises(ValueError):
            AbelianGroupTable.from_characters([])


class TestCharSequence(TestCase):
    """
    Sorted multisets of group elements
    """

    def test_sequence(self):
        """
        Indices are sorted and range checked
        """
        table = AbelianGroupTable.from_spec("C4")
        seq = CharSequence(table, [3, 1, 1])
        self.assertEqual(seq.indices, (1, 1, 3))
        self.assertEqual(len(seq), 3)
        self.assertEqual(seq.product(), 1)
        with self.assertRaises(ValueError):
            CharSequence(table, [4])
