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

from sepinv.exceptions import (DimensionMismatch, NotAHomomorphism, OrderBoundExceeded, SizeGuardExceeded,
                               ZeroScale)
from sepinv.objects.matrix_ import ScalarMatrix
from sepinv.tests.lib import poly, quiet_api, s3_natural, sign_character


class TestGroupMgr(TestCase):
    """
    Group endpoint
    """

    @classmethod
    def setUpClass(cls):
        cls.api = quiet_api()
        cls.group, cls.module, cls.field = s3_natural(cls.api)

    def test_close_group(self):
        """
        Closure stops at the order bound
        """
        self.assertEqual(self.group.order, 6)
        with self.assertRaises(OrderBoundExceeded):
            self.api.group.close_group(list(self.group.faithful_matrices[1:3]), order_bound=5)

    def test_stabilizer(self):
        """
        Stabilizers of points of the natural representation
        """
        one, zero = self.field.one, self.field.zero
        self.assertEqual(self.api.group.stabilizer(self.module, [one, zero]), [0])
        self.assertEqual(self.api.group.stabilizer(self.module, [one, one]), [0, self.group.element_from_word("b")])
        self.assertEqual(self.api.group.stabilizer(self.module, [zero, zero]), list(range(6)))
        with self.assertRaises(DimensionMismatch):
            self.api.group.stabilizer(self.module, [one])

    def test_characters(self):
        """
        Characters are checked against every relation
        """
        sgn = sign_character(self.api, self.group, self.field)
        self.assertEqual(self.api.group.kernel(sgn), self.api.group.subgroup_generated(self.group, ["a"]))
        with self.assertRaises(NotAHomomorphism):
            self.api.group.validate_character(self.group, [self.field.root_of_unity(3), self.field.one])

    def test_kernels_and_orders(self):
        """
        Faithful representations have a trivial kernel
        """
        self.assertEqual(self.api.group.representation_kernel(self.module), [0])
        self.assertEqual(self.api.group.representation_kernel(self.module.summands[0]), [0])
        self.assertEqual(self.api.group.element_order(self.group, "a*b"), 2)
        self.assertEqual(self.api.group.element_order(self.group, self.group.element_from_word("a")), 3)
        self.assertEqual(self.api.group.subgroup_generated(self.group, ["a", "b"]), list(range(6)))

    def test_automorphisms(self):
        """
        Automorphisms from generator images
        """
        alpha = self.api.group.new_automorphism(self.group, ["a^2", "b"], "conj")
        self.assertEqual(self.api.group.apply_automorphism(alpha, "a"), self.group.element_from_word("a^2"))
        self.assertEqual(self.api.group.apply_automorphism(alpha, "a*b"), self.group.element_from_word("a^2*b"))
        with self.assertRaises(NotAHomomorphism):
            self.api.group.new_automorphism(self.group, ["a", "a"])

    def test_extend_representation(self):
        """
        Matrices on generators extend to every element
        """
        gens = [self.group.faithful_matrices[g] for g in self.group.generators]
        mats = self.api.group.extend_representation(self.group, gens)
        self.assertEqual(list(mats), list(self.group.faithful_matrices))
        with self.assertRaises(DimensionMismatch):
            self.api.group.extend_representation(self.group, gens[:1])


class TestModuleMgr(TestCase):
    """
    Module endpoint
    """

    @classmethod
    def setUpClass(cls):
        cls.api = quiet_api(guard=10)
        cls.group, cls.module, cls.field = s3_natural(cls.api)
        sgn = sign_character(cls.api, cls.group, cls.field)
        cls.sum = cls.api.module.new(cls.group, [cls.module.summands[0],
                                                 cls.api.module.summand(cls.group, "U_sgn", character=sgn)],
                                     field=cls.field)

    def test_variables(self):
        """
        Coordinate functions and their images
        """
        w = self.field.root_of_unity(3)
        x1 = self.api.module.variable(self.module, "x1")
        self.assertEqual(self.api.module.act(self.module, "a", x1), x1.scale(w * w))
        self.assertEqual(self.api.module.act(self.module, "b", x1), self.api.module.variable(self.module, "x2"))
        with self.assertRaises(ValueError):
            self.api.module.variable(self.module, "t")
        with self.assertRaises(DimensionMismatch):
            self.api.module.act(self.module, "a", self.api.module.variable(self.sum, "t"))

    def test_evaluate(self):
        """
        Exact values at points
        """
        f = poly(self.field, 2, {(1, 1): 1})
        point = [self.field.from_int(2), self.field.from_int(3)]
        self.assertEqual(self.api.module.evaluate(self.module, f, point), 6)
        with self.assertRaises(DimensionMismatch):
            self.api.module.evaluate(self.module, f, point[:1])

    def test_restrict_and_embed(self):
        """
        Polynomials of a summand seen on the whole module
        """
        sub = self.api.module.restrict(self.sum, [1])
        self.assertEqual(sub.var_names, ("t",))
        f = poly(self.field, 2, {(2, 1): 1})
        self.assertEqual(self.api.module.embed_polynomial(f, self.sum, [0]), poly(self.field, 3, {(2, 1, 0): 1}))
        self.assertEqual(self.api.module.embed_polynomial(poly(self.field, 1, {(2,): 1}), self.sum, [1]),
                         poly(self.field, 3, {(0, 0, 2): 1}))
        with self.assertRaises(DimensionMismatch):
            self.api.module.embed_polynomial(f, self.sum, [1])

    def test_guard(self):
        """
        Monomial enumeration is refused beyond the guard
        """
        self.assertEqual(len(self.api.module.monomials_of_degree(self.module, 3)), 4)
        self.assertEqual(len(self.api.module.monomials_of_multidegree(self.sum, (2, 1))), 3)
        with self.assertRaises(SizeGuardExceeded):
            self.api.module.monomials_of_degree(self.module, 20)
        with self.assertRaises(SizeGuardExceeded):
            self.api.module.monomials_of_multidegree(self.sum, (12, 0))

    def test_twist(self):
        """
        Twisting by an inner automorphism gives an isomorphic module
        """
        alpha = self.api.group.new_automorphism(self.group, ["a^2", "b"], "conj")
        twisted = self.api.module.twist_by_automorphism(self.sum, alpha)
        self.assertEqual(twisted.labels, ["V.conj", "U_sgn.conj"])
        self.assertTrue(self.api.module.trace_equal(self.sum, twisted))
        self.assertFalse(self.api.module.trace_equal(self.sum, self.module))

        a = self.group.element_from_word("a")
        self.assertEqual(twisted.matrix(a), self.sum.matrix(self.group.element_from_word("a^2")))

    def test_rescale(self):
        """
        Rescaling one summand of a point
        """
        point = [self.field.from_int(1), self.field.from_int(2), self.field.from_int(3)]
        self.assertEqual(self.api.module.rescale_summand(self.sum, point, 1, 5), [1, 2, 15])
        self.assertEqual(self.api.module.rescale_summand(self.sum, point, 0, self.field.from_int(-1)), [-1, -2, 3])
        with self.assertRaises(ZeroScale):
            self.api.module.rescale_summand(self.sum, point, 0, 0)
        with self.assertRaises(ZeroScale):
            self.api.module.rescale_summand(self.sum, point, 0, self.field.zero)
        with self.assertRaises(IndexError):
            self.api.module.rescale_summand(self.sum, point, 2, 1)
