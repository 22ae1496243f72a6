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

from hypothesis import given, settings
from hypothesis import strategies as st

from sepinv.exceptions import FieldMismatch, InvarianceFailure, ModularCharacteristic
from sepinv.objects.matrix_ import ScalarMatrix
from sepinv.objects.scalar_ import CyclotomicField, galois_field
from sepinv.tests.lib import cyclic_group, poly, quiet_api, s3_natural, sign_character

# dim K[V]^S3_d, d = 0..6
S3_DIMENSIONS = [1, 0, 1, 1, 1, 1, 2]

# integer polynomials in two variables of degree at most 4
TERMS2 = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)),
                         st.integers(-3, 3).filter(bool), min_size=1, max_size=5)


class TestWeightSpaces(TestCase):
    """
    Invariants and relative invariants of S3
    """

    @classmethod
    def setUpClass(cls):
        cls.api = quiet_api()
        cls.group, cls.module, cls.field = s3_natural(cls.api)
        cls.sgn = sign_character(cls.api, cls.group, cls.field)

    def test_dimensions(self):
        """
        Basis sizes agree with the trace formula
        """
        for degree, expected in enumerate(S3_DIMENSIONS):
            self.assertEqual(self.api.inv.weight_space_basis(self.module, degree=degree).dim, expected)
            self.assertEqual(self.api.inv.dimension_oracle(self.module, degree), expected)
        self.assertEqual(self.api.inv.compare_with_oracle(self.module, 6), (2, 2))
        self.assertEqual(self.api.inv.dimension_oracle(self.module, 3, self.sgn), 1)
        self.assertEqual(self.api.inv.dimension_oracle(self.module, multidegree=(4,)), 1)

    def test_bases(self):
        """
        Canonical basis elements are monic
        """
        f = self.field
        basis = self.api.inv.weight_space_basis(self.module, degree=2)
        self.assertEqual(list(basis), [poly(f, 2, {(1, 1): 1})])
        self.assertEqual(basis.weight.label, "1")
        relative = self.api.inv.weight_space_basis(self.module, degree=3, chi=self.sgn)
        self.assertEqual(list(relative), [poly(f, 2, {(3, 0): 1, (0, 3): -1})])
        self.assertEqual(relative.to_json()["basis"], ["x1^3 - x2^3"])
        cell = self.api.inv.weight_space_basis(self.module, chi=self.sgn, multidegree=(3,))
        self.assertEqual(cell.basis, relative.basis)
        self.assertEqual(cell.multidegree, (3,))

    def test_projection(self):
        """
        Reynolds projection of a monomial
        """
        f = self.field
        proj = self.api.inv.project_weight(self.module, poly(f, 2, {(3, 0): 1}))
        self.assertEqual(proj, poly(f, 2, {(3, 0): 1, (0, 3): 1}).scale(f.from_int(1) / 2))
        self.assertTrue(self.api.inv.project_weight(self.module, poly(f, 2, {(1, 0): 1})).is_zero())

    @settings(max_examples=300, deadline=None)
    @given(TERMS2, st.booleans())
    def test_projection_properties(self, terms, relative):
        """
        Projections are idempotent, equivariant and land in the weight space
        """
        chi = self.sgn if relative else None
        project = self.api.inv.project_weight
        f = poly(self.field, 2, terms)
        image = project(self.module, f, chi)
        self.assertEqual(project(self.module, image, chi), image)
        self.assertTrue(self.api.inv.check_invariance(self.module, image, chi))
        for g in range(self.group.order):
            self.assertEqual(project(self.module, self.module.act(g, f), chi), self.module.act(g, image))

    def test_invariance(self):
        """
        Weights are checked on the generators
        """
        f = self.field
        self.assertTrue(self.api.inv.check_invariance(self.module, poly(f, 2, {(1, 1): 1})))
        self.assertTrue(self.api.inv.check_invariance(self.module, poly(f, 2, {(3, 0): 1, (0, 3): -1}), self.sgn))
        self.assertFalse(self.api.inv.check_invariance(self.module, poly(f, 2, {(3, 0): 1, (0, 3): -1}),
                                                       raise_exception=False))
        with self.assertRaises(InvarianceFailure):
            self.api.inv.check_invariance(self.module, poly(f, 2, {(1, 0): 1}))

    def test_profile(self):
        """
        Indecomposable invariants of S3
        """
        profile = self.api.inv.generator_profile(self.module, 6)
        self.assertEqual(profile.counts, {2: 1, 3: 1})
        self.assertEqual(profile.degrees(), [2, 3])
        self.assertEqual(profile.max_degree(), 3)
        self.assertEqual(profile.generators()[1], poly(self.field, 2, {(3, 0): 1, (0, 3): 1}))
        self.assertEqual(profile.to_json()["counts"], {"2": 1, "3": 1})
        full = self.api.inv.generator_profile(self.module, 6, full_products=True)
        self.assertEqual(full.counts, profile.counts)

    def test_complement(self):
        """
        Relative invariants of weight sgn modulo the invariant ideal
        """
        self.assertEqual(self.api.inv.hilbert_complement(self.module, self.sgn, 3).dim, 1)
        self.assertEqual(self.api.inv.hilbert_complement(self.module, self.sgn, 5).dim, 0)
        self.assertEqual(self.api.inv.hilbert_complement(self.module, self.sgn, 6).dim, 0)
        self.assertEqual(self.api.inv.hilbert_complement(self.module, None, 0).dim, 1)

    def test_assemble(self):
        """
        Generators of K[V+U_sgn]^S3 from the pieces
        """
        summand = self.api.module.summand(self.group, "U_sgn", character=self.sgn)
        module = self.api.module.new(self.group, [self.module.summands[0], summand], field=self.field)
        generators, truncated = self.api.inv.assemble_VU_generators(module, 6)
        self.assertEqual(sorted(f.degree for f in generators), [2, 2, 3, 4])
        self.assertFalse(truncated)
        for f in generators:
            self.assertTrue(self.api.inv.check_invariance(module, f))

        _, truncated = self.api.inv.assemble_VU_generators(module, 3)
        self.assertTrue(truncated)


class TestRationalAction(TestCase):
    """
    Non monomial representations use the general projection path
    """

    def test_reflection_representation(self):
        """
        S3 on the rational reflection representation
        """
        api = quiet_api()
        q = CyclotomicField(1)
        a = ScalarMatrix.from_dense([[q.from_int(0), q.from_int(-1)], [q.from_int(1), q.from_int(-1)]])
        b = ScalarMatrix.from_dense([[q.from_int(0), q.from_int(1)], [q.from_int(1), q.from_int(0)]])
        group = api.group.close_group([a, b], order_bound=6)
        module = api.module.new(group, [api.module.summand(group, "V", [a, b])], field=q)
        for degree, expected in enumerate(S3_DIMENSIONS[:5]):
            self.assertEqual(api.inv.weight_space_basis(module, degree=degree).dim, expected)
        self.assertEqual(api.inv.generator_profile(module, 6).counts, {2: 1, 3: 1})


class TestFiniteFieldInvariants(TestCase):
    """
    Invariants over GF(q)
    """

    def test_cyclic(self):
        """
        C3 scaling a line over GF(4)
        """
        api = quiet_api()
        _, module, _ = cyclic_group(api, 3, galois_field(4))
        self.assertEqual(api.inv.generator_profile(module, 6).counts, {3: 1})
        self.assertEqual(api.inv.weight_space_basis(module, degree=6).dim, 1)
        with self.assertRaises(FieldMismatch):
            api.inv.dimension_oracle(module, 3)

    def test_character_coordinate(self):
        """
        The coordinate of a character summand is a relative invariant of that character
        """
        api = quiet_api()
        group, line, field = cyclic_group(api, 3)
        w = field.root_of_unity(3)
        chi = api.group.validate_character(group, [w], label="chi")
        chi_inv = api.group.validate_character(group, [w * w], label="chi_inv")
        summand = api.module.summand(group, "U_chi", character=chi, var_names=["t"])
        module = api.module.new(group, [summand], field=field)
        t = poly(field, 1, {(1,): 1})

        self.assertTrue(api.inv.check_invariance(module, t, chi))
        self.assertFalse(api.inv.check_invariance(module, t, chi_inv, raise_exception=False))
        self.assertEqual(list(api.inv.weight_space_basis(module, 1, chi)), [t])
        self.assertEqual(api.inv.weight_space_basis(module, 1, chi_inv).dim, 0)
        # a line scaled by w carries the same weight
        self.assertEqual(list(api.inv.weight_space_basis(line, 1, chi)), [t])

    def test_modular(self):
        """
        Projections need a characteristic prime to the group order
        """
        api = quiet_api()
        gf = galois_field(4)
        w = gf.root_of_unity(3)
        a = ScalarMatrix.from_dense([[w, gf.zero], [gf.zero, w * w]])
        b = ScalarMatrix.from_dense([[gf.zero, gf.one], [gf.one, gf.zero]])
        group = api.group.close_group([a, b], order_bound=6)
        module = api.module.new(group, [api.module.summand(group, "V", [a, b])], field=gf)
        with self.assertRaises(ModularCharacteristic):
            api.inv.check_characteristic(module)
        with self.assertRaises(ModularCharacteristic):
            api.inv.weight_space_basis(module, degree=2)
