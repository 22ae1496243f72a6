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

from fractions import Fraction
from unittest import TestCase

from hypothesis import given, settings
from hypothesis import strategies as st

from sepinv.exceptions import BadConductor, DivisionByZero, FieldMismatch, NoSuchRoot
from sepinv.objects.scalar_ import (CycRat, CyclotomicField, GaloisField, embed, galois_field,
                                    is_irreducible, make_field, root_of_unity, scalar_from_json,
                                    scalar_to_json, smallest_irreducible)

CYC12 = st.lists(st.integers(min_value=-5, max_value=5), min_size=4, max_size=4).map(lambda c: CycRat(12, c))
GF25 = st.integers(min_value=0, max_value=24).map(lambda v: galois_field(25).element(v))


class TestCyclotomic(TestCase):
    """
    Exact arithmetic in Q(zeta_n)
    """

    def test_roots_of_unity(self):
        """
        Primitive roots satisfy their cyclotomic relation
        """
        w = CyclotomicField(3).root_of_unity(3)
        self.assertEqual(w ** 3, 1)
        self.assertNotEqual(w, 1)
        self.assertEqual(1 + w + w * w, 0)

        i = CyclotomicField(4).root_of_unity(4)
        self.assertEqual(i * i, -1)
        self.assertEqual(w.multiplicative_order(10), 3)
        self.assertEqual((w * i).multiplicative_order(12), 12)
        self.assertIsNone(CyclotomicField(1).from_int(2).multiplicative_order(10))

    def test_mixed_conductors(self):
        """
        Values of different conductors compare and hash through the lcm embedding
        """
        w = CyclotomicField(3).root_of_unity(3)
        same = CyclotomicField(6).zeta_power(6, 2)
        self.assertEqual(w, same)
        self.assertEqual(hash(w), hash(same))
        self.assertEqual(hash(CycRat(12, [Fraction(1, 2)])), hash(Fraction(1, 2)))
        self.assertEqual((w * CyclotomicField(4).root_of_unity(4)).conductor, 12)

    def test_embed(self):
        """
        Embedding needs a multiple of the conductor
        """
        w = CyclotomicField(3).root_of_unity(3)
        self.assertEqual(embed(w, 6), w)
        self.assertEqual(embed(w, 6).conductor, 6)
        with self.assertRaises(BadConductor):
            embed(w, 4)

    def test_inverse(self):
        """
        Inverse through the conjugates and division by zero
        """
        w = CyclotomicField(3).root_of_unity(3)
        self.assertEqual((2 + w).inv() * (2 + w), 1)
        self.assertEqual(1 / w, w * w)
        self.assertEqual(w.conjugate(2), w * w)
        with self.assertRaises(DivisionByZero):
            CyclotomicField(3).zero.inv()
        with self.assertRaises(ZeroDivisionError):
            _ = w / 0

    def test_rational_part(self):
        """
        to_fraction only accepts rational values
        """
        w = CyclotomicField(3).root_of_unity(3)
        self.assertEqual((w + w * w).to_fraction(), Fraction(-1))
        self.assertTrue(CycRat(5, [Fraction(3, 4)]).is_rational())
        with self.assertRaises(ValueError):
            w.to_fraction()

    def test_json(self):
        """
        Scalars survive their JSON form
        """
        value = CycRat(12, [1, Fraction(-2, 3), 0, 5])
        self.assertEqual(scalar_from_json(scalar_to_json(value)), value)
        element = galois_field(9).element(7)
        self.assertEqual(scalar_from_json(scalar_to_json(element)), element)

    def test_field_mismatch(self):
        """
        Cyclotomic and finite field values can't be combined
        """
        with self.assertRaises(FieldMismatch):
            _ = CyclotomicField(3).one + galois_field(4).one
        with self.assertRaises(FieldMismatch):
            _ = galois_field(4).one * galois_field(8).one

    @settings(max_examples=1000, deadline=None)
    @given(CYC12, CYC12, CYC12)
    def test_ring_laws(self, x, y, z):
        """
        Commutative ring laws in Q(zeta12)
        """
        self.assertEqual(x + y, y + x)
        self.assertEqual(x * y, y * x)
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual(x * (y + z), x * y + x * z)
        self.assertEqual(x - x, 0)

    @settings(max_examples=40, deadline=None)
    @given(CYC12)
    def test_field_inverse(self, x):
        """
        Nonzero values are invertible
        """
        if not x.is_zero():
            self.assertEqual(x * x.inv(), 1)

    def test_distinct_powers(self):
        """
        The powers of a primitive n-th root are pairwise distinct
        """
        for n in (3, 4, 6, 8, 9, 12, 20):
            zeta = CyclotomicField(n).root_of_unity(n)
            powers = [zeta ** j for j in range(n)]
            self.assertEqual(len(set(powers)), n, n)
            self.assertEqual(zeta ** n, 1)
        zeta6 = CyclotomicField(6).root_of_unity(6)
        self.assertEqual(zeta6 + zeta6.inv(), 1)

    @settings(max_examples=300, deadline=None)
    @given(CYC12, CYC12)
    def test_embed_homomorphism(self, x, y):
        """
        Embedding into a larger conductor preserves sums and products
        """
        for conductor in (24, 60):
            ex, ey = embed(x, conductor), embed(y, conductor)
            self.assertEqual(ex.conductor, conductor)
            self.assertEqual(embed(x * y, conductor), ex * ey)
            self.assertEqual(embed(x + y, conductor), ex + ey)
            self.assertEqual(ex, x)


class TestGaloisField(TestCase):
    """
    Table driven GF(q)
    """

    def test_construction(self):
        """
        Prime powers only, with a monic irreducible polynomial
        """
        gf4 = galois_field(4)
        self.assertEqual((gf4.p, gf4.k, gf4.q), (2, 2, 4))
        self.assertEqual(gf4.poly, (1, 1, 1))
        self.assertIs(galois_field(4), gf4)
        self.assertEqual(make_field("gf:4"), gf4)
        self.assertEqual(make_field("cyclotomic"), CyclotomicField(1))
        with self.assertRaises(ValueError):
            GaloisField(6)
        with self.assertRaises(ValueError):
            GaloisField(4, [1, 0, 1])

    def test_irreducible(self):
        """
        Irreducibility by trial division
        """
        self.assertTrue(is_irreducible([1, 1, 1], 2))
        self.assertFalse(is_irreducible([1, 0, 1], 2))
        self.assertEqual(smallest_irreducible(3, 2), [1, 0, 1])

    def test_roots_of_unity(self):
        """
        Roots exist exactly for the divisors of q-1
        """
        gf4 = galois_field(4)
        w = root_of_unity("gf:4", 3)
        self.assertEqual(w.multiplicative_order(3), 3)
        self.assertEqual(w ** 2 + w + 1, 0)
        self.assertEqual(len(gf4.elements()), 4)
        with self.assertRaises(NoSuchRoot):
            gf4.root_of_unity(2)

    def test_fractions(self):
        """
        Rationals reduce modulo p unless the denominator vanishes
        """
        gf5 = galois_field(5)
        self.assertEqual(gf5.from_fraction(Fraction(1, 2)) * 2, 1)
        self.assertEqual(gf5.from_int(7), 2)
        with self.assertRaises(DivisionByZero):
            gf5.from_fraction(Fraction(1, 5))
        with self.assertRaises(DivisionByZero):
            gf5.zero.inv()

    @settings(max_examples=25, deadline=None)
    @given(GF25)
    def test_fermat(self, x):
        """
        x^q = x in GF(25)
        """
        self.assertEqual(x ** 25, x)
        if not x.is_zero():
            self.assertEqual(x ** 24, 1)
            self.assertEqual(x * x.inv(), 1)

    @settings(max_examples=1000, deadline=None)
    @given(GF25, GF25, GF25)
    def test_ring_laws(self, x, y, z):
        """
        Distributivity and characteristic 5
        """
        self.assertEqual(x * (y + z), x * y + x * z)
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual(x * 5, 0)
        self.assertEqual(-x + x, 0)

    def test_exhaustive_fermat(self):
        """
        x^(q-1) = 1 on every nonzero element of GF(4), GF(5) and GF(25)
        """
        for q in (4, 5, 25):
            gf = galois_field(q)
            nonzero = [x for x in gf.elements() if not x.is_zero()]
            self.assertEqual(len(nonzero), q - 1)
            for x in nonzero:
                self.assertEqual(x ** (q - 1), gf.one, (q, x))

    def test_small_fields(self):
        """
        Roots of unity and inverses in GF(4) and GF(5)
        """
        gf5 = galois_field(5)
        i = gf5.root_of_unity(4)
        self.assertEqual(i.multiplicative_order(4), 4)
        self.assertEqual(i * i, gf5.from_int(-1))
        with self.assertRaises(NoSuchRoot):
            gf5.root_of_unity(3)

        gf4 = galois_field(4)
        self.assertEqual(gf4.from_int(27).inv(), gf4.one)
        with self.assertRaises(DivisionByZero):
            gf4.from_int(2).inv()
