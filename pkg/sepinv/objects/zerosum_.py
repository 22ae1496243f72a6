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
import re
from itertools import product

import numpy as np

from sepinv.lib import check_is_positive_int, check_type
from sepinv.objects.group_ import Character


class AbelianGroupTable:
    """
    Finite abelian group given by its operation table
    """

    def __init__(self, labels, table, identity=0):
        """
        :param labels: one label per element
        :param table: n x n table of element indices
        :param identity: index of the identity

        :type labels: list of str
        :type table: numpy.ndarray or list
        :type identity: int

        :raises ValueError: if the table is not commutative or has no inverses
        """
        check_type(value=labels, allowed_types=[list, tuple], var_name="labels", raise_exception=True)
        table = np.asarray(table, dtype=np.int64)
        size = len(labels)
        if table.shape != (size, size):
            raise ValueError("Table shape %s does not match %s labels" % (table.shape, size))
        if not np.array_equal(table, table.T):
            raise ValueError("Table is not commutative")
        if not np.array_equal(table[identity], np.arange(size)):
            raise ValueError("Element %s is not an identity" % identity)
        if not all((table[g] == identity).any() for g in range(size)):
            raise ValueError("Some element has no inverse")
        self.__labels = tuple(labels)
        self.__table = table
        self.__identity = identity

    @classmethod
    def cyclic_product(cls, factors):
        """
        C_n1 x ... x C_nk

        :param factors: cyclic orders
        :type factors: list of int

        :rtype: AbelianGroupTable
        """
        for n in factors:
            check_is_positive_int(value=n, var_name="cyclic factor")
        elements = list(product(*[range(n) for n in factors]))
        index = {e: i for i, e in enumerate(elements)}
        table = [[index[tuple((x + y) % n for x, y, n in zip(a, b, factors))] for b in elements]
                 for a in elements]
        labels = [",".join(str(x) for x in e) for e in elements]
        return cls(labels, table, identity=0)

    @classmethod
    def from_spec(cls, spec):
        """
        Parse "C3xC3", "C6", "C1"

        :type spec: str
        :rtype: AbelianGroupTable

        :raises ValueError: if the spec is malformed
        """
        check_type(value=spec, allowed_types=str, var_name="spec", raise_exception=True)
        parts = spec.replace(" ", "").split("x")
        factors = []
        for part in parts:
            match = re.match(r"^C(\d+)$", part)
            if match is None:
                raise ValueError("Malformed abelian group '%s', expected e.g. C3xC3" % spec)
            factors.append(int(match.group(1)))
        return cls.cyclic_product(factors)

    @classmethod
    def from_characters(cls, characters):
        """
        Group generated by characters under pointwise multiplication

        :param characters: characters of a common group
        :type characters: list of Character

        :returns: the table and the list of generated characters (element i is characters_out[i])
        :rtype: tuple
        """
        if not characters:
            raise ValueError("At least one character is needed")
        one = characters[0].values[0] ** 0
        trivial = Character.trivial(characters[0].group, one)
        elements = [trivial]
        index = {trivial.values: 0}
        frontier = [trivial]
        while frontier:
            nxt = []
            for chi in frontier:
                for gen in characters:
                    prod = chi * gen
                    if prod.values not in index:
                        index[prod.values] = len(elements)
                        elements.append(prod)
                        nxt.append(prod)
            frontier = nxt
        table = [[index[(a * b).values] for b in elements] for a in elements]
        labels = [chi.label for chi in elements]
        return cls(labels, table, identity=0), elements

    @property
    def labels(self):
        """
        :rtype: tuple
        """
        return self.__labels

    @property
    def table(self):
        """
        :rtype: numpy.ndarray
        """
        return self.__table

    @property
    def identity(self):
        """
        :rtype: int
        """
        return self.__identity

    @property
    def order(self):
        """
        :rtype: int
        """
        return len(self.__labels)

    def mul(self, a, b):
        """
        :rtype: int
        """
        return int(self.__table[a, b])

    def inv(self, a):
        """
        :rtype: int
        """
        return int(np.argmax(self.__table[a] == self.__identity))

    def product(self, indices):
        """
        Product of a sequence of elements
        :rtype: int
        """
        result = self.__identity
        for i in indices:
            result = int(self.__table[result, i])
        return result

    def subgroup(self, generators):
        """
        Subgroup generated by some elements, as a new table

        :rtype: AbelianGroupTable
        """
        members = {self.__identity}
        frontier = [self.__identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in generators:
                    y = self.mul(x, g)
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        members = sorted(members, key=lambda e: (e != self.__identity, e))
        index = {e: i for i, e in enumerate(members)}
        table = [[index[self.mul(a, b)] for b in members] for a in members]
        return AbelianGroupTable([self.__labels[e] for e in members], table, identity=0)

    def __repr__(self):
        return "AbelianGroupTable(order=%s)" % self.order


class CharSequence:
    """
    Multiset of elements of an abelian group, kept sorted
    """

    def __init__(self, table, indices):
        """
        :param table: the group
        :param indices: element indices, order irrelevant

        :type table: AbelianGroupTable
        :type indices: list of int
        """
        check_type(value=table, allowed_types=AbelianGroupTable, var_name="table", raise_exception=True)
        check_type(value=indices, allowed_types=[list, tuple], var_name="indices", raise_exception=True)
        for i in indices:
            if not 0 <= i < table.order:
                raise ValueError("Element %s out of a group of order %s" % (i, table.order))
        self.__table = table
        self.__indices = tuple(sorted(indices))

    @property
    def table(self):
        """
        :rtype: AbelianGroupTable
        """
        return self.__table

    @property
    def indices(self):
        """
        :rtype: tuple
        """
        return self.__indices

    def __len__(self):
        return len(self.__indices)

    def product(self):
        """
        :rtype: int
        """
        return self.__table.product(self.__indices)

    def __repr__(self):
        return "CharSequence(%s)" % [self.__table.labels[i] for i in self.__indices]
