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

import numpy as np

from sepinv.exceptions import (DimensionMismatch, NonInvertible,
                               NotAHomomorphism, OrderBoundExceeded)
from sepinv.lib import check_is_positive_int, check_type
from sepinv.objects.matrix_ import ScalarMatrix
from sepinv.objects.scalar_ import Scalar

WORD_TOKEN = re.compile(r"^([A-Za-z]\w*)(?:\^(-?\d+))?$")


class FiniteGroup:
    """
    Group enumerated from faithful generator matrices

    Elements are indexed in breadth-first discovery order with a fixed generator order,
    the identity being element 0. Each element keeps its normal-form word (tuple of
    generator indices) and its BFS parent so that any representation given on the
    generators can be extended to every element with one matrix product per element.
    """

    def __init__(self, generator_matrices, order_bound, generator_names=None):
        """
        Close the generators under multiplication

        :param generator_matrices: faithful matrices, one per abstract generator
        :param order_bound: closure is aborted beyond this number of elements
        :param generator_names: names used in words (a, b, c, ... by default)

        :type generator_matrices: list of ScalarMatrix
        :type order_bound: int
        :type generator_names: list of str or None

        :raises DimensionMismatch: if matrices are not square of the same size
        :raises NonInvertible: if a generator matrix is singular
        :raises OrderBoundExceeded: if the closure grows beyond order_bound
        """
        check_type(value=generator_matrices, allowed_types=[list, tuple], var_name="generator_matrices",
                   raise_exception=True)
        check_is_positive_int(value=order_bound, var_name="order_bound")
        if not generator_matrices:
            raise DimensionMismatch("At least one generator matrix is needed")
        dim = generator_matrices[0].nrows
        for mat in generator_matrices:
            check_type(value=mat, allowed_types=ScalarMatrix, var_name="generator matrix", raise_exception=True)
            if not mat.is_square() or mat.nrows != dim:
                raise DimensionMismatch("Generator matrices shall be square of size %s" % dim)
            if mat.rank() != dim:
                raise NonInvertible("Singular generator matrix %r" % mat)

        if generator_names is None:
            generator_names = [chr(ord("a") + i) for i in range(len(generator_matrices))]
        if len(generator_names) != len(generator_matrices):
            raise DimensionMismatch("One name per generator is needed")
        self.__generator_names = tuple(generator_names)

        one = None
        for mat in generator_matrices:
            for row in mat.rows:
                if row:
                    one = row[0][1] ** 0
                    break
            if one is not None:
                break
        identity = ScalarMatrix.identity(dim, one)

        elements = [identity]
        index = {identity: 0}
        words = [()]
        parents = [None]
        right = []
        pos = 0
        while pos < len(elements):
            right_row = []
            for s, gen in enumerate(generator_matrices):
                prod = elements[pos] * gen
                target = index.get(prod)
                if target is None:
                    if len(elements) >= order_bound:
                        raise OrderBoundExceeded("Group closure exceeds %s elements" % order_bound)
                    target = len(elements)
                    index[prod] = target
                    elements.append(prod)
                    words.append(words[pos] + (s,))
                    parents.append((pos, s))
                right_row.append(target)
            right.append(right_row)
            pos += 1

        order = len(elements)
        self.__faithful_matrices = tuple(elements)
        self.__words = tuple(words)
        self.__parents = tuple(parents)
        self.__right = np.array(right, dtype=np.int64)

        # g*h follows the BFS tree of h: g*h = (g*parent(h)) * s_h
        table = np.zeros((order, order), dtype=np.int64)
        table[:, 0] = np.arange(order)
        for h in range(1, order):
            parent, s = parents[h]
            table[:, h] = self.__right[table[:, parent], s]
        self.__mult_table = table
        self.__inv_table = np.argmin(table != 0, axis=1)
        self.__generators = tuple(int(self.__right[0, s]) for s in range(len(generator_matrices)))
        self.__cayley_edges = None

    @property
    def order(self):
        """
        Number of elements
        :rtype: int
        """
        return len(self.__words)

    @property
    def gen_count(self):
        """
        Number of abstract generators
        :rtype: int
        """
        return len(self.__generators)

    @property
    def generator_names(self):
        """
        :rtype: tuple
        """
        return self.__generator_names

    @property
    def generators(self):
        """
        Element index of each abstract generator
        :rtype: tuple
        """
        return self.__generators

    @property
    def elements(self):
        """
        Normal-form words, as tuples of generator indices
        :rtype: tuple
        """
        return self.__words

    @property
    def parents(self):
        """
        (parent element, generator index) for each element, None for the identity
        :rtype: tuple
        """
        return self.__parents

    @property
    def mult_table(self):
        """
        order x order numpy table of element indices
        :rtype: numpy.ndarray
        """
        return self.__mult_table

    @property
    def inv_table(self):
        """
        Inverse element index per element
        :rtype: numpy.ndarray
        """
        return self.__inv_table

    @property
    def faithful_matrices(self):
        """
        Closure matrix of every element
        :rtype: tuple
        """
        return self.__faithful_matrices

    def mul(self, g, h):
        """
        :rtype: int
        """
        return int(self.__mult_table[g, h])

    def inv(self, g):
        """
        :rtype: int
        """
        return int(self.__inv_table[g])

    def right_generator(self, g, s):
        """
        Index of g times generator s
        :rtype: int
        """
        return int(self.__right[g, s])

    def cayley_edges(self):
        """
        All (g, s, g*s_s) triples, the data needed to check a map on generators is a homomorphism
        :rtype: list
        """
        if self.__cayley_edges is None:
            self.__cayley_edges = [(g, s, int(self.__right[g, s]))
                                   for g in range(self.order) for s in range(self.gen_count)]
        return self.__cayley_edges

    def power(self, g, exponent):
        """
        :rtype: int
        """
        if exponent < 0:
            g = self.inv(g)
            exponent = -exponent
        result = 0
        for _ in range(exponent):
            result = self.mul(result, g)
        return result

    def element_order(self, g):
        """
        Least m >= 1 with g^m = e

        :rtype: int
        """
        m = 1
        x = g
        while x != 0:
            x = self.mul(x, g)
            m += 1
        return m

    def subgroup_generated(self, elements):
        """
        Closure of a set of elements, as a sorted list of indices

        :param elements: element indices
        :type elements: list

        :rtype: list
        """
        result = {0}
        frontier = [0]
        gens = [int(g) for g in elements]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in result:
                        result.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(result)

    def is_subgroup(self, elements):
        """
        :rtype: bool
        """
        members = set(elements)
        if 0 not in members:
            return False
        return all(self.mul(g, h) in members for g in members for h in members)

    def element_from_word(self, word):
        """
        Element of a word such as "a^3*b", "b*a^-1" or "1"

        :param word: product of generator powers separated by '*'
        :type word: str

        :rtype: int

        :raises ValueError: if the word is malformed or uses an unknown generator
        """
        check_type(value=word, allowed_types=str, var_name="word", raise_exception=True)
        result = 0
        text = word.replace(" ", "")
        if text in ("", "1", "e"):
            return 0
        for token in text.split("*"):
            match = WORD_TOKEN.match(token)
            if match is None or match.group(1) not in self.__generator_names:
                raise ValueError("Malformed word '%s'" % word)
            gen = self.__generators[self.__generator_names.index(match.group(1))]
            exponent = int(match.group(2)) if match.group(2) is not None else 1
            result = self.mul(result, self.power(gen, exponent))
        return result

    def word_of(self, g):
        """
        Normal-form word of an element, e.g. "a*a*b" rendered as "a^2*b"

        :rtype: str
        """
        word = self.__words[g]
        if not word:
            return "1"
        parts = []
        count = 1
        for i, s in enumerate(word):
            if i + 1 < len(word) and word[i + 1] == s:
                count += 1
                continue
            name = self.__generator_names[s]
            parts.append(name if count == 1 else "%s^%s" % (name, count))
            count = 1
        return "*".join(parts)

    def extend_on_elements(self, generator_values, mul):
        """
        Extend values on generators to all elements along the BFS tree

        :param generator_values: one value per generator
        :param mul: binary product of two values

        :type generator_values: list
        :type mul: callable

        :returns: one value per element, None at the identity
        :rtype: list
        """
        values = [None] * self.order
        for g in range(1, self.order):
            parent, s = self.__parents[g]
            values[g] = generator_values[s] if parent == 0 else mul(values[parent], generator_values[s])
        return values

    def __repr__(self):
        return "FiniteGroup(order=%s, generators=%s)" % (self.order, "".join(self.__generator_names))


class Character:
    """
    One-dimensional representation: one root of unity per element
    """

    def __init__(self, group, values, label=None):
        """
        :param group: the group
        :param values: one Scalar per element
        :param label: weight name, e.g. "(eps,1)"

        :type group: FiniteGroup
        :type values: list of Scalar
        :type label: str or None
        """
        check_type(value=group, allowed_types=FiniteGroup, var_name="group", raise_exception=True)
        check_type(value=label, allowed_types=[str, None], var_name="label", raise_exception=True)
        if len(values) != group.order:
            raise DimensionMismatch("A character needs %s values, got %s" % (group.order, len(values)))
        for value in values:
            check_type(value=value, allowed_types=Scalar, var_name="character value", raise_exception=True)
        self.__group = group
        self.__values = tuple(values)
        self.__label = label

    @classmethod
    def from_generators(cls, group, generator_values, label=None):
        """
        Extend values on generators and check the homomorphism property on the whole table

        :param group: the group
        :param generator_values: one Scalar per abstract generator
        :param label: weight name

        :type group: FiniteGroup
        :type generator_values: list of Scalar
        :type label: str or None

        :rtype: Character

        :raises NotAHomomorphism: if a relation of the group is violated
        """
        if len(generator_values) != group.gen_count:
            raise DimensionMismatch("A value per generator is needed (%s), got %s" % (
                group.gen_count, len(generator_values)))
        for value in generator_values:
            check_type(value=value, allowed_types=Scalar, var_name="generator value", raise_exception=True)
        one = generator_values[0] ** 0
        values = group.extend_on_elements(generator_values, lambda a, b: a * b)
        values[0] = one
        for g, s, gs in group.cayley_edges():
            if values[g] * generator_values[s] != values[gs]:
                raise NotAHomomorphism("Values %s on generators %s violate the relation %s*%s = %s" % (
                    [str(v) for v in generator_values], "".join(group.generator_names),
                    group.word_of(g), group.generator_names[s], group.word_of(gs)))
        for g, value in enumerate(values):
            if value ** group.order != one:
                raise NotAHomomorphism("Value of %s has an order not dividing %s" % (group.word_of(g), group.order))
        return cls(group, values, label)

    @classmethod
    def trivial(cls, group, one, label="1"):
        """
        :rtype: Character
        """
        return cls(group, [one] * group.order, label)

    @property
    def group(self):
        """
        :rtype: FiniteGroup
        """
        return self.__group

    @property
    def values(self):
        """
        :rtype: tuple
        """
        return self.__values

    @property
    def label(self):
        """
        :rtype: str
        """
        return self.__label if self.__label is not None else str([str(v) for v in self.generator_values])

    @property
    def generator_values(self):
        """
        :rtype: list
        """
        return [self.__values[g] for g in self.__group.generators]

    def __call__(self, g):
        return self.__values[g]

    def is_trivial(self):
        """
        :rtype: bool
        """
        return all(v.is_one() for v in self.__values)

    def kernel(self):
        """
        {g : chi(g) = 1}
        :rtype: list
        """
        return [g for g, v in enumerate(self.__values) if v.is_one()]

    def __mul__(self, other):
        if not isinstance(other, Character) or other.group is not self.__group:
            return NotImplemented
        return Character(self.__group, [a * b for a, b in zip(self.__values, other.values)])

    def inverse(self):
        """
        :rtype: Character
        """
        return Character(self.__group, [v.inv() for v in self.__values])

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return other.group is self.__group and other.values == self.__values

    def __hash__(self):
        return hash(self.__values)

    def __repr__(self):
        return "Character %s" % self.label


class Automorphism:
    """
    Group automorphism given by the images of the abstract generators
    """

    def __init__(self, group, images, label=None):
        """
        :param group: the group
        :param images: image word (str) or element index per generator
        :param label: name of the automorphism

        :type group: FiniteGroup
        :type images: list
        :type label: str or None

        :raises NotAHomomorphism: if the induced map is not a bijective homomorphism
        """
        check_type(value=group, allowed_types=FiniteGroup, var_name="group", raise_exception=True)
        if len(images) != group.gen_count:
            raise DimensionMismatch("An image per generator is needed")
        images = [group.element_from_word(img) if isinstance(img, str) else int(img) for img in images]
        mapping = group.extend_on_elements(images, group.mul)
        mapping[0] = 0
        for g, s, gs in group.cayley_edges():
            if group.mul(mapping[g], images[s]) != mapping[gs]:
                raise NotAHomomorphism("Images %s do not define a homomorphism" % images)
        if len(set(mapping)) != group.order:
            raise NotAHomomorphism("Images %s do not define a bijection" % images)
        self.__group = group
        self.__images = tuple(images)
        self.__mapping = tuple(mapping)
        self.__label = label

    @property
    def group(self):
        """
        :rtype: FiniteGroup
        """
        return self.__group

    @property
    def images(self):
        """
        Image element of each generator
        :rtype: tuple
        """
        return self.__images

    @property
    def mapping(self):
        """
        Image of every element
        :rtype: tuple
        """
        return self.__mapping

    @property
    def label(self):
        """
        :rtype: str or None
        """
        return self.__label

    def __call__(self, g):
        return self.__mapping[g]

    def __repr__(self):
        return "Automorphism %s" % (self.__label or list(self.__images))
