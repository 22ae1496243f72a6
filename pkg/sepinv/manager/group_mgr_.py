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
from sepinv.exceptions import DimensionMismatch
from sepinv.lib import check_is_positive_int, check_type
from sepinv.manager.generic_mgr_ import SepInvGenericEndPoint
from sepinv.objects.group_ import Automorphism, Character, FiniteGroup
from sepinv.objects.matrix_ import ScalarMatrix
from sepinv.objects.module_ import GModule, Summand


class SepInvGroupMgr(SepInvGenericEndPoint):
    """
    sepinv EndPoint specific to finite groups: closure, stabilizers, kernels, characters
    and automorphisms
    """

    def close_group(self, generator_matrices, order_bound, generator_names=None):
        """
        Enumerate the group generated by faithful matrices

        :param generator_matrices: one square matrix per abstract generator
        :param order_bound: closure is aborted beyond this order
        :param generator_names: names used in words

        :type generator_matrices: list of ScalarMatrix
        :type order_bound: int
        :type generator_names: list of str or None

        :returns: the enumerated group
        :rtype: FiniteGroup

        :raises OrderBoundExceeded: if the closure passes order_bound
        :raises NonInvertible: if a generator matrix is singular
        """
        group = FiniteGroup(generator_matrices=generator_matrices, order_bound=order_bound,
                            generator_names=generator_names)
        self.log.debug("Closed %r", group)
        return group

    def stabilizer(self, module, v):
        """
        {g : psi(g) v = v}

        :param module: the module
        :param v: point, one Scalar per variable

        :type module: GModule
        :type v: list

        :returns: sorted element indices
        :rtype: list

        :raises DimensionMismatch: if the point does not match the module dimension
        """
        check_type(value=module, allowed_types=GModule, var_name="module", raise_exception=True)
        if len(v) != module.dim:
            raise DimensionMismatch("Point of size %s in a module of dimension %s" % (len(v), module.dim))
        v = list(v)
        return [g for g in range(module.group.order) if module.apply(g, v) == v]

    def validate_character(self, group, values_on_generators, label=None):
        """
        Extend values on generators to a character and check it against the whole group

        :param group: the group
        :param values_on_generators: one Scalar per abstract generator
        :param label: weight name

        :type group: FiniteGroup
        :type values_on_generators: list of Scalar
        :type label: str or None

        :rtype: Character

        :raises NotAHomomorphism: if a relation is violated
        """
        check_type(value=group, allowed_types=FiniteGroup, var_name="group", raise_exception=True)
        return Character.from_generators(group, list(values_on_generators), label)

    @staticmethod
    def kernel(chi):
        """
        {g : chi(g) = 1}

        :type chi: Character
        :rtype: list
        """
        check_type(value=chi, allowed_types=Character, var_name="chi", raise_exception=True)
        return chi.kernel()

    @staticmethod
    def representation_kernel(summand):
        """
        {g : psi(g) = I} of a matrix summand or of a whole module

        :type summand: Summand or GModule
        :rtype: list
        """
        check_type(value=summand, allowed_types=[Summand, GModule], var_name="summand", raise_exception=True)
        if isinstance(summand, GModule):
            group_order = summand.group.order
            return [g for g in range(group_order)
                    if all(s.matrices[g].is_identity() for s in summand.summands)]
        return [g for g, mat in enumerate(summand.matrices) if mat.is_identity()]

    @staticmethod
    def element_order(group, g):
        """
        :type group: FiniteGroup
        :type g: int or str
        :rtype: int
        """
        if isinstance(g, str):
            g = group.element_from_word(g)
        return group.element_order(g)

    @staticmethod
    def subgroup_generated(group, elements):
        """
        Closure of some elements (indices or words)

        :type group: FiniteGroup
        :type elements: list
        :rtype: list
        """
        indices = [group.element_from_word(e) if isinstance(e, str) else int(e) for e in elements]
        return group.subgroup_generated(indices)

    def new_automorphism(self, group, images, label=None):
        """
        Automorphism from the images of the generators

        :param group: the group
        :param images: word or element index per generator
        :param label: name

        :type group: FiniteGroup
        :type images: list
        :type label: str or None

        :rtype: Automorphism

        :raises NotAHomomorphism: if the images do not define a bijective homomorphism
        """
        alpha = Automorphism(group, images, label)
        self.log.debug("Validated %r", alpha)
        return alpha

    @staticmethod
    def apply_automorphism(alpha, g):
        """
        alpha(g)

        :type alpha: Automorphism
        :type g: int or str
        :rtype: int
        """
        check_type(value=alpha, allowed_types=Automorphism, var_name="alpha", raise_exception=True)
        if isinstance(g, str):
            g = alpha.group.element_from_word(g)
        return alpha(g)

    @staticmethod
    def extend_representation(group, generator_matrices):
        """
        Matrix of every element from the matrices of the generators

        :param group: the group
        :param generator_matrices: one matrix per abstract generator

        :type group: FiniteGroup
        :type generator_matrices: list of ScalarMatrix

        :rtype: list of ScalarMatrix

        :raises DimensionMismatch: if the number of matrices differs from the generator count
        """
        check_type(value=group, allowed_types=FiniteGroup, var_name="group", raise_exception=True)
        if len(generator_matrices) != group.gen_count:
            raise DimensionMismatch("A matrix per generator is needed (%s), got %s" % (
                group.gen_count, len(generator_matrices)))
        dim = generator_matrices[0].nrows
        check_is_positive_int(value=dim, var_name="representation dimension")
        one = None
        for mat in generator_matrices:
            for row in mat.rows:
                if row:
                    one = row[0][1] ** 0
                    break
            if one is not None:
                break
        matrices = group.extend_on_elements(list(generator_matrices), lambda a, b: a * b)
        matrices[0] = ScalarMatrix.identity(dim, one)
        return matrices
