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
from math import comb

from sepinv.exceptions import DimensionMismatch, SizeGuardExceeded, ZeroScale
from sepinv.lib import check_is_positive_int, check_type
from sepinv.manager.generic_mgr_ import SepInvGenericEndPoint
from sepinv.objects.group_ import Automorphism, Character, FiniteGroup
from sepinv.objects.module_ import GModule, Summand
from sepinv.objects.polynomial_ import Monomial, SparsePolynomial
from sepinv.objects.scalar_ import Scalar


class SepInvModuleMgr(SepInvGenericEndPoint):
    """
    sepinv EndPoint specific to modules: construction, polynomial action, evaluation,
    monomial enumeration, twists and rescaling
    """

    def summand(self, group, label, generator_matrices=None, character=None, var_names=None):
        """
        Create a summand from matrices on the generators or from a character

        :param group: the group
        :param label: summand label
        :param generator_matrices: one matrix per abstract generator (matrix summand)
        :param character: the character (one-dimensional summand)
        :param var_names: coordinate names

        :type group: FiniteGroup
        :type label: str
        :type generator_matrices: list of ScalarMatrix or None
        :type character: Character or None
        :type var_names: list of str or None

        :rtype: Summand
        """
        check_type(value=group, allowed_types=FiniteGroup, var_name="group", raise_exception=True)
        if character is not None:
            return Summand(label, character=character, var_names=var_names)
        matrices = self.api.group.extend_representation(group, generator_matrices)
        return Summand(label, matrices=matrices, var_names=var_names)

    def new(self, group, summands, field=None, validate=True):
        """
        Create a module as a direct sum of summands

        :param group: the group
        :param summands: ordered summands
        :param field: field handle (default: the configured one)
        :param validate: check the homomorphism property of every summand

        :type group: FiniteGroup
        :type summands: list of Summand
        :type field: CyclotomicField or GaloisField or None
        :type validate: bool

        :rtype: GModule

        :raises ValidationFailure: if a summand is not a representation
        """
        if field is None:
            field = self.api.config.field_handle()
        module = GModule(group, list(summands), field, validate=validate)
        self.log.debug("Built %r of dimension %s", module, module.dim)
        return module

    def restrict(self, module, indices):
        """
        Module made of some summands of another one, sharing their matrices

        :param module: the module
        :param indices: summand indices to keep, in order

        :type module: GModule
        :type indices: list of int

        :rtype: GModule
        """
        check_type(value=module, allowed_types=GModule, var_name="module", raise_exception=True)
        return GModule(module.group, [module.summands[i] for i in indices], module.field, validate=False)

    @staticmethod
    def embed_polynomial(poly, module, submodule_indices):
        """
        Polynomial on the summands submodule_indices of module, seen on the whole module

        :param poly: polynomial on the restricted module variables
        :param module: the whole module
        :param submodule_indices: summand indices the polynomial lives on

        :type poly: SparsePolynomial
        :type module: GModule
        :type submodule_indices: list of int

        :rtype: SparsePolynomial
        """
        offsets = module.offsets()
        positions = [offsets[i] + j for i in submodule_indices for j in range(module.grading[i])]
        if len(positions) != poly.nvars:
            raise DimensionMismatch("Polynomial in %s variables for %s positions" % (poly.nvars, len(positions)))
        terms = {}
        for mono, coeff in poly.terms.items():
            exps = [0] * module.dim
            for pos, e in zip(positions, mono):
                exps[pos] = e
            terms[Monomial(exps)] = coeff
        return SparsePolynomial(module.dim, terms)

    @staticmethod
    def variable(module, name):
        """
        Coordinate function of a variable name

        :type module: GModule
        :type name: str
        :rtype: SparsePolynomial
        """
        if name not in module.var_names:
            raise ValueError("Unknown variable %s in %r" % (name, module))
        return SparsePolynomial.variable(module.dim, module.var_names.index(name), module.field.one)

    @staticmethod
    def act(module, g, f):
        """
        g.f, with g.x_j = sum_i psi(g^-1)_{ji} x_i

        :param module: the module
        :param g: element index or word
        :param f: polynomial on the module variables

        :type module: GModule
        :type g: int or str
        :type f: SparsePolynomial

        :rtype: SparsePolynomial
        """
        check_type(value=f, allowed_types=SparsePolynomial, var_name="f", raise_exception=True)
        if f.nvars != module.dim:
            raise DimensionMismatch("Polynomial in %s variables on a module of dimension %s" % (f.nvars, module.dim))
        if isinstance(g, str):
            g = module.group.element_from_word(g)
        return module.act(g, f)

    @staticmethod
    def evaluate(module, f, v):
        """
        Exact value f(v)

        :type module: GModule
        :type f: SparsePolynomial
        :type v: list of Scalar

        :rtype: Scalar

        :raises DimensionMismatch: if the point does not match the module dimension
        """
        if len(v) != module.dim:
            raise DimensionMismatch("Point of size %s in a module of dimension %s" % (len(v), module.dim))
        return f.evaluate(list(v), zero=module.field.zero)

    def check_guard(self, count, what="monomials"):
        """
        Refuse computations touching more items than the configured guard

        :param count: number of items
        :param what: item kind for the message

        :raises SizeGuardExceeded: if count exceeds the guard
        """
        if count > self.api.config.guard:
            raise SizeGuardExceeded("%s %s exceed the guard %s" % (count, what, self.api.config.guard))

    def monomials_of_multidegree(self, module, multidegree):
        """
        All monomials of a multidegree, descending grevlex

        :type module: GModule
        :type multidegree: tuple or list
        :rtype: list of Monomial

        :raises SizeGuardExceeded: if there are more monomials than the guard allows
        """
        multidegree = tuple(multidegree)
        for d in multidegree:
            check_is_positive_int(value=d, var_name="multidegree entry", allow_zero=True)
        if len(multidegree) != len(module.summands):
            raise DimensionMismatch("Multidegree %s for %s summands" % (multidegree, len(module.summands)))
        self.check_guard(module.monomial_count(multidegree))
        return module.monomials_of_multidegree(multidegree)

    def monomials_of_degree(self, module, degree):
        """
        All monomials of a total degree, descending grevlex

        :type module: GModule
        :type degree: int
        :rtype: list of Monomial

        :raises SizeGuardExceeded: if there are more monomials than the guard allows
        """
        check_is_positive_int(value=degree, var_name="degree", allow_zero=True)
        self.check_guard(comb(degree + module.dim - 1, module.dim - 1))
        return module.monomials_of_degree(degree)

    def twist_by_automorphism(self, module, alpha):
        """
        Module with rho o alpha on every summand

        :param module: the module
        :param alpha: automorphism of the module group

        :type module: GModule
        :type alpha: Automorphism

        :rtype: GModule
        """
        check_type(value=module, allowed_types=GModule, var_name="module", raise_exception=True)
        check_type(value=alpha, allowed_types=Automorphism, var_name="alpha", raise_exception=True)
        if alpha.group is not module.group:
            raise ValueError("Automorphism of another group")
        order = module.group.order
        summands = []
        for summand in module.summands:
            label = "%s.%s" % (summand.label, alpha.label or "alpha")
            if summand.is_character():
                chi = summand.character
                twisted = Character(module.group, [chi(alpha(g)) for g in range(order)], chi.label)
                summands.append(Summand(label, character=twisted, var_names=list(summand.var_names)))
            else:
                summands.append(Summand(label, matrices=[summand.matrices[alpha(g)] for g in range(order)],
                                        var_names=list(summand.var_names)))
        return GModule(module.group, summands, module.field, validate=False)

    @staticmethod
    def rescale_summand(module, v, summand, lam):
        """
        Multiply the coordinates of one summand by a nonzero scalar

        :param module: the module
        :param v: point
        :param summand: summand index
        :param lam: scale

        :type module: GModule
        :type v: list of Scalar
        :type summand: int
        :type lam: Scalar or int

        :rtype: list

        :raises ZeroScale: if lam is zero
        """
        if len(v) != module.dim:
            raise DimensionMismatch("Point of size %s in a module of dimension %s" % (len(v), module.dim))
        if not 0 <= summand < len(module.summands):
            raise IndexError("No summand %s in %r" % (summand, module))
        if (isinstance(lam, Scalar) and lam.is_zero()) or lam == 0:
            raise ZeroScale("Rescaling %s by zero" % module.summands[summand].label)
        start = module.offsets()[summand]
        stop = start + module.grading[summand]
        return [x * lam if start <= i < stop else x for i, x in enumerate(v)]

    @staticmethod
    def trace_equal(module, other):
        """
        Same trace on every element, i.e. isomorphic modules in characteristic 0

        :type module: GModule
        :type other: GModule
        :rtype: bool
        """
        if module.group is not other.group or module.dim != other.dim:
            return False
        return all(module.trace(g) == other.trace(g) for g in range(module.group.order))
