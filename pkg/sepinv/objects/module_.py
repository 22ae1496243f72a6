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
from itertools import product
from math import comb

from sepinv.exceptions import DimensionMismatch, FieldMismatch, ValidationFailure
from sepinv.lib import check_type
from sepinv.objects.group_ import Character, FiniteGroup
from sepinv.objects.matrix_ import ScalarMatrix
from sepinv.objects.polynomial_ import Monomial, SparsePolynomial, compositions


class Summand:
    """
    Direct summand of a module: a matrix representation (one matrix per element)
    or a character (dimension 1, coordinate t_chi)
    """

    def __init__(self, label, matrices=None, character=None, var_names=None):
        """
        :param label: summand label, e.g. "W1" or "U(1,eps^2)"
        :param matrices: one ScalarMatrix per group element (matrix summands)
        :param character: the character (one-dimensional summands)
        :param var_names: coordinate names

        :type label: str
        :type matrices: list or None
        :type character: Character or None
        :type var_names: list of str or None
        """
        check_type(value=label, allowed_types=str, var_name="label", raise_exception=True)
        check_type(value=character, allowed_types=[Character, None], var_name="character", raise_exception=True)
        if (matrices is None) == (character is None):
            raise ValueError("A summand is either a matrix representation or a character")
        self.__label = label
        self.__character = character
        if character is not None:
            self.__matrices = tuple(ScalarMatrix([[(0, v)]], 1) for v in character.values)
        else:
            self.__matrices = tuple(matrices)
        dim = self.__matrices[0].nrows
        if var_names is None:
            var_names = ["t"] if dim == 1 else ["x%s" % (i + 1) for i in range(dim)]
        if len(var_names) != dim:
            raise DimensionMismatch("Summand %s needs %s variable names" % (label, dim))
        self.__var_names = tuple(var_names)

    @property
    def label(self):
        """
        :rtype: str
        """
        return self.__label

    @property
    def matrices(self):
        """
        Representation matrix of every element
        :rtype: tuple
        """
        return self.__matrices

    @property
    def character(self):
        """
        :rtype: Character or None
        """
        return self.__character

    @property
    def dim(self):
        """
        :rtype: int
        """
        return self.__matrices[0].nrows

    @property
    def var_names(self):
        """
        :rtype: tuple
        """
        return self.__var_names

    def is_character(self):
        """
        :rtype: bool
        """
        return self.__character is not None

    def __repr__(self):
        return "Summand %s" % self.__label


class GModule:
    """
    Direct sum of summands over a common group and field

    The polynomial action is g.x_j = sum_i psi(g^-1)_{ji} x_i. Substitution rows are
    cached per element; monomial matrices take a fast path mapping each monomial to a
    single scaled monomial.
    """

    def __init__(self, group, summands, field, validate=True):
        """
        :param group: the group
        :param summands: ordered summands
        :param field: base field handle
        :param validate: check every matrix summand is a homomorphism

        :type group: FiniteGroup
        :type summands: list of Summand
        :type field: CyclotomicField or GaloisField
        :type validate: bool

        :raises ValidationFailure: if a summand is not a representation
        """
        check_type(value=group, allowed_types=FiniteGroup, var_name="group", raise_exception=True)
        check_type(value=summands, allowed_types=[list, tuple], var_name="summands", raise_exception=True)
        if not summands:
            raise DimensionMismatch("A module needs at least one summand")
        for summand in summands:
            check_type(value=summand, allowed_types=Summand, var_name="summand", raise_exception=True)
            if len(summand.matrices) != group.order:
                raise DimensionMismatch("Summand %s needs one matrix per element" % summand.label)
        self.__group = group
        self.__summands = tuple(summands)
        self.__field = field
        self.__grading = tuple(s.dim for s in summands)
        self.__var_names = tuple(name for s in summands for name in s.var_names)
        self.__grading_map = tuple(i for i, s in enumerate(summands) for _ in range(s.dim))
        self.__is_monomial = all(m.is_monomial() for s in summands for m in s.matrices)
        self.__substitutions = {}
        self.__monomial_images = {}
        self.__linear_powers = {}
        self.__memo = {}
        if validate:
            self.validate()

    def validate(self):
        """
        Check rho(g) rho(s) = rho(g s) on every Cayley edge of every summand and the
        field of every entry

        :raises ValidationFailure: naming the first violated product
        """
        group = self.__group
        for summand in self.__summands:
            mats = summand.matrices
            if not mats[0].is_identity():
                raise ValidationFailure("%s does not map the identity to the identity matrix" % summand.label)
            for mat in mats:
                for row in mat.rows:
                    for _, val in row:
                        if not self.__field.is_compatible(val.field):
                            raise FieldMismatch("Entry %s of %s is not in %r" % (val, summand.label, self.__field))
            for g, s, gs in group.cayley_edges():
                if mats[g] * mats[group.generators[s]] != mats[gs]:
                    raise ValidationFailure("%s fails rho(%s) rho(%s) = rho(%s)" % (
                        summand.label, group.word_of(g), group.generator_names[s], group.word_of(gs)))

    @property
    def group(self):
        """
        :rtype: FiniteGroup
        """
        return self.__group

    @property
    def summands(self):
        """
        :rtype: tuple
        """
        return self.__summands

    @property
    def field(self):
        """
        Base field handle
        """
        return self.__field

    @property
    def dim(self):
        """
        Total dimension n
        :rtype: int
        """
        return len(self.__var_names)

    @property
    def grading(self):
        """
        Summand dimensions
        :rtype: tuple
        """
        return self.__grading

    @property
    def grading_map(self):
        """
        Variable index -> summand index
        :rtype: tuple
        """
        return self.__grading_map

    @property
    def var_names(self):
        """
        :rtype: tuple
        """
        return self.__var_names

    @property
    def labels(self):
        """
        :rtype: list
        """
        return [s.label for s in self.__summands]

    @property
    def memo(self):
        """
        Per-module cache of derived data (bases, profiles), keyed by the caller
        :rtype: dict
        """
        return self.__memo

    def clear_caches(self):
        """
        Drop the cached substitutions, monomial images and derived data
        """
        self.__substitutions.clear()
        self.__monomial_images.clear()
        self.__linear_powers.clear()
        self.__memo.clear()

    def is_monomial(self):
        """
        True if every representation matrix is monomial
        :rtype: bool
        """
        return self.__is_monomial

    def offsets(self):
        """
        First variable index of each summand
        :rtype: list
        """
        result = []
        offset = 0
        for size in self.__grading:
            result.append(offset)
            offset += size
        return result

    def matrix(self, g):
        """
        Block-diagonal matrix psi(g)
        :rtype: ScalarMatrix
        """
        return ScalarMatrix.block_diagonal([s.matrices[g] for s in self.__summands])

    def apply(self, g, vector):
        """
        psi(g) v

        :param g: element index
        :param vector: point, one Scalar per variable

        :rtype: list

        :raises DimensionMismatch: if the point size differs from dim
        """
        if len(vector) != self.dim:
            raise DimensionMismatch("Point of size %s in a module of dimension %s" % (len(vector), self.dim))
        result = []
        offset = 0
        for summand in self.__summands:
            result.extend(summand.matrices[g].apply(list(vector[offset:offset + summand.dim])))
            offset += summand.dim
        return result

    def trace(self, g):
        """
        Trace of psi(g)
        :rtype: Scalar
        """
        total = self.__field.zero
        for summand in self.__summands:
            total = total + summand.matrices[g].trace(self.__field.zero)
        return total

    def substitution(self, g):
        """
        Rows of psi(g^-1): variable j is replaced by sum_i row_j[i] x_i

        :rtype: list of tuples of (i, Scalar)
        """
        subst = self.__substitutions.get(g)
        if subst is None:
            inv = self.__group.inv(g)
            subst = []
            offset = 0
            for summand in self.__summands:
                for row in summand.matrices[inv].rows:
                    subst.append(tuple((offset + col, val) for col, val in row))
                offset += summand.dim
            self.__substitutions[g] = subst
        return subst

    def __linear_power(self, g, j, e):
        key = (g, j, e)
        cached = self.__linear_powers.get(key)
        if cached is None:
            if e == 1:
                terms = {}
                for i, val in self.substitution(g)[j]:
                    exps = [0] * self.dim
                    exps[i] = 1
                    terms[Monomial(exps)] = val
                cached = SparsePolynomial(self.dim, terms)
            else:
                cached = self.__linear_power(g, j, e - 1) * self.__linear_power(g, j, 1)
            self.__linear_powers[key] = cached
        return cached

    def act_monomial(self, g, mono):
        """
        g acting on a monomial

        :param g: element index
        :param mono: exponent vector

        :returns: coefficient map of the image
        :rtype: dict
        """
        key = (g, mono)
        cached = self.__monomial_images.get(key)
        if cached is not None:
            return cached
        subst = self.substitution(g)
        if self.__is_monomial:
            exps = [0] * self.dim
            coeff = self.__field.one
            for j, e in enumerate(mono):
                if e:
                    (i, val), = subst[j]
                    exps[i] += e
                    coeff = coeff * val ** e
            cached = {Monomial(exps): coeff}
        else:
            image = SparsePolynomial.constant(self.dim, self.__field.one)
            for j, e in enumerate(mono):
                if e:
                    image = image * self.__linear_power(g, j, e)
            cached = image.terms
        self.__monomial_images[key] = cached
        return cached

    def act(self, g, poly):
        """
        g.f by linear substitution

        :rtype: SparsePolynomial
        """
        terms = {}
        for mono, coeff in poly.terms.items():
            for image, val in self.act_monomial(g, mono).items():
                prod = coeff * val
                terms[image] = terms[image] + prod if image in terms else prod
        return SparsePolynomial(self.dim, terms)

    def monomials_of_multidegree(self, multidegree):
        """
        All monomials of a multidegree, in descending grevlex order

        :param multidegree: one degree per summand
        :type multidegree: tuple

        :rtype: list of Monomial
        """
        if len(multidegree) != len(self.__summands):
            raise DimensionMismatch("Multidegree %s for %s summands" % (multidegree, len(self.__summands)))
        blocks = [compositions(d, size) for d, size in zip(multidegree, self.__grading)]
        monos = [Monomial(sum(parts, ())) for parts in product(*blocks)]
        monos.sort(key=lambda m: (m.degree, tuple(-e for e in reversed(m))), reverse=True)
        return monos

    def monomials_of_degree(self, degree):
        """
        All monomials of a total degree, in descending grevlex order

        :rtype: list of Monomial
        """
        return [Monomial(m) for m in compositions(degree, self.dim)]

    def multidegrees_of_degree(self, degree):
        """
        Multidegrees of total degree, in descending lexicographic order
        :rtype: list
        """
        return sorted(compositions(degree, len(self.__summands)), reverse=True)

    def monomial_count(self, multidegree):
        """
        Number of monomials of a multidegree without enumerating them
        :rtype: int
        """
        count = 1
        for d, size in zip(multidegree, self.__grading):
            count *= comb(d + size - 1, size - 1)
        return count

    def __repr__(self):
        return "GModule(%s)" % "+".join(self.labels)
