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
from sepinv.lib import check_type
from sepinv.objects.group_ import Character
from sepinv.objects.module_ import GModule


class WeightSpaceBasis:
    """
    Basis of the weight-chi relative invariants of one degree or multidegree
    """

    def __init__(self, module, weight, degree, basis, multidegree=None):
        """
        :param module: the module
        :param weight: the weight
        :param degree: total degree
        :param basis: the basis polynomials, canonical order
        :param multidegree: multidegree when the basis is restricted to one cell

        :type module: GModule
        :type weight: Character
        :type degree: int
        :type basis: list of SparsePolynomial
        :type multidegree: tuple or None
        """
        check_type(value=module, allowed_types=GModule, var_name="module", raise_exception=True)
        check_type(value=weight, allowed_types=Character, var_name="weight", raise_exception=True)
        check_type(value=degree, allowed_types=int, var_name="degree", raise_exception=True)
        self.__module = module
        self.__weight = weight
        self.__degree = degree
        self.__multidegree = tuple(multidegree) if multidegree is not None else None
        self.__basis = tuple(basis)

    @property
    def module(self):
        """
        :rtype: GModule
        """
        return self.__module

    @property
    def weight(self):
        """
        :rtype: Character
        """
        return self.__weight

    @property
    def degree(self):
        """
        :rtype: int
        """
        return self.__degree

    @property
    def multidegree(self):
        """
        :rtype: tuple or None
        """
        return self.__multidegree

    @property
    def basis(self):
        """
        :rtype: tuple
        """
        return self.__basis

    @property
    def dim(self):
        """
        :rtype: int
        """
        return len(self.__basis)

    def __iter__(self):
        return iter(self.__basis)

    def __len__(self):
        return len(self.__basis)

    def to_json(self):
        """
        :rtype: dict
        """
        return {
            "module": self.__module.labels,
            "weight": self.__weight.label,
            "degree": self.__degree,
            "multidegree": list(self.__multidegree) if self.__multidegree is not None else None,
            "dim": self.dim,
            "basis": [f.to_str(self.__module.var_names) for f in self.__basis],
        }

    def __repr__(self):
        return "WeightSpaceBasis(weight=%s, degree=%s, dim=%s)" % (self.__weight.label, self.__degree, self.dim)


class GeneratorProfile:
    """
    Number of indecomposable invariants per degree up to a cap, with representatives
    """

    def __init__(self, module, degree_cap, counts, representatives):
        """
        :param module: the module
        :param degree_cap: largest degree examined
        :param counts: degree -> number of indecomposables (degrees with 0 omitted)
        :param representatives: degree -> list of SparsePolynomial

        :type module: GModule
        :type degree_cap: int
        :type counts: dict
        :type representatives: dict
        """
        check_type(value=module, allowed_types=GModule, var_name="module", raise_exception=True)
        self.__module = module
        self.__degree_cap = degree_cap
        self.__counts = {d: c for d, c in sorted(counts.items()) if c}
        self.__representatives = {d: tuple(reps) for d, reps in sorted(representatives.items()) if reps}

    @property
    def module(self):
        """
        :rtype: GModule
        """
        return self.__module

    @property
    def degree_cap(self):
        """
        :rtype: int
        """
        return self.__degree_cap

    @property
    def counts(self):
        """
        :rtype: dict
        """
        return dict(self.__counts)

    @property
    def representatives(self):
        """
        :rtype: dict
        """
        return dict(self.__representatives)

    def generators(self):
        """
        All representatives, increasing degree
        :rtype: list
        """
        return [f for d in sorted(self.__representatives) for f in self.__representatives[d]]

    def degrees(self):
        """
        Multiset of generator degrees, e.g. [2, 2, 4, 4, 6, 7, 9]
        :rtype: list
        """
        return [d for d in sorted(self.__counts) for _ in range(self.__counts[d])]

    def max_degree(self):
        """
        :rtype: int
        """
        return max(self.__counts, default=0)

    def to_json(self):
        """
        :rtype: dict
        """
        return {
            "module": self.__module.labels,
            "degree_cap": self.__degree_cap,
            "counts": {str(d): c for d, c in self.__counts.items()},
            "generators": {str(d): [f.to_str(self.__module.var_names) for f in reps]
                           for d, reps in self.__representatives.items()},
        }

    def __repr__(self):
        return "GeneratorProfile(%s up to %s)" % (self.__counts, self.__degree_cap)
