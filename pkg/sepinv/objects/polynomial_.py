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
from itertools import combinations

from sepinv.exceptions import DimensionMismatch
from sepinv.lib import check_type
from sepinv.objects.scalar_ import Scalar, scalar_from_json


def grevlex_key(exponents):
    """
    Sort key of the graded reverse lexicographic order, larger key = larger monomial
    """
    return sum(exponents), tuple(-e for e in reversed(exponents))


class Monomial(tuple):
    """
    Exponent vector x_1^e_1 ... x_n^e_n
    """
    __slots__ = ()

    def __new__(cls, exponents):
        return super().__new__(cls, exponents)

    @property
    def degree(self):
        """
        Total degree
        :rtype: int
        """
        return sum(self)

    def multidegree(self, grading):
        """
        Degree restricted to each block of consecutive variables

        :param grading: block sizes, summing to the number of variables
        :type grading: tuple

        :rtype: tuple
        """
        result = []
        offset = 0
        for size in grading:
            result.append(sum(self[offset:offset + size]))
            offset += size
        return tuple(result)

    def times(self, other):
        """
        Product of monomials
        :rtype: Monomial
        """
        return Monomial([a + b for a, b in zip(self, other)])

    def divides(self, other):
        """
        :rtype: bool
        """
        return all(a <= b for a, b in zip(self, other))

    def to_str(self, names=None):
        """
        :param names: variable names, x1..xn by default
        :rtype: str
        """
        parts = []
        for i, e in enumerate(self):
            if e:
                name = names[i] if names else "x%s" % (i + 1)
                parts.append(name if e == 1 else "%s^%s" % (name, e))
        return "*".join(parts) if parts else "1"


def compositions(total, parts):
    """
    Exponent vectors of given length summing to total, in descending grevlex order

    :param total: degree
    :param parts: number of variables

    :type total: int
    :type parts: int

    :rtype: list
    """
    if parts == 0:
        return [()] if total == 0 else []
    result = []
    # stars and bars
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        exps = []
        for bar in bars:
            exps.append(bar - prev - 1)
            prev = bar
        exps.append(total + parts - 2 - prev)
        result.append(tuple(exps))
    result.sort(key=grevlex_key, reverse=True)
    return result


class SparsePolynomial:
    """
    Polynomial as a map Monomial -> Scalar without zero coefficients
    """

    __slots__ = ("_nvars", "_terms")

    def __init__(self, nvars, terms=None):
        """
        :param nvars: number of variables
        :param terms: mapping exponent vector -> Scalar

        :type nvars: int
        :type terms: dict or None
        """
        self._nvars = nvars
        self._terms = {}
        for mono, coeff in (terms or {}).items():
            if len(mono) != nvars:
                raise DimensionMismatch("Monomial %s has not %s variables" % (mono, nvars))
            check_type(value=coeff, allowed_types=Scalar, var_name="coefficient", raise_exception=True)
            if not coeff.is_zero():
                self._terms[Monomial(mono)] = coeff

    @classmethod
    def _wrap(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj._nvars = nvars
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, nvars, value):
        """
        :rtype: SparsePolynomial
        """
        return cls(nvars, {Monomial([0] * nvars): value})

    @classmethod
    def variable(cls, nvars, index, one):
        """
        The coordinate function x_{index+1}

        :rtype: SparsePolynomial
        """
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {Monomial(exps): one})

    @classmethod
    def monomial(cls, mono, one):
        """
        :rtype: SparsePolynomial
        """
        return cls(len(mono), {Monomial(mono): one})

    @property
    def nvars(self):
        """
        :rtype: int
        """
        return self._nvars

    @property
    def terms(self):
        """
        Copy of the coefficient map
        :rtype: dict
        """
        return dict(self._terms)

    def sorted_terms(self):
        """
        (Monomial, Scalar) pairs, leading term first
        :rtype: list
        """
        return sorted(self._terms.items(), key=lambda item: grevlex_key(item[0]), reverse=True)

    def support(self):
        """
        :rtype: set
        """
        return set(self._terms)

    def is_zero(self):
        """
        :rtype: bool
        """
        return not self._terms

    def __len__(self):
        return len(self._terms)

    @property
    def degree(self):
        """
        Total degree, -1 for the zero polynomial
        :rtype: int
        """
        return max((m.degree for m in self._terms), default=-1)

    def is_homogeneous(self):
        """
        :rtype: bool
        """
        return len({m.degree for m in self._terms}) <= 1

    def multidegrees(self, grading):
        """
        Set of multidegrees of the terms
        :rtype: set
        """
        return {m.multidegree(grading) for m in self._terms}

    def leading_monomial(self):
        """
        :rtype: Monomial or None
        """
        if not self._terms:
            return None
        return max(self._terms, key=grevlex_key)

    def leading_coefficient(self):
        """
        :rtype: Scalar or None
        """
        lead = self.leading_monomial()
        return None if lead is None else self._terms[lead]

    def monic(self):
        """
        Polynomial divided by its leading coefficient
        :rtype: SparsePolynomial
        """
        if not self._terms:
            return self
        return self.scale(self.leading_coefficient().inv())

    def scale(self, value):
        """
        Product by a scalar

        :rtype: SparsePolynomial
        """
        if value == 0:
            return SparsePolynomial._wrap(self._nvars, {})
        return SparsePolynomial._wrap(self._nvars, {m: c * value for m, c in self._terms.items()})

    def _check(self, other):
        if not isinstance(other, SparsePolynomial):
            return False
        if other.nvars != self._nvars:
            raise DimensionMismatch("Polynomials in %s and %s variables" % (self._nvars, other.nvars))
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            if mono in terms:
                new = terms[mono] + coeff
                if new.is_zero():
                    del terms[mono]
                else:
                    terms[mono] = new
            else:
                terms[mono] = coeff
        return SparsePolynomial._wrap(self._nvars, terms)

    def __neg__(self):
        return SparsePolynomial._wrap(self._nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)) and not isinstance(other, bool):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = Monomial([a + b for a, b in zip(m1, m2)])
                prod = c1 * c2
                terms[mono] = terms[mono] + prod if mono in terms else prod
        return SparsePolynomial._wrap(self._nvars, {m: c for m, c in terms.items() if not c.is_zero()})

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent):
        check_type(value=exponent, allowed_types=int, var_name="exponent", raise_exception=True)
        if exponent < 0:
            raise ValueError("Negative power of a polynomial")
        if exponent == 0:
            if not self._terms:
                raise ValueError("0^0 is undefined for the zero polynomial")
            unit = next(iter(self._terms.values())) ** 0
            return SparsePolynomial.constant(self._nvars, unit)
        result = self
        for _ in range(exponent - 1):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._nvars == other.nvars and self._terms == other._terms

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    __hash__ = None

    def coefficient(self, mono):
        """
        Coefficient of a monomial, None when absent
        """
        return self._terms.get(Monomial(mono))

    def evaluate(self, vector, zero=None):
        """
        Exact evaluation at a point

        :param vector: one Scalar per variable
        :param zero: value returned for the zero polynomial (default: 0 of the point's field)

        :type vector: list
        :type zero: Scalar or None

        :rtype: Scalar

        :raises DimensionMismatch: if the point has a wrong size
        """
        if len(vector) != self._nvars:
            raise DimensionMismatch("Point of size %s for a polynomial in %s variables" % (
                len(vector), self._nvars))
        if zero is None:
            zero = vector[0] * 0 if vector else 0
        powers = [dict() for _ in range(self._nvars)]
        total = zero
        for mono, coeff in self._terms.items():
            value = coeff
            for j, e in enumerate(mono):
                if e:
                    cached = powers[j].get(e)
                    if cached is None:
                        cached = vector[j] ** e
                        powers[j][e] = cached
                    value = value * cached
            total = total + value
        return total

    def to_json(self):
        """
        Canonical JSON form, leading term first
        :rtype: dict
        """
        return {"nvars": self._nvars,
                "terms": [[list(m), c.to_json()] for m, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data):
        """
        Inverse of to_json
        :rtype: SparsePolynomial
        """
        check_type(value=data, allowed_types=dict, var_name="data", raise_exception=True)
        return cls(data["nvars"], {tuple(m): scalar_from_json(c) for m, c in data["terms"]})

    def to_str(self, names=None):
        """
        Human readable form with the given variable names
        :rtype: str
        """
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            text = str(coeff)
            if mono.degree == 0:
                parts.append(text)
            elif coeff == 1:
                parts.append(mono.to_str(names))
            elif coeff == -1:
                parts.append("-" + mono.to_str(names))
            else:
                parts.append("(%s)*%s" % (text, mono.to_str(names)))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "SparsePolynomial(%s)" % self.to_str()

    def __str__(self):
        return self.to_str()
