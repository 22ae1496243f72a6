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
from collections import namedtuple
from fractions import Fraction

import sympy as sp
from schema import And, Optional, Or, Schema, SchemaError
from sympy.parsing.sympy_parser import (convert_xor, parse_expr,
                                        standard_transformations)

from sepinv.exceptions import DimensionMismatch, FieldMismatch, UnknownEntry, ValidationFailure
from sepinv.lib import Provenance, check_type
from sepinv.objects.generic_ import SepInvObject
from sepinv.objects.module_ import GModule
from sepinv.objects.polynomial_ import Monomial, SparsePolynomial
from sepinv.objects.scalar_ import GaloisField

CATALOG_SCHEMA_VERSION = 1

TRANSFORMATIONS = standard_transformations + (convert_xor,)

# Symbol standing for the primitive root of unity of the entry conductor
ZETA = sp.Symbol("zeta_")

_EXPR = Or(str, int)

ENTRY_SCHEMA = Schema({
    'schema_version': CATALOG_SCHEMA_VERSION,
    'gap_id': And([int], lambda x: len(x) == 2),
    'name': And(str, len),
    'presentation': str,
    'beta': And(int, lambda x: x > 0),
    'beta_sep': And(int, lambda x: x > 0),
    'reference': str,
    'conductor': And(int, lambda x: x > 0),
    'roots': {Optional(str): int},
    'generators': And([str], len),
    'relations': [str],
    'faithful': And([str], len),
    'representations': {str: {
        'vars': And([str], len),
        'matrices': {str: [[_EXPR]]},
    }},
    Optional('characters'): {str: {
        'var': str,
        'values': {str: _EXPR},
    }},
    Optional('automorphisms'): {str: {str: str}},
    Optional('expressions'): {str: str},
    Optional('invariants'): {str: Or(str, {
        'expr': str,
        Optional('weight'): str,
        Optional('module'): [str],
    })},
    Optional('note'): str,
})

THEOREM_SCHEMA = Schema({
    'schema_version': CATALOG_SCHEMA_VERSION,
    'theorem': And(str, len),
    'gap_id': And([int], lambda x: len(x) == 2),
    'title': str,
    'checks': And([{
        'op': And(str, len),
        'expected': object,
        'provenance': Or(*[p.value for p in Provenance]),
        Optional('slow'): bool,
        Optional('note'): str,
        Optional('field'): str,
        Optional(str): object,
    }], len),
})

NamedInvariant = namedtuple("NamedInvariant", ["name", "labels", "weight", "poly"])


def character_label(key):
    """
    Summand label of the one-dimensional summand of a character key
    :rtype: str
    """
    return "U%s" % key


class CatalogEntry(SepInvObject):
    """
    One group of the catalog with its representations, characters, automorphisms and
    named invariants, all validated on load

    Scalars and polynomials of the entry file are sympy expressions in the variable
    names, the root names (powers of the primitive root of unity of order conductor) and
    the helper expressions. They are evaluated in the entry field, so the same entry can
    be loaded over Q(zeta_N) or over any GF(q) holding the N-th roots of unity.
    """

    def __init__(self, api, data, field):
        """
        :param api: see SepInvObject
        :param data: entry file content
        :param field: base field handle

        :type api: SepInvAPI
        :type data: dict
        :type field: CyclotomicField or GaloisField

        :raises SchemaError: if data is not a catalog entry
        """
        super().__init__(api)
        self.is_json_valid(data)
        self.__data = data
        self.__field = field
        self.__group = None
        self.__summands = {}
        self.__characters = {}
        self.__automorphisms = {}
        self.__invariants = {}
        self.__modules = {}

        symbols = {}
        for rep in data["representations"].values():
            for name in rep["vars"]:
                symbols[name] = sp.Symbol(name)
        for char in data.get("characters", {}).values():
            symbols[char["var"]] = sp.Symbol(char["var"])
        self.__var_symbols = set(symbols.values())
        for name, power in data["roots"].items():
            symbols[name] = ZETA ** power
        self.__context = symbols
        for name, text in data.get("expressions", {}).items():
            self.__context[name] = self._parse(text)
        # named invariants may be used by name in later expressions
        for name, spec in data.get("invariants", {}).items():
            if name not in self.__context:
                self.__context[name] = self._parse(spec if isinstance(spec, str) else spec["expr"])

    @staticmethod
    def is_json_valid(data, raise_exception=True):
        """
        Check if the provided JSON (as a dict) is a well-formed catalog entry

        :param data: the JSON as dict
        :param raise_exception: Indicates if exceptions shall be raised (True, default) or not (False)

        :type data: dict
        :type raise_exception: bool

        :return: the check status
        :rtype: bool

        :raises SchemaError: if JSON is invalid
        """
        check_type(value=data, allowed_types=dict, var_name="data", raise_exception=True)
        try:
            ENTRY_SCHEMA.validate(data)
            return True
        except SchemaError:
            if raise_exception:
                raise
            return False

    @property
    def data(self):
        """
        Entry file content
        :rtype: dict
        """
        return self.__data

    @property
    def gap_id(self):
        """
        :rtype: tuple
        """
        return tuple(self.__data["gap_id"])

    @property
    def name(self):
        """
        :rtype: str
        """
        return self.__data["name"]

    @property
    def beta(self):
        """
        Noether number claimed for the group
        :rtype: int
        """
        return self.__data["beta"]

    @property
    def beta_sep(self):
        """
        Separating Noether number claimed for the group
        :rtype: int
        """
        return self.__data["beta_sep"]

    @property
    def conductor(self):
        """
        Order of the root of unity the entry scalars are written with
        :rtype: int
        """
        return self.__data["conductor"]

    @property
    def field(self):
        """
        Base field handle
        """
        return self.__field

    @property
    def group(self):
        """
        :rtype: FiniteGroup
        """
        return self.__group

    @group.setter
    def group(self, value):
        self.__group = value

    @property
    def summands(self):
        """
        Summands by label, matrix representations and characters
        :rtype: dict
        """
        return self.__summands

    @property
    def characters(self):
        """
        Characters by key
        :rtype: dict
        """
        return self.__characters

    @property
    def automorphisms(self):
        """
        Automorphisms by label
        :rtype: dict
        """
        return self.__automorphisms

    @property
    def invariants(self):
        """
        Named invariants by name
        :rtype: dict
        """
        return self.__invariants

    def _parse(self, text, extra=None):
        local_dict = dict(self.__context)
        local_dict.update(extra or {})
        try:
            expr = parse_expr(str(text), local_dict=local_dict, transformations=TRANSFORMATIONS)
        except (SyntaxError, TypeError, ValueError) as exc:
            raise ValidationFailure("Can't parse '%s': %s" % (text, exc))
        return sp.expand(expr)

    def _terms(self, text, var_names, extra=None):
        # (exponents, value) pairs of an expression in the given variables
        expr = self._parse(text, extra)
        symbols = [sp.Symbol(name) for name in var_names]
        unknown = expr.free_symbols - set(symbols) - {ZETA}
        if unknown:
            raise ValidationFailure("Unknown names %s in '%s'" % (sorted(str(s) for s in unknown), text))
        n = self.conductor
        result = []
        for term, coeff in expr.as_coefficients_dict().items():
            if not coeff.is_Rational:
                raise ValidationFailure("Non rational coefficient %s in '%s'" % (coeff, text))
            powers = term.as_powers_dict() if term != 1 else {}
            exps = [0] * len(symbols)
            zeta_exp = 0
            for base, e in powers.items():
                if not e.is_Integer:
                    raise ValidationFailure("Non integral exponent %s in '%s'" % (e, text))
                if base == ZETA:
                    zeta_exp = int(e)
                elif base in symbols and e >= 0:
                    exps[symbols.index(base)] = int(e)
                else:
                    raise ValidationFailure("Unexpected factor %s^%s in '%s'" % (base, e, text))
            value = self.__field.zeta_power(n, zeta_exp % n, Fraction(int(coeff.p), int(coeff.q)))
            result.append((tuple(exps), value))
        return result

    def names_in(self, text):
        """
        Variable names an expression depends on, helper expressions expanded

        :type text: str
        :rtype: set
        """
        return {str(s) for s in self._parse(text).free_symbols if s in self.__var_symbols}

    def scalar(self, text, extra=None):
        """
        Field element of an expression without variables, e.g. "-1-w^2" or "1/2"

        :param text: the expression
        :param extra: additional names, mapped to sympy numbers

        :type text: str or int
        :type extra: dict or None

        :rtype: Scalar

        :raises ValidationFailure: if the expression is not a constant of the entry
        """
        total = self.__field.zero
        for _, value in self._terms(text, [], extra):
            total = total + value
        return total

    def polynomial(self, text, labels):
        """
        Polynomial of an expression in the variables of a module

        :param text: expression, may use helper expressions
        :param labels: summand labels of the module

        :type text: str
        :type labels: list of str

        :rtype: SparsePolynomial

        :raises ValidationFailure: if the expression uses other variables
        """
        module = self.module(labels)
        terms = {}
        for exps, value in self._terms(text, module.var_names):
            mono = Monomial(exps)
            terms[mono] = terms[mono] + value if mono in terms else value
        return SparsePolynomial(module.dim, terms)

    def point(self, raw, labels):
        """
        Point of a module from its file form: nested lists of expressions (flattened in
        summand order) or {"roots_of": univariate polynomial in x}, the roots in GF(q)
        listed in encoding order

        :type raw: list or dict
        :type labels: list of str
        :rtype: list

        :raises DimensionMismatch: if the point size does not match the module
        """
        module = self.module(labels)
        if isinstance(raw, dict):
            if not isinstance(self.__field, GaloisField):
                raise FieldMismatch("Roots of polynomials are only listed over finite fields")
            coeffs = [Fraction(int(c.p), int(c.q)) for c in
                      sp.Poly(parse_expr(raw["roots_of"], transformations=TRANSFORMATIONS), sp.Symbol("x")).all_coeffs()]
            values = []
            for x in self.__field.elements():
                acc = self.__field.zero
                for c in coeffs:
                    acc = acc * x + c
                if acc.is_zero():
                    values.append(x)
        else:
            values = []
            stack = [raw]
            while stack:
                item = stack.pop(0)
                if isinstance(item, list):
                    stack = list(item) + stack
                else:
                    values.append(self.scalar(item))
        if len(values) != module.dim:
            raise DimensionMismatch("Point %s has %s coordinates, %s expected" % (raw, len(values), module.dim))
        return values

    def summand_label(self, label):
        """
        Summand label, character keys being accepted as well

        :raises UnknownEntry: if no summand has this label
        """
        if label in self.__summands:
            return label
        if character_label(label) in self.__summands:
            return character_label(label)
        raise UnknownEntry("No summand %s in %s" % (label, self.name))

    def module(self, labels):
        """
        Direct sum of summands, cached by labels

        :param labels: summand labels (or character keys) in order
        :type labels: list of str

        :rtype: GModule

        :raises UnknownEntry: if a label is unknown
        :raises ValidationFailure: if two summands share a variable name
        """
        check_type(value=labels, allowed_types=[list, tuple], var_name="labels", raise_exception=True)
        labels = tuple(self.summand_label(label) for label in labels)
        module = self.__modules.get(labels)
        if module is None:
            summands = [self.__summands[label] for label in labels]
            names = [name for s in summands for name in s.var_names]
            if len(set(names)) != len(names):
                raise ValidationFailure("Summands %s share variable names" % list(labels))
            module = GModule(self.__group, summands, self.__field, validate=False)
            self.__modules[labels] = module
        return module

    def clear_caches(self):
        """
        Release the caches of the modules built so far, the modules themselves are kept

        :returns: number of modules cleared
        :rtype: int
        """
        for module in self.__modules.values():
            module.clear_caches()
        return len(self.__modules)

    def character(self, key):
        """
        :raises UnknownEntry: if the entry has no such character
        """
        if key not in self.__characters:
            raise UnknownEntry("No character %s in %s" % (key, self.name))
        return self.__characters[key]

    def invariant(self, name):
        """
        :rtype: NamedInvariant
        :raises UnknownEntry: if the entry has no such invariant
        """
        if name not in self.__invariants:
            raise UnknownEntry("No invariant %s in %s" % (name, self.name))
        return self.__invariants[name]

    def to_json(self):
        """
        Listing row
        :rtype: dict
        """
        return {"gap_id": list(self.gap_id), "name": self.name, "beta": self.beta,
                "beta_sep": self.beta_sep, "reference": self.__data["reference"]}

    def __repr__(self):
        return "CatalogEntry %s %s" % (self.gap_id, self.name)


class CheckReport:
    """
    Outcome of a theorem script: one result per scripted check
    """

    def __init__(self, theorem, gap_id, title=""):
        """
        :type theorem: str
        :type gap_id: tuple
        :type title: str
        """
        self.__theorem = theorem
        self.__gap_id = tuple(gap_id)
        self.__title = title
        self.__results = []

    @property
    def theorem(self):
        """
        :rtype: str
        """
        return self.__theorem

    @property
    def results(self):
        """
        :rtype: list of dict
        """
        return self.__results

    @property
    def passed(self):
        """
        True when no check failed (skipped checks do not fail)
        :rtype: bool
        """
        return all(r["passed"] or r["skipped"] for r in self.__results)

    def add(self, op, passed, expected, observed, provenance, note="", skipped=False):
        """
        Record one check
        """
        self.__results.append({"op": op, "passed": bool(passed), "expected": expected, "observed": observed,
                               "provenance": provenance, "note": note, "skipped": bool(skipped)})

    def to_json(self):
        """
        :rtype: dict
        """
        return {"theorem": self.__theorem, "gap_id": list(self.__gap_id), "title": self.__title,
                "passed": self.passed, "checks": list(self.__results)}

    def to_text(self):
        """
        :rtype: str
        """
        lines = ["%s %s %s: %s" % ("PASS" if self.passed else "FAIL", self.__theorem, self.__gap_id, self.__title)]
        for r in self.__results:
            status = "skip" if r["skipped"] else ("ok" if r["passed"] else "FAILED")
            line = "  [%s] %s (%s) expected %s, observed %s" % (status, r["op"], r["provenance"], r["expected"],
                                                                r["observed"])
            if r["note"]:
                line += " -- %s" % r["note"]
            lines.append(line)
        return "\n".join(lines)

    def __repr__(self):
        return "CheckReport %s (%s checks, %s)" % (self.__theorem, len(self.__results),
                                                   "passed" if self.passed else "failed")


def theorem_is_json_valid(data, raise_exception=True):
    """
    Check if the provided JSON (as a dict) is a well-formed theorem script

    :type data: dict
    :type raise_exception: bool
    :rtype: bool

    :raises SchemaError: if JSON is invalid
    """
    check_type(value=data, allowed_types=dict, var_name="data", raise_exception=True)
    try:
        THEOREM_SCHEMA.validate(data)
        return True
    except SchemaError:
        if raise_exception:
            raise
        return False
