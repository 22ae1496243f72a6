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
from itertools import product

from sepinv.exceptions import (FieldMismatch, InvarianceFailure, ModularCharacteristic,
                               SepInvException, ValidationFailure)
from sepinv.lib import check_is_positive_int, check_type
from sepinv.manager.generic_mgr_ import SepInvGenericEndPoint
from sepinv.objects.basis_ import GeneratorProfile, WeightSpaceBasis
from sepinv.objects.group_ import Character
from sepinv.objects.matrix_ import EchelonSpace
from sepinv.objects.module_ import GModule
from sepinv.objects.polynomial_ import SparsePolynomial, compositions, grevlex_key
from sepinv.objects.zerosum_ import AbelianGroupTable


def _below(beta, alpha):
    return all(b <= a for b, a in zip(beta, alpha))


def _minus(alpha, beta):
    return tuple(a - b for a, b in zip(alpha, beta))


class SepInvInvariantMgr(SepInvGenericEndPoint):
    """
    sepinv EndPoint specific to invariant and relative invariant spaces

    Spaces are computed per multidegree cell: the action preserves the multigrading, so
    every weight space of a degree is the direct sum of its cells. Cell bases are kept in
    the module memo and shared by all the operations.
    """

    @staticmethod
    def check_characteristic(module):
        """
        :raises ModularCharacteristic: if the field characteristic divides the group order
        """
        p = module.field.characteristic
        if p and module.group.order % p == 0:
            raise ModularCharacteristic("Characteristic %s divides |G| = %s" % (p, module.group.order))

    @staticmethod
    def weight(module, chi=None):
        """
        chi, or the trivial character when chi is None

        :type module: GModule
        :type chi: Character or None
        :rtype: Character
        """
        if chi is None:
            trivial = module.memo.get("trivial")
            if trivial is None:
                trivial = Character.trivial(module.group, module.field.one)
                module.memo["trivial"] = trivial
            return trivial
        check_type(value=chi, allowed_types=Character, var_name="chi", raise_exception=True)
        if chi.group is not module.group:
            raise ValueError("Character %s belongs to another group" % chi.label)
        return chi

    def project_weight(self, module, f, chi=None):
        """
        P_chi(f) = (1/|G|) sum_g chi(g) g.f

        :param module: the module
        :param f: polynomial on the module variables
        :param chi: the weight, trivial when None

        :type module: GModule
        :type f: SparsePolynomial
        :type chi: Character or None

        :rtype: SparsePolynomial

        :raises ModularCharacteristic: if char(K) divides |G|
        """
        check_type(value=module, allowed_types=GModule, var_name="module", raise_exception=True)
        check_type(value=f, allowed_types=SparsePolynomial, var_name="f", raise_exception=True)
        self.check_characteristic(module)
        chi = self.weight(module, chi)
        order = module.group.order
        source = f.terms
        terms = {}
        for g in range(order):
            c = chi(g)
            for mono, coeff in source.items():
                scaled = coeff * c
                for image, val in module.act_monomial(g, mono).items():
                    prod = scaled * val
                    terms[image] = terms[image] + prod if image in terms else prod
        scale = module.field.from_int(order).inv()
        return SparsePolynomial(module.dim, {m: c * scale for m, c in terms.items()})

    def cell_basis(self, module, chi, multidegree):
        """
        Basis of the weight-chi relative invariants of one multidegree

        Monomial modules project one monomial per orbit, the largest one, which is then
        the leading monomial of the projection. Other modules project every monomial and
        keep the projections raising the rank.

        :type module: GModule
        :type chi: Character
        :type multidegree: tuple

        :rtype: list of SparsePolynomial
        """
        multidegree = tuple(multidegree)
        key = ("cell", chi.values, multidegree)
        cached = module.memo.get(key)
        if cached is not None:
            return cached
        monos = self.api.module.monomials_of_multidegree(module, multidegree)
        one = module.field.one
        basis = []
        if module.is_monomial():
            covered = set()
            for mono in monos:
                if mono in covered:
                    continue
                for g in range(module.group.order):
                    covered.update(module.act_monomial(g, mono))
                proj = self.project_weight(module, SparsePolynomial.monomial(mono, one), chi)
                if not proj.is_zero():
                    basis.append(proj.monic())
        else:
            space = EchelonSpace(key=grevlex_key)
            for mono in monos:
                proj = self.project_weight(module, SparsePolynomial.monomial(mono, one), chi)
                if not proj.is_zero() and space.insert(proj.terms):
                    basis.append(proj.monic())
        self.log.debug("%r weight %s cell %s: dim %s out of %s monomials",
                       module, chi.label, multidegree, len(basis), len(monos))
        module.memo[key] = basis
        return basis

    def weight_space_basis(self, module, degree=None, chi=None, multidegree=None):
        """
        Basis of the weight-chi relative invariants of a degree or of a multidegree

        :param module: the module
        :param degree: total degree
        :param chi: the weight, trivial when None
        :param multidegree: one degree per summand, instead of degree

        :type module: GModule
        :type degree: int or None
        :type chi: Character or None
        :type multidegree: tuple or None

        :rtype: WeightSpaceBasis

        :raises SizeGuardExceeded: if a cell has more monomials than the guard allows
        """
        check_type(value=module, allowed_types=GModule, var_name="module", raise_exception=True)
        chi = self.weight(module, chi)
        if multidegree is not None:
            multidegree = tuple(multidegree)
            return WeightSpaceBasis(module, chi, sum(multidegree), self.cell_basis(module, chi, multidegree),
                                    multidegree=multidegree)
        check_is_positive_int(value=degree, var_name="degree", allow_zero=True)
        basis = []
        for cell in module.multidegrees_of_degree(degree):
            basis.extend(self.cell_basis(module, chi, cell))
        return WeightSpaceBasis(module, chi, degree, basis)

    @staticmethod
    def _complete_symmetric(power_traces, degree, one):
        # Newton: m h_m = sum_{k=1}^{m} p_k h_{m-k}
        h = [one]
        for m in range(1, degree + 1):
            acc = one * 0
            for k in range(1, m + 1):
                acc = acc + power_traces[k] * h[m - k]
            h.append(acc * Fraction(1, m))
        return h[degree]

    def dimension_oracle(self, module, degree=None, chi=None, multidegree=None):
        """
        Dimension of a weight-chi space from traces only

        dim = (1/|G|) sum_g chi(g) h_d(psi(g^-1)) where h_d is the complete symmetric
        function of the eigenvalues, obtained from the power traces tr(psi(g^-k)).
        For a multidegree the product over summands is used.

        :type module: GModule
        :type degree: int or None
        :type chi: Character or None
        :type multidegree: tuple or None

        :rtype: int

        :raises FieldMismatch: over a finite field
        """
        check_type(value=module, allowed_types=GModule, var_name="module", raise_exception=True)
        self.check_characteristic(module)
        if module.field.characteristic:
            raise FieldMismatch("The dimension oracle needs characteristic 0, got %r" % module.field)
        chi = self.weight(module, chi)
        group = module.group
        zero = module.field.zero
        one = module.field.one
        if multidegree is None:
            check_is_positive_int(value=degree, var_name="degree", allow_zero=True)
            parts = [(module.summands, degree)]
        else:
            parts = [((s,), d) for s, d in zip(module.summands, multidegree)]
        top = max(d for _, d in parts)
        total = zero
        for g in range(group.order):
            # g^-k for k = 0..top
            powers = [0]
            ginv = group.inv(g)
            for _ in range(top):
                powers.append(group.mul(powers[-1], ginv))
            value = one
            for summands, d in parts:
                traces = [None] + [sum((s.matrices[powers[k]].trace(zero) for s in summands), zero)
                                   for k in range(1, d + 1)]
                value = value * self._complete_symmetric(traces, d, one)
            total = total + chi(g) * value
        result = total * Fraction(1, group.order)
        if not result.is_rational() or result.to_fraction().denominator != 1:
            raise ValidationFailure("Non integral dimension %s for %r" % (result, module))
        return int(result.to_fraction())

    def _profile_state(self, module, full_products):
        return module.memo.setdefault(("generators", full_products), {"degree": 0, "cells": {}})

    def _product_rows(self, module, alpha, state, full_products):
        trivial = self.weight(module)
        if full_products:
            for beta in product(*[range(a + 1) for a in alpha]):
                gamma = _minus(alpha, beta)
                if not any(beta) or not any(gamma) or beta > gamma:
                    continue
                left = self.cell_basis(module, trivial, beta)
                right = self.cell_basis(module, trivial, gamma)
                for i, f in enumerate(left):
                    for j, h in enumerate(right):
                        if beta == gamma and j < i:
                            continue
                        yield f * h
        else:
            # generators times invariants span (K[V]^G_+)^2 as well
            for beta, reps in state["cells"].items():
                if beta == alpha or not _below(beta, alpha):
                    continue
                for h in self.cell_basis(module, trivial, _minus(alpha, beta)):
                    for r in reps:
                        yield r * h

    def generator_profile(self, module, degree_cap, full_products=False):
        """
        Indecomposable invariants per degree up to a cap

        For each cell, products of lower degree invariants are row reduced, then the
        canonical basis of the cell is inserted greedily: the elements raising the rank are
        the representatives of the indecomposables.

        :param module: the module
        :param degree_cap: largest degree examined
        :param full_products: build products from all pairs of lower basis elements instead
                              of generators times basis elements (same span, slower)

        :type module: GModule
        :type degree_cap: int
        :type full_products: bool

        :rtype: GeneratorProfile

        :raises SizeGuardExceeded: if a cell has more monomials than the guard allows
        """
        check_type(value=module, allowed_types=GModule, var_name="module", raise_exception=True)
        check_is_positive_int(value=degree_cap, var_name="degree_cap")
        trivial = self.weight(module)
        state = self._profile_state(module, full_products)
        for d in range(state["degree"] + 1, degree_cap + 1):
            for alpha in module.multidegrees_of_degree(d):
                basis = self.cell_basis(module, trivial, alpha)
                if not basis:
                    continue
                space = EchelonSpace(key=grevlex_key)
                for row in self._product_rows(module, alpha, state, full_products):
                    space.insert(row.terms)
                    if space.rank == len(basis):
                        break
                reps = [f for f in basis if space.insert(f.terms)]
                if reps:
                    state["cells"][alpha] = reps
            state["degree"] = d
            self.log.debug("%r: generators up to degree %s done", module, d)

        counts = {}
        representatives = {}
        for alpha in sorted(state["cells"], key=lambda a: (sum(a), tuple(-x for x in a))):
            d = sum(alpha)
            if d > degree_cap:
                continue
            counts[d] = counts.get(d, 0) + len(state["cells"][alpha])
            representatives.setdefault(d, []).extend(state["cells"][alpha])
        profile = GeneratorProfile(module, degree_cap, counts, representatives)
        self.log.info("%r generator degrees up to %s: %s", module, degree_cap, profile.counts)
        return profile

    def hilbert_complement(self, module, chi, degree):
        """
        Complement of (K[W]^G_+ K[W]^{G,chi})_d in K[W]^{G,chi}_d

        :param module: the module W
        :param chi: the weight
        :param degree: the degree d

        :type module: GModule
        :type chi: Character or None
        :type degree: int

        :rtype: WeightSpaceBasis

        :raises SizeGuardExceeded: if a cell has more monomials than the guard allows
        """
        check_type(value=module, allowed_types=GModule, var_name="module", raise_exception=True)
        check_is_positive_int(value=degree, var_name="degree", allow_zero=True)
        chi = self.weight(module, chi)
        key = ("complement", chi.values, degree)
        cached = module.memo.get(key)
        if cached is not None:
            return cached
        space = self.ideal_part(module, chi, degree)
        complement = []
        for alpha in module.multidegrees_of_degree(degree):
            complement.extend(f for f in self.cell_basis(module, chi, alpha) if space.insert(f.terms))
        result = WeightSpaceBasis(module, chi, degree, complement)
        module.memo[key] = result
        return result

    def ideal_part(self, module, chi, degree):
        """
        Span of the products r h, r an invariant generator and h of weight chi, in degree d

        Cells have disjoint monomial supports, so one space holds the whole degree.

        :param module: the module W
        :param chi: the weight
        :param degree: the degree d

        :type module: GModule
        :type chi: Character or None
        :type degree: int

        :returns: a fresh space, the caller may insert more rows
        :rtype: EchelonSpace
        """
        chi = self.weight(module, chi)
        if degree:
            self.generator_profile(module, degree)
        cells = self._profile_state(module, False)["cells"]
        space = EchelonSpace(key=grevlex_key)
        for alpha in module.multidegrees_of_degree(degree):
            if not self.cell_basis(module, chi, alpha):
                continue
            for beta, reps in cells.items():
                if not _below(beta, alpha):
                    continue
                for h in self.cell_basis(module, chi, _minus(alpha, beta)):
                    for r in reps:
                        space.insert((r * h).terms)
        return space

    def check_invariance(self, module, f, chi=None, raise_exception=True):
        """
        Check g.f = chi(g^-1) f on every generator

        :param module: the module
        :param f: polynomial
        :param chi: the weight, trivial when None
        :param raise_exception: raise on failure (True) or return False

        :type module: GModule
        :type f: SparsePolynomial
        :type chi: Character or None
        :type raise_exception: bool

        :returns: the check status
        :rtype: bool

        :raises InvarianceFailure: naming the first generator breaking the weight
        """
        chi = self.weight(module, chi)
        group = module.group
        try:
            for s, g in enumerate(group.generators):
                if module.act(g, f) != f.scale(chi(group.inv(g))):
                    raise InvarianceFailure("%s is not of weight %s under %s" % (
                        f.to_str(module.var_names), chi.label, group.generator_names[s]))
        except InvarianceFailure:
            if raise_exception:
                raise
            return False
        return True

    def assemble_VU_generators(self, module, degree_cap):
        """
        Homogeneous generating system of K[W+U]^G up to a degree cap

        The system is the union of
          - A: generators of K[W]^G,
          - B: t-monomials of irreducible product-one sequences,
          - C: complement elements of weight psi^-1 times the t-monomials of product-one
            free sequences of product psi.
        The truncation flag is set when the cap may hide elements: the Davenport constant
        of the character group exceeds the cap, or a generator or complement element was
        found at the last degree examined.

        :param module: module with matrix summands W followed or mixed with characters U
        :param degree_cap: largest degree kept

        :type module: GModule
        :type degree_cap: int

        :returns: (generators, truncated)
        :rtype: tuple

        :raises SizeGuardExceeded: if a cell has more monomials than the guard allows
        """
        check_type(value=module, allowed_types=GModule, var_name="module", raise_exception=True)
        check_is_positive_int(value=degree_cap, var_name="degree_cap")
        mod_mgr = self.api.module
        zs_mgr = self.api.zerosum
        w_idx = [i for i, s in enumerate(module.summands) if not s.is_character()]
        u_idx = [i for i, s in enumerate(module.summands) if s.is_character()]
        one = module.field.one
        truncated = False

        part_a = []
        sub = None
        if w_idx:
            sub = mod_mgr.restrict(module, w_idx)
            profile = self.generator_profile(sub, degree_cap)
            part_a = [mod_mgr.embed_polynomial(f, module, w_idx) for f in profile.generators()]
            truncated = truncated or profile.max_degree() == degree_cap
        if not u_idx:
            return part_a, truncated

        characters = [module.summands[i].character for i in u_idx]
        table, elements = AbelianGroupTable.from_characters(characters)
        char_index = [next(k for k, e in enumerate(elements) if e.values == chi.values) for chi in characters]
        offsets = module.offsets()
        t_positions = [offsets[i] for i in u_idx]
        if zs_mgr.davenport(table) > degree_cap:
            truncated = True

        part_b = []
        part_c = []
        for total in range(1, degree_cap + 1):
            for exps in compositions(total, len(u_idx)):
                seq = [char_index[i] for i, e in enumerate(exps) for _ in range(e)]
                t_exps = [0] * module.dim
                for pos, e in zip(t_positions, exps):
                    t_exps[pos] = e
                t_mono = SparsePolynomial.monomial(t_exps, one)
                prod = table.product(seq)
                if prod == table.identity:
                    if zs_mgr.is_irreducible_product_one(table, seq):
                        part_b.append(t_mono)
                    continue
                if sub is None or not zs_mgr.is_product_one_free(table, seq):
                    continue
                weight = elements[table.inv(prod)]
                for e in range(0, degree_cap - total + 1):
                    comp = self.hilbert_complement(sub, weight, e)
                    if comp.dim and e == degree_cap - total:
                        truncated = True
                    part_c.extend(mod_mgr.embed_polynomial(h, module, w_idx) * t_mono for h in comp)

        generators = part_a + part_b + part_c
        for f in generators:
            self.check_invariance(module, f)
        generators.sort(key=lambda f: f.degree)
        self.log.info("%r: %s + %s + %s generators up to degree %s%s", module, len(part_a), len(part_b),
                      len(part_c), degree_cap, " (truncated)" if truncated else "")
        return generators, truncated

    def compare_with_oracle(self, module, degree, chi=None):
        """
        Compare the oracle to the constructed basis

        :returns: (oracle dim, basis dim)
        :rtype: tuple
        """
        try:
            oracle = self.dimension_oracle(module, degree, chi)
        except SepInvException as exc:
            self.log.warning("No oracle for %r: %s", module, exc)
            oracle = None
        return oracle, self.weight_space_basis(module, degree, chi).dim
