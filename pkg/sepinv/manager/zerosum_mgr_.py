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
import numpy as np

from sepinv.exceptions import LengthGuard, SizeGuardExceeded, ValidationFailure
from sepinv.lib import check_type
from sepinv.manager.generic_mgr_ import SepInvGenericEndPoint
from sepinv.objects.zerosum_ import AbelianGroupTable, CharSequence

# Longest sequence accepted by the exhaustive subset checks
MAX_SEQUENCE_LENGTH = 24

# Largest group accepted by the Davenport search
MAX_DAVENPORT_ORDER = 64


class SepInvZeroSumMgr(SepInvGenericEndPoint):
    """
    sepinv EndPoint specific to product-one sequences over finite abelian groups

    Subsequence products are tracked as a boolean array over the group elements: adding
    an element s to a sequence maps the reachable set R to R | {s} | R*s.
    """

    @staticmethod
    def _indices(table, seq):
        check_type(value=table, allowed_types=AbelianGroupTable, var_name="table", raise_exception=True)
        if isinstance(seq, CharSequence):
            return list(seq.indices)
        return list(CharSequence(table, list(seq)).indices)

    @staticmethod
    def _reachable(table, indices, skip=None):
        # Products of nonempty subsequences, optionally without position skip
        reach = np.zeros(table.order, dtype=bool)
        for pos, s in enumerate(indices):
            if pos == skip:
                continue
            shifted = np.zeros(table.order, dtype=bool)
            shifted[table.table[reach, s]] = True
            reach |= shifted
            reach[s] = True
        return reach

    def is_product_one_free(self, table, seq):
        """
        True iff no nonempty subsequence multiplies to the identity

        :param table: the group
        :param seq: element indices or a CharSequence

        :type table: AbelianGroupTable
        :type seq: list or CharSequence

        :rtype: bool

        :raises LengthGuard: if the sequence is longer than MAX_SEQUENCE_LENGTH
        """
        indices = self._indices(table, seq)
        if len(indices) > MAX_SEQUENCE_LENGTH:
            raise LengthGuard("Sequence of length %s exceeds %s" % (len(indices), MAX_SEQUENCE_LENGTH))
        return not self._reachable(table, indices)[table.identity]

    def is_irreducible_product_one(self, table, seq):
        """
        True iff the product is the identity and no proper nonempty subsequence is product-one

        A proper product-one subsequence misses some position, so it is enough to check
        that removing any single element leaves a product-one free sequence.

        :param table: the group
        :param seq: element indices or a CharSequence

        :type table: AbelianGroupTable
        :type seq: list or CharSequence

        :rtype: bool

        :raises LengthGuard: if the sequence is longer than MAX_SEQUENCE_LENGTH
        """
        indices = self._indices(table, seq)
        if len(indices) > MAX_SEQUENCE_LENGTH:
            raise LengthGuard("Sequence of length %s exceeds %s" % (len(indices), MAX_SEQUENCE_LENGTH))
        if not indices or table.product(indices) != table.identity:
            return False
        seen = set()
        for pos, s in enumerate(indices):
            if s in seen:
                continue
            seen.add(s)
            if self._reachable(table, indices, skip=pos)[table.identity]:
                return False
        return True

    def longest_product_one_free(self, table):
        """
        A longest product-one free sequence, by depth-first search over multisets

        Each element appended to a product-one free sequence adds at least one new
        reachable product, so a branch holding r reachable products can grow by at most
        order - 1 - r elements.

        :type table: AbelianGroupTable
        :rtype: list

        :raises SizeGuardExceeded: if the group is larger than MAX_DAVENPORT_ORDER
        """
        check_type(value=table, allowed_types=AbelianGroupTable, var_name="table", raise_exception=True)
        if table.order > MAX_DAVENPORT_ORDER:
            raise SizeGuardExceeded("Davenport search limited to groups of order %s, got %s" % (
                MAX_DAVENPORT_ORDER, table.order))
        candidates = [g for g in range(table.order) if g != table.identity]
        best = []
        stack = [([], np.zeros(table.order, dtype=bool), 0)]
        while stack:
            seq, reach, start = stack.pop()
            if len(seq) > len(best):
                best = list(seq)
            if len(seq) + (table.order - 1 - int(reach.sum())) <= len(best):
                continue
            for pos in range(start, len(candidates)):
                s = candidates[pos]
                shifted = np.zeros(table.order, dtype=bool)
                shifted[table.table[reach, s]] = True
                new_reach = reach | shifted
                new_reach[s] = True
                if new_reach[table.identity]:
                    continue
                stack.append((seq + [s], new_reach, pos))
        return best

    def davenport(self, table):
        """
        Davenport constant: longest product-one free length plus one

        The maximal sequence found is completed by the inverse of its product and checked
        to be an irreducible product-one sequence.

        :param table: the group, or a spec such as "C3xC3"

        :type table: AbelianGroupTable or str

        :rtype: int

        :raises SizeGuardExceeded: if the group is larger than MAX_DAVENPORT_ORDER
        """
        if isinstance(table, str):
            table = AbelianGroupTable.from_spec(table)
        free = self.longest_product_one_free(table)
        witness = free + [table.inv(table.product(free))]
        if len(witness) <= MAX_SEQUENCE_LENGTH and not self.is_irreducible_product_one(table, witness):
            raise ValidationFailure("Completed sequence %s is not irreducible" % witness)
        self.log.debug("D(%r) = %s, witness %s", table, len(witness), [table.labels[i] for i in witness])
        return len(free) + 1
