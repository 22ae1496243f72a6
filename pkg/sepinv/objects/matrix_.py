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
from sepinv.lib import check_type
from sepinv.objects.scalar_ import Scalar


class EchelonSpace:
    """
    Incrementally row-reduced span of sparse vectors

    Vectors are dicts column -> Scalar. Every stored row has a distinct pivot, its
    leading column for the provided key, normalized to 1.
    The default key makes the smallest column the leading one.
    """

    def __init__(self, key=None):
        """
        :param key: sort key on columns, the largest column is the pivot candidate
        :type key: callable or None
        """
        self.__key = key if key is not None else (lambda col: -col)
        self.__pivots = {}

    @property
    def rank(self):
        """
        Dimension of the span
        :rtype: int
        """
        return len(self.__pivots)

    def reduce(self, row):
        """
        Reduce a vector against the stored rows until its leading column is not a pivot

        :param row: the vector
        :type row: dict

        :returns: the reduced vector, empty if the vector lies in the span
        :rtype: dict
        """
        row = dict(row)
        while row:
            lead = max(row, key=self.__key)
            pivot_row = self.__pivots.get(lead)
            if pivot_row is None:
                return row
            factor = row[lead]
            for col, val in pivot_row.items():
                if col in row:
                    new = row[col] - factor * val
                    if new.is_zero():
                        del row[col]
                    else:
                        row[col] = new
                else:
                    row[col] = -(factor * val)
        return row

    def insert(self, row):
        """
        Add a vector to the span

        :param row: the vector
        :type row: dict

        :returns: True if the rank increased
        :rtype: bool
        """
        reduced = self.reduce(row)
        if not reduced:
            return False
        lead = max(reduced, key=self.__key)
        scale = reduced[lead].inv()
        self.__pivots[lead] = {col: val * scale for col, val in reduced.items()}
        return True

    def contains(self, row):
        """
        :rtype: bool
        """
        return not self.reduce(row)


class ScalarMatrix:
    """
    Square or rectangular matrix of Scalars stored as sparse rows

    Rows are tuples of (column, Scalar) sorted by column, zeros omitted, which makes
    equality structural and matrices hashable.
    """

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows, ncols):
        """
        :param rows: sparse rows as iterables of (column, Scalar)
        :param ncols: number of columns

        :type rows: list
        :type ncols: int
        """
        self._rows = tuple(tuple(sorted((c, v) for c, v in row if not v.is_zero())) for row in rows)
        self._ncols = ncols

    @classmethod
    def from_dense(cls, entries):
        """
        :param entries: list of rows, each a list of Scalars
        :type entries: list

        :rtype: ScalarMatrix
        """
        check_type(value=entries, allowed_types=[list, tuple], var_name="entries", raise_exception=True)
        if not entries:
            raise DimensionMismatch("Matrix shall have at least one row")
        ncols = len(entries[0])
        for row in entries:
            if len(row) != ncols:
                raise DimensionMismatch("Ragged matrix rows")
            for value in row:
                check_type(value=value, allowed_types=Scalar, var_name="matrix entry", raise_exception=True)
        return cls([enumerate(row) for row in entries], ncols)

    @classmethod
    def identity(cls, dim, one):
        """
        :param dim: size
        :param one: unit of the field
        :rtype: ScalarMatrix
        """
        return cls([[(i, one)] for i in range(dim)], dim)

    @classmethod
    def block_diagonal(cls, blocks):
        """
        :param blocks: square matrices
        :type blocks: list

        :rtype: ScalarMatrix
        """
        rows = []
        offset = 0
        for block in blocks:
            for row in block.rows:
                rows.append([(c + offset, v) for c, v in row])
            offset += block.ncols
        return cls(rows, offset)

    @property
    def rows(self):
        """
        Sparse rows
        :rtype: tuple
        """
        return self._rows

    @property
    def nrows(self):
        """
        :rtype: int
        """
        return len(self._rows)

    @property
    def ncols(self):
        """
        :rtype: int
        """
        return self._ncols

    def is_square(self):
        """
        :rtype: bool
        """
        return self.nrows == self._ncols

    def entry(self, i, j, zero):
        """
        Entry (i, j), zero when not stored
        """
        for col, val in self._rows[i]:
            if col == j:
                return val
        return zero

    def to_dense(self, zero):
        """
        :rtype: list
        """
        dense = [[zero] * self._ncols for _ in self._rows]
        for i, row in enumerate(self._rows):
            for col, val in row:
                dense[i][col] = val
        return dense

    def is_monomial(self):
        """
        True if every row and every column has exactly one nonzero entry
        :rtype: bool
        """
        cols = [row[0][0] for row in self._rows if len(row) == 1]
        return len(cols) == self.nrows == self._ncols and len(set(cols)) == self._ncols

    def is_identity(self):
        """
        :rtype: bool
        """
        return all(len(row) == 1 and row[0][0] == i and row[0][1].is_one() for i, row in enumerate(self._rows))

    def trace(self, zero):
        """
        :rtype: Scalar
        """
        total = zero
        for i, row in enumerate(self._rows):
            for col, val in row:
                if col == i:
                    total = total + val
        return total

    def apply(self, vector):
        """
        Matrix times column vector

        :param vector: list of Scalars of length ncols
        :type vector: list

        :rtype: list

        :raises DimensionMismatch: if the sizes differ
        """
        if len(vector) != self._ncols:
            raise DimensionMismatch("Vector of size %s can't be multiplied by a %sx%s matrix" % (
                len(vector), self.nrows, self._ncols))
        zero = vector[0] * 0 if vector else None
        result = []
        for row in self._rows:
            total = zero
            for col, val in row:
                total = total + val * vector[col]
            result.append(total)
        return result

    def __mul__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        if self._ncols != other.nrows:
            raise DimensionMismatch("Can't multiply %sx%s by %sx%s" % (
                self.nrows, self._ncols, other.nrows, other.ncols))
        rows = []
        for row in self._rows:
            acc = {}
            for k, a in row:
                for col, b in other.rows[k]:
                    prod = a * b
                    acc[col] = acc[col] + prod if col in acc else prod
            rows.append(acc.items())
        return ScalarMatrix(rows, other.ncols)

    def rank(self):
        """
        Rank by incremental row reduction
        :rtype: int
        """
        space = EchelonSpace()
        for row in self._rows:
            space.insert(dict(row))
        return space.rank

    def __eq__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return self._ncols == other.ncols and self._rows == other.rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return "ScalarMatrix(%s)" % [[(c, str(v)) for c, v in row] for row in self._rows]
