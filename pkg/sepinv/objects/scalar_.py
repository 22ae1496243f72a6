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

Exact scalars: cyclotomic rationals Q(zeta_n) and small finite fields GF(q).

Both kinds share the Scalar interface so that polynomials, matrices and groups
are written once for every base field.
"""
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np
import sympy as sp

from sepinv.exceptions import (BadConductor, DivisionByZero, FieldMismatch,
                               NoSuchRoot)
from sepinv.lib import FieldKind, check_is_positive_int, check_type, parse_field_spec

# Largest finite field handled with log/antilog tables
MAX_FIELD_ORDER = 2 ** 16

# Finite fields up to this order get a full addition table
ADD_TABLE_MAX_ORDER = 256


def _lcm(a, b):
    return a * b // gcd(a, b)


def _mobius(m):
    factors = sp.factorint(m)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


class _CyclotomicContext:
    """
    Per-conductor tables: reductions of x^k modulo the n-th cyclotomic polynomial,
    units modulo n and normalized traces of the power basis
    """

    def __init__(self, n):
        self.n = n
        self.phi = int(sp.totient(n))
        x = sp.Symbol("x")
        # low degree first, monic
        poly = [int(c) for c in reversed(sp.Poly(sp.cyclotomic_poly(n, x), x).all_coeffs())]
        self.poly = tuple(poly)

        size = max(n, 2 * self.phi - 1)
        reductions = []
        for k in range(size):
            if k < self.phi:
                vec = [0] * self.phi
                vec[k] = 1
            else:
                prev = reductions[k - 1]
                top = prev[-1]
                vec = [0] + list(prev[:-1])
                if top:
                    vec = [vec[i] - top * poly[i] for i in range(self.phi)]
            reductions.append(tuple(vec))
        self.reductions = tuple(reductions)

        self.units = tuple(k for k in range(1, max(n, 2)) if gcd(k, n) == 1)

        # trace(zeta_n^i) / phi(n) only depends on the order m of zeta_n^i
        traces = []
        for i in range(self.phi):
            m = n // gcd(n, i)
            traces.append(Fraction(_mobius(m), int(sp.totient(m))))
        self.traces = tuple(traces)

    def reduce_powers(self, power_coeffs):
        """
        Integer vector of sum(c * x^k) reduced in the power basis

        :param power_coeffs: iterable of (k, c) pairs, k >= 0
        :rtype: list
        """
        res = [0] * self.phi
        for k, c in power_coeffs:
            if not c:
                continue
            k %= self.n
            red = self.reductions[k]
            for i in range(self.phi):
                if red[i]:
                    res[i] += c * red[i]
        return res

    def mul(self, a, b):
        """
        Product of two integer vectors of the power basis
        """
        phi = self.phi
        prod = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        res = prod[:phi]
        for k in range(phi, 2 * phi - 1):
            c = prod[k]
            if c:
                red = self.reductions[k]
                for i in range(phi):
                    if red[i]:
                        res[i] += c * red[i]
        return res


@lru_cache(maxsize=None)
def _cyclotomic_context(n):
    return _CyclotomicContext(n)


class Scalar:
    """
    Exact field element

    Subclasses implement _coerce, _add, _mul, __neg__, inv, is_zero, field and to_json.
    Binary operators accept ints and Fractions on either side.
    """
    __slots__ = ()

    def _coerce(self, other):
        raise NotImplementedError()

    def _add(self, other):
        raise NotImplementedError()

    def _mul(self, other):
        raise NotImplementedError()

    def inv(self):
        """
        Multiplicative inverse

        :raises DivisionByZero: if the scalar is zero
        """
        raise NotImplementedError()

    def is_zero(self):
        """
        :rtype: bool
        """
        raise NotImplementedError()

    @property
    def field(self):
        """
        Field the scalar lives in
        """
        raise NotImplementedError()

    def to_json(self):
        """
        JSON-able representation, see scalar_from_json
        """
        raise NotImplementedError()

    def is_one(self):
        """
        :rtype: bool
        """
        return self == 1

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._add(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._add(-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._mul(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._mul(other.inv())

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._mul(self.inv())

    def __pow__(self, exponent):
        check_type(value=exponent, allowed_types=int, var_name="exponent", raise_exception=True)
        base = self
        if exponent < 0:
            base = self.inv()
            exponent = -exponent
        result = self.field.one
        while exponent:
            if exponent & 1:
                result = result._mul(base)
            exponent >>= 1
            if exponent:
                base = base._mul(base)
        return result

    def multiplicative_order(self, bound):
        """
        Least m in [1, bound] with self^m = 1, or None

        :param bound: search bound
        :type bound: int

        :rtype: int or None
        """
        if self.is_zero():
            return None
        power = self
        for m in range(1, bound + 1):
            if power.is_one():
                return m
            power = power._mul(self)
        return None


class CycRat(Scalar):
    """
    Element sum(c_i * zeta_n^i) of Q(zeta_n), i < phi(n), in the power basis modulo
    the n-th cyclotomic polynomial

    Stored as an integer numerator vector over a positive common denominator,
    gcd-normalized, so that equal values in the same conductor are identical.
    """
    __slots__ = ("_n", "_nums", "_den")

    def __init__(self, conductor=1, coeffs=None):
        """
        :param conductor: n
        :param coeffs: coefficients c_k of sum(c_k * zeta_n^k), any length (reduced on creation)

        :type conductor: int
        :type coeffs: list of int or Fraction or str
        """
        check_is_positive_int(value=conductor, var_name="conductor")
        coeffs = [Fraction(c) for c in (coeffs or [])]
        den = 1
        for c in coeffs:
            den = _lcm(den, c.denominator)
        ctx = _cyclotomic_context(conductor)
        nums = ctx.reduce_powers((k, int(c * den)) for k, c in enumerate(coeffs))
        self._set(conductor, nums, den)

    def _set(self, n, nums, den):
        g = gcd(den, *nums)
        if den < 0:
            g = -g
        if g not in (0, 1):
            nums = [c // g for c in nums]
            den //= g
        if not any(nums):
            den = 1
        self._n = n
        self._nums = tuple(nums)
        self._den = den

    @classmethod
    def _from_ints(cls, n, nums, den=1):
        obj = cls.__new__(cls)
        obj._set(n, nums, den)
        return obj

    @classmethod
    def from_powers(cls, conductor, power_coeffs):
        """
        Build sum(c * zeta_n^k) from a mapping k -> c

        :param conductor: n
        :param power_coeffs: mapping exponent -> rational coefficient

        :type conductor: int
        :type power_coeffs: dict

        :rtype: CycRat
        """
        check_is_positive_int(value=conductor, var_name="conductor")
        items = [(k, Fraction(c)) for k, c in power_coeffs.items()]
        den = 1
        for _, c in items:
            den = _lcm(den, c.denominator)
        ctx = _cyclotomic_context(conductor)
        nums = ctx.reduce_powers((k, int(c * den)) for k, c in items)
        return cls._from_ints(conductor, nums, den)

    @property
    def conductor(self):
        """
        Conductor n of the representation
        :rtype: int
        """
        return self._n

    @property
    def coeffs(self):
        """
        Power basis coefficients, phi(n) Fractions in lowest terms
        :rtype: tuple
        """
        return tuple(Fraction(c, self._den) for c in self._nums)

    @property
    def field(self):
        return CyclotomicField(self._n)

    def is_zero(self):
        return not any(self._nums)

    def is_rational(self):
        """
        True if the value lies in Q
        :rtype: bool
        """
        return not any(self._nums[1:])

    def to_fraction(self):
        """
        :returns: the rational value
        :rtype: Fraction

        :raises ValueError: if the value is not rational
        """
        if not self.is_rational():
            raise ValueError("%s is not rational" % self)
        return Fraction(self._nums[0], self._den)

    def embed(self, new_conductor):
        """
        Image under the inclusion Q(zeta_n) in Q(zeta_N)

        :param new_conductor: N, multiple of the current conductor
        :type new_conductor: int

        :rtype: CycRat

        :raises BadConductor: if the conductor does not divide new_conductor
        """
        check_is_positive_int(value=new_conductor, var_name="new_conductor")
        if new_conductor % self._n:
            raise BadConductor("Conductor %s does not divide %s" % (self._n, new_conductor))
        if new_conductor == self._n:
            return self
        ratio = new_conductor // self._n
        ctx = _cyclotomic_context(new_conductor)
        nums = ctx.reduce_powers((i * ratio, c) for i, c in enumerate(self._nums))
        return CycRat._from_ints(new_conductor, nums, self._den)

    def _unify(self, other):
        if other._n == self._n:
            return self, other
        n = _lcm(self._n, other._n)
        return self.embed(n), other.embed(n)

    def _coerce(self, other):
        if isinstance(other, CycRat):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = Fraction(other)
            return CycRat._from_ints(self._n, [other.numerator] + [0] * (len(self._nums) - 1),
                                     other.denominator)
        if isinstance(other, Scalar):
            raise FieldMismatch("Can't combine %r with %r" % (self, other))
        return NotImplemented

    def _add(self, other):
        a, b = self._unify(other)
        den = a._den * b._den
        nums = [x * b._den + y * a._den for x, y in zip(a._nums, b._nums)]
        return CycRat._from_ints(a._n, nums, den)

    def _mul(self, other):
        a, b = self._unify(other)
        ctx = _cyclotomic_context(a._n)
        return CycRat._from_ints(a._n, ctx.mul(a._nums, b._nums), a._den * b._den)

    def __neg__(self):
        return CycRat._from_ints(self._n, [-c for c in self._nums], self._den)

    def conjugate(self, k):
        """
        Galois conjugate zeta_n -> zeta_n^k

        :param k: unit modulo the conductor
        :type k: int

        :rtype: CycRat
        """
        if gcd(k, self._n) != 1:
            raise ValueError("%s is not a unit modulo %s" % (k, self._n))
        ctx = _cyclotomic_context(self._n)
        nums = ctx.reduce_powers((i * k, c) for i, c in enumerate(self._nums))
        return CycRat._from_ints(self._n, nums, self._den)

    def inv(self):
        if self.is_zero():
            raise DivisionByZero("Inverse of zero in Q(zeta_%s)" % self._n)
        if self.is_rational():
            return CycRat._from_ints(self._n, [self._den] + [0] * (len(self._nums) - 1), self._nums[0])
        # product of the other conjugates divided by the norm
        ctx = _cyclotomic_context(self._n)
        cofactor = CycRat._from_ints(self._n, [1] + [0] * (ctx.phi - 1))
        for k in ctx.units[1:]:
            cofactor = cofactor._mul(self.conjugate(k))
        norm = self._mul(cofactor).to_fraction()
        return cofactor._mul(self._coerce(1 / norm))

    def __eq__(self, other):
        if isinstance(other, CycRat):
            a, b = self._unify(other)
            return a._nums == b._nums and a._den == b._den
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational() and Fraction(self._nums[0], self._den) == other
        return NotImplemented

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        ctx = _cyclotomic_context(self._n)
        trace = sum((c * t for c, t in zip(self._nums, ctx.traces) if c), Fraction(0))
        return hash(trace / self._den)

    def to_json(self):
        return {"conductor": self._n, "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    def __repr__(self):
        return "CycRat(%s, %s)" % (self._n, [str(c) for c in self.coeffs])

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            power = "zeta%s" % self._n if i == 1 else "zeta%s^%s" % (self._n, i)
            if c == 1:
                terms.append(power)
            elif c == -1:
                terms.append("-" + power)
            else:
                terms.append("%s*%s" % (c, power))
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


class CyclotomicField:
    """
    Q(zeta_n) seen as a field handle; every conductor is compatible with every other
    through the lcm embedding
    """

    kind = FieldKind.CYCLOTOMIC
    characteristic = 0

    def __init__(self, conductor=1):
        check_is_positive_int(value=conductor, var_name="conductor")
        self.__conductor = conductor

    @property
    def conductor(self):
        """
        :rtype: int
        """
        return self.__conductor

    @property
    def spec(self):
        """
        Field choice as written on the command line
        :rtype: str
        """
        return FieldKind.CYCLOTOMIC.value

    @property
    def zero(self):
        """
        :rtype: CycRat
        """
        return CycRat(self.__conductor, [0])

    @property
    def one(self):
        """
        :rtype: CycRat
        """
        return CycRat(self.__conductor, [1])

    def from_int(self, value):
        """
        :rtype: CycRat
        """
        return CycRat(self.__conductor, [value])

    def from_fraction(self, value):
        """
        :rtype: CycRat
        """
        return CycRat(self.__conductor, [Fraction(value)])

    def zeta_power(self, order, power, coeff=1):
        """
        coeff * zeta_order^power, embedded with the field conductor

        :rtype: CycRat
        """
        n = _lcm(self.__conductor, order)
        return CycRat.from_powers(n, {power * (n // order): Fraction(coeff)})

    def root_of_unity(self, m):
        """
        zeta_m embedded into Q(zeta_lcm(n, m))

        :rtype: CycRat
        """
        return self.zeta_power(m, 1)

    def is_compatible(self, other):
        """
        :rtype: bool
        """
        return isinstance(other, CyclotomicField)

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.conductor == self.__conductor

    def __hash__(self):
        return hash(("cyclotomic", self.__conductor))

    def __repr__(self):
        return "Q(zeta_%s)" % self.__conductor


def _poly_divmod(num, den, p):
    """
    Division of coefficient lists (low degree first) over GF(p), den monic
    """
    num = list(num)
    dd = len(den) - 1
    quo = [0] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            quo[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    rem = [c % p for c in num[:dd]] if dd else []
    return quo, rem


def _monic_polys(p, degree):
    for code in range(p ** degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(code % p)
            code //= p
        yield coeffs + [1]


def is_irreducible(poly, p):
    """
    Exhaustive trial division by all monic polynomials of degree <= deg/2

    :param poly: coefficients, low degree first, monic
    :param p: prime

    :type poly: list
    :type p: int

    :rtype: bool
    """
    degree = len(poly) - 1
    if degree <= 1:
        return degree == 1
    for d in range(1, degree // 2 + 1):
        for divisor in _monic_polys(p, d):
            _, rem = _poly_divmod(poly, divisor, p)
            if not any(rem):
                return False
    return True


def smallest_irreducible(p, degree):
    """
    Monic irreducible polynomial of the given degree with the smallest base-p encoding

    :rtype: list
    """
    for poly in _monic_polys(p, degree):
        if is_irreducible(poly, p):
            return poly
    raise ValueError("No irreducible polynomial of degree %s over GF(%s)" % (degree, p))


class GaloisField:
    """
    GF(q), q = p^k <= 2^16, elements encoded as base-p integers of their polynomial
    representative modulo a fixed irreducible polynomial
    """

    kind = FieldKind.GALOIS

    def __init__(self, q, poly=None):
        """
        :param q: field order
        :param poly: irreducible monic polynomial, low degree first (default: smallest one)

        :type q: int
        :type poly: list or None
        """
        check_is_positive_int(value=q, var_name="q")
        if q > MAX_FIELD_ORDER:
            raise ValueError("Field order %s exceeds %s" % (q, MAX_FIELD_ORDER))
        factors = sp.factorint(q)
        if len(factors) != 1:
            raise ValueError("Field order shall be a prime power, got %s" % q)
        (p, k), = factors.items()
        self.__p = int(p)
        self.__k = int(k)
        self.__q = q

        if poly is None:
            poly = smallest_irreducible(self.__p, self.__k)
        poly = [int(c) % self.__p for c in poly]
        if len(poly) != self.__k + 1 or poly[-1] != 1 or not is_irreducible(poly, self.__p):
            raise ValueError("%s is not a monic irreducible polynomial of degree %s over GF(%s)" % (
                poly, self.__k, self.__p))
        self.__poly = tuple(poly)

        self.digits = np.array([[(v // self.__p ** i) % self.__p for i in range(self.__k)]
                                for v in range(q)], dtype=np.int64)
        self.powers = self.__p ** np.arange(self.__k, dtype=np.int64)
        self.add_table = None
        if q <= ADD_TABLE_MAX_ORDER:
            summed = (self.digits[:, None, :] + self.digits[None, :, :]) % self.__p
            self.add_table = summed.dot(self.powers)
        self.neg_table = ((self.__p - self.digits) % self.__p).dot(self.powers)

        self.__generator = self.__find_generator()
        self.exp_table = np.zeros(2 * (q - 1), dtype=np.int64)
        self.log_table = np.zeros(q, dtype=np.int64)
        value = 1
        for i in range(q - 1):
            self.exp_table[i] = value
            self.exp_table[i + q - 1] = value
            self.log_table[value] = i
            value = self.__slow_mul(value, self.__generator)

    def __slow_mul(self, a, b):
        da = [int(c) for c in self.digits[a]]
        db = [int(c) for c in self.digits[b]]
        prod = [0] * (2 * self.__k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        _, rem = _poly_divmod(prod + [0], list(self.__poly), self.__p)
        rem = (rem + [0] * self.__k)[:self.__k]
        return sum(c * self.__p ** i for i, c in enumerate(rem))

    def __find_generator(self):
        if self.__q == 2:
            return 1
        for candidate in range(2, self.__q):
            value = candidate
            order = 1
            while value != 1:
                value = self.__slow_mul(value, candidate)
                order += 1
            if order == self.__q - 1:
                return candidate
        raise ValueError("No primitive element found in GF(%s)" % self.__q)

    @property
    def p(self):
        """
        Characteristic
        :rtype: int
        """
        return self.__p

    @property
    def characteristic(self):
        """
        :rtype: int
        """
        return self.__p

    @property
    def k(self):
        """
        Degree over the prime field
        :rtype: int
        """
        return self.__k

    @property
    def q(self):
        """
        Number of elements
        :rtype: int
        """
        return self.__q

    @property
    def poly(self):
        """
        Defining polynomial, low degree first
        :rtype: tuple
        """
        return self.__poly

    @property
    def generator(self):
        """
        Smallest primitive element (as encoded integer)
        :rtype: int
        """
        return self.__generator

    @property
    def spec(self):
        """
        :rtype: str
        """
        return "gf:%s" % self.__q

    @property
    def zero(self):
        """
        :rtype: GFElem
        """
        return GFElem(self, 0)

    @property
    def one(self):
        """
        :rtype: GFElem
        """
        return GFElem(self, 1)

    def add(self, a, b):
        """
        Sum of encoded values
        """
        if self.add_table is not None:
            return int(self.add_table[a, b])
        if self.__p == 2:
            return a ^ b
        return int(((self.digits[a] + self.digits[b]) % self.__p).dot(self.powers))

    def mul(self, a, b):
        """
        Product of encoded values
        """
        if a == 0 or b == 0:
            return 0
        return int(self.exp_table[self.log_table[a] + self.log_table[b]])

    def from_int(self, value):
        """
        Image of an integer in the prime field

        :rtype: GFElem
        """
        return GFElem(self, int(value) % self.__p)

    def from_fraction(self, value):
        """
        :rtype: GFElem

        :raises DivisionByZero: if the denominator vanishes modulo p
        """
        value = Fraction(value)
        return self.from_int(value.numerator) / self.from_int(value.denominator)

    def element(self, encoded):
        """
        :param encoded: integer in [0, q)
        :rtype: GFElem
        """
        return GFElem(self, encoded)

    def elements(self):
        """
        All elements, in encoding order
        :rtype: list
        """
        return [GFElem(self, v) for v in range(self.__q)]

    def root_of_unity(self, m):
        """
        generator^((q-1)/m)

        :rtype: GFElem

        :raises NoSuchRoot: if m does not divide q-1
        """
        check_is_positive_int(value=m, var_name="m")
        if (self.__q - 1) % m:
            raise NoSuchRoot("GF(%s) has no root of unity of order %s" % (self.__q, m))
        return GFElem(self, int(self.exp_table[(self.__q - 1) // m]))

    def zeta_power(self, order, power, coeff=1):
        """
        coeff * zeta_order^power where zeta_order = root_of_unity(order)

        :rtype: GFElem
        """
        return self.from_fraction(coeff) * self.root_of_unity(order) ** power

    def is_compatible(self, other):
        """
        :rtype: bool
        """
        return isinstance(other, GaloisField) and other.q == self.__q and other.poly == self.__poly

    def __eq__(self, other):
        return self.is_compatible(other)

    def __hash__(self):
        return hash(("gf", self.__q, self.__poly))

    def __repr__(self):
        return "GF(%s)" % self.__q


@lru_cache(maxsize=None)
def galois_field(q, poly=None):
    """
    Cached GaloisField factory, tables are built once per field

    :param q: field order
    :param poly: defining polynomial as a tuple (low degree first) or None

    :rtype: GaloisField
    """
    return GaloisField(q, list(poly) if poly is not None else None)


class GFElem(Scalar):
    """
    Element of a GaloisField
    """
    __slots__ = ("_gf", "_val")

    def __init__(self, gf, value):
        """
        :param gf: field
        :param value: encoded integer in [0, q)

        :type gf: GaloisField
        :type value: int
        """
        if not 0 <= value < gf.q:
            raise ValueError("Encoded value %s out of GF(%s)" % (value, gf.q))
        self._gf = gf
        self._val = int(value)

    @property
    def value(self):
        """
        Encoded integer
        :rtype: int
        """
        return self._val

    @property
    def field(self):
        return self._gf

    def is_zero(self):
        return self._val == 0

    def _coerce(self, other):
        if isinstance(other, GFElem):
            if other._gf is not self._gf and not self._gf.is_compatible(other._gf):
                raise FieldMismatch("Can't combine elements of %r and %r" % (self._gf, other._gf))
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._gf.from_fraction(other)
        if isinstance(other, Scalar):
            raise FieldMismatch("Can't combine %r with %r" % (self, other))
        return NotImplemented

    def _add(self, other):
        return GFElem(self._gf, self._gf.add(self._val, other._val))

    def _mul(self, other):
        return GFElem(self._gf, self._gf.mul(self._val, other._val))

    def __neg__(self):
        return GFElem(self._gf, int(self._gf.neg_table[self._val]))

    def inv(self):
        if self._val == 0:
            raise DivisionByZero("Inverse of zero in %r" % self._gf)
        q1 = self._gf.q - 1
        return GFElem(self._gf, int(self._gf.exp_table[(q1 - self._gf.log_table[self._val]) % q1]))

    def __pow__(self, exponent):
        check_type(value=exponent, allowed_types=int, var_name="exponent", raise_exception=True)
        if self._val == 0:
            if exponent < 0:
                raise DivisionByZero("Negative power of zero")
            return self._gf.one if exponent == 0 else self
        q1 = self._gf.q - 1
        return GFElem(self._gf, int(self._gf.exp_table[(int(self._gf.log_table[self._val]) * exponent) % q1]))

    def __eq__(self, other):
        if isinstance(other, GFElem):
            return self._val == other._val and self._gf.is_compatible(other._gf)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self == self._gf.from_fraction(other)
            except DivisionByZero:
                return False
        return NotImplemented

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        if self._val < self._gf.p:
            return hash(self._val)
        return hash((self._gf.q, self._val))

    def to_json(self):
        return {"p": self._gf.p, "k": self._gf.k, "poly": list(self._gf.poly), "val": self._val}

    def __repr__(self):
        return "GFElem(%s, %s)" % (self._gf.q, self._val)

    def __str__(self):
        if self._gf.k == 1:
            return str(self._val)
        return "g%s^%s" % (self._gf.q, int(self._gf.log_table[self._val])) if self._val else "0"


def make_field(spec):
    """
    Field handle from a command line field choice

    :param spec: "cyclotomic" or "gf:q"
    :type spec: str

    :rtype: CyclotomicField or GaloisField
    """
    kind, q = parse_field_spec(spec)
    if kind == FieldKind.CYCLOTOMIC:
        return CyclotomicField(1)
    return galois_field(q)


def root_of_unity(field, m):
    """
    Deterministic primitive m-th root of unity

    :param field: field handle or field choice string
    :param m: order

    :type field: CyclotomicField or GaloisField or str
    :type m: int

    :rtype: Scalar

    :raises NoSuchRoot: if the finite field has no element of order m
    """
    check_is_positive_int(value=m, var_name="m")
    if isinstance(field, str):
        field = make_field(field)
    return field.root_of_unity(m)


def embed(x, new_conductor):
    """
    Canonical inclusion Q(zeta_n) in Q(zeta_N)

    :type x: CycRat
    :type new_conductor: int

    :rtype: CycRat

    :raises BadConductor: if n does not divide N
    """
    check_type(value=x, allowed_types=CycRat, var_name="x", raise_exception=True)
    return x.embed(new_conductor)


def scalar_to_json(value):
    """
    :type value: Scalar
    :rtype: dict
    """
    check_type(value=value, allowed_types=Scalar, var_name="value", raise_exception=True)
    return value.to_json()


def scalar_from_json(data):
    """
    Inverse of scalar_to_json

    :type data: dict
    :rtype: Scalar
    """
    check_type(value=data, allowed_types=dict, var_name="data", raise_exception=True)
    if "conductor" in data:
        return CycRat(data["conductor"], [Fraction(num, den) for num, den in data["coeffs"]])
    gf = galois_field(data["p"] ** data["k"], tuple(data["poly"]))
    return GFElem(gf, data["val"])
