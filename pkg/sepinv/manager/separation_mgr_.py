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
from math import gcd

import numpy as np
from schema import SchemaError

from sepinv.exceptions import (CertificateMismatch, CheckFailure, DimensionMismatch, FieldMismatch,
                               SepInvVerificationError, SizeGuardExceeded)
from sepinv.lib import check_is_positive_int, check_type, checksum
from sepinv.manager.generic_mgr_ import SepInvGenericEndPoint
from sepinv.objects.certificate_ import CERTIFICATE_SCHEMA_VERSION, SeparationCertificate
from sepinv.objects.group_ import Character
from sepinv.objects.module_ import GModule
from sepinv.objects.polynomial_ import SparsePolynomial
from sepinv.objects.scalar_ import CycRat, GaloisField, scalar_from_json, scalar_to_json

# Largest finite module enumerated point by point
MAX_FINITE_POINTS = 10 ** 6


def _normalized_json(values):
    # Same conductor for every cyclotomic value so that equal lists serialize equally
    conductors = [x.conductor for x in values if isinstance(x, CycRat)]
    if not conductors:
        return [scalar_to_json(x) for x in values]
    n = 1
    for c in conductors:
        n = n * c // gcd(n, c)
    return [scalar_to_json(x.embed(n) if isinstance(x, CycRat) else x) for x in values]


class SepInvSeparationMgr(SepInvGenericEndPoint):
    """
    sepinv EndPoint specific to orbit separation: orbits, agreement of invariants on two
    points, zero loci of relative invariants, finite field separating degrees and
    separation certificates
    """

    @staticmethod
    def _check_point(module, v, var_name="v"):
        check_type(value=module, allowed_types=GModule, var_name="module", raise_exception=True)
        check_type(value=v, allowed_types=[list, tuple], var_name=var_name, raise_exception=True)
        if len(v) != module.dim:
            raise DimensionMismatch("Point %s of size %s in a module of dimension %s" % (var_name, len(v), module.dim))
        return list(v)

    def orbit(self, module, v):
        """
        G.v as a list of points without repetition, in element order of first discovery

        :type module: GModule
        :type v: list of Scalar
        :rtype: list

        :raises DimensionMismatch: if the point does not match the module dimension
        """
        v = self._check_point(module, v)
        seen = {}
        for g in range(module.group.order):
            w = module.apply(g, v)
            seen.setdefault(tuple(w), w)
        return list(seen.values())

    def orbits_equal(self, module, v, v2):
        """
        True iff v2 lies in G.v

        :type module: GModule
        :type v: list of Scalar
        :type v2: list of Scalar
        :rtype: bool
        """
        v2 = self._check_point(module, v2, "v2")
        return any(w == v2 for w in self.orbit(module, v))

    def _cells(self, module, degree):
        trivial = self.api.inv.weight(module)
        for alpha in module.multidegrees_of_degree(degree):
            yield alpha, self.api.inv.cell_basis(module, trivial, alpha)

    def agree_up_to_degree(self, module, v, v2, d):
        """
        Compare every invariant basis element of degree 1..d on two points

        Degrees are scanned upwards, cells by descending multidegree, each cell basis in
        its canonical order.

        :param module: the module
        :param v: first point
        :param v2: second point
        :param d: degree bound

        :type module: GModule
        :type v: list of Scalar
        :type v2: list of Scalar
        :type d: int

        :returns: (True, None), or (False, first invariant taking different values)
        :rtype: tuple

        :raises SizeGuardExceeded: if a cell has more monomials than the guard allows
        """
        v = self._check_point(module, v)
        v2 = self._check_point(module, v2, "v2")
        check_is_positive_int(value=d, var_name="d")
        zero = module.field.zero
        for degree in range(1, d + 1):
            for alpha, basis in self._cells(module, degree):
                for f in basis:
                    if f.evaluate(v, zero) != f.evaluate(v2, zero):
                        self.log.debug("%r: %s separates at degree %s", module,
                                       f.to_str(module.var_names), degree)
                        return False, f
        return True, None

    def agreement_cells(self, module, v, v2, d):
        """
        Evidence of agreement: every nonempty cell of degree 1..d with its dimension and the
        checksum of its basis values at v

        :type module: GModule
        :type v: list of Scalar
        :type v2: list of Scalar
        :type d: int

        :rtype: list of dict

        :raises CheckFailure: if some invariant of degree at most d separates the points
        """
        v = self._check_point(module, v)
        v2 = self._check_point(module, v2, "v2")
        zero = module.field.zero
        cells = []
        for degree in range(1, d + 1):
            for alpha, basis in self._cells(module, degree):
                if not basis:
                    continue
                values = [f.evaluate(v, zero) for f in basis]
                for f, value in zip(basis, values):
                    if f.evaluate(v2, zero) != value:
                        raise CheckFailure("%s separates the points at degree %s, cell %s" % (
                            f.to_str(module.var_names), degree, list(alpha)))
                cells.append({"multidegree": list(alpha), "dim": len(basis),
                              "checksum": checksum(_normalized_json(values))})
        return cells

    def zero_locus_check(self, module, chi, degree_bound, points):
        """
        Compare stabilizers and common zeros of the weight-chi relative invariants

        For each point, (a) is "Stab(v) is not contained in ker(chi)" and (b) is "every
        weight-chi basis element of degree 1..degree_bound vanishes at v". (a) implies (b)
        for every degree; points with (b) but not (a) are only recorded since a larger
        degree may reveal a nonvanishing element.

        :param module: the module
        :param chi: the weight
        :param degree_bound: largest degree examined
        :param points: the points

        :type module: GModule
        :type chi: Character
        :type degree_bound: int
        :type points: list

        :returns: {"points", "unstable", "vanishing", "bound_limited": [point indices]}
        :rtype: dict

        :raises CheckFailure: if some point satisfies (a) but not (b)
        """
        check_type(value=chi, allowed_types=Character, var_name="chi", raise_exception=True)
        check_is_positive_int(value=degree_bound, var_name="degree_bound")
        basis = []
        for degree in range(1, degree_bound + 1):
            basis.extend(self.api.inv.weight_space_basis(module, degree, chi))
        kernel = set(chi.kernel())
        zero = module.field.zero
        report = {"points": len(points), "unstable": 0, "vanishing": 0, "bound_limited": []}
        for index, v in enumerate(points):
            v = self._check_point(module, v)
            unstable = any(g not in kernel for g in self.api.group.stabilizer(module, v))
            witness = next((f for f in basis if not f.evaluate(v, zero).is_zero()), None)
            if unstable:
                report["unstable"] += 1
                if witness is not None:
                    raise CheckFailure("%s does not vanish at %s whose stabilizer is not in ker(%s)" % (
                        witness.to_str(module.var_names), [str(x) for x in v], chi.label))
            if witness is None:
                report["vanishing"] += 1
                if not unstable:
                    report["bound_limited"].append(index)
        self.log.info("%r weight %s up to degree %s: %s", module, chi.label, degree_bound, report)
        return report

    @staticmethod
    def _gf_mul(gf, a, b):
        res = gf.exp_table[gf.log_table[a] + gf.log_table[b]]
        res[(a == 0) | (b == 0)] = 0
        return res

    @staticmethod
    def _gf_add(gf, a, b):
        if gf.add_table is not None:
            return gf.add_table[a, b]
        return ((gf.digits[a] + gf.digits[b]) % gf.p).dot(gf.powers)

    @staticmethod
    def _gf_pow(gf, a, e):
        res = gf.exp_table[(gf.log_table[a] * e) % (gf.q - 1)]
        res[a == 0] = 0
        return res

    def _gf_values(self, gf, f, points):
        # Values of f on every point, as encoded field elements
        total = np.zeros(points.shape[0], dtype=np.int64)
        powers = {}
        for mono, coeff in f.terms.items():
            if not isinstance(coeff.field, GaloisField) or not gf.is_compatible(coeff.field):
                raise FieldMismatch("Coefficient %r is not in %r" % (coeff, gf))
            col = np.full(points.shape[0], coeff.value, dtype=np.int64)
            for j, e in enumerate(mono):
                if e:
                    if (j, e) not in powers:
                        powers[(j, e)] = self._gf_pow(gf, points[:, j], e)
                    col = self._gf_mul(gf, col, powers[(j, e)])
            total = self._gf_add(gf, total, col)
        return total

    def _gf_orbit_labels(self, module, gf, points, codes_of):
        # Smallest point code of each orbit, propagated along the generator permutations
        images = []
        for g in module.group.generators:
            image = np.zeros_like(points)
            for i, row in enumerate(module.matrix(g).rows):
                acc = np.zeros(points.shape[0], dtype=np.int64)
                for col, val in row:
                    acc = self._gf_add(gf, acc, self._gf_mul(gf, np.full(points.shape[0], val.value, dtype=np.int64),
                                                             points[:, col]))
                image[:, i] = acc
            images.append(image.dot(codes_of))
        labels = np.arange(points.shape[0], dtype=np.int64)
        while True:
            updated = labels
            for image in images:
                updated = np.minimum(updated, updated[image])
            if np.array_equal(updated, labels):
                return labels
            labels = updated

    def finite_field_beta_sep(self, module, d_max=None):
        """
        Least d such that the invariants of degree at most d, seen as functions on the
        finite module, separate all the orbits

        Every point is enumerated. The class of each point under the invariants of
        degree at most d is refined degree after degree; the invariants separate once
        there are as many classes as orbits.

        :param module: module over a finite field
        :param d_max: largest degree examined (default: the group order)

        :type module: GModule
        :type d_max: int or None

        :returns: the separating degree, or None when it exceeds d_max
        :rtype: int or None

        :raises FieldMismatch: if the module is not over a finite field
        :raises ModularCharacteristic: if the characteristic divides the group order
        :raises SizeGuardExceeded: if the module has too many points
        """
        check_type(value=module, allowed_types=GModule, var_name="module", raise_exception=True)
        gf = module.field
        if not isinstance(gf, GaloisField):
            raise FieldMismatch("Exhaustive separation needs a finite field, got %r" % gf)
        self.api.inv.check_characteristic(module)
        if d_max is None:
            d_max = module.group.order
        check_is_positive_int(value=d_max, var_name="d_max")
        count = gf.q ** module.dim
        if count > min(MAX_FINITE_POINTS, self.api.config.guard):
            raise SizeGuardExceeded("%s points in %r exceed the guard" % (count, module))

        codes_of = gf.q ** np.arange(module.dim, dtype=np.int64)
        codes = np.arange(count, dtype=np.int64)
        points = (codes[:, None] // codes_of[None, :]) % gf.q
        orbits = len(np.unique(self._gf_orbit_labels(module, gf, points, codes_of)))

        classes = np.zeros(count, dtype=np.int64)
        for degree in range(1, d_max + 1):
            for _, basis in self._cells(module, degree):
                for f in basis:
                    stacked = np.column_stack((classes, self._gf_values(gf, f, points)))
                    classes = np.unique(stacked, axis=0, return_inverse=True)[1].reshape(-1)
            separated = int(classes.max()) + 1
            self.log.debug("%r: %s classes for %s orbits at degree %s", module, separated, orbits, degree)
            if separated == orbits:
                self.log.info("%r: orbits separated at degree %s", module, degree)
                return degree
        self.log.warning("%r: orbits not separated up to degree %s", module, d_max)
        return None

    def build_certificate(self, entry, labels, v, v2, agree_bound, theorem):
        """
        Certificate that the invariants of degree at most agree_bound do not separate v
        and v2 while some invariant of degree agree_bound + 1 does

        :param entry: catalog entry of the group
        :param labels: summand labels of the module
        :param v: first point
        :param v2: second point
        :param agree_bound: degree bound of the agreement
        :param theorem: theorem the certificate belongs to

        :type entry: CatalogEntry
        :type labels: list of str
        :type v: list of Scalar
        :type v2: list of Scalar
        :type agree_bound: int
        :type theorem: str

        :rtype: SeparationCertificate

        :raises CheckFailure: if the points agree at degree agree_bound + 1, are separated
                              earlier, or lie in the same orbit
        """
        check_is_positive_int(value=agree_bound, var_name="agree_bound", allow_zero=True)
        module = entry.module(labels)
        cells = self.agreement_cells(module, v, v2, agree_bound)
        zero = module.field.zero
        separator = None
        for _, basis in self._cells(module, agree_bound + 1):
            separator = next((f for f in basis if f.evaluate(v, zero) != f.evaluate(v2, zero)), None)
            if separator is not None:
                break
        if separator is None:
            raise CheckFailure("No invariant of degree %s separates the points" % (agree_bound + 1))
        self.api.inv.check_invariance(module, separator)
        orbit = self.orbit(module, v)
        if any(w == list(v2) for w in orbit):
            raise CheckFailure("The points lie in the same orbit")
        data = {
            "schema_version": CERTIFICATE_SCHEMA_VERSION,
            "theorem": theorem,
            "group": list(entry.gap_id),
            "module": list(labels),
            "field": entry.field.spec,
            "v": [scalar_to_json(x) for x in v],
            "v2": [scalar_to_json(x) for x in v2],
            "agree_bound": agree_bound,
            "cells": cells,
            "separator": separator.to_json(),
            "separator_degree": agree_bound + 1,
            "values": _normalized_json([separator.evaluate(v, zero), separator.evaluate(v2, zero)]),
            "orbit_distinct": True,
            "orbit_sizes": [len(orbit), len(self.orbit(module, v2))],
        }
        self.log.info("Certificate for %s on %s: agree up to %s, %s separates", theorem, "+".join(labels),
                      agree_bound, separator.to_str(module.var_names))
        return SeparationCertificate(self.api, data)

    def _verify(self, cert):
        data = cert.data
        entry = self.api.catalog.load_entry(cert.gap_id, field=data["field"])
        module = entry.module(cert.labels)
        v = [scalar_from_json(x) for x in data["v"]]
        v2 = [scalar_from_json(x) for x in data["v2"]]
        for name, point in (("v", v), ("v2", v2)):
            if len(point) != module.dim:
                raise CertificateMismatch("%s has %s coordinates, the module has dimension %s" % (
                    name, len(point), module.dim))

        zero = module.field.zero
        claimed = {tuple(cell["multidegree"]): cell for cell in data["cells"]}
        seen = set()
        for degree in range(1, data["agree_bound"] + 1):
            for alpha, basis in self._cells(module, degree):
                cell = claimed.get(tuple(alpha))
                if not basis:
                    if cell is not None and cell["dim"]:
                        raise CertificateMismatch("Cell %s of degree %s: dimension %s claimed, 0 found" % (
                            list(alpha), degree, cell["dim"]))
                    continue
                if cell is None or cell["dim"] != len(basis):
                    raise CertificateMismatch("Cell %s of degree %s: dimension %s claimed, %s found" % (
                        list(alpha), degree, cell["dim"] if cell else 0, len(basis)))
                values = [f.evaluate(v, zero) for f in basis]
                if checksum(_normalized_json(values)) != cell["checksum"]:
                    raise CertificateMismatch("Cell %s of degree %s: checksum mismatch" % (list(alpha), degree))
                if any(f.evaluate(v2, zero) != value for f, value in zip(basis, values)):
                    raise CertificateMismatch("Cell %s of degree %s: the points are separated" % (
                        list(alpha), degree))
                seen.add(tuple(alpha))
        extra = set(claimed) - seen
        if extra:
            raise CertificateMismatch("Cells %s are not part of the recomputation" % sorted(extra))

        separator = SparsePolynomial.from_json(data["separator"])
        if separator.nvars != module.dim:
            raise CertificateMismatch("Separator in %s variables on a module of dimension %s" % (
                separator.nvars, module.dim))
        self.api.inv.check_invariance(module, separator)
        if separator.degree != data["agree_bound"] + 1 or data["separator_degree"] != separator.degree:
            raise CertificateMismatch("Separator degree %s, expected %s" % (separator.degree, data["agree_bound"] + 1))
        values = [separator.evaluate(v, zero), separator.evaluate(v2, zero)]
        if values[0] == values[1]:
            raise CertificateMismatch("The separator takes the value %s on both points" % values[0])
        if _normalized_json(values) != data["values"]:
            stored = [str(scalar_from_json(x)) for x in data["values"]]
            raise CertificateMismatch("Separator values %s, recomputed %s" % (stored, [str(x) for x in values]))

        orbit = self.orbit(module, v)
        sizes = [len(orbit), len(self.orbit(module, v2))]
        if sizes != data["orbit_sizes"]:
            raise CertificateMismatch("Orbit sizes %s, recomputed %s" % (data["orbit_sizes"], sizes))
        if not data["orbit_distinct"] or any(w == v2 for w in orbit):
            raise CertificateMismatch("Orbit distinctness claimed as %s does not hold" % data["orbit_distinct"])

    def verify_certificate(self, cert, raise_exception=True):
        """
        Recompute every dimension, checksum, value and orbit claim of a certificate, and
        the invariance of its separator

        :param cert: the certificate or its JSON content
        :param raise_exception: Indicates if exceptions shall be raised (True, default) or not (False)

        :type cert: SeparationCertificate or dict
        :type raise_exception: bool

        :returns: the status of the verification
        :rtype: bool

        :raises CertificateMismatch: naming the first diverging cell, value or orbit claim
        :raises InvarianceFailure: if the separator is not invariant
        :raises SchemaError: if the certificate is malformed
        """
        check_type(value=cert, allowed_types=[SeparationCertificate, dict], var_name="cert", raise_exception=True)
        try:
            if isinstance(cert, dict):
                cert = SeparationCertificate(self.api, cert)
            self._verify(cert)
        except (SepInvVerificationError, SchemaError) as exc:
            self.log.error("Certificate rejected: %s", exc)
            if raise_exception:
                raise
            return False
        self.log.info("%r verified", cert)
        return True
