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

import json
import os
from fractions import Fraction
from unittest import TestCase

from schema import SchemaError

from sepinv.exceptions import DimensionMismatch, FieldMismatch, UnknownEntry, ValidationFailure
from sepinv.manager.catalog_mgr_ import CATALOG_DIR
from sepinv.objects.entry_ import CatalogEntry, CheckReport, theorem_is_json_valid
from sepinv.objects.polynomial_ import SparsePolynomial
from sepinv.tests.lib import poly, quiet_api


def script(**kwargs):
    """
    Minimal theorem script
    """
    data = {"schema_version": 1, "theorem": "thm-X", "gap_id": [6, 1], "title": "",
            "checks": [{"op": "order", "expected": 6, "provenance": "trivial"}]}
    data.update(kwargs)
    return data


class TestCatalogEntry(TestCase):
    """
    Parsing the expressions of a catalog entry
    """

    @classmethod
    def setUpClass(cls):
        cls.entry = quiet_api().catalog.load_entry((18, 3))

    def test_header(self):
        """
        Header fields of the entry file
        """
        entry = self.entry
        self.assertEqual(entry.gap_id, (18, 3))
        self.assertEqual(entry.name, "S3xC3")
        self.assertEqual((entry.beta, entry.beta_sep, entry.conductor), (8, 6, 3))
        self.assertEqual(entry.group.order, 18)
        self.assertEqual(entry.to_json()["reference"], "thm-S3xC3")
        self.assertEqual(len(entry.characters), 6)
        self.assertIn("alpha", entry.automorphisms)

    def test_scalar(self):
        """
        Constants are evaluated in the entry field
        """
        w = self.entry.field.root_of_unity(3)
        self.assertEqual(self.entry.scalar("-1-w"), w * w)
        self.assertEqual(self.entry.scalar("1/2"), Fraction(1, 2))
        self.assertEqual(self.entry.scalar(3), 3)
        with self.assertRaises(ValidationFailure):
            self.entry.scalar("x1")

    def test_polynomial(self):
        """
        Polynomials are written in the variables of a module
        """
        field = self.entry.field
        self.assertEqual(self.entry.polynomial("q_xx", ["W1"]), poly(field, 2, {(1, 1): 1}))
        self.assertEqual(self.entry.polynomial("x1 - x1", ["W1"]), SparsePolynomial(2))
        self.assertEqual(self.entry.names_in("q_xy"), {"x1", "x2", "y1", "y2"})
        with self.assertRaises(ValidationFailure):
            self.entry.polynomial("y1", ["W1"])

    def test_point(self):
        """
        Points are flattened in summand order
        """
        w = self.entry.field.root_of_unity(3)
        point = self.entry.point([[1, "w"], [0, "1/2"]], ["W1", "W2"])
        self.assertEqual(point, [1, w, 0, Fraction(1, 2)])
        with self.assertRaises(DimensionMismatch):
            self.entry.point([1, 2, 3], ["W1"])
        with self.assertRaises(FieldMismatch):
            self.entry.point({"roots_of": "x^2+x+1"}, ["W1"])

    def test_lookup(self):
        """
        Summands, characters and invariants by name
        """
        entry = self.entry
        self.assertEqual(entry.summand_label("m1"), "Um1")
        self.assertEqual(entry.module(["W1", "m1"]).var_names, ("x1", "x2", "t_m1"))
        self.assertIs(entry.module(["W1", "m1"]), entry.module(["W1", "Um1"]))
        d3 = entry.invariant("d3")
        self.assertEqual(d3.labels, ["W1"])
        self.assertEqual(d3.weight.label, "m0")
        with self.assertRaises(UnknownEntry):
            entry.summand_label("W9")
        with self.assertRaises(UnknownEntry):
            entry.character("zz")
        with self.assertRaises(UnknownEntry):
            entry.invariant("nope")
        with self.assertRaises(ValidationFailure):
            entry.module(["W1", "W1"])

    def test_schema(self):
        """
        Every catalog file follows the entry schema
        """
        for filename in os.listdir(CATALOG_DIR):
            with open(os.path.join(CATALOG_DIR, filename), encoding="utf-8") as handle:
                self.assertTrue(CatalogEntry.is_json_valid(json.load(handle)), filename)
        self.assertFalse(CatalogEntry.is_json_valid({"name": "S3"}, raise_exception=False))
        with self.assertRaises(SchemaError):
            CatalogEntry.is_json_valid({"name": "S3"})


class TestTheoremSchema(TestCase):
    """
    Theorem script schema
    """

    def test_valid(self):
        """
        Scripts need checks with a known provenance
        """
        self.assertTrue(theorem_is_json_valid(script()))
        self.assertTrue(theorem_is_json_valid(script(checks=[
            {"op": "order", "expected": 6, "provenance": "published", "slow": True, "extra": [1]}])))
        self.assertFalse(theorem_is_json_valid(script(checks=[]), raise_exception=False))
        self.assertFalse(theorem_is_json_valid(script(checks=[
            {"op": "order", "expected": 6, "provenance": "folklore"}]), raise_exception=False))
        with self.assertRaises(SchemaError):
            theorem_is_json_valid(script(gap_id=[6]))


class TestCheckReport(TestCase):
    """
    Outcome of a scripted run
    """

    def test_report(self):
        """
        Skipped checks do not fail a report
        """
        report = CheckReport("thm-X", (6, 1), "title")
        report.add("order", True, 6, 6, "trivial")
        report.add("profile", False, {}, None, "derived", skipped=True)
        self.assertTrue(report.passed)
        self.assertIn("[skip] profile", report.to_text())
        self.assertTrue(report.to_text().startswith("PASS thm-X"))

        report.add("dimension", False, 2, 1, "published", note="degree 4")
        self.assertFalse(report.passed)
        data = report.to_json()
        self.assertEqual(data["gap_id"], [6, 1])
        self.assertFalse(data["passed"])
        self.assertEqual(len(data["checks"]), 3)
        self.assertIn("-- degree 4", report.to_text())
