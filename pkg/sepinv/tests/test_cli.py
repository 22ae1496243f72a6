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

import io
import json
import os
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from unittest import TestCase

from sepinv.cli import build_parser, main


def run(*argv):
    """
    Run the command line, capturing both streams

    :returns: (exit code, stdout, stderr)
    :rtype: tuple
    """
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestCli(TestCase):
    """
    sepinv command line
    """

    def test_list(self):
        """
        Catalog table, as text and JSON
        """
        code, out, _ = run("list")
        self.assertEqual(code, 0)
        self.assertEqual(len(out.strip().splitlines()), 11)
        self.assertIn("H27", out)

        code, out, _ = run("--format", "json", "list", "--filter", "S4")
        self.assertEqual(code, 0)
        self.assertEqual([r["gap_id"] for r in json.loads(out)], [[24, 12]])

    def test_davenport(self):
        """
        Davenport constants and malformed group specs
        """
        code, out, _ = run("davenport", "C3xC3")
        self.assertEqual((code, out), (0, "D(C3xC3) = 5\n"))

        code, out, _ = run("--format", "json", "davenport", "C2xC4")
        self.assertEqual(json.loads(out), {"group": "C2xC4", "davenport": 5})

        code, out, err = run("davenport", "C3xD4")
        self.assertEqual(code, 1)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("sepinv: ValueError:"))

    def test_invariants(self):
        """
        Basis of the degree 2 invariants of S4
        """
        code, out, _ = run("invariants", "24,12", "--module", "V", "--degree", "2")
        self.assertEqual(code, 0)
        self.assertIn("dim 2", out.splitlines()[0])

        code, out, _ = run("--format", "json", "invariants", "24,12", "--module", "V", "--degree", "2")
        self.assertEqual(len(json.loads(out)["basis"]), 2)

        code, _, err = run("--field", "gf:3", "invariants", "24,12", "--module", "V", "--degree", "2")
        self.assertEqual(code, 1)
        self.assertIn("ModularCharacteristic", err)

        code, _, err = run("invariants", "99,1", "--module", "V", "--degree", "2")
        self.assertEqual(code, 1)
        self.assertIn("UnknownEntry", err)

    def test_verify(self):
        """
        Theorem scripts drive the exit code
        """
        code, out, _ = run("--format", "json", "verify", "thm-C3C3C2")
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertTrue(payload["passed"])
        self.assertEqual([r["theorem"] for r in payload["reports"]], ["thm-C3C3C2"])

        code, _, err = run("verify")
        self.assertEqual(code, 1)
        self.assertIn("needs a theorem identifier", err)

        code, _, err = run("verify", "thm-nothing")
        self.assertEqual(code, 1)
        self.assertIn("UnknownEntry", err)

    def test_certificate(self):
        """
        Emitted certificates check, tampered ones do not
        """
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "h27.json")
            code, _, _ = run("--out", path, "certificate", "emit", "thm-H27")
            self.assertEqual(code, 0)
            self.assertTrue(os.path.isfile(path))

            code, out, _ = run("certificate", "check", path)
            self.assertEqual(code, 0)
            self.assertTrue(out.startswith("PASS"))

            with open(path, encoding="utf-8") as handle:
                data = json.load(handle)
            data["separator_degree"] += 1
            with open(path, "w", encoding="utf-8") as handle:
                json.dump(data, handle)
            code, out, _ = run("certificate", "check", path)
            self.assertEqual(code, 1)
            self.assertTrue(out.startswith("FAIL"))

            code, _, err = run("certificate", "check", os.path.join(tmp, "missing.json"))
            self.assertEqual(code, 1)
            self.assertIn("sepinv:", err)

    def test_parser(self):
        """
        A subcommand is required
        """
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit):
                build_parser().parse_args([])
        args = build_parser().parse_args(["--jobs", "2", "verify", "--all", "--slow"])
        self.assertEqual(args.jobs, 2)
        self.assertTrue(args.all)
        self.assertTrue(args.slow)
        self.assertIsNone(args.theorem)

    def test_rerun_identical(self):
        """
        Two runs print the same certificate
        """
        code, first, _ = run("certificate", "emit", "thm-C3C3C2")
        self.assertEqual(code, 0)
        self.assertEqual(run("certificate", "emit", "thm-C3C3C2")[1], first)
        self.assertEqual(json.loads(first)["separator_degree"], 6)
