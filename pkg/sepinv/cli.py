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
import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from schema import SchemaError

from sepinv.api import SepInvAPI
from sepinv.exceptions import SepInvException
from sepinv.lib import DEFAULT_GUARD, OutputFormat, parse_gap_id
from sepinv.objects.certificate_ import SeparationCertificate
from sepinv.objects.config_ import RunConfig


def _dump(config, payload, text):
    """
    Write a result in the configured format, to the output path or stdout
    """
    if config.output_format == OutputFormat.JSON:
        content = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        content = text + "\n"
    if config.out:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(content)
    else:
        sys.stdout.write(content)


def cmd_list(api, args):
    """
    Catalog rows with the claimed Noether numbers
    """
    rows = api.catalog.list_entries(args.filter)
    lines = ["%-9s %-22s %5s %9s  %s" % ("gap_id", "group", "beta", "beta_sep", "reference")]
    for row in rows:
        lines.append("%-9s %-22s %5s %9s  %s" % ("(%s,%s)" % tuple(row["gap_id"]), row["name"], row["beta"],
                                                row["beta_sep"], row["reference"]))
    _dump(api.config, rows, "\n".join(lines))
    return 0


def cmd_invariants(api, args):
    """
    Basis of the relative invariants of a degree
    """
    entry = api.catalog.load_entry(parse_gap_id(args.gap_id))
    labels = args.module.split(",")
    module = entry.module(labels)
    weight = entry.character(args.weight) if args.weight else None
    basis = api.inv.weight_space_basis(module, api.config.cap(args.degree), weight)
    payload = basis.to_json()
    lines = ["%s %s weight %s degree %s: dim %s" % (entry.name, "+".join(module.labels), basis.weight.label,
                                                   basis.degree, basis.dim)]
    lines.extend("  %s" % text for text in payload["basis"])
    _dump(api.config, payload, "\n".join(lines))
    return 0


def _verify_worker(config_kwargs, theorem_id):
    # Runs in a worker process: a fresh API per theorem
    report = SepInvAPI(**config_kwargs).catalog.run_theorem_check(theorem_id)
    return report.to_json(), report.to_text()


def cmd_verify(api, args):
    """
    Run theorem scripts, in parallel when --jobs > 1
    """
    if args.slow:
        api.config.slow = True
    if args.all:
        ids = api.catalog.theorem_ids()
    elif args.theorem:
        ids = [args.theorem]
    else:
        raise ValueError("verify needs a theorem identifier or --all")
    if api.config.jobs > 1 and len(ids) > 1:
        kwargs = api.config.to_kwargs()
        with ProcessPoolExecutor(max_workers=api.config.jobs) as executor:
            results = list(executor.map(_verify_worker, [kwargs] * len(ids), ids))
    else:
        results = []
        for theorem_id in ids:
            report = api.catalog.run_theorem_check(theorem_id)
            results.append((report.to_json(), report.to_text()))
    reports = [r for r, _ in results]
    passed = all(r["passed"] for r in reports)
    _dump(api.config, {"passed": passed, "reports": reports}, "\n".join(t for _, t in results))
    return 0 if passed else 1


def cmd_davenport(api, args):
    """
    Davenport constant of a product of cyclic groups
    """
    value = api.zerosum.davenport(args.spec)
    _dump(api.config, {"group": args.spec, "davenport": value}, "D(%s) = %s" % (args.spec, value))
    return 0


def cmd_certificate(api, args):
    """
    Emit the certificate of a theorem, or check a certificate file
    """
    if args.action == "emit":
        cert = api.catalog.emit_certificate(args.target)
        if api.config.out:
            cert.save(api.config.out)
        else:
            sys.stdout.write(cert.dumps())
        return 0
    cert = SeparationCertificate.load(api, args.target)
    ok = api.sep.verify_certificate(cert, raise_exception=False)
    text = "%s %r" % ("PASS" if ok else "FAIL", cert)
    _dump(api.config, {"certificate": args.target, "passed": ok}, text)
    return 0 if ok else 1


def build_parser():
    """
    :rtype: argparse.ArgumentParser
    """
    parser = argparse.ArgumentParser(prog="sepinv", description="Invariants and separating sets of finite groups")
    parser.add_argument("--field", default="cyclotomic", help="cyclotomic or gf:q")
    parser.add_argument("--max-degree", type=int, default=None, help="cap lowering every degree cap")
    parser.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="largest monomial or point count")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    parser.add_argument("--jobs", type=int, default=1, help="parallel theorem checks")
    parser.add_argument("--out", default=None, help="output file (default: stdout)")
    parser.add_argument("--verbose", action="store_true", help="debug logs on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("list", help="catalog entries")
    sub.add_argument("--filter", default=None)
    sub.set_defaults(func=cmd_list)

    sub = commands.add_parser("invariants", help="basis of relative invariants")
    sub.add_argument("gap_id", help="e.g. 24,3")
    sub.add_argument("--module", required=True, help="comma separated summand labels")
    sub.add_argument("--degree", type=int, required=True)
    sub.add_argument("--weight", default=None, help="character key")
    sub.set_defaults(func=cmd_invariants)

    sub = commands.add_parser("verify", help="run theorem scripts")
    sub.add_argument("theorem", nargs="?", default=None)
    sub.add_argument("--all", action="store_true")
    sub.add_argument("--slow", action="store_true", help="run the best-effort checks too")
    sub.set_defaults(func=cmd_verify)

    sub = commands.add_parser("davenport", help="Davenport constant, e.g. C3xC3")
    sub.add_argument("spec")
    sub.set_defaults(func=cmd_davenport)

    sub = commands.add_parser("certificate", help="emit or check separation certificates")
    sub.add_argument("action", choices=["emit", "check"])
    sub.add_argument("target", help="theorem identifier (emit) or certificate path (check)")
    sub.set_defaults(func=cmd_certificate)
    return parser


def main(argv=None):
    """
    Command line entry point

    :returns: exit code, 0 iff every check passed
    :rtype: int
    """
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(field=args.field, max_degree=args.max_degree, guard=args.guard,
                           output_format=args.format, jobs=args.jobs, out=args.out,
                           log_level=logging.DEBUG if args.verbose else logging.WARNING)
        return args.func(SepInvAPI(config=config), args)
    except (SepInvException, SchemaError, OSError, TypeError, ValueError) as exc:
        sys.stderr.write("sepinv: %s: %s\n" % (type(exc).__name__, exc))
        return 1
