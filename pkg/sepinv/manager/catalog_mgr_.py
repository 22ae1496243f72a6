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

from schema import SchemaError

from sepinv.exceptions import (CheckFailure, InvarianceFailure, ModularCharacteristic, NotAHomomorphism,
                               OrderBoundExceeded, SepInvException, UnknownEntry, ValidationFailure)
from sepinv.extra.points import family_points, random_points
from sepinv.lib import FieldKind, check_type, parse_field_spec, parse_gap_id
from sepinv.manager.generic_mgr_ import SepInvGenericEndPoint
from sepinv.objects.entry_ import (CatalogEntry, CheckReport, NamedInvariant, character_label,
                                   theorem_is_json_valid)
from sepinv.objects.matrix_ import ScalarMatrix
from sepinv.objects.polynomial_ import SparsePolynomial
from sepinv.objects.scalar_ import CyclotomicField, galois_field, scalar_from_json
from sepinv.objects.zerosum_ import AbelianGroupTable

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")
CATALOG_DIR = os.path.join(DATA_DIR, "catalog")
THEOREM_DIR = os.path.join(DATA_DIR, "theorems")

# Field of the theorem checks without an explicit "field"
DEFAULT_CHECK_FIELD = "cyclotomic"


def _read_json(path):
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


class SepInvCatalogMgr(SepInvGenericEndPoint):
    """
    sepinv EndPoint specific to the catalog: loading and validating entries, listing
    them and running the theorem scripts
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.__entries = {}

    @staticmethod
    def entry_path(gap_id):
        """
        :type gap_id: tuple
        :rtype: str
        """
        return os.path.join(CATALOG_DIR, "%s_%s.json" % tuple(gap_id))

    def list_entries(self, filter_text=None):
        """
        Header of every catalog entry, sorted by gap_id

        :param filter_text: keep the rows whose "(order,index) name" contains this text
                            (case insensitive)
        :type filter_text: str or None

        :returns: rows with gap_id, name, beta, beta_sep and reference
        :rtype: list of dict
        """
        check_type(value=filter_text, allowed_types=[str, None], var_name="filter_text", raise_exception=True)
        rows = []
        for filename in os.listdir(CATALOG_DIR):
            if not filename.endswith(".json"):
                continue
            data = _read_json(os.path.join(CATALOG_DIR, filename))
            row = {"gap_id": list(data["gap_id"]), "name": data["name"], "beta": data["beta"],
                   "beta_sep": data["beta_sep"], "reference": data["reference"]}
            text = "(%s,%s) %s" % (row["gap_id"][0], row["gap_id"][1], row["name"])
            if filter_text and filter_text.lower() not in text.lower():
                continue
            rows.append(row)
        rows.sort(key=lambda r: tuple(r["gap_id"]))
        return rows

    def _field_for(self, field, conductor):
        kind, q = parse_field_spec(field)
        if kind == FieldKind.CYCLOTOMIC:
            return CyclotomicField(conductor)
        return galois_field(q)

    def load_entry(self, gap_id, field=None):
        """
        Read and validate a catalog entry, cached per gap_id and field

        :param gap_id: (order, index) or any form accepted by parse_gap_id
        :param field: field choice (default: the configured one)

        :type gap_id: tuple or list or str
        :type field: str or None

        :rtype: CatalogEntry

        :raises UnknownEntry: if the catalog has no such entry
        :raises ValidationFailure: naming the violated relation, homomorphism or invariance
        :raises ModularCharacteristic: if the field characteristic divides the group order
        :raises NoSuchRoot: if the finite field lacks the roots of unity of the entry
        """
        gap_id = parse_gap_id(gap_id)
        if field is None:
            field = self.api.config.field
        key = (gap_id, field)
        entry = self.__entries.get(key)
        if entry is not None:
            return entry
        path = self.entry_path(gap_id)
        if not os.path.isfile(path):
            raise UnknownEntry("No catalog entry for %s" % (gap_id,))
        data = _read_json(path)
        try:
            entry = CatalogEntry(self.api, data, self._field_for(field, data.get("conductor", 1)))
        except SchemaError as exc:
            raise ValidationFailure("Malformed catalog entry %s: %s" % (path, exc))
        if tuple(data["gap_id"]) != gap_id:
            raise ValidationFailure("%s holds the entry %s" % (path, data["gap_id"]))
        self._build(entry)
        self.__entries[key] = entry
        self.log.info("Loaded %r over %r", entry, entry.field)
        return entry

    def _matrices(self, entry, label):
        rep = entry.data["representations"][label]
        mats = []
        for gen in entry.data["generators"]:
            if gen not in rep["matrices"]:
                raise ValidationFailure("%s has no matrix for the generator %s" % (label, gen))
            mats.append(ScalarMatrix.from_dense([[entry.scalar(x) for x in row] for row in rep["matrices"][gen]]))
        return mats

    def _build(self, entry):
        data = entry.data
        order = entry.gap_id[0]
        gens = data["generators"]
        matrices = {label: self._matrices(entry, label) for label in data["representations"]}

        for label in data["faithful"]:
            if label not in matrices:
                raise ValidationFailure("Unknown faithful representation %s" % label)
        faithful = [ScalarMatrix.block_diagonal([matrices[label][s] for label in data["faithful"]])
                    for s in range(len(gens))]
        try:
            group = self.api.group.close_group(faithful, order_bound=order, generator_names=gens)
        except OrderBoundExceeded:
            raise ValidationFailure("%s generates more than %s elements" % ("+".join(data["faithful"]), order))
        if group.order != order:
            raise ValidationFailure("%s generates %s elements, %s expected" % (
                "+".join(data["faithful"]), group.order, order))
        for word in data["relations"]:
            if group.element_from_word(word) != 0:
                raise ValidationFailure("Relation %s = 1 does not hold" % word)
        p = entry.field.characteristic
        if p and order % p == 0:
            raise ModularCharacteristic("Characteristic %s divides |G| = %s" % (p, order))
        entry.group = group

        for label, rep in data["representations"].items():
            summand = self.api.module.summand(group, label, matrices[label], var_names=rep["vars"])
            # validates the homomorphism property on every Cayley edge
            self.api.module.new(group, [summand], entry.field)
            entry.summands[label] = summand

        for key, char in data.get("characters", {}).items():
            values = [entry.scalar(char["values"][gen]) for gen in gens]
            try:
                chi = self.api.group.validate_character(group, values, label=key)
            except NotAHomomorphism as exc:
                raise ValidationFailure("Character %s: %s" % (key, exc))
            entry.characters[key] = chi
            entry.summands[character_label(key)] = self.api.module.summand(
                group, character_label(key), character=chi, var_names=[char["var"]])

        for label, images in data.get("automorphisms", {}).items():
            try:
                entry.automorphisms[label] = self.api.group.new_automorphism(group, [images[g] for g in gens], label)
            except (NotAHomomorphism, KeyError) as exc:
                raise ValidationFailure("Automorphism %s: %s" % (label, exc))

        for name, spec in data.get("invariants", {}).items():
            if isinstance(spec, str):
                spec = {"expr": spec}
            labels = spec.get("module")
            if labels is None:
                used = entry.names_in(spec["expr"])
                labels = [label for label, s in entry.summands.items() if used & set(s.var_names)]
            weight = entry.character(spec["weight"]) if "weight" in spec else None
            poly = entry.polynomial(spec["expr"], labels)
            try:
                self.api.inv.check_invariance(entry.module(labels), poly, weight)
            except InvarianceFailure as exc:
                raise ValidationFailure("Invariant %s: %s" % (name, exc))
            entry.invariants[name] = NamedInvariant(name, list(labels), weight, poly)

    def theorem_ids(self):
        """
        Identifiers of the theorem scripts, sorted
        :rtype: list of str
        """
        return sorted(f[:-len(".json")] for f in os.listdir(THEOREM_DIR) if f.endswith(".json"))

    def load_theorem(self, theorem_id):
        """
        Read a theorem script

        :type theorem_id: str
        :rtype: dict

        :raises UnknownEntry: if no script has this identifier
        :raises ValidationFailure: if the script is malformed
        """
        check_type(value=theorem_id, allowed_types=str, var_name="theorem_id", raise_exception=True)
        path = os.path.join(THEOREM_DIR, "%s.json" % theorem_id)
        if not os.path.isfile(path):
            raise UnknownEntry("No theorem script %s" % theorem_id)
        data = _read_json(path)
        try:
            theorem_is_json_valid(data)
        except SchemaError as exc:
            raise ValidationFailure("Malformed theorem script %s: %s" % (theorem_id, exc))
        if data["theorem"] != theorem_id:
            raise ValidationFailure("%s holds the script %s" % (path, data["theorem"]))
        return data

    def run_theorem_check(self, theorem_id, raise_exception=False):
        """
        Run every check of a theorem script and compare with its expectations

        Checks marked slow are skipped unless the configuration enables them.

        :param theorem_id: script identifier
        :param raise_exception: raise on the first failing check (True) or record it (False)

        :type theorem_id: str
        :type raise_exception: bool

        :rtype: CheckReport

        :raises CheckFailure: with the first diverging quantity, when raise_exception is set
        """
        script = self.load_theorem(theorem_id)
        report = CheckReport(theorem_id, script["gap_id"], script["title"])
        used = {}
        for check in script["checks"]:
            op = check["op"]
            handler = getattr(self, "_op_%s" % op, None)
            if handler is None:
                raise ValidationFailure("Unknown check %s in %s" % (op, theorem_id))
            if check.get("slow") and not self.api.config.slow:
                self.log.warning("%s: slow check %s skipped", theorem_id, op)
                report.add(op, False, check["expected"], None, check["provenance"], check.get("note", ""),
                           skipped=True)
                continue
            try:
                entry = self.load_entry(script["gap_id"], field=check.get("field", DEFAULT_CHECK_FIELD))
                used[entry.field.spec] = entry
                observed, passed = handler(entry, check, theorem_id)
            except SepInvException as exc:
                observed, passed = "%s: %s" % (type(exc).__name__, exc), False
            report.add(op, passed, check["expected"], observed, check["provenance"], check.get("note", ""))
            if passed:
                self.log.debug("%s: %s ok", theorem_id, op)
                continue
            self.log.error("%s: %s expected %s, observed %s", theorem_id, op, check["expected"], observed)
            if raise_exception:
                self._release(used)
                raise CheckFailure("%s: %s expected %s, observed %s" % (theorem_id, op, check["expected"], observed))
        self._release(used)
        self.log.info("%r", report)
        return report

    def _release(self, entries):
        # bases and substitution caches only serve the checks of one script
        for entry in entries.values():
            self.log.debug("Released the caches of %s modules of %r", entry.clear_caches(), entry)

    def emit_certificate(self, theorem_id):
        """
        Certificate of the first certificate check of a theorem script, verified

        :type theorem_id: str
        :rtype: SeparationCertificate

        :raises UnknownEntry: if the script has no certificate check
        """
        script = self.load_theorem(theorem_id)
        for check in script["checks"]:
            if check["op"] == "certificate":
                entry = self.load_entry(script["gap_id"], field=check.get("field", DEFAULT_CHECK_FIELD))
                cert = self._certificate(entry, check, theorem_id)
                self.api.sep.verify_certificate(cert)
                return cert
        raise UnknownEntry("%s has no certificate check" % theorem_id)

    # Scripted checks: each returns (observed, passed)

    @staticmethod
    def _poly(entry, check, key="expr"):
        return entry.polynomial(check[key], check["module"])

    @staticmethod
    def _weight(entry, check):
        key = check.get("weight")
        return entry.character(key) if key is not None else None

    def _points(self, entry, check):
        module = entry.module(check["module"])
        if "points" in check:
            return [entry.point(raw, check["module"]) for raw in check["points"]]
        if "family" in check:
            return family_points(entry, check["family"], check.get("count", 20), check.get("seed", 0))
        if "point" in check:
            return [entry.point(check["point"], check["module"])]
        return random_points(module, check["random"], check.get("seed", 0))

    def _certificate(self, entry, check, theorem_id):
        return self.api.sep.build_certificate(
            entry, check["module"], entry.point(check["v"], check["module"]),
            entry.point(check["v2"], check["module"]), check["agree_bound"], theorem_id)

    def _op_certificate(self, entry, check, theorem_id):
        cert = self._certificate(entry, check, theorem_id)
        verified = self.api.sep.verify_certificate(cert, raise_exception=False)
        values = [scalar_from_json(x) for x in cert.data["values"]]
        separator = SparsePolynomial.from_json(cert.data["separator"])
        observed = {"separator_degree": cert.data["separator_degree"], "values": [str(x) for x in values],
                    "separator": separator.to_str(entry.module(check["module"]).var_names)}
        expected = check["expected"]
        passed = verified and cert.data["separator_degree"] == expected["separator_degree"]
        if "values" in expected:
            passed = passed and values == [entry.scalar(x) for x in expected["values"]]
        return observed, passed

    def _op_profile(self, entry, check, _):
        cap = self.api.config.cap(check["cap"])
        profile = self.api.inv.generator_profile(entry.module(check["module"]), cap,
                                                 full_products=check.get("full_products", False))
        observed = {str(d): c for d, c in sorted(profile.counts.items())}
        if "max_degree" in check["expected"]:
            # only the top generator degree is claimed
            return {"max_degree": profile.max_degree()}, profile.max_degree() == check["expected"]["max_degree"]
        expected = {k: v for k, v in check["expected"].items() if int(k) <= cap}
        return observed, observed == expected

    def _op_identity(self, entry, check, _):
        observed = self._poly(entry, check, "lhs") == self._poly(entry, check, "rhs")
        return observed, observed == check["expected"]

    def _op_invariance(self, entry, check, _):
        observed = self.api.inv.check_invariance(entry.module(check["module"]), self._poly(entry, check),
                                                 self._weight(entry, check), raise_exception=False)
        return observed, observed == check["expected"]

    def _op_stabilizer(self, entry, check, _):
        module = entry.module(check["module"])
        group = entry.group
        if "generated_by" in check:
            stab = self.api.group.stabilizer(module, entry.point(check["point"], check["module"]))
            observed = stab == sorted(self.api.group.subgroup_generated(group, check["generated_by"]))
            return observed, observed == check["expected"]
        orders = [len(self.api.group.stabilizer(module, v)) for v in self._points(entry, check)]
        if "points" in check:
            return orders, orders == check["expected"]
        observed = sorted(set(orders))
        return observed, observed == [check["expected"]]

    def _op_davenport(self, entry, check, _):
        if "characters" in check:
            table, _ = AbelianGroupTable.from_characters([entry.character(k) for k in check["characters"]])
        else:
            table = AbelianGroupTable.from_spec(check["group"])
        observed = self.api.zerosum.davenport(table)
        return observed, observed == check["expected"]

    def _op_ff_beta_sep(self, entry, check, _):
        observed = self.api.sep.finite_field_beta_sep(entry.module(check["module"]), check.get("d_max"))
        return observed, observed == check["expected"]

    def _op_agree(self, entry, check, _):
        module = entry.module(check["module"])
        agree, separator = self.api.sep.agree_up_to_degree(
            module, entry.point(check["v"], check["module"]), entry.point(check["v2"], check["module"]),
            check["degree"])
        if separator is not None:
            self.log.debug("Separator %s", separator.to_str(module.var_names))
        return agree, agree == check["expected"]

    def _op_orbits_equal(self, entry, check, _):
        observed = self.api.sep.orbits_equal(entry.module(check["module"]), entry.point(check["v"], check["module"]),
                                             entry.point(check["v2"], check["module"]))
        return observed, observed == check["expected"]

    def _op_evaluate(self, entry, check, _):
        module = entry.module(check["module"])
        value = self.api.module.evaluate(module, self._poly(entry, check), entry.point(check["point"], check["module"]))
        if check["expected"] == "nonzero":
            return str(value), not value.is_zero()
        return str(value), value == entry.scalar(check["expected"])

    def _op_kernel(self, entry, check, _):
        if "character" in check:
            kernel = self.api.group.kernel(entry.character(check["character"]))
        else:
            kernel = self.api.group.representation_kernel(entry.summands[entry.summand_label(check["summand"])])
        passed = len(kernel) == check["expected"]
        if "generated_by" in check:
            passed = passed and sorted(kernel) == sorted(
                self.api.group.subgroup_generated(entry.group, check["generated_by"]))
        return len(kernel), passed

    def _op_dimension(self, entry, check, _):
        basis = self.api.inv.weight_space_basis(entry.module(check["module"]), check.get("degree"),
                                                self._weight(entry, check), check.get("multidegree"))
        return basis.dim, basis.dim == check["expected"]

    def _op_complement(self, entry, check, _):
        module = entry.module(check["module"])
        chi = self._weight(entry, check)
        complement = self.api.inv.hilbert_complement(module, chi, check["degree"])
        passed = complement.dim == check["expected"]
        if "representatives" in check:
            space = self.api.inv.ideal_part(module, chi, check["degree"])
            for text in check["representatives"]:
                rep = entry.polynomial(text, check["module"])
                passed = passed and self.api.inv.check_invariance(module, rep, chi, raise_exception=False)
                passed = passed and space.insert(rep.terms)
        return complement.dim, passed

    def _op_twist(self, entry, check, _):
        twisted = self.api.module.twist_by_automorphism(entry.module(check["module"]),
                                                        entry.automorphisms[check["automorphism"]])
        observed = self.api.module.trace_equal(twisted, entry.module(check["other"]))
        return observed, observed == check["expected"]

    def _op_automorphism(self, entry, check, _):
        group = entry.group
        image = self.api.group.apply_automorphism(entry.automorphisms[check["automorphism"]], check["element"])
        return group.word_of(image), image == group.element_from_word(check["expected"])

    def _op_element_order(self, entry, check, _):
        observed = self.api.group.element_order(entry.group, check["element"])
        return observed, observed == check["expected"]

    def _op_assemble(self, entry, check, _):
        generators, truncated = self.api.inv.assemble_VU_generators(entry.module(check["module"]),
                                                                    self.api.config.cap(check["cap"]))
        degrees = sorted(f.degree for f in generators)
        observed = {"degrees": degrees, "max_degree": max(degrees) if degrees else 0, "truncated": truncated}
        return observed, all(observed[k] == v for k, v in check["expected"].items())

    def _op_zero_locus(self, entry, check, _):
        report = self.api.sep.zero_locus_check(entry.module(check["module"]), entry.character(check["weight"]),
                                               check["degree"], self._points(entry, check))
        observed = {"points": report["points"], "unstable": report["unstable"], "vanishing": report["vanishing"],
                    "bound_limited": len(report["bound_limited"])}
        return observed, all(observed[k] == v for k, v in check["expected"].items())

    def _op_characters(self, entry, check, _):
        observed = len(entry.characters)
        return observed, observed == check["expected"]

    def _op_not_character(self, entry, check, _):
        values = [entry.scalar(check["values"][gen]) for gen in entry.group.generator_names]
        try:
            self.api.group.validate_character(entry.group, values)
            observed = False
        except NotAHomomorphism:
            observed = True
        return observed, observed == check["expected"]

    def _op_order(self, entry, check, _):
        return entry.group.order, entry.group.order == check["expected"]

    def _op_oracle(self, entry, check, _):
        module = entry.module(check["module"])
        weights = [None] + [entry.character(k) for k in check.get("weights", sorted(entry.characters))]
        compared = 0
        mismatches = []
        for degree in range(check["degree"] + 1):
            for chi in weights:
                oracle, built = self.api.inv.compare_with_oracle(module, degree, chi)
                compared += 1
                if oracle != built:
                    mismatches.append([degree, chi.label if chi is not None else "1", oracle, built])
        observed = {"compared": compared, "mismatches": mismatches}
        return observed, not mismatches and compared == check["expected"].get("compared", compared)
