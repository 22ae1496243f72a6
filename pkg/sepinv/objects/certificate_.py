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

from schema import And, Optional, Schema, SchemaError, Use

from sepinv.lib import canonical_json, check_type
from sepinv.objects.generic_ import SepInvObject

CERTIFICATE_SCHEMA_VERSION = 1

CERTIFICATE_SCHEMA = Schema({
    'schema_version': CERTIFICATE_SCHEMA_VERSION,
    'theorem': And(str, len),
    'group': And([int], lambda x: len(x) == 2),
    'module': And([str], len),
    'field': And(Use(str), len),
    'v': list,
    'v2': list,
    'agree_bound': And(int, lambda d: d >= 0),
    'cells': [{
        'multidegree': [int],
        'dim': And(int, lambda d: d >= 0),
        'checksum': And(str, lambda c: len(c) == 64),
    }],
    'separator': {
        'nvars': And(int, lambda n: n > 0),
        'terms': list,
    },
    'separator_degree': And(int, lambda d: d > 0),
    'values': And(list, lambda x: len(x) == 2),
    'orbit_distinct': bool,
    'orbit_sizes': And([int], lambda x: len(x) == 2),
    Optional('note'): str,
})


class SeparationCertificate(SepInvObject):
    """
    Witness pair v, v2 of a lower bound on the separating degree: every invariant of
    degree at most agree_bound takes the same value on both points, a separator of the
    next degree does not, and the points lie in different orbits.

    The data is kept in its JSON form, see CERTIFICATE_SCHEMA.
    """

    def __init__(self, api, data=None):
        """
        :param api: see SepInvObject
        :param data: certificate content

        :type api: SepInvAPI
        :type data: dict or None
        """
        super().__init__(api)
        self.__data = None
        self.data = data

    @property
    def data(self):
        """
        Certificate content as JSON-able dict
        :rtype: dict
        """
        return self.__data

    @data.setter
    def data(self, value):
        check_type(value=value, allowed_types=[dict, None], var_name="data", raise_exception=True)
        if value is not None:
            self.is_json_valid(data=value)
        self.__data = value

    @property
    def theorem(self):
        """
        :rtype: str
        """
        return self.__data["theorem"]

    @property
    def gap_id(self):
        """
        :rtype: tuple
        """
        return tuple(self.__data["group"])

    @property
    def labels(self):
        """
        Summand labels of the module
        :rtype: list
        """
        return list(self.__data["module"])

    @property
    def agree_bound(self):
        """
        :rtype: int
        """
        return self.__data["agree_bound"]

    @staticmethod
    def is_json_valid(data, raise_exception=True):
        """
        Check if the provided JSON (as a dict) is a well-formed certificate

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
            CERTIFICATE_SCHEMA.validate(data)
            return True
        except SchemaError:
            if raise_exception:
                raise
            return False

    def dumps(self):
        """
        Canonical text of the certificate, identical for identical content
        :rtype: str
        """
        return canonical_json(self.__data) + "\n"

    def save(self, path):
        """
        Write the certificate to a file

        :param path: destination
        :type path: str
        """
        check_type(value=path, allowed_types=str, var_name="path", raise_exception=True)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(self.dumps())

    @classmethod
    def load(cls, api, path):
        """
        Read a certificate file

        :param api: the API the certificate is verified with
        :param path: source file

        :type api: SepInvAPI
        :type path: str

        :rtype: SeparationCertificate

        :raises SchemaError: if the content is not a certificate
        :raises ValueError: if the file is not JSON
        """
        check_type(value=path, allowed_types=str, var_name="path", raise_exception=True)
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
        return cls(api, data)

    def verify(self, raise_exception=True):
        """
        Recompute every claim of the certificate

        :param raise_exception: Indicates if exceptions shall be raised (True, default) or not (False)
        :type raise_exception: bool

        :returns: the status of the verification
        :rtype: bool

        :raises CertificateMismatch: naming the first diverging cell or value
        :raises InvarianceFailure: if the separator is not invariant
        """
        return self.api.sep.verify_certificate(self, raise_exception=raise_exception)

    def __repr__(self):
        if self.__data is None:
            return "SeparationCertificate(empty)"
        return "SeparationCertificate(%s, group=%s, module=%s, agree<=%s)" % (
            self.theorem, self.gap_id, "+".join(self.labels), self.agree_bound)
