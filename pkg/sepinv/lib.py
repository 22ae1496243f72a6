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
import hashlib
import json
import re
from enum import Enum

# Default number of monomials (or points) a single computation may touch
DEFAULT_GUARD = 5000000


def check_type(value, allowed_types, var_name="variable", raise_exception=True):
    """
    Raises TypeError or returns False if value doesn't belong to the allowed types

    Subclasses of an allowed type are accepted, except bool standing for int.

    :param value: value to check
    :param allowed_types: list of allowed types, can be directly set to the type if only one is allowed
    :param var_name: name of the variable for the message
    :param raise_exception: indicates if an exception shall be raised in case of error

    :type value: any
    :type allowed_types: any
    :type var_name: str
    :type raise_exception: bool

    :returns: Check status depending on the requested mode (raise or bool)
    :rtype: bool

    :raises TypeError: if value doesn't belong to the allowed types
    """

    # Convert single type to a list of one type
    if not isinstance(allowed_types, list):
        allowed_types = [allowed_types]

    if value is None:
        if None in allowed_types:
            return True
    elif isinstance(value, bool) and bool not in allowed_types:
        pass
    elif any(isinstance(value, t) for t in allowed_types if t is not None):
        return True
    if raise_exception:
        raise TypeError("Type of %s shall belong to %s, not %s" % (var_name, allowed_types, type(value)))
    return False


def check_is_positive_int(value, var_name="variable", allow_zero=False, raise_exception=True):
    """
    Check if the value is a positive integer

    :param value: value to check
    :param var_name: name of the variable for the message
    :param allow_zero: accept 0 as well
    :param raise_exception: Indicate if an exception shall be raised (True, default) or not (False)

    :type value: int
    :type var_name: str
    :type allow_zero: bool
    :type raise_exception: bool

    :returns: the status of the check
    :rtype: bool

    :raises TypeError: if value is not an int
    :raises ValueError: if value is too small
    """
    if not check_type(value=value, allowed_types=int, var_name=var_name, raise_exception=raise_exception):
        return False
    if value < 0 or (value == 0 and not allow_zero):
        if raise_exception:
            raise ValueError("%s shall be a %s integer, got %s" % (
                var_name, "non-negative" if allow_zero else "positive", value))
        return False
    return True


def parse_gap_id(value):
    """
    Convert a GAP small group identifier to its (order, index) tuple

    Accepted forms: (24, 3), [24, 3], "24,3", "(24,3)", "24_3"

    :param value: identifier to convert
    :type value: tuple or list or str

    :returns: the (order, index) pair
    :rtype: tuple

    :raises TypeError: if value has an unexpected type
    :raises ValueError: if value is not well formatted
    """
    check_type(value=value, allowed_types=[tuple, list, str], var_name="gap_id", raise_exception=True)
    if isinstance(value, str):
        match = re.match(r"^\(?\s*(\d+)\s*[,_]\s*(\d+)\s*\)?$", value.strip())
        if match is None:
            raise ValueError("Malformed gap_id: '%s'" % value)
        value = (int(match.group(1)), int(match.group(2)))
    if len(value) != 2:
        raise ValueError("gap_id shall be an (order, index) pair, got %s" % (value,))
    for item in value:
        check_is_positive_int(value=item, var_name="gap_id item")
    return tuple(value)


def parse_field_spec(value):
    """
    Parse a field choice as accepted by the command line

    :param value: "cyclotomic" or "gf:q" where q is a prime power
    :type value: str

    :returns: (kind, q) where q is None for the cyclotomic field
    :rtype: tuple

    :raises ValueError: if the field is not recognized
    """
    check_type(value=value, allowed_types=str, var_name="field", raise_exception=True)
    if value == FieldKind.CYCLOTOMIC.value:
        return FieldKind.CYCLOTOMIC, None
    match = re.match(r"^gf:(\d+)$", value)
    if match is None:
        raise ValueError("Field shall be 'cyclotomic' or 'gf:q', got '%s'" % value)
    return FieldKind.GALOIS, int(match.group(1))


def canonical_json(data):
    """
    Deterministic JSON text (sorted keys, no superfluous spaces)

    :param data: JSON-able structure
    :type data: dict or list

    :rtype: str
    """
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def checksum(data):
    """
    sha256 of the canonical JSON text of data

    :param data: JSON-able structure
    :type data: dict or list

    :rtype: str
    """
    return hashlib.sha256(canonical_json(data).encode("utf-8")).hexdigest()


class FieldKind(Enum):
    """
    Base fields handled by the scalar layer
    """
    CYCLOTOMIC = "cyclotomic"
    GALOIS = "gf"


class OutputFormat(Enum):
    """
    Output format of the command line reports
    """
    TEXT = "text"
    JSON = "json"


class Provenance(Enum):
    """
    Where the expected value of a scripted check comes from
    """
    PUBLISHED = "published"
    DERIVED = "derived"
    TRIVIAL = "trivial"
