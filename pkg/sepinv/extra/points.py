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

import re

import numpy as np
import sympy as sp

from sepinv.lib import check_is_positive_int
from sepinv.objects.scalar_ import GaloisField

# Random integer coordinates are drawn in [-bound, bound]
DEFAULT_BOUND = 9

# Free parameters of a point family are named r1, r2, ...
PARAMETER = re.compile(r"\br(\d+)\b")


def _flatten(items):
    result = []
    for item in items:
        if isinstance(item, (list, tuple)):
            result.extend(_flatten(item))
        else:
            result.append(item)
    return result


def random_point(field, dim, rng, bound=DEFAULT_BOUND, nonzero=True):
    """
    Generates a random point: integer coordinates in [-bound, bound] in characteristic 0,
    uniform elements over a finite field

    :param field: base field handle
    :param dim: number of coordinates
    :param rng: random generator
    :param bound: coordinate bound (characteristic 0)
    :param nonzero: redraw the zero vector

    :type field: CyclotomicField or GaloisField
    :type dim: int
    :type rng: numpy.random.Generator
    :type bound: int
    :type nonzero: bool

    :rtype: list
    """
    check_is_positive_int(value=dim, var_name="dim")
    while True:
        if isinstance(field, GaloisField):
            point = [field.element(int(x)) for x in rng.integers(0, field.q, size=dim)]
        else:
            point = [field.from_int(int(x)) for x in rng.integers(-bound, bound + 1, size=dim)]
        if not nonzero or any(not x.is_zero() for x in point):
            return point


def random_points(module, count, seed=0, bound=DEFAULT_BOUND, nonzero=True):
    """
    Generates count reproducible random points of a module

    :param module: the module
    :param count: number of points
    :param seed: seed of the generator
    :param bound: coordinate bound (characteristic 0)
    :param nonzero: exclude the zero vector

    :type module: GModule
    :type count: int
    :type seed: int
    :type bound: int
    :type nonzero: bool

    :rtype: list
    """
    check_is_positive_int(value=count, var_name="count")
    rng = np.random.default_rng(seed)
    return [random_point(module.field, module.dim, rng, bound, nonzero) for _ in range(count)]


def family_points(entry, coords, count, seed=0, bound=10 ** 6):
    """
    Generates points of a structural family, e.g. ["r1", "-r1", "w*r2"]

    Each parameter r1, r2, ... is replaced by a random nonzero integer of absolute value
    at most bound, drawn independently for every point. The coordinates may use the
    root names of the entry and be nested per summand.

    :param entry: catalog entry the coordinates are written for
    :param coords: coordinate expressions
    :param count: number of points
    :param seed: seed of the generator
    :param bound: parameter bound

    :type entry: CatalogEntry
    :type coords: list
    :type count: int
    :type seed: int
    :type bound: int

    :rtype: list
    """
    check_is_positive_int(value=count, var_name="count")
    coords = [str(c) for c in _flatten(coords)]
    names = sorted({"r%s" % m for c in coords for m in PARAMETER.findall(c)})
    rng = np.random.default_rng(seed)
    points = []
    for _ in range(count):
        values = rng.integers(1, bound + 1, size=len(names)) * rng.choice([-1, 1], size=len(names))
        extra = {name: sp.Integer(int(value)) for name, value in zip(names, values)}
        points.append([entry.scalar(c, extra) for c in coords])
    return points
