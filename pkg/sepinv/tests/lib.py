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

import logging

from sepinv import SepInvAPI
from sepinv.objects.matrix_ import ScalarMatrix
from sepinv.objects.polynomial_ import SparsePolynomial
from sepinv.objects.scalar_ import CyclotomicField


def quiet_api(**kwargs):
    """
    API whose logger only reports errors

    :param kwargs: RunConfig arguments
    :rtype: SepInvAPI
    """
    kwargs.setdefault("name", "sepinv.tests")
    kwargs.setdefault("log_level", logging.ERROR)
    return SepInvAPI(**kwargs)


def s3_natural(api):
    """
    Two-dimensional representation of S3 over Q(zeta3): a = diag(w, w^2), b swaps the coordinates

    :param api: the API to build with
    :type api: SepInvAPI

    :returns: (group, module, field)
    :rtype: tuple
    """
    field = CyclotomicField(3)
    w = field.root_of_unity(3)
    zero, one = field.zero, field.one
    a = ScalarMatrix.from_dense([[w, zero], [zero, w * w]])
    b = ScalarMatrix.from_dense([[zero, one], [one, zero]])
    group = api.group.close_group([a, b], order_bound=6, generator_names=["a", "b"])
    summand = api.module.summand(group, "V", generator_matrices=[a, b], var_names=["x1", "x2"])
    module = api.module.new(group, [summand], field=field)
    return group, module, field


def sign_character(api, group, field):
    """
    Sign character of the S3 built by s3_natural
    """
    return api.group.validate_character(group, [field.one, -field.one], label="sgn")


def cyclic_group(api, order, field=None):
    """
    Cyclic group of the given order acting by a primitive root on a line

    :returns: (group, module, field)
    :rtype: tuple
    """
    field = field or CyclotomicField(order)
    zeta = field.root_of_unity(order)
    group = api.group.close_group([ScalarMatrix.from_dense([[zeta]])], order_bound=order, generator_names=["a"])
    summand = api.module.summand(group, "V", generator_matrices=[ScalarMatrix.from_dense([[zeta]])],
                                 var_names=["x"])
    module = api.module.new(group, [summand], field=field)
    return group, module, field


def poly(field, nvars, terms):
    """
    Polynomial from integer coefficients, e.g. {(1, 1): 1, (2, 0): -3}
    :rtype: SparsePolynomial
    """
    return SparsePolynomial(nvars, {mono: field.from_int(coeff) for mono, coeff in terms.items()})
