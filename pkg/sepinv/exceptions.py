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


class SepInvException(Exception):
    """
    Generic Exception to identify the ones coming from sepinv
    """
    pass


class SepInvInputError(SepInvException):
    """
    Occurs when the caller provided inconsistent inputs
    """
    pass


class DimensionMismatch(SepInvInputError):
    """
    Occurs when a vector or matrix does not match the expected dimension
    """
    pass


class BadConductor(SepInvInputError):
    """
    Occurs when a cyclotomic value can't be embedded into the requested conductor
    """
    pass


class NoSuchRoot(SepInvInputError):
    """
    Occurs when the field has no root of unity of the requested order
    """
    pass


class ZeroScale(SepInvInputError):
    """
    Occurs when a summand is rescaled by zero
    """
    pass


class NonInvertible(SepInvInputError):
    """
    Occurs when a generator matrix is singular
    """
    pass


class NotAHomomorphism(SepInvInputError):
    """
    Occurs when values on generators do not extend to a group homomorphism
    """
    pass


class FieldMismatch(SepInvInputError):
    """
    Occurs when scalars from different base fields are combined
    """
    pass


class ModularCharacteristic(SepInvInputError):
    """
    Occurs when the field characteristic divides the group order
    """
    pass


class UnknownEntry(SepInvInputError):
    """
    Occurs when a catalog entry or a theorem script is not found
    """
    pass


class DivisionByZero(SepInvInputError, ZeroDivisionError):
    """
    Occurs when inverting the zero scalar
    """
    pass


class SepInvGuardError(SepInvException):
    """
    Occurs when a configured guard refuses a computation
    """
    pass


class OrderBoundExceeded(SepInvGuardError):
    """
    Occurs when a group closure grows beyond its order bound
    """
    pass


class SizeGuardExceeded(SepInvGuardError):
    """
    Occurs when the number of monomials, points or elements exceeds the guard
    """
    pass


class LengthGuard(SepInvGuardError):
    """
    Occurs when a sequence is too long for an exhaustive subset check
    """
    pass


class SepInvVerificationError(SepInvException):
    """
    Occurs when a recomputation disagrees with a stored claim
    """
    pass


class ValidationFailure(SepInvVerificationError):
    """
    Occurs when a catalog entry fails its load-time validation
    """
    pass


class CheckFailure(SepInvVerificationError):
    """
    Occurs when a scripted theorem check diverges from its expectation
    """
    pass


class InvarianceFailure(SepInvVerificationError):
    """
    Occurs when a polynomial is not a relative invariant of the claimed weight
    """
    pass


class CertificateMismatch(SepInvVerificationError):
    """
    Occurs when a separation certificate field does not match its recomputation
    """
    pass
