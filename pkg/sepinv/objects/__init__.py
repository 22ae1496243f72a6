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
from pkgutil import extend_path

from sepinv.objects.generic_ import SepInvObject
from sepinv.objects.scalar_ import (CycRat, CyclotomicField, GaloisField, GFElem, embed, galois_field,
                                    make_field, root_of_unity, scalar_from_json, scalar_to_json)
from sepinv.objects.matrix_ import EchelonSpace, ScalarMatrix
from sepinv.objects.polynomial_ import Monomial, SparsePolynomial
from sepinv.objects.group_ import Automorphism, Character, FiniteGroup
from sepinv.objects.module_ import GModule, Summand
from sepinv.objects.basis_ import GeneratorProfile, WeightSpaceBasis
from sepinv.objects.zerosum_ import AbelianGroupTable, CharSequence
from sepinv.objects.certificate_ import SeparationCertificate
from sepinv.objects.entry_ import CatalogEntry, CheckReport
from sepinv.objects.config_ import RunConfig

__path__ = extend_path(__path__, __name__)
