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
from sepinv.manager import (SepInvCatalogMgr, SepInvGroupMgr, SepInvInvariantMgr, SepInvModuleMgr,
                            SepInvSeparationMgr, SepInvZeroSumMgr)
from sepinv.objects.config_ import RunConfig


class SepInvAPI:
    """
    sepinv API

    Entry point of the invariant computations: holds the run configuration and one
    endpoint per concern (groups, modules, invariants, zero-sum sequences, separation,
    catalog).
    """

    def __init__(self, config=None, **kwargs):
        """
        Constructor

        :param config: run configuration
        :param kwargs: RunConfig arguments, used when config is None

        :type config: RunConfig or None
        """
        self.__config = None
        if config is not None:
            self.config = config
        else:
            self.config = RunConfig(**kwargs)

        self.group = SepInvGroupMgr(api=self)
        self.module = SepInvModuleMgr(api=self)
        self.inv = SepInvInvariantMgr(api=self)
        self.zerosum = SepInvZeroSumMgr(api=self)
        self.sep = SepInvSeparationMgr(api=self)
        self.catalog = SepInvCatalogMgr(api=self)

    @property
    def config(self):
        """
        Run configuration shared by the endpoints
        :rtype: RunConfig
        """
        return self.__config

    @config.setter
    def config(self, value):
        if isinstance(value, RunConfig):
            self.__config = value
        else:
            raise TypeError("Type of config shall be RunConfig, not %s" % (type(value)))

    def __repr__(self):
        return "sepinv API (%s)" % self.__config
