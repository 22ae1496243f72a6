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

from sepinv.lib import (DEFAULT_GUARD, OutputFormat, check_is_positive_int,
                        check_type, parse_field_spec)
from sepinv.objects.scalar_ import make_field


class RunConfig:
    """
    RunConfig gathers every setting of a run: base field, degree caps, size guard,
    output format, parallelism and the logger shared by the managers.
    """

    def __init__(self, field="cyclotomic", max_degree=None, guard=DEFAULT_GUARD, output_format=OutputFormat.TEXT,
                 jobs=1, out=None, slow=False, name="sepinv", log_level=logging.INFO):
        """
        Initialize the configuration

        :param field: base field choice, "cyclotomic" or "gf:q"
        :param max_degree: optional cap lowering every per-check degree cap
        :param guard: largest number of monomials (or points) one computation may touch
        :param output_format: report format
        :param jobs: number of parallel workers
        :param out: output path, stdout when None
        :param slow: run the best-effort checks as well
        :param name: logger name
        :param log_level: logging level

        :type field: str
        :type max_degree: int or None
        :type guard: int
        :type output_format: OutputFormat or str
        :type jobs: int
        :type out: str or None
        :type slow: bool
        :type name: str
        :type log_level: int
        """
        self.__field = None
        self.__max_degree = None
        self.__guard = None
        self.__output_format = None
        self.__jobs = None
        self.__out = None
        self.__slow = None

        self.field = field
        self.max_degree = max_degree
        self.guard = guard
        self.output_format = output_format
        self.jobs = jobs
        self.out = out
        self.slow = slow

        self.name = name
        self.log = logging.getLogger(str(self.name))
        if not self.log.handlers:
            self.log.addHandler(logging.StreamHandler())
        self.log.setLevel(log_level)

    @property
    def field(self):
        """
        Base field choice, "cyclotomic" or "gf:q"
        :rtype: str
        """
        return self.__field

    @field.setter
    def field(self, value):
        parse_field_spec(value)
        self.__field = value

    def field_handle(self):
        """
        Field object of the configured choice
        :rtype: CyclotomicField or GaloisField
        """
        return make_field(self.__field)

    @property
    def max_degree(self):
        """
        Global degree cap (None: per-check caps apply)
        :rtype: int or None
        """
        return self.__max_degree

    @max_degree.setter
    def max_degree(self, value):
        if value is not None:
            check_is_positive_int(value=value, var_name="max_degree")
        self.__max_degree = value

    def cap(self, degree):
        """
        Degree cap after applying max_degree
        :rtype: int
        """
        if self.__max_degree is None:
            return degree
        return min(degree, self.__max_degree)

    @property
    def guard(self):
        """
        Monomial count guard
        :rtype: int
        """
        return self.__guard

    @guard.setter
    def guard(self, value):
        check_is_positive_int(value=value, var_name="guard")
        self.__guard = value

    @property
    def output_format(self):
        """
        :rtype: OutputFormat
        """
        return self.__output_format

    @output_format.setter
    def output_format(self, value):
        check_type(value=value, allowed_types=[OutputFormat, str], var_name="output_format", raise_exception=True)
        self.__output_format = OutputFormat(value)

    @property
    def jobs(self):
        """
        Parallel width
        :rtype: int
        """
        return self.__jobs

    @jobs.setter
    def jobs(self, value):
        check_is_positive_int(value=value, var_name="jobs")
        self.__jobs = value

    @property
    def out(self):
        """
        Output path
        :rtype: str or None
        """
        return self.__out

    @out.setter
    def out(self, value):
        check_type(value=value, allowed_types=[str, None], var_name="out", raise_exception=True)
        self.__out = value

    @property
    def slow(self):
        """
        Run best-effort checks
        :rtype: bool
        """
        return self.__slow

    @slow.setter
    def slow(self, value):
        check_type(value=value, allowed_types=bool, var_name="slow", raise_exception=True)
        self.__slow = value

    def to_kwargs(self):
        """
        Constructor arguments, used to rebuild the configuration in worker processes
        :rtype: dict
        """
        return {"field": self.__field, "max_degree": self.__max_degree, "guard": self.__guard,
                "output_format": self.__output_format.value, "jobs": 1, "out": None,
                "slow": self.__slow, "name": self.name, "log_level": self.log.level}

    def __repr__(self):
        return "RunConfig(field=%s, guard=%s, jobs=%s)" % (self.__field, self.__guard, self.__jobs)

    def __str__(self):
        return self.__repr__()
