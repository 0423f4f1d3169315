#
# Copyright (c) 2024 - present.  The kpcheck authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
from __future__ import (
    absolute_import, division, print_function, unicode_literals
)
import os
from collections import OrderedDict

SCHEMA_VERSION = 1
VERSION_FILE = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'VERSION')


def get_version(filename=VERSION_FILE):
    """ First non-blank line of the VERSION file, 'unknown' if it is missing """
    try:
        with open(filename, 'r') as f:
            for line in f:
                line = line.strip().lower()
                if len(line) > 0:
                    return line
    except IOError:
        pass
    return 'unknown'


class ReportHeading(object):
    """ Identifies the tool and report layout in every emitted report """
    def __init__(self, name='kpcheck', version=None, schema_version=SCHEMA_VERSION):
        self.name = name
        self.version = version if version is not None else get_version()
        self.schema_version = schema_version

    def __str__(self):
        return '{} {} (schema {})'.format(self.name, self.version, self.schema_version)

    def to_dict(self):
        return OrderedDict([('name', self.name),
                            ('version', self.version),
                            ('schema_version', self.schema_version)])
