#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

import itertools

from ra_buildings.building import chambers
from ra_buildings.cli import export
from ra_buildings.cli import suites
from ra_buildings.diagram import census
from ra_buildings.permgrp import groups
from ra_buildings.universal import extension
from ra_buildings.universal import portrait


def list_opts():
    """Options of every group, for oslo-config-generator."""
    return [
        ('building', itertools.chain(chambers.opts)),
        ('diagram', itertools.chain(census.opts)),
        ('export', itertools.chain(export.opts)),
        ('permgrp', itertools.chain(groups.opts)),
        ('suites', itertools.chain(suites.opts)),
        ('universal', itertools.chain(extension.opts, portrait.opts)),
    ]
