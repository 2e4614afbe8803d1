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

"""Diagrams, groups and specification documents shared by the tests."""

import json

from ra_buildings.building import chambers
from ra_buildings.cli import spec as spec_mod
from ra_buildings.diagram import graph
from ra_buildings.permgrp import groups
from ra_buildings.words import normal_form


SYM3 = [[1, 0, 2], [1, 2, 0]]
C3 = [[1, 2, 0]]
TRANSPOSITION = [[1, 0, 2]]
TRIVIAL = []

CYCLE = (1, 2, 0)
SWAP = (1, 0, 2)


def tree_diagram():
    return graph.Diagram([1, 2], [[1, 2]])


def ladder_diagram():
    return graph.Diagram([1, 2, 3], [[2, 3]])


def pentagon_diagram():
    return graph.Diagram([1, 2, 3, 4, 5],
                         [[1, 2], [2, 3], [3, 4], [4, 5], [5, 1]])


def triangle_diagram():
    return graph.Diagram([1, 2, 3], [[1, 2], [2, 3], [3, 1]])


def params(diagram, q=3):
    return normal_form.Parameters(dict((t, q) for t in diagram.types))


def building(diagram, q=3):
    return chambers.Building(diagram, params(diagram, q))


def word(*pairs):
    return tuple(normal_form.Letter(t, c) for t, c in pairs)


def group(generators, degree=3):
    return groups.PermGroup(degree, generators)


def local_data(diagram, generators=SYM3, degree=3, **overrides):
    """Mapping type -> PermGroup; overrides maps 't<label>' to
    generator lists.
    """
    data = {}
    for t in diagram.types:
        data[t] = group(overrides.get('t%s' % t, generators), degree)
    return data


def make_spec(diagram, local=None, acute=None, q=3):
    if local is None:
        local = local_data(diagram)
    return spec_mod.BuildingSpec(diagram, params(diagram, q), local, acute)


def spec_document(diagram, generators=SYM3, acute=None, q=3):
    doc = diagram.to_json()
    doc['q'] = dict((str(t), q) for t in diagram.types)
    doc['F'] = dict((str(t), {'degree': q, 'generators': generators})
                    for t in diagram.types)
    if acute is not None:
        doc['Facute'] = dict((str(t), {'degree': q, 'generators': acute})
                             for t in diagram.types)
    return doc


def spec_text(diagram, generators=SYM3, acute=None, q=3):
    return json.dumps(spec_document(diagram, generators, acute, q)).encode(
        'utf-8')
