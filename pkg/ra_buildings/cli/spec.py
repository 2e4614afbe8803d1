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

"""
Parsing of JSON building specifications.

A specification declares the diagram, the parameters q and the local data
F and, optionally, F' (``Facute``, defaulting to F).
"""

import json
import os

import jsonschema
from jsonschema import exceptions as json_schema_exc
from oslo_log import log
from oslo_utils import encodeutils
import six

from ra_buildings.building import chambers
from ra_buildings.common import exception
from ra_buildings.common.i18n import _
from ra_buildings.diagram import graph
from ra_buildings.permgrp import groups
from ra_buildings.words import normal_form


LOG = log.getLogger(__name__)

SCHEMA_FILE = os.path.join(os.path.dirname(__file__), 'spec_schema.json')

_schema = None


def _load_schema():
    global _schema
    if _schema is None:
        with open(SCHEMA_FILE, 'r') as sf:
            _schema = json.load(sf)
    return _schema


class BuildingSpec(object):
    """Validated input data of the analyzer, the suites and the exports.

    :param diagram: a Diagram.
    :param params: Parameters.
    :param local: mapping type -> PermGroup (F).
    :param acute: mapping type -> PermGroup (F'), F when omitted.
    """

    def __init__(self, diagram, params, local, acute=None):
        self.diagram = diagram
        self.params = params
        self.local = local
        self.acute = local if acute is None else acute
        self.acute_given = acute is not None
        self.building = chambers.Building(diagram, params)

    def __repr__(self):
        return 'BuildingSpec(%r, %r)' % (self.diagram, self.params)

    def to_json(self):
        data = self.diagram.to_json()
        data['q'] = self.params.to_json(self.diagram)
        data['F'] = dict((six.text_type(t), self.local[t].to_json())
                         for t in self.diagram.types)
        if self.acute_given:
            data['Facute'] = dict((six.text_type(t), self.acute[t].to_json())
                                  for t in self.diagram.types)
        return data


def _path(error):
    return '/'.join(six.text_type(p) for p in error.absolute_path) or '<root>'


def _labels_by_key(types):
    return dict((six.text_type(t), t) for t in types)


def _resolve(labels, key, field):
    try:
        return labels[six.text_type(key)]
    except KeyError:
        raise exception.SchemaError(
            field=field, reason=_('type %s is not declared') % key)


def _local_data(labels, params, data, name):
    result = {}
    for key, body in data.items():
        label = _resolve(labels, key, '%s/%s' % (name, key))
        if body['degree'] != params[label]:
            raise exception.DegreeMismatch(
                degree=body['degree'], expected=params[label],
                what='%s[%s]' % (name, key))
        for index, images in enumerate(body['generators']):
            if not groups.is_permutation(images, body['degree']):
                raise exception.SchemaError(
                    field='%s/%s/generators/%d' % (name, key, index),
                    reason=_('%s is not a bijection') % images)
        result[label] = groups.PermGroup(body['degree'], body['generators'])
    for label in labels.values():
        if label not in result:
            raise exception.SchemaError(
                field=name, reason=_('no group for type %s') % label)
    return result


def parse_spec(text):
    """Parse and validate a specification document.

    :param text: UTF-8 bytes or text holding a JSON object.
    :returns: a BuildingSpec.
    :raises: ParseError, SchemaError, DegreeMismatch
    """
    try:
        text = encodeutils.safe_decode(text, incoming='utf-8',
                                       errors='strict')
    except UnicodeDecodeError as e:
        raise exception.ParseError(line=1, pos=e.start,
                                   reason=_('invalid UTF-8'))
    try:
        data = json.loads(text)
    except ValueError as e:
        raise exception.ParseError(line=getattr(e, 'lineno', 0),
                                   pos=getattr(e, 'colno', 0),
                                   reason=six.text_type(e))
    try:
        jsonschema.validate(data, _load_schema())
    except json_schema_exc.ValidationError as e:
        raise exception.SchemaError(field=_path(e), reason=e.message)

    try:
        diagram = graph.Diagram(data['types'],
                                data.get('infinity_edges', []))
    except exception.InputError as e:
        raise exception.SchemaError(field='types', reason=six.text_type(e))
    labels = _labels_by_key(diagram.types)
    q = {}
    for key, value in data['q'].items():
        q[_resolve(labels, key, 'q/%s' % key)] = value
    for label in diagram.types:
        if label not in q:
            raise exception.SchemaError(
                field='q', reason=_('no q for type %s') % label)
    params = normal_form.Parameters(q)

    local = _local_data(labels, params, data['F'], 'F')
    acute = None
    if 'Facute' in data:
        acute = _local_data(labels, params, data['Facute'], 'Facute')
    report = groups.validate_local_data(
        local, local if acute is None else acute, params)
    if not report.valid:
        violation = report.violations[0]
        raise exception.SchemaError(
            field='Facute/%s' % violation['type'],
            reason=violation['message'])
    LOG.debug('Parsed specification of rank %(rank)d',
              {'rank': diagram.rank})
    return BuildingSpec(diagram, params, local, acute)
