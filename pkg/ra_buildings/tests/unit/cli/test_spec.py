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

"""Test class for specification parsing."""

import json

from ra_buildings.cli import spec
from ra_buildings.common import exception
from ra_buildings.tests import base
from ra_buildings.tests.unit import utils


def _encode(document):
    return json.dumps(document).encode('utf-8')


class ParseSpecTestCase(base.TestCase):

    def setUp(self):
        super(ParseSpecTestCase, self).setUp()
        self.diagram = utils.tree_diagram()

    def test_parse(self):
        parsed = spec.parse_spec(utils.spec_text(self.diagram))
        self.assertEqual(self.diagram, parsed.diagram)
        self.assertEqual(3, parsed.params[1])
        self.assertEqual(6, parsed.local[2].order())
        self.assertIs(parsed.local, parsed.acute)
        self.assertFalse(parsed.acute_given)

    def test_parse_text(self):
        parsed = spec.parse_spec(
            utils.spec_text(self.diagram).decode('utf-8'))
        self.assertEqual((1, 2), parsed.diagram.types)

    def test_parse_with_acute(self):
        parsed = spec.parse_spec(utils.spec_text(
            self.diagram, generators=utils.C3, acute=utils.SYM3))
        self.assertTrue(parsed.acute_given)
        self.assertEqual(3, parsed.local[1].order())
        self.assertEqual(6, parsed.acute[1].order())

    def test_string_labels(self):
        document = {'types': ['a', 'b'], 'infinity_edges': [['a', 'b']],
                    'q': {'a': 2, 'b': 3},
                    'F': {'a': {'degree': 2, 'generators': [[1, 0]]},
                          'b': {'degree': 3, 'generators': utils.C3}}}
        parsed = spec.parse_spec(_encode(document))
        self.assertEqual(2, parsed.params['a'])
        self.assertEqual(3, parsed.local['b'].order())

    def test_to_json(self):
        text = utils.spec_text(self.diagram, generators=utils.C3,
                               acute=utils.SYM3)
        parsed = spec.parse_spec(text)
        again = spec.parse_spec(_encode(parsed.to_json()))
        self.assertEqual(parsed.diagram, again.diagram)
        self.assertTrue(again.acute_given)
        self.assertTrue(again.acute[2].same_group(parsed.acute[2]))

    def test_invalid_json(self):
        self.assertRaises(exception.ParseError, spec.parse_spec,
                          b'{"types": [1,')

    def test_invalid_utf8(self):
        self.assertRaises(exception.ParseError, spec.parse_spec,
                          b'{"types": ["\xff"]}')

    def test_unknown_key(self):
        document = utils.spec_document(self.diagram)
        document['extra'] = 1
        self.assertRaises(exception.SchemaError, spec.parse_spec,
                          _encode(document))

    def test_missing_local_data(self):
        document = utils.spec_document(self.diagram)
        del document['F']
        self.assertRaises(exception.SchemaError, spec.parse_spec,
                          _encode(document))

    def test_q_below_two(self):
        document = utils.spec_document(self.diagram)
        document['q']['1'] = 1
        self.assertRaises(exception.SchemaError, spec.parse_spec,
                          _encode(document))

    def test_undeclared_type(self):
        document = utils.spec_document(self.diagram)
        document['q']['7'] = 3
        self.assertRaises(exception.SchemaError, spec.parse_spec,
                          _encode(document))

    def test_missing_group(self):
        document = utils.spec_document(self.diagram)
        del document['F']['2']
        self.assertRaises(exception.SchemaError, spec.parse_spec,
                          _encode(document))

    def test_not_a_bijection(self):
        document = utils.spec_document(self.diagram,
                                       generators=[[0, 0, 2]])
        self.assertRaises(exception.SchemaError, spec.parse_spec,
                          _encode(document))

    def test_degree_mismatch(self):
        document = utils.spec_document(self.diagram)
        document['F']['1'] = {'degree': 2, 'generators': [[1, 0]]}
        self.assertRaises(exception.DegreeMismatch, spec.parse_spec,
                          _encode(document))

    def test_self_loop(self):
        document = utils.spec_document(self.diagram)
        document['infinity_edges'] = [[1, 1]]
        self.assertRaises(exception.SchemaError, spec.parse_spec,
                          _encode(document))

    def test_acute_not_containing_local(self):
        self.assertRaises(exception.SchemaError, spec.parse_spec,
                          utils.spec_text(self.diagram, acute=utils.C3))

    def test_acute_beyond_young_overgroup(self):
        self.assertRaises(exception.SchemaError, spec.parse_spec,
                          utils.spec_text(self.diagram,
                                          generators=utils.TRANSPOSITION,
                                          acute=utils.SYM3))
