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

"""Test class for the normal form engine."""

import hypothesis
from hypothesis import strategies

from ra_buildings.common import exception
from ra_buildings.diagram import graph
from ra_buildings.tests import base
from ra_buildings.tests.unit import utils
from ra_buildings.words import normal_form


w = utils.word

PENTAGON = utils.pentagon_diagram()
PENTAGON_PARAMS = utils.params(PENTAGON)

letters = strategies.tuples(strategies.sampled_from(PENTAGON.types),
                            strategies.integers(min_value=1, max_value=2))
words = strategies.lists(letters, max_size=12).map(
    lambda pairs: normal_form.normalize(pairs, PENTAGON_PARAMS, PENTAGON))


class NormalizeTestCase(base.TestCase):

    def setUp(self):
        super(NormalizeTestCase, self).setUp()
        self.tree = utils.tree_diagram()
        self.ladder = utils.ladder_diagram()

    def _normalize(self, word, diagram):
        return normal_form.normalize(word, utils.params(diagram), diagram)

    def test_commuting_letters_are_sorted(self):
        self.assertEqual(w((1, 2), (2, 1)),
                         self._normalize([(2, 1), (1, 2)], self.ladder))

    def test_colors_cancel(self):
        self.assertEqual((), self._normalize([(1, 1), (1, 2)], self.tree))

    def test_colors_add(self):
        self.assertEqual(w((1, 2)),
                         self._normalize([(1, 1), (1, 1)], self.tree))

    def test_alternating_word_unchanged(self):
        self.assertEqual(w((1, 1), (2, 1), (1, 1)),
                         self._normalize([(1, 1), (2, 1), (1, 1)],
                                         self.tree))

    def test_merge_across_commuting_letter(self):
        self.assertEqual(w((2, 1)),
                         self._normalize([(1, 1), (2, 1), (1, 2)],
                                         self.ladder))

    def test_cancellation_exposes_merge(self):
        self.assertEqual(w((1, 2)),
                         self._normalize([(1, 1), (2, 1), (2, 2), (1, 1)],
                                         self.tree))

    def test_color_out_of_range(self):
        self.assertRaises(exception.ColorOutOfRange,
                          self._normalize, [(1, 0)], self.tree)
        self.assertRaises(exception.ColorOutOfRange,
                          self._normalize, [(1, 3)], self.tree)

    def test_unknown_type(self):
        self.assertRaises(exception.UnknownType,
                          self._normalize, [(4, 1)], self.tree)


class WordOperationsTestCase(base.TestCase):

    def setUp(self):
        super(WordOperationsTestCase, self).setUp()
        self.tree = utils.tree_diagram()
        self.ladder = utils.ladder_diagram()
        self.params = utils.params(self.ladder)

    def test_multiply_inverse_pair(self):
        self.assertEqual((), normal_form.multiply(
            w((1, 1)), w((1, 2)), self.params, self.tree))

    def test_multiply_commutes(self):
        self.assertEqual(w((1, 1), (2, 1)), normal_form.multiply(
            w((2, 1)), w((1, 1)), self.params, self.ladder))

    def test_multiply_nested_cancellation(self):
        self.assertEqual((), normal_form.multiply(
            w((1, 1), (2, 1)), w((2, 2), (1, 2)), self.params, self.tree))

    def test_invert(self):
        self.assertEqual((), normal_form.invert((), self.params, self.tree))
        self.assertEqual(w((1, 2)),
                         normal_form.invert(w((1, 1)), self.params,
                                            self.tree))
        self.assertEqual(w((2, 2), (1, 2)),
                         normal_form.invert(w((1, 1), (2, 1)), self.params,
                                            self.tree))

    def test_step(self):
        self.assertEqual(w((1, 1)), normal_form.step(
            (), 1, 1, self.params, self.tree))
        self.assertEqual(w((1, 1)), normal_form.step(
            w((1, 1)), 1, 3, self.params, self.tree))
        self.assertEqual((), normal_form.step(
            w((1, 1)), 1, -1, self.params, self.tree))

    def test_weyl(self):
        self.assertEqual(((), 0), normal_form.weyl(()))
        self.assertEqual(((1, 2, 1), 3),
                         normal_form.weyl(w((1, 1), (2, 1), (1, 2))))
        self.assertEqual(((1, 2), 2), normal_form.weyl(w((1, 2), (2, 1))))

    def test_i_count(self):
        u = w((1, 1), (2, 1), (1, 2))
        self.assertEqual(2, normal_form.i_count(u, 1, self.ladder))
        self.assertEqual(0, normal_form.i_count(u, 3, self.ladder))

    def test_abelianization(self):
        u = w((2, 1), (1, 2))
        self.assertEqual({1: 2, 2: 1, 3: 0}, normal_form.abelianization(
            u, self.params, self.ladder))

    def test_split_suffix(self):
        first, second = normal_form.split(
            w((1, 1), (2, 1), (1, 1)), [1], normal_form.SUFFIX,
            self.params, self.tree)
        self.assertEqual(w((1, 1), (2, 1)), first)
        self.assertEqual(w((1, 1)), second)

    def test_split_suffix_commutes_past(self):
        first, second = normal_form.split(
            w((1, 2), (2, 1)), [1], normal_form.SUFFIX, self.params,
            self.ladder)
        self.assertEqual(w((2, 1)), first)
        self.assertEqual(w((1, 2)), second)

    def test_split_empty_types(self):
        u = w((1, 2), (2, 1))
        self.assertEqual((u, ()), normal_form.split(
            u, [], normal_form.SUFFIX, self.params, self.ladder))

    def test_split_prefix(self):
        first, second = normal_form.split(
            w((1, 1), (2, 1), (1, 1)), [1], normal_form.PREFIX,
            self.params, self.tree)
        self.assertEqual(w((1, 1)), first)
        self.assertEqual(w((2, 1), (1, 1)), second)

    def test_split_bad_side(self):
        self.assertRaises(ValueError, normal_form.split, (), [1], 'middle',
                          self.params, self.tree)

    def test_reduced_expressions(self):
        u = w((1, 2), (2, 1))
        found = normal_form.reduced_expressions(u, self.ladder)
        self.assertEqual([u, w((2, 1), (1, 2))], found)

    def test_reduced_expressions_limit(self):
        u = w((1, 1), (2, 1), (3, 1))
        diagram = graph.Diagram([1, 2, 3])
        self.assertEqual(6, len(normal_form.reduced_expressions(u, diagram)))
        self.assertEqual(2, len(normal_form.reduced_expressions(
            u, diagram, limit=2)))

    def test_from_json(self):
        self.assertEqual(w((1, 2), (2, 1)), normal_form.from_json(
            [[2, 1], [1, 2]], self.params, self.ladder))
        self.assertRaises(exception.InvalidParameters,
                          normal_form.from_json, [[1, 1, 1]], self.params,
                          self.ladder)

    def test_to_json(self):
        self.assertEqual([[1, 2], [2, 1]],
                         normal_form.to_json(w((1, 2), (2, 1))))


class ParametersTestCase(base.TestCase):

    def test_invalid_values(self):
        self.assertRaises(exception.InvalidParameters,
                          normal_form.Parameters, {1: 1})
        self.assertRaises(exception.InvalidParameters,
                          normal_form.Parameters, {1: True})
        self.assertRaises(exception.InvalidParameters,
                          normal_form.Parameters, {1: '3'})

    def test_thick(self):
        self.assertTrue(normal_form.Parameters({1: 3, 2: 4}).thick)
        self.assertFalse(normal_form.Parameters({1: 3, 2: 2}).thick)

    def test_unknown_type(self):
        self.assertRaises(exception.UnknownType,
                          normal_form.Parameters({1: 3}).__getitem__, 2)

    def test_check_diagram(self):
        diagram = utils.tree_diagram()
        self.assertRaises(exception.InvalidParameters,
                          normal_form.Parameters({1: 3}).check_diagram,
                          diagram)
        self.assertRaises(exception.UnknownType,
                          normal_form.Parameters(
                              {1: 3, 2: 3, 3: 3}).check_diagram, diagram)

    def test_to_json(self):
        self.assertEqual({'1': 3, '2': 4}, normal_form.Parameters(
            {1: 3, 2: 4}).to_json(utils.tree_diagram()))


class GroupLawsTestCase(base.TestCase):

    def _mul(self, u, v):
        return normal_form.multiply(u, v, PENTAGON_PARAMS, PENTAGON)

    @hypothesis.given(words)
    def test_normalize_idempotent(self, u):
        self.assertEqual(u, normal_form.normalize(u, PENTAGON_PARAMS,
                                                  PENTAGON))

    @hypothesis.given(words)
    def test_inverse(self, u):
        inverse = normal_form.invert(u, PENTAGON_PARAMS, PENTAGON)
        self.assertEqual((), self._mul(u, inverse))
        self.assertEqual((), self._mul(inverse, u))
        self.assertEqual(len(u), len(inverse))

    @hypothesis.given(words, words, words)
    def test_associativity(self, u, v, x):
        self.assertEqual(self._mul(self._mul(u, v), x),
                         self._mul(u, self._mul(v, x)))

    @hypothesis.given(words)
    def test_reduced_expressions_share_normal_form(self, u):
        for expression in normal_form.reduced_expressions(u, PENTAGON,
                                                          limit=20):
            self.assertEqual(u, normal_form.normalize(
                expression, PENTAGON_PARAMS, PENTAGON))
            for label in PENTAGON.types:
                self.assertEqual(
                    normal_form.i_count(u, label, PENTAGON),
                    normal_form.i_count(expression, label, PENTAGON))

    @hypothesis.given(words, strategies.sets(
        strategies.sampled_from(PENTAGON.types)))
    def test_split_factors(self, u, types):
        for side in (normal_form.PREFIX, normal_form.SUFFIX):
            first, second = normal_form.split(u, types, side,
                                              PENTAGON_PARAMS, PENTAGON)
            self.assertEqual(u, self._mul(first, second))
            self.assertEqual(len(u), len(first) + len(second))
            taken = second if side == normal_form.SUFFIX else first
            self.assertTrue(all(letter.type in types for letter in taken))
