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

"""Test class for the chamber model of right-angled buildings."""

from ra_buildings.building import chambers
from ra_buildings.common import exception
from ra_buildings.tests import base
from ra_buildings.tests.unit import utils


w = utils.word


class BuildingTestCase(base.TestCase):

    def setUp(self):
        super(BuildingTestCase, self).setUp()
        self.tree = utils.building(utils.tree_diagram())
        self.ladder = utils.building(utils.ladder_diagram())

    def test_parameters_must_match_diagram(self):
        self.assertRaises(exception.InvalidParameters,
                          chambers.Building, utils.ladder_diagram(),
                          utils.params(utils.tree_diagram()))

    def test_adjacency(self):
        self.assertEqual(1, self.tree.adjacency((), w((1, 1))))
        self.assertIsNone(self.tree.adjacency((), ()))
        self.assertEqual(1, self.tree.adjacency(w((1, 1)), w((1, 2))))
        self.assertIsNone(self.tree.adjacency((), w((1, 1), (2, 1))))

    def test_distances(self):
        c = w((1, 1), (2, 1), (1, 2))
        self.assertEqual(3, self.tree.distance((), c))
        self.assertEqual((1, 2, 1), self.tree.weyl_distance((), c))
        self.assertEqual(2, self.tree.i_distance((), c, 1))
        self.assertEqual(0, self.tree.distance(c, c))

    def test_neighbours(self):
        found = list(self.ladder.neighbours(()))
        self.assertEqual(6, len(found))
        self.assertIn((2, w((2, 2))), found)

    def test_residue_key_strips_suffix(self):
        key = self.tree.residue_key(w((1, 1), (2, 1)), [2])
        self.assertEqual(w((1, 1)), key.rep)
        self.assertEqual(frozenset([2]), key.types)

    def test_residue_key_commuting_suffix(self):
        key = self.ladder.residue_key(w((1, 2), (2, 1)), [1])
        self.assertEqual(w((2, 1)), key.rep)

    def test_residue_key_empty_types(self):
        c = w((1, 2), (2, 1))
        self.assertEqual(c, self.ladder.residue_key(c, []).rep)

    def test_panel_chambers(self):
        expected = [(), w((1, 1)), w((1, 2))]
        self.assertEqual(expected,
                         self.tree.panel_chambers(self.tree.panel((), 1)))
        self.assertEqual(expected, self.tree.panel_chambers(
            self.tree.panel(w((1, 1)), 1)))

    def test_panel_type_not_a_panel(self):
        residue = self.ladder.residue_key((), [1, 2])
        self.assertRaises(exception.NotAPanel,
                          self.ladder.panel_chambers, residue)

    def test_in_residue(self):
        panel = self.tree.panel((), 1)
        self.assertTrue(self.tree.in_residue(w((1, 2)), panel))
        self.assertFalse(self.tree.in_residue(w((2, 2)), panel))

    def test_colors(self):
        self.assertEqual({1: 0, 2: 0}, self.tree.colors(()))
        self.assertEqual({1: 2, 2: 0}, self.tree.colors(w((1, 2))))
        c = self.ladder.chamber([(2, 1), (1, 2)])
        self.assertEqual({1: 2, 2: 1, 3: 0}, self.ladder.colors(c))
        self.assertEqual(2, self.ladder.color(c, 1))

    def test_coloring_is_legal(self):
        for c in self.ladder.ball((), 2):
            for label in self.ladder.diagram.types:
                members = self.ladder.panel_chambers(
                    self.ladder.panel(c, label))
                self.assertEqual(
                    [0, 1, 2],
                    sorted(self.ladder.color(e, label) for e in members))
                for other in self.ladder.diagram.types:
                    if other != label:
                        self.assertEqual(
                            1, len(set(self.ladder.color(e, other)
                                       for e in members)))

    def test_project_residue(self):
        c = w((1, 1), (2, 1), (1, 1))
        panel = self.tree.panel((), 1)
        self.assertEqual(w((1, 1)), self.tree.project_residue(c, panel))
        self.assertEqual(w((1, 2)),
                         self.tree.project_residue(w((1, 2)), panel))
        everything = self.tree.residue_key((), [1, 2])
        self.assertEqual(c, self.tree.project_residue(c, everything))

    def test_project_residue_matches_brute_force(self):
        ball = self.ladder.ball((), 3)
        residue = self.ladder.residue_key(w((2, 1)), [1, 3])
        inside = [e for e in ball if self.ladder.in_residue(e, residue)]
        for c in ball:
            gate = self.ladder.project_residue(c, residue)
            best = min(self.ladder.distance(c, e) for e in inside)
            self.assertEqual(best, self.ladder.distance(c, gate))

    def test_in_wing(self):
        self.assertTrue(self.tree.in_wing((), (), [1]))
        self.assertFalse(self.tree.in_wing(w((1, 1)), (), [1]))
        self.assertTrue(self.tree.in_wing(w((2, 1)), (), [1]))

    def test_wings_partition_ball(self):
        members = self.tree.panel_chambers(self.tree.panel((), 1))
        for c in self.tree.ball((), 3):
            wings = [d for d in members if self.tree.in_wing(c, d, [1])]
            self.assertEqual(1, len(wings))

    def test_are_parallel(self):
        self.assertTrue(self.ladder.are_parallel(
            self.ladder.panel((), 1), self.ladder.panel(w((2, 1)), 1)))
        self.assertFalse(self.tree.are_parallel(
            self.tree.panel((), 1), self.tree.panel(w((2, 1)), 1)))

    def test_ball_sizes(self):
        self.assertEqual(13, len(self.tree.ball((), 2)))
        self.assertEqual(23, len(self.ladder.ball((), 2)))
        self.assertEqual([()], self.tree.ball((), 0))

    def test_ball_is_breadth_first(self):
        ball = self.tree.ball((), 2)
        self.assertEqual((), ball[0])
        distances = [self.tree.distance((), c) for c in ball]
        self.assertEqual(sorted(distances), distances)

    def test_ball_around_set(self):
        ball = self.tree.ball([(), w((1, 1))], 0)
        self.assertEqual([(), w((1, 1))], ball)
        self.assertEqual(ball, self.tree.ball(set([w((1, 1)), ()]), 0))
        self.assertEqual(ball, self.tree.ball(frozenset(ball), 0))

    def test_ball_around_word(self):
        self.assertEqual([w((1, 1), (2, 2))],
                         self.tree.ball(w((1, 1), (2, 2)), 0))
        self.assertEqual(5, len(self.tree.ball(w((1, 1), (2, 2)), 1)))

    def test_ball_too_large(self):
        self.config(max_ball_chambers=10, group='building')
        self.assertRaises(exception.BallTooLarge, self.tree.ball, (), 2)

    def test_minimal_gallery(self):
        gallery = self.tree.minimal_gallery((), w((1, 1), (2, 1)))
        self.assertEqual((1, 2), gallery.step_types)
        self.assertEqual(((), w((1, 1)), w((1, 1), (2, 1))),
                         gallery.chambers)
        self.assertEqual(gallery.step_types,
                         self.tree.gallery_types(gallery))

    def test_minimal_gallery_trivial(self):
        gallery = self.tree.minimal_gallery(w((1, 1)), w((1, 1)))
        self.assertEqual((w((1, 1)),), gallery.chambers)
        self.assertEqual((), gallery.step_types)

    def test_minimal_gallery_length_matches_bfs(self):
        ball = self.ladder.ball((), 3)
        for c in ball:
            gallery = self.ladder.minimal_gallery((), c)
            self.assertEqual(self.ladder.distance((), c),
                             len(gallery.step_types))

    def test_interval(self):
        self.assertEqual(set([(), w((1, 1)), w((1, 1), (2, 1))]),
                         self.tree.interval((), w((1, 1), (2, 1))))
        self.assertEqual(set([(), w((1, 1)), w((2, 1)), w((1, 1), (2, 1))]),
                         self.ladder.interval((), w((1, 1), (2, 1))))

    def test_word_label(self):
        self.assertEqual('[[1,2],[2,1]]',
                         chambers.word_label(w((1, 2), (2, 1))))
