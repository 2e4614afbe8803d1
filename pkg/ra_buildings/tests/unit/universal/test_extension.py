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

"""Test class for Kp elements, extensions and wing restrictions."""

from ra_buildings.building import panel_closed
from ra_buildings.building import tree_walls
from ra_buildings.common import exception
from ra_buildings.tests import base
from ra_buildings.tests.unit import utils
from ra_buildings.universal import extension
from ra_buildings.universal import membership
from ra_buildings.universal import portrait


w = utils.word


class KpElementTestCase(base.TestCase):

    def setUp(self):
        super(KpElementTestCase, self).setUp()
        self.building = utils.building(utils.tree_diagram())
        self.local = utils.local_data(self.building.diagram)

    def test_identity_action_gives_identity(self):
        g = extension.kp_element(self.building, self.building.panel((), 1),
                                 (0, 1, 2), self.local)
        self.assertIsNone(portrait.agree_on(
            g, portrait.identity(self.building),
            self.building.ball((), 3)))

    def test_stabilizes_the_panel(self):
        panel = self.building.panel(w((2, 1)), 1)
        g = extension.kp_element(self.building, panel, utils.CYCLE,
                                 self.local)
        self.assertEqual(utils.CYCLE, g.local_action(panel))
        for c in self.building.panel_chambers(panel):
            self.assertTrue(self.building.in_residue(g.apply(c), panel))

    def test_degree_mismatch(self):
        self.assertRaises(exception.DegreeMismatch, extension.kp_element,
                          self.building, self.building.panel((), 1),
                          (1, 0), self.local)

    def test_invalid_permutation(self):
        self.assertRaises(exception.InvalidPermutation,
                          extension.kp_element, self.building,
                          self.building.panel((), 1), (0, 0, 1),
                          self.local)


class ExtendPartialTestCase(base.TestCase):

    def setUp(self):
        super(ExtendPartialTestCase, self).setUp()
        self.building = utils.building(utils.tree_diagram())
        self.local = utils.local_data(self.building.diagram)
        self.base_set = panel_closed.PanelClosedSet(self.building, [()])

    def test_identity_on_base(self):
        g = extension.extend_partial(self.building, self.base_set,
                                     {(): ()}, self.local, 2)
        self.assertIsNone(portrait.agree_on(
            g, portrait.identity(self.building),
            self.building.ball((), 2)))

    def test_moves_base(self):
        g = extension.extend_partial(self.building, self.base_set,
                                     {(): w((1, 1))}, self.local, 2)
        self.assertEqual(w((1, 1)), g.apply(()))
        ball = self.building.ball((), 2)
        for c in ball:
            for label, e in self.building.neighbours(c):
                self.assertEqual(label, self.building.adjacency(
                    g.apply(c), g.apply(e)))

    def test_not_harmonious(self):
        local = utils.local_data(self.building.diagram,
                                 utils.TRANSPOSITION)
        self.assertRaises(exception.NotHarmonious, extension.extend_partial,
                          self.building, self.base_set, {(): w((1, 2))},
                          local, 2)

    def test_partial_map_not_defined_on_the_set(self):
        self.assertRaises(exception.InvalidParameters,
                          extension.extend_partial, self.building,
                          self.base_set, {w((1, 1)): ()}, self.local, 2)

    def test_not_distance_preserving(self):
        panel = self.building.panel((), 1)
        closed = panel_closed.PanelClosedSet(
            self.building, self.building.panel_chambers(panel))
        partial = {(): (), w((1, 1)): (), w((1, 2)): w((1, 2))}
        self.assertRaises(exception.NotDistancePreserving,
                          extension.extend_partial, self.building, closed,
                          partial, self.local, 1)

    def test_full_panel_forces_its_action(self):
        local = utils.local_data(self.building.diagram, utils.C3)
        panel = self.building.panel((), 1)
        members = self.building.panel_chambers(panel)
        closed = panel_closed.PanelClosedSet(self.building, members)
        partial = dict((c, members[utils.SWAP[k]])
                       for k, c in enumerate(members))
        g = extension.extend_partial(self.building, closed, partial, local,
                                     2)
        self.assertEqual(utils.SWAP, g.local_action(panel))
        for c in members:
            self.assertEqual(partial[c], g.apply(c))
        for c in self.building.ball(closed, 1):
            self.assertIn(g.local_action(self.building.panel(c, 2)),
                          local[2])


class WingRestrictTestCase(base.TestCase):

    def setUp(self):
        super(WingRestrictTestCase, self).setUp()
        self.building = utils.building(utils.tree_diagram())
        self.local = utils.local_data(self.building.diagram, utils.C3)
        self.acute = utils.local_data(self.building.diagram)
        self.panel = self.building.panel((), 1)
        self.inner_panel = self.building.panel(w((1, 1)), 2)
        self.g = extension.kp_element(self.building, self.inner_panel,
                                      (0, 2, 1), self.local)
        self.ball = self.building.ball((), 3)

    def test_identity(self):
        identity = portrait.identity(self.building)
        piece = extension.wing_restrict(self.building, identity,
                                        self.panel, ())
        self.assertIsNone(portrait.agree_on(piece, identity, self.ball))

    def test_pieces(self):
        inside = extension.wing_restrict(self.building, self.g, self.panel,
                                         w((1, 1)))
        outside = extension.wing_restrict(self.building, self.g,
                                          self.panel, w((1, 2)))
        self.assertIsNone(portrait.agree_on(inside, self.g, self.ball))
        self.assertIsNone(portrait.agree_on(
            outside, portrait.identity(self.building), self.ball))
        self.assertIsNone(portrait.agree_on(
            portrait.compose(inside, outside), self.g, self.ball))

    def test_piece_keeps_singular_tree_wall(self):
        inside = extension.wing_restrict(self.building, self.g, self.panel,
                                         w((1, 1)))
        found = membership.classify_membership(inside, self.local,
                                               self.acute)
        tree_wall = tree_walls.tree_wall_of(self.building, self.inner_panel)
        self.assertEqual([(tree_wall, (0, 2, 1))],
                         found.report.singular_tree_walls)
        self.assertFalse(found.in_U_F)
        self.assertTrue(found.in_G_F_Facute)

    def test_chamber_outside_panel(self):
        self.assertRaises(exception.PreconditionViolated,
                          extension.wing_restrict, self.building, self.g,
                          self.panel, w((2, 1)))

    def test_tree_wall_not_fixed(self):
        rotation = extension.kp_element(self.building, self.panel,
                                        utils.CYCLE, self.acute)
        self.assertRaises(exception.TreeWallNotFixed,
                          extension.wing_restrict, self.building, rotation,
                          self.panel, ())

    def test_validation_radius_option(self):
        self.config(validation_radius=0, group='universal')
        piece = extension.wing_restrict(self.building, self.g, self.panel,
                                        w((1, 1)))
        self.assertEqual(w((1, 1)), piece.apply(w((1, 1))))
