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
Chambers, residues and projections of a semiregular right-angled building.

Chambers are normal words of the graph product of the cyclic groups Z/q_i;
the empty word is the base chamber and c is i-adjacent to c * (i, a).
A residue of type J is keyed by its unique shortest chamber, obtained by
stripping the maximal J-suffix of any of its chambers.
"""

import collections
import json

from oslo_config import cfg
from oslo_log import log
import six

from ra_buildings.common import exception
from ra_buildings.common.i18n import _
from ra_buildings.words import normal_form


LOG = log.getLogger(__name__)

opts = [
    cfg.IntOpt('max_ball_chambers',
               default=250000,
               min=1,
               help=_('Largest number of chambers a ball may contain.')),
    cfg.IntOpt('closure_radius',
               default=6,
               min=0,
               help=_('Default radius bound of panel-closed closures.')),
]

CONF = cfg.CONF
opt_group = cfg.OptGroup(name='building',
                         title='Options for building truncations')
CONF.register_group(opt_group)
CONF.register_opts(opts, opt_group)

ResidueKey = collections.namedtuple('ResidueKey', ['types', 'rep'])
Gallery = collections.namedtuple('Gallery', ['chambers', 'step_types'])

BASE = normal_form.EMPTY


def word_label(word):
    """Compact JSON serialization of a word, used as a node identifier."""
    return json.dumps(normal_form.to_json(word), separators=(',', ':'))


class Building(object):
    """The semiregular right-angled building of a diagram and parameters.

    :param diagram: a Diagram.
    :param params: Parameters covering exactly the types of the diagram.
    :raises: InvalidParameters, UnknownType
    """

    def __init__(self, diagram, params):
        params.check_diagram(diagram)
        self.diagram = diagram
        self.params = params
        self.base = BASE

    def __repr__(self):
        return 'Building(%r, %r)' % (self.diagram, self.params)

    # Words

    def chamber(self, word):
        return normal_form.normalize(word, self.params, self.diagram)

    def multiply(self, u, v):
        return normal_form.multiply(u, v, self.params, self.diagram)

    def invert(self, u):
        return normal_form.invert(u, self.params, self.diagram)

    def move(self, c, label, delta):
        """The chamber c * (label, delta), i.e. c itself for delta = 0."""
        return normal_form.step(c, label, delta, self.params, self.diagram)

    def difference(self, c, e):
        return self.multiply(self.invert(c), e)

    def sort_key(self, c):
        return (len(c), tuple((self.diagram.order(letter.type), letter.color)
                              for letter in c))

    def sorted_chambers(self, chambers):
        return sorted(chambers, key=self.sort_key)

    # Distances and adjacency

    def distance(self, c, e):
        return len(self.difference(c, e))

    def weyl_distance(self, c, e):
        return normal_form.weyl(self.difference(c, e)).word

    def i_distance(self, c, e, label):
        return normal_form.i_count(self.difference(c, e), label,
                                   self.diagram)

    def adjacency(self, c, e):
        """The type i when c and e are distinct and i-adjacent, else None."""
        diff = self.difference(c, e)
        if len(diff) == 1:
            return diff[0].type
        return None

    def neighbours(self, c):
        """(type, chamber) pairs of all chambers adjacent to c."""
        for label in self.diagram.types:
            for delta in range(1, self.params[label]):
                yield label, self.move(c, label, delta)

    # Residues and panels

    def residue_key(self, c, types):
        types = frozenset(self.diagram.check_type(t) for t in types)
        rep, _suffix = normal_form.split(c, types, normal_form.SUFFIX,
                                         self.params, self.diagram)
        return ResidueKey(types, rep)

    def panel(self, c, label):
        return self.residue_key(c, (label,))

    def panel_type(self, panel):
        if len(panel.types) != 1:
            raise exception.NotAPanel(types=sorted(panel.types, key=str))
        return next(iter(panel.types))

    def panel_chambers(self, panel):
        label = self.panel_type(panel)
        return [self.move(panel.rep, label, delta)
                for delta in range(self.params[label])]

    def in_residue(self, c, residue):
        return self.residue_key(c, residue.types) == residue

    # Coloring

    def colors(self, c):
        """The legal coloring lambda(c) as a mapping type -> color.

        lambda_i(c) is the sum of the colors of the i-letters of c modulo
        q_i. It is a bijection on every i-panel and constant on every
        j-panel for j != i.
        """
        return normal_form.abelianization(c, self.params, self.diagram)

    def color(self, c, label):
        return sum(letter.color for letter in c
                   if letter.type == label) % self.params[label]

    # Projections

    def project_residue(self, c, residue):
        """The chamber of the residue closest to c (its gate)."""
        offset = self.difference(residue.rep, c)
        prefix, _rest = normal_form.split(offset, residue.types,
                                          normal_form.PREFIX, self.params,
                                          self.diagram)
        return self.multiply(residue.rep, prefix)

    def in_wing(self, d, c, types):
        """True iff d lies in the J-wing of c."""
        return self.project_residue(d, self.residue_key(c, types)) == c

    def are_parallel(self, first, second):
        """Projection test: two chambers of the first panel project onto
        distinct chambers of the second.
        """
        self.panel_type(first)
        self.panel_type(second)
        images = set(self.project_residue(c, second)
                     for c in self.panel_chambers(first))
        return len(images) > 1

    # Balls and galleries

    def ball(self, center, radius):
        """All chambers within a distance of a chamber or a chamber set.

        :param center: a chamber, any object with a ``chambers``
            attribute (a PanelClosedSet), or a list, set or frozenset of
            chambers. A tuple is always read as a single chamber.
        :param radius: a non-negative integer.
        :returns: the chambers in breadth-first order.
        :raises: BallTooLarge
        """
        chambers = getattr(center, 'chambers', None)
        if chambers is None:
            if isinstance(center, (list, set, frozenset)):
                chambers = list(center)
            else:
                chambers = [center]
        bound = CONF.building.max_ball_chambers
        order = self.sorted_chambers(set(chambers))
        seen = set(order)
        frontier = list(order)
        for _step in range(radius):
            next_frontier = []
            for c in frontier:
                for _label, e in self.neighbours(c):
                    if e not in seen:
                        seen.add(e)
                        next_frontier.append(e)
                        order.append(e)
                        if len(order) > bound:
                            raise exception.BallTooLarge(radius=radius,
                                                         bound=bound)
            frontier = next_frontier
        LOG.debug('Ball of radius %(radius)d has %(count)d chambers',
                  {'radius': radius, 'count': len(order)})
        return order

    def minimal_gallery(self, c, e):
        chambers = [c]
        current = c
        for letter in self.difference(c, e):
            current = self.multiply(current, (letter,))
            chambers.append(current)
        return Gallery(tuple(chambers),
                       tuple(letter.type for letter in
                             self.difference(c, e)))

    def gallery_types(self, gallery):
        return tuple(self.adjacency(a, b) for a, b in
                     six.moves.zip(gallery.chambers, gallery.chambers[1:]))

    def interval(self, c, e):
        """All chambers lying on minimal galleries from c to e."""
        found = set([c])
        frontier = [c]
        while frontier:
            next_frontier = []
            for x in frontier:
                offset = self.difference(x, e)
                seen_types = set()
                for letter in offset:
                    if letter.type in seen_types:
                        continue
                    prefix, _rest = normal_form.split(
                        offset, (letter.type,), normal_form.PREFIX,
                        self.params, self.diagram)
                    seen_types.add(letter.type)
                    if not prefix:
                        continue
                    y = self.multiply(x, prefix)
                    if y not in found:
                        found.add(y)
                        next_frontier.append(y)
            frontier = next_frontier
        return found
