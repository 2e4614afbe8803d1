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
Type-preserving automorphisms described by their local actions.

A LocalPortrait stores an anchor chamber a, its image g(a), a sparse map
from tree-walls to permutations and, per type, an ordered tuple of default
candidates. The image of a chamber c is found by walking the normal form of
a^-1 c: at each step through an i-panel the walk knows the entry colors
x = lambda_i(p) and y = lambda_i(g(p)); the local action is the assigned
permutation of the panel's tree-wall, or else the first candidate mapping x
to y.

Compositions, inverses and wing restrictions are lazy portraits with the
same interface.
"""

import abc
import collections

from oslo_concurrency import lockutils
from oslo_config import cfg
from oslo_log import log
import six

from ra_buildings.building import chambers as building_chambers
from ra_buildings.building import tree_walls
from ra_buildings.common import exception
from ra_buildings.common.i18n import _
from ra_buildings.permgrp import groups
from ra_buildings.words import normal_form


LOG = log.getLogger(__name__)

opts = [
    cfg.IntOpt('portrait_cache_size',
               default=4096,
               min=0,
               help=_('Number of chamber images each portrait keeps; the '
                      'least recently used image is dropped first. 0 '
                      'disables the cache.')),
]

CONF = cfg.CONF
opt_group = cfg.OptGroup(name='universal',
                         title='Options for portrait constructions')
CONF.register_group(opt_group)
CONF.register_opts(opts, opt_group)

_label = building_chambers.word_label


def _unique(perms):
    seen = set()
    result = []
    for p in perms:
        if p not in seen:
            seen.add(p)
            result.append(p)
    return tuple(result)


@six.add_metaclass(abc.ABCMeta)
class Portrait(object):
    """Common interface of all portraits."""

    def __init__(self, building):
        self.building = building
        self._cache = collections.OrderedDict()

    @abc.abstractmethod
    def _evaluate(self, c):
        """Image of a chamber, without caching."""

    @abc.abstractmethod
    def support(self):
        """Tree-walls whose local action may differ from the defaults."""

    @abc.abstractmethod
    def default_candidates(self, label):
        """Permutations the local action may take outside the support."""

    @abc.abstractmethod
    def anchor_pair(self):
        """A chamber and its image."""

    @abc.abstractmethod
    def to_json(self):
        """JSON-serializable description."""

    def apply(self, c):
        """Image of the chamber c.

        :raises: InconsistentPortrait
        """
        lock_name = 'portrait-%d' % id(self)
        with lockutils.lock(lock_name):
            if c in self._cache:
                image = self._cache.pop(c)
                self._cache[c] = image
                return image
        image = self._evaluate(c)
        size = CONF.universal.portrait_cache_size
        with lockutils.lock(lock_name):
            self._cache[c] = image
            while len(self._cache) > size:
                self._cache.popitem(last=False)
        return image

    @property
    def base_image(self):
        return self.apply(self.building.base)

    def local_action(self, panel):
        """The color permutation lambda_i o g o lambda_i^-1 on a panel.

        :raises: NotAPanel, InconsistentPortrait
        """
        building = self.building
        label = building.panel_type(panel)
        images = [None] * building.params[label]
        for c in building.panel_chambers(panel):
            images[building.color(c, label)] = building.color(
                self.apply(c), label)
        return tuple(images)

    def tree_wall_action(self, tree_wall):
        return self.local_action(
            self.building.panel(tree_wall.residue.rep, tree_wall.type))

    def image_tree_wall(self, tree_wall):
        """The tree-wall g(T)."""
        image = self.apply(tree_wall.residue.rep)
        return tree_walls.tree_wall_at(self.building, image, tree_wall.type)


class LocalPortrait(Portrait):
    """An automorphism given by an anchor, defaults and assignments.

    :param building: the Building.
    :param anchor: a chamber a.
    :param anchor_image: the chamber g(a).
    :param defaults: mapping type -> tuple of candidate permutations.
    :param assignments: mapping TreeWall -> permutation.
    :raises: DegreeMismatch, InvalidPermutation, UnknownType
    """

    def __init__(self, building, anchor, anchor_image, defaults,
                 assignments=None):
        super(LocalPortrait, self).__init__(building)
        self.anchor = anchor
        self.anchor_image = anchor_image
        self.defaults = {}
        for label in building.diagram.types:
            candidates = defaults.get(label)
            if not candidates:
                raise exception.InvalidParameters(
                    reason=_('no default candidates for type %s') % label)
            self.defaults[label] = _unique(
                self._checked(label, p) for p in candidates)
        self.assignments = {}
        for tree_wall, perm in (assignments or {}).items():
            expected = tree_walls.tree_wall_at(
                building, tree_wall.residue.rep, tree_wall.type)
            if expected != tree_wall:
                raise exception.InvalidParameters(
                    reason=_('%s is not a tree-wall key') % (tree_wall,))
            self.assignments[tree_wall] = self._checked(tree_wall.type, perm)

    def _checked(self, label, perm):
        degree = self.building.params[label]
        if len(perm) != degree:
            raise exception.DegreeMismatch(degree=len(perm), expected=degree,
                                           what=_('permutation of type %s') %
                                           label)
        return groups.check_permutation(perm, degree)

    def __repr__(self):
        return 'LocalPortrait(anchor=%s, image=%s, %d assignments)' % (
            _label(self.anchor), _label(self.anchor_image),
            len(self.assignments))

    def _action(self, p, label, x, y):
        tree_wall = tree_walls.tree_wall_at(self.building, p, label)
        assigned = self.assignments.get(tree_wall)
        if assigned is not None:
            if assigned[x] != y:
                raise exception.InconsistentPortrait(
                    where=_label(p),
                    reason=_('assigned action of type %(label)s maps '
                             '%(x)s to %(fx)s, the walk needs %(y)s') %
                    {'label': label, 'x': x, 'fx': assigned[x], 'y': y},
                    label=label, source=x, target=y)
            return assigned
        for candidate in self.defaults[label]:
            if candidate[x] == y:
                return candidate
        raise exception.InconsistentPortrait(
            where=_label(p),
            reason=_('no default of type %(label)s maps %(x)s to %(y)s') %
            {'label': label, 'x': x, 'y': y},
            label=label, source=x, target=y)

    def _evaluate(self, c):
        building = self.building
        p = self.anchor
        image = self.anchor_image
        source = building.colors(p)
        target = building.colors(image)
        for letter in building.difference(self.anchor, c):
            label = letter.type
            x, y = source[label], target[label]
            action = self._action(p, label, x, y)
            moved = (x + letter.color) % building.params[label]
            image = building.move(image, label, action[moved] - y)
            source[label] = moved
            target[label] = action[moved]
            p = building.multiply(p, (letter,))
        return image

    def support(self):
        return set(self.assignments)

    def default_candidates(self, label):
        return self.defaults[label]

    def anchor_pair(self):
        return self.anchor, self.anchor_image

    def to_json(self):
        return {
            'anchor': normal_form.to_json(self.anchor),
            'anchor_image': normal_form.to_json(self.anchor_image),
            'base_image': normal_form.to_json(self.base_image),
            'defaults': dict((six.text_type(t),
                              [list(p) for p in self.defaults[t]])
                             for t in self.building.diagram.types),
            'assignments': sorted(
                ([normal_form.to_json(t.residue.rep), t.type, list(p)]
                 for t, p in self.assignments.items()),
                key=lambda item: (six.text_type(item[1]), len(item[0]),
                                  repr(item[0]))),
        }


class ComposedPortrait(Portrait):
    """g o h: apply h first."""

    def __init__(self, outer, inner):
        super(ComposedPortrait, self).__init__(inner.building)
        self.outer = outer
        self.inner = inner

    def __repr__(self):
        return 'ComposedPortrait(%r, %r)' % (self.outer, self.inner)

    def _evaluate(self, c):
        return self.outer.apply(self.inner.apply(c))

    def support(self):
        inverse_inner = InversePortrait(self.inner)
        pulled = set(inverse_inner.image_tree_wall(t)
                     for t in self.outer.support())
        return self.inner.support() | pulled

    def default_candidates(self, label):
        return _unique(groups.compose(a, b)
                       for a in self.outer.default_candidates(label)
                       for b in self.inner.default_candidates(label))

    def anchor_pair(self):
        anchor, image = self.inner.anchor_pair()
        return anchor, self.outer.apply(image)

    def to_json(self):
        return {'compose': [self.outer.to_json(), self.inner.to_json()]}


class InversePortrait(Portrait):
    """g^-1, evaluated by walking from g(a) and inverting local actions."""

    def __init__(self, portrait):
        super(InversePortrait, self).__init__(portrait.building)
        self.portrait = portrait

    def __repr__(self):
        return 'InversePortrait(%r)' % (self.portrait,)

    def _evaluate(self, c):
        building = self.building
        image, p = self.portrait.anchor_pair()
        for letter in building.difference(p, c):
            label = letter.type
            forward = self.portrait.local_action(building.panel(image, label))
            backward = groups.inverse(forward)
            y = building.color(image, label)
            moved = (building.color(p, label) + letter.color) % \
                building.params[label]
            image = building.move(image, label, backward[moved] - y)
            p = building.multiply(p, (letter,))
        return image

    def support(self):
        return set(self.portrait.image_tree_wall(t)
                   for t in self.portrait.support())

    def default_candidates(self, label):
        return _unique(groups.inverse(p)
                       for p in self.portrait.default_candidates(label))

    def anchor_pair(self):
        anchor, image = self.portrait.anchor_pair()
        return image, anchor

    def to_json(self):
        return {'inverse': self.portrait.to_json()}


class PiecewiseAutomorphism(Portrait):
    """Acts as the inner portrait on the i-wing of a chamber of a panel and
    as the identity elsewhere.
    """

    def __init__(self, inner, panel, wing_chamber):
        super(PiecewiseAutomorphism, self).__init__(inner.building)
        self.inner = inner
        self.panel = panel
        self.wing_chamber = wing_chamber
        self.label = inner.building.panel_type(panel)

    def __repr__(self):
        return 'PiecewiseAutomorphism(%r, %s)' % (
            self.inner, _label(self.wing_chamber))

    def in_wing(self, c):
        return self.building.in_wing(c, self.wing_chamber, (self.label,))

    def _evaluate(self, c):
        if self.in_wing(c):
            return self.inner.apply(c)
        return c

    def _wing_panel(self, tree_wall):
        """A panel of the tree-wall inside the wing, if one is known."""
        building = self.building
        try:
            panels = tree_walls.tree_wall_panels(building, tree_wall)
        except exception.InfiniteTreeWall:
            panels = [building.panel(tree_wall.residue.rep, tree_wall.type)]
        for panel in panels:
            if all(self.in_wing(c) for c in building.panel_chambers(panel)):
                return panel
        return None

    def tree_wall_action(self, tree_wall):
        panel = self._wing_panel(tree_wall)
        if panel is None:
            return groups.identity(self.building.params[tree_wall.type])
        return self.local_action(panel)

    def support(self):
        return set(t for t in self.inner.support()
                   if self._wing_panel(t) is not None)

    def default_candidates(self, label):
        identity = groups.identity(self.building.params[label])
        return _unique((identity,) + tuple(
            self.inner.default_candidates(label)))

    def anchor_pair(self):
        return self.wing_chamber, self.apply(self.wing_chamber)

    def to_json(self):
        return {'piecewise': {
            'inner': self.inner.to_json(),
            'panel': [normal_form.to_json(self.panel.rep), self.label],
            'wing_chamber': normal_form.to_json(self.wing_chamber)}}


def identity(building):
    return LocalPortrait(
        building, building.base, building.base,
        dict((t, (groups.identity(building.params[t]),))
             for t in building.diagram.types))


def compose(outer, inner):
    """The portrait of outer o inner."""
    return ComposedPortrait(outer, inner)


def inverse(portrait):
    return InversePortrait(portrait)


def agree_on(first, second, chambers):
    """The first chamber where two portraits differ, or None."""
    for c in chambers:
        if first.apply(c) != second.apply(c):
            return c
    return None


def portrait_from_json(building, data):
    """Rebuild a portrait serialized by ``to_json``.

    :raises: InvalidParameters, UnknownType, ColorOutOfRange
    """
    if not isinstance(data, dict):
        raise exception.InvalidParameters(
            reason=_('portrait must be a JSON object'))
    if 'compose' in data:
        outer, inner = data['compose']
        return compose(portrait_from_json(building, outer),
                       portrait_from_json(building, inner))
    if 'inverse' in data:
        return inverse(portrait_from_json(building, data['inverse']))
    if 'piecewise' in data:
        body = data['piecewise']
        rep, label = body['panel']
        panel = building.panel(
            normal_form.from_json(rep, building.params, building.diagram),
            _type_from_json(building, label))
        return PiecewiseAutomorphism(
            portrait_from_json(building, body['inner']), panel,
            normal_form.from_json(body['wing_chamber'], building.params,
                                  building.diagram))
    try:
        anchor = normal_form.from_json(data['anchor'], building.params,
                                       building.diagram)
        anchor_image = normal_form.from_json(
            data['anchor_image'], building.params, building.diagram)
        defaults = dict(
            (_type_from_json(building, label), [tuple(p) for p in perms])
            for label, perms in data['defaults'].items())
        assignments = {}
        for rep, label, perm in data.get('assignments', []):
            label = _type_from_json(building, label)
            chamber = normal_form.from_json(rep, building.params,
                                            building.diagram)
            assignments[tree_walls.tree_wall_at(building, chamber, label)] = (
                tuple(perm))
    except (KeyError, TypeError, ValueError) as e:
        raise exception.InvalidParameters(
            reason=_('malformed portrait: %s') % e)
    return LocalPortrait(building, anchor, anchor_image, defaults,
                         assignments)


def _type_from_json(building, label):
    """Map a JSON object key back to the declared type label."""
    for t in building.diagram.types:
        if t == label or six.text_type(t) == six.text_type(label):
            return t
    raise exception.UnknownType(label=label)
