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
Panel-closed chamber sets: convex sets containing every panel they meet in
at least two chambers. They admit a unique gate from every chamber, which
drives the closing squares, concave galleries and the sphere dichotomy.
"""

import collections
import itertools

from oslo_config import cfg
from oslo_log import log

from ra_buildings.building import chambers as building_chambers
from ra_buildings.common import exception
from ra_buildings.common.i18n import _
from ra_buildings.words import normal_form


LOG = log.getLogger(__name__)

CONF = cfg.CONF

Projection = collections.namedtuple('Projection', ['proj', 'dist'])
ConcaveGallery = collections.namedtuple('ConcaveGallery',
                                        ['gallery', 'j', 'k'])
Square = collections.namedtuple('Square', ['d', 'i', 'j'])
SphereCase = collections.namedtuple('SphereCase', ['case', 'data'])

CASE_PARALLEL = 'a'
CASE_GATE = 'b'

DECREASING, CONSTANT, INCREASING = range(3)


def check_panel_closed(building, chambers):
    """Return None if the set is panel-closed, else the reason it is not."""
    members = set(chambers)
    if not members:
        return _('the set is empty')
    for c in building.sorted_chambers(members):
        for label in building.diagram.types:
            panel = building.panel(c, label)
            inside = [e for e in building.panel_chambers(panel)
                      if e in members]
            if 1 < len(inside) < building.params[label]:
                return _('panel of type %(label)s at %(rep)s meets the set '
                         'in %(count)d chambers') % {
                    'label': label,
                    'rep': building_chambers.word_label(panel.rep),
                    'count': len(inside)}
    for c, e in itertools.combinations(building.sorted_chambers(members), 2):
        outside = building.interval(c, e) - members
        if outside:
            return _('%(missing)s lies between %(c)s and %(e)s') % {
                'missing': building_chambers.word_label(
                    building.sorted_chambers(outside)[0]),
                'c': building_chambers.word_label(c),
                'e': building_chambers.word_label(e)}
    return None


def is_panel_closed(building, chambers):
    return check_panel_closed(building, chambers) is None


class PanelClosedSet(object):
    """A finite panel-closed set of chambers.

    :param building: the Building the chambers live in.
    :param chambers: iterable of normal words.
    :param validate: check convexity and panel saturation.
    :raises: InvalidPanelClosedSet
    """

    def __init__(self, building, chambers, validate=True):
        self.building = building
        self.chambers = frozenset(chambers)
        if validate:
            reason = check_panel_closed(building, self.chambers)
            if reason is not None:
                raise exception.InvalidPanelClosedSet(reason=reason)
        self._ordered = building.sorted_chambers(self.chambers)

    def __contains__(self, chamber):
        return chamber in self.chambers

    def __iter__(self):
        return iter(self._ordered)

    def __len__(self):
        return len(self.chambers)

    def __repr__(self):
        return 'PanelClosedSet(%s)' % [building_chambers.word_label(c)
                                       for c in self._ordered]

    def project(self, c):
        return project_panel_closed(self, c)

    def distance(self, c):
        return project_panel_closed(self, c).dist


def project_panel_closed(closed, c):
    """The gate of c in a panel-closed set and its distance.

    :raises: InvalidPanelClosedSet if the minimum is not attained once.
    """
    if not closed.chambers:
        raise exception.InvalidPanelClosedSet(reason=_('the set is empty'))
    if c in closed.chambers:
        return Projection(c, 0)
    building = closed.building
    best = None
    winners = []
    for e in closed:
        dist = building.distance(c, e)
        if best is None or dist < best:
            best = dist
            winners = [e]
        elif dist == best:
            winners.append(e)
    if len(winners) != 1:
        raise exception.InvalidPanelClosedSet(
            reason=_('%(count)d chambers are closest to %(c)s') % {
                'count': len(winners),
                'c': building_chambers.word_label(c)})
    return Projection(winners[0], best)


def panel_closed_closure(building, chambers, bound=None):
    """Smallest panel-closed superset of a finite chamber set.

    Interval closure and panel saturation alternate until nothing changes.

    :param bound: radius around the first chamber (in sorted order) the
        closure must stay in; defaults to ``[building] closure_radius``.
    :raises: EscapesBound, InvalidPanelClosedSet for an empty input.
    """
    if bound is None:
        bound = CONF.building.closure_radius
    members = set(chambers)
    if not members:
        raise exception.InvalidPanelClosedSet(reason=_('the set is empty'))
    center = building.sorted_chambers(members)[0]

    def _admit(candidates):
        added = set()
        for e in candidates:
            if e in members or e in added:
                continue
            if building.distance(center, e) > bound:
                raise exception.EscapesBound(bound=bound)
            added.add(e)
        members.update(added)
        return added

    for e in members:
        if building.distance(center, e) > bound:
            raise exception.EscapesBound(bound=bound)
    fresh = set(members)
    while fresh:
        found = set()
        for c in fresh:
            for e in list(members):
                found |= _admit(building.interval(c, e))
        for c in list(members):
            for label in building.diagram.types:
                panel = building.panel(c, label)
                panel_chambers = building.panel_chambers(panel)
                if sum(1 for e in panel_chambers if e in members) > 1:
                    found |= _admit(panel_chambers)
        fresh = found
    LOG.debug('Panel-closed closure has %(count)d chambers',
              {'count': len(members)})
    return PanelClosedSet(building, members, validate=False)


def concave_gallery(closed, c1, c2):
    """A minimal gallery from c1 to c2 whose distance to C first strictly
    decreases, then stays constant, then strictly increases.

    :returns: ConcaveGallery(gallery, j, k) where steps 1..j decrease and
        steps k+1..l increase.
    :raises: InvalidPanelClosedSet when no such gallery exists.
    """
    building = closed.building
    dead = set()

    def _search(current, phase, dist, path):
        if current == c2:
            return path
        if (current, phase) in dead:
            return None
        offset = building.difference(current, c2)
        labels = building.diagram.sort_types(
            set(letter.type for letter in offset))
        for label in labels:
            prefix, _rest = normal_form.split(
                offset, (label,), normal_form.PREFIX,
                building.params, building.diagram)
            if not prefix:
                continue
            following = building.multiply(current, prefix)
            following_dist = closed.distance(following)
            change = following_dist - dist
            if change < 0:
                if phase != DECREASING:
                    continue
                next_phase = DECREASING
            elif change == 0:
                if phase == INCREASING:
                    continue
                next_phase = CONSTANT
            else:
                next_phase = INCREASING
            found = _search(following, next_phase, following_dist,
                            path + [(following, next_phase)])
            if found is not None:
                return found
        dead.add((current, phase))
        return None

    path = _search(c1, DECREASING, closed.distance(c1), [])
    if path is None:
        raise exception.InvalidPanelClosedSet(
            reason=_('no concave gallery from %(c1)s to %(c2)s') % {
                'c1': building_chambers.word_label(c1),
                'c2': building_chambers.word_label(c2)})
    phases = [phase for _chamber, phase in path]
    j = phases.count(DECREASING)
    k = j + phases.count(CONSTANT)
    chambers = (c1,) + tuple(chamber for chamber, _phase in path)
    step_types = tuple(building.adjacency(a, b)
                       for a, b in zip(chambers, chambers[1:]))
    return ConcaveGallery(building_chambers.Gallery(chambers, step_types),
                          j, k)


def closing_square(closed, c1, c2, c3, variant):
    """Complete c1 ~i c2 ~j c3 to a square c1 ~j d ~i c3.

    Variant 1 expects distances (n, n + 1, n) to C and yields d at n - 1;
    variant 2 expects (n + 1, n + 1, n) and yields d at n.

    :raises: PreconditionViolated, NonCommutingTypes, SquareNotClosed
    """
    building = closed.building
    i = building.adjacency(c1, c2)
    j = building.adjacency(c2, c3)
    if i is None or j is None or i == j:
        raise exception.PreconditionViolated(
            reason=_('chambers are not a gallery of two distinct types'))
    d1, d2, d3 = (closed.distance(c) for c in (c1, c2, c3))
    if variant == 1:
        matches = d1 == d3 and d2 == d1 + 1
        expected = d1 - 1
    elif variant == 2:
        matches = d1 == d2 and d1 == d3 + 1
        expected = d3
    else:
        raise exception.PreconditionViolated(
            reason=_('unknown variant %s') % variant)
    if not matches:
        raise exception.PreconditionViolated(
            reason=_('distances %(d)s do not match variant %(v)s') % {
                'd': [d1, d2, d3], 'v': variant})
    if not building.diagram.commute(i, j):
        raise exception.NonCommutingTypes(
            i=i, j=j, chambers=[building_chambers.word_label(c)
                                for c in (c1, c2, c3)])
    d = building.multiply(c1, building.difference(c2, c3))
    dist = closed.distance(d)
    if (dist != expected or building.adjacency(c1, d) != j or
            building.adjacency(d, c3) != i):
        raise exception.SquareNotClosed(
            chamber=building_chambers.word_label(d), dist=dist,
            expected=expected)
    return Square(d, i, j)


def sphere_case(closed, panel):
    """Position of a panel relative to the spheres around C.

    :returns: SphereCase('a', P') when the panel lies in one sphere and is
        parallel to the panel P' of C, SphereCase('b', gate) when one
        chamber is closer than all others.
    :raises: NotAPanel, InvalidPanelClosedSet
    """
    building = closed.building
    label = building.panel_type(panel)
    projections = [closed.project(c) for c in building.panel_chambers(panel)]
    distances = [p.dist for p in projections]
    n = min(distances)
    if all(dist == n for dist in distances):
        images = set(p.proj for p in projections)
        if len(images) == len(projections):
            image_panel = building.panel(projections[0].proj, label)
            if all(building.in_residue(e, image_panel) for e in images):
                return SphereCase(CASE_PARALLEL, image_panel)
    elif distances.count(n) == 1 and all(dist in (n, n + 1)
                                         for dist in distances):
        gates = set(p.proj for p in projections)
        if len(gates) == 1:
            return SphereCase(CASE_GATE, gates.pop())
    raise exception.InvalidPanelClosedSet(
        reason=_('panel at %(rep)s has distances %(d)s to the set') % {
            'rep': building_chambers.word_label(panel.rep), 'd': distances})
