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
Constructions of portraits: elements with one prescribed local action,
extensions of maps on panel-closed sets and restrictions to wings.
"""

import itertools

from oslo_config import cfg
from oslo_log import log
from oslo_utils import excutils

from ra_buildings.building import chambers as building_chambers
from ra_buildings.building import tree_walls
from ra_buildings.common import exception
from ra_buildings.common.i18n import _
from ra_buildings.common.i18n import _LE
from ra_buildings.permgrp import groups
from ra_buildings.universal import portrait as portrait_mod


LOG = log.getLogger(__name__)

opts = [
    cfg.IntOpt('validation_radius',
               default=2,
               min=0,
               help=_('Radius of the ball on which wing restrictions check '
                      'that the tree-wall is fixed.')),
]

CONF = cfg.CONF
opt_group = cfg.OptGroup(name='universal',
                         title='Options for portrait constructions')
CONF.register_group(opt_group)
CONF.register_opts(opts, opt_group)

_label = building_chambers.word_label


def _local_defaults(building, local):
    return dict((t, local[t].elements()) for t in building.diagram.types)


def kp_element(building, panel, action, local):
    """An element stabilizing a panel with a given local action on its
    tree-wall and local actions in F elsewhere.

    The portrait is anchored at the gate r of the panel seen from the base
    chamber and maps r to the chamber of the panel colored
    f(lambda_i(r)).

    :raises: NotAPanel, DegreeMismatch, InvalidPermutation
    """
    label = building.panel_type(panel)
    degree = building.params[label]
    if len(action) != degree:
        raise exception.DegreeMismatch(degree=len(action), expected=degree,
                                       what=_('local action'))
    action = groups.check_permutation(action, degree)
    anchor = panel.rep
    x = building.color(anchor, label)
    anchor_image = building.move(anchor, label, action[x] - x)
    return portrait_mod.LocalPortrait(
        building, anchor, anchor_image, _local_defaults(building, local),
        {tree_walls.tree_wall_of(building, panel): action})


def _check_partial(building, closed, partial, local):
    missing = [c for c in closed if c not in partial]
    if missing or len(partial) != len(closed):
        raise exception.InvalidParameters(
            reason=_('partial map must be defined exactly on the set'))
    members = list(closed)
    for c, e in itertools.combinations(members, 2):
        if (building.weyl_distance(c, e) !=
                building.weyl_distance(partial[c], partial[e])):
            raise exception.NotDistancePreserving(first=_label(c),
                                                  second=_label(e))
    for c in members:
        source = building.colors(c)
        target = building.colors(partial[c])
        for label in building.diagram.types:
            if target[label] not in local[label].orbit_of(source[label]):
                raise exception.NotHarmonious(source=_label(c),
                                              target=_label(partial[c]))


def _forced_actions(building, closed, partial):
    forced = {}
    seen = set()
    for c in closed:
        for label in building.diagram.types:
            panel = building.panel(c, label)
            if panel in seen:
                continue
            seen.add(panel)
            chambers = building.panel_chambers(panel)
            if not all(e in closed for e in chambers):
                continue
            images = [None] * building.params[label]
            for e in chambers:
                images[building.color(e, label)] = building.color(
                    partial[e], label)
            if not groups.is_permutation(images, len(images)):
                raise exception.NotDistancePreserving(
                    first=_label(chambers[0]), second=_label(chambers[1]))
            tree_wall = tree_walls.tree_wall_of(building, panel)
            action = tuple(images)
            if forced.setdefault(tree_wall, action) != action:
                raise exception.InconsistentLocalActions(
                    tree_wall=_label(tree_wall.residue.rep))
    return forced


def extend_partial(building, closed, partial, local, depth):
    """Extend a Weyl-distance preserving map on a panel-closed set.

    Tree-walls containing a panel of C get the action read from the
    partial map; every other panel uses the first element of F_i that is
    compatible with the colors the evaluation walk enters it with.

    :param closed: a PanelClosedSet.
    :param partial: mapping chamber -> chamber defined on C.
    :param local: mapping type -> PermGroup (F).
    :param depth: radius around C on which the result is evaluated.
    :returns: a LocalPortrait agreeing with the partial map on C.
    :raises: NotHarmonious, NotDistancePreserving, InconsistentLocalActions,
        NoValidLocalAction, BallTooLarge
    """
    _check_partial(building, closed, partial, local)
    forced = _forced_actions(building, closed, partial)
    anchor = list(closed)[0]
    result = portrait_mod.LocalPortrait(
        building, anchor, partial[anchor], _local_defaults(building, local),
        forced)
    for c in building.ball(closed, depth):
        try:
            image = result.apply(c)
        except exception.InconsistentPortrait as e:
            raise exception.NoValidLocalAction(
                label=e.kwargs.get('label'), source=e.kwargs.get('source'),
                target=e.kwargs.get('target'))
        if c in closed and image != partial[c]:
            raise exception.PropertyViolation(
                reason=_('extension maps %(c)s to %(image)s instead of '
                         '%(target)s') % {'c': _label(c),
                                          'image': _label(image),
                                          'target': _label(partial[c])})
    LOG.debug('Extended a map on %(count)d chambers with %(forced)d forced '
              'tree-walls', {'count': len(closed), 'forced': len(forced)})
    return result


def wing_restrict(building, portrait, panel, chamber, radius=None):
    """The automorphism acting as the portrait on the i-wing of a chamber
    of the panel and as the identity elsewhere.

    :param radius: ball around the chamber on which the tree-wall of the
        panel must be fixed; defaults to ``[universal] validation_radius``.
    :raises: PreconditionViolated, TreeWallNotFixed
    """
    if radius is None:
        radius = CONF.universal.validation_radius
    label = building.panel_type(panel)
    if not building.in_residue(chamber, panel):
        raise exception.PreconditionViolated(
            reason=_('%s is not a chamber of the panel') % _label(chamber))
    tree_wall = tree_walls.tree_wall_of(building, panel)
    for c in building.ball(chamber, radius):
        if tree_walls.tree_wall_at(building, c, label) != tree_wall:
            continue
        try:
            image = portrait.apply(c)
        except exception.InconsistentPortrait:
            with excutils.save_and_reraise_exception():
                LOG.error(_LE('Portrait cannot be evaluated at %s'),
                          _label(c))
        if image != c:
            raise exception.TreeWallNotFixed(chamber=_label(c))
    return portrait_mod.PiecewiseAutomorphism(portrait, panel, chamber)
