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
Membership in U(F), U(F') and G(F, F'), harmonious residues and the orbit
census of panels.
"""

import collections
import itertools

from oslo_log import log
import six

from ra_buildings.building import tree_walls
from ra_buildings.common import exception
from ra_buildings.permgrp import groups


LOG = log.getLogger(__name__)

SingularityReport = collections.namedtuple(
    'SingularityReport',
    ['singular_tree_walls', 'finite', 'young_ok', 'panels'])
Membership = collections.namedtuple(
    'Membership', ['in_U_F', 'in_U_Facute', 'in_G_F_Facute', 'report'])
OrbitCensus = collections.namedtuple('OrbitCensus',
                                     ['count', 'representatives'])


def classify_membership(portrait, local, acute):
    """Decide membership of a portrait in the three universal groups.

    :param local: mapping type -> PermGroup (F).
    :param acute: mapping type -> PermGroup (F').
    :returns: Membership with a SingularityReport listing the tree-walls
        whose action lies outside F, with their panels when finite.
    :raises: InconsistentPortrait
    """
    building = portrait.building
    rungs = building.diagram.rung_types()
    defaults_in_local = all(
        local[t].contains(p)
        for t in building.diagram.types
        for p in portrait.default_candidates(t))
    defaults_in_acute = all(
        acute[t].contains(p)
        for t in building.diagram.types
        for p in portrait.default_candidates(t))

    singular = []
    all_acute = True
    for tree_wall in sorted(portrait.support(), key=_tree_wall_key):
        action = portrait.tree_wall_action(tree_wall)
        if not acute[tree_wall.type].contains(action):
            all_acute = False
        if not local[tree_wall.type].contains(action):
            singular.append((tree_wall, action))

    finite = not any(t.type in rungs for t, _p in singular)
    young_ok = all(
        groups.young_overgroup(local[t.type]).contains(p)
        for t, p in singular)
    panels = []
    for tree_wall, _action in singular:
        if tree_wall.type in rungs:
            panels.append(None)
        else:
            panels.append(tree_walls.tree_wall_panels(building, tree_wall))
    report = SingularityReport(singular, finite, young_ok, panels)

    in_u_f = defaults_in_local and not singular
    in_u_acute = defaults_in_acute and all_acute
    in_g = defaults_in_local and all_acute and finite
    LOG.debug('Membership of %(portrait)r: U(F) %(u)s, U(Facute) %(ua)s, '
              'G %(g)s, %(count)d singular tree-walls',
              {'portrait': portrait, 'u': in_u_f, 'ua': in_u_acute,
               'g': in_g, 'count': len(singular)})
    return Membership(in_u_f, in_u_acute, in_g, report)


def _tree_wall_key(tree_wall):
    return (six.text_type(tree_wall.type), len(tree_wall.residue.rep),
            repr(tree_wall.residue.rep))


def harmonious(building, first, second, local):
    """True iff the out-of-type colors of two residues share F-orbits.

    :raises: TypeMismatch
    """
    if first.types != second.types:
        raise exception.TypeMismatch(first=sorted(first.types, key=str),
                                     second=sorted(second.types, key=str))
    colors_first = building.colors(first.rep)
    colors_second = building.colors(second.rep)
    for label in building.diagram.types:
        if label in first.types:
            continue
        orbit = local[label].orbit_of(colors_first[label])
        if colors_second[label] not in orbit:
            return False
    return True


def harmony_class(building, residue, local):
    """Orbit indices of the out-of-type colors, a complete invariant of
    harmony among residues of one type.
    """
    colors = building.colors(residue.rep)
    key = []
    for label in building.diagram.types:
        if label in residue.types:
            continue
        orbits = local[label].orbits()
        key.append(next(k for k, block in enumerate(orbits)
                        if colors[label] in block))
    return tuple(sorted(residue.types, key=building.diagram.order)), \
        tuple(key)


def orbit_census(building, local):
    """One representative panel per harmonious class of non-rung panels.

    Each representative is the i-panel of the product of the letters
    (j, least color of the chosen F_j-orbit) over j != i.
    """
    diagram = building.diagram
    rungs = diagram.rung_types()
    representatives = []
    for label in diagram.types:
        if label in rungs:
            continue
        others = [t for t in diagram.types if t != label]
        for choice in itertools.product(*[local[t].orbits()
                                          for t in others]):
            c = building.base
            for t, block in zip(others, choice):
                c = building.move(c, t, block[0])
            representatives.append(building.panel(c, label))
    LOG.debug('Orbit census found %(count)d classes',
              {'count': len(representatives)})
    return OrbitCensus(len(representatives), representatives)
