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
Randomized property suites over a ball around the base chamber.

Every sample draws from its own generator seeded by (seed, sample index),
so splitting the samples between workers does not change the result. A
sample either checks one configuration or is skipped when the drawn
configuration does not meet the preconditions of the property. Checks over
the whole ball run once in a suite's setup step, before sampling starts.
"""

import itertools
import random

import networkx as nx
from oslo_config import cfg
from oslo_log import log
import six

from ra_buildings.building import chambers as building_chambers
from ra_buildings.building import panel_closed
from ra_buildings.building import tree_walls
from ra_buildings.common import exception
from ra_buildings.common.i18n import _
from ra_buildings.common.i18n import _LI
from ra_buildings.common.i18n import _LW
from ra_buildings.common import utils
from ra_buildings.diagram import graph
from ra_buildings.permgrp import groups
from ra_buildings.universal import extension
from ra_buildings.universal import membership
from ra_buildings.universal import portrait as portraits
from ra_buildings.words import normal_form


LOG = log.getLogger(__name__)

opts = [
    cfg.IntOpt('default_radius',
               default=3,
               min=0,
               help=_('Radius of the ball the suites sample from.')),
    cfg.IntOpt('default_samples',
               default=200,
               min=1,
               help=_('Number of configurations checked per suite.')),
    cfg.IntOpt('default_seed',
               default=0,
               help=_('Seed of the sample generators.')),
    cfg.IntOpt('max_attempts_factor',
               default=50,
               min=1,
               help=_('Draws per requested sample before a suite gives up '
                      'on finding matching configurations.')),
]

CONF = cfg.CONF
opt_group = cfg.OptGroup(name='suites', title='Options for property suites')
CONF.register_group(opt_group)
CONF.register_opts(opts, opt_group)

SUITES = {}
SETUPS = {}

_label = building_chambers.word_label
_json = normal_form.to_json


def suite(name, setup=None):
    """Register a sample function, and optionally a setup step that runs
    once per suite run with (spec, chambers, tally, context).
    """
    def decorator(func):
        SUITES[name] = func
        if setup is not None:
            SETUPS[name] = setup
        return func
    return decorator


class Tally(object):
    """Counts checked configurations and keeps the smallest failure."""

    def __init__(self, name):
        self.name = name
        self.checked = 0
        self.violations = 0
        self.counterexample = None

    def ok(self):
        self.checked += 1

    def fail(self, payload):
        self.checked += 1
        self.violations += 1
        if (self.counterexample is None or
                len(utils.dumps(payload)) <
                len(utils.dumps(self.counterexample))):
            self.counterexample = payload

    def check(self, condition, payload):
        if condition:
            self.ok()
        else:
            self.fail(payload)

    def summary(self):
        return {'suite': self.name, 'checked': self.checked,
                'violations': self.violations,
                'counterexample': self.counterexample}


def sample_rng(seed, index):
    return random.Random(seed * 1000003 + index)


def _near(spec, context, radius=1):
    key = ('near', radius)
    if key not in context:
        context[key] = spec.building.ball(spec.building.base, radius)
    return context[key]


def _random_closed(spec, chambers, rng, context):
    """A panel-closed set generated by one to three chambers near the base,
    or None when the closure is too large.
    """
    near = _near(spec, context, 2)
    seeds = [rng.choice(near) for _k in range(rng.randint(1, 3))]
    try:
        return panel_closed.panel_closed_closure(
            spec.building, seeds, bound=context['radius'])
    except exception.EscapesBound:
        return None


def _random_portrait(spec, rng, context):
    """A K_P element at a random panel next to the base chamber."""
    building = spec.building
    rungs = building.diagram.rung_types()
    c = rng.choice(_near(spec, context))
    label = rng.choice(building.diagram.types)
    group = spec.local[label] if label in rungs else spec.acute[label]
    action = rng.choice(group.elements())
    return extension.kp_element(building, building.panel(c, label), action,
                                spec.local)


def _panel_json(panel):
    return {'rep': _json(panel.rep),
            'type': next(iter(panel.types))}


@suite('coloring')
def _coloring(spec, chambers, rng, tally, context):
    building = spec.building
    c = rng.choice(chambers)
    label = rng.choice(building.diagram.types)
    panel = building.panel(c, label)
    colors = [building.colors(e) for e in building.panel_chambers(panel)]
    bijective = (sorted(col[label] for col in colors) ==
                 list(range(building.params[label])))
    constant = all(col[t] == colors[0][t] for col in colors
                   for t in building.diagram.types if t != label)
    tally.check(bijective and constant, _panel_json(panel))


@suite('gate')
def _gate(spec, chambers, rng, tally, context):
    building = spec.building
    c = rng.choice(chambers)
    if rng.randrange(2):
        types = [t for t in building.diagram.types if rng.randrange(2)]
        residue = building.residue_key(rng.choice(chambers), types)
        gate = building.project_residue(c, residue)
        inside = [e for e in chambers if building.in_residue(e, residue)]
        best = min(building.distance(c, e) for e in inside)
        winners = [e for e in inside if building.distance(c, e) == best]
        ok = (building.in_residue(gate, residue) and
              building.distance(c, gate) <= best and
              (gate not in inside or winners == [gate]))
        tally.check(ok, {'chamber': _json(c), 'residue': _json(residue.rep),
                         'types': building.diagram.sort_types(types)})
        return
    closed = _random_closed(spec, chambers, rng, context)
    if closed is None:
        return
    payload = {'chamber': _json(c), 'set': [_json(e) for e in closed]}
    try:
        gate = closed.project(c)
    except exception.InvalidPanelClosedSet:
        tally.fail(payload)
        return
    ok = all(building.distance(c, e) ==
             gate.dist + building.distance(gate.proj, e) for e in closed)
    label = rng.choice(building.diagram.types)
    projections = set(closed.project(e).proj for e in
                      building.panel_chambers(building.panel(c, label)))
    ok = ok and all(building.adjacency(a, b) == label
                    for a, b in itertools.combinations(projections, 2))
    tally.check(ok, payload)


@suite('closing-squares')
def _closing_squares(spec, chambers, rng, tally, context):
    building = spec.building
    types = building.diagram.types
    if len(types) < 2:
        return
    if rng.randrange(2):
        closed = panel_closed.PanelClosedSet(
            building, [rng.choice(_near(spec, context))], validate=False)
    else:
        closed = _random_closed(spec, chambers, rng, context)
        if closed is None:
            return
    c2 = rng.choice(chambers)
    i, j = rng.sample(types, 2)
    c1 = building.move(c2, i, rng.randrange(1, building.params[i]))
    c3 = building.move(c2, j, rng.randrange(1, building.params[j]))
    d1, d2, d3 = (closed.distance(c) for c in (c1, c2, c3))
    if d1 == d3 and d2 == d1 + 1:
        variant = 1
    elif d1 == d2 and d1 == d3 + 1:
        variant = 2
    else:
        return
    try:
        panel_closed.closing_square(closed, c1, c2, c3, variant)
    except (exception.NonCommutingTypes, exception.SquareNotClosed) as e:
        tally.fail({'chambers': [_json(c) for c in (c1, c2, c3)],
                    'variant': variant, 'set': [_json(e) for e in closed],
                    'error': six.text_type(e)})
        return
    tally.ok()


@suite('concave')
def _concave(spec, chambers, rng, tally, context):
    building = spec.building
    closed = _random_closed(spec, chambers, rng, context)
    if closed is None:
        return
    c1, c2 = rng.choice(chambers), rng.choice(chambers)
    payload = {'from': _json(c1), 'to': _json(c2),
               'set': [_json(e) for e in closed]}
    try:
        result = panel_closed.concave_gallery(closed, c1, c2)
    except exception.InvalidPanelClosedSet:
        tally.fail(payload)
        return
    path = result.gallery.chambers
    distances = [closed.distance(c) for c in path]
    steps = [b - a for a, b in zip(distances, distances[1:])]
    ok = (len(path) == building.distance(c1, c2) + 1 and
          all(s == -1 for s in steps[:result.j]) and
          all(s == 0 for s in steps[result.j:result.k]) and
          all(s == 1 for s in steps[result.k:]))
    tally.check(ok, payload)


def _treewall_setup(spec, chambers, tally, context):
    for label in spec.building.diagram.types:
        tree = tree_walls.tree_wall_tree(spec.building, label, chambers)
        context[('tree', label)] = tree
        tally.check(nx.is_forest(tree), {'type': label, 'check': 'acyclic'})


@suite('treewall', setup=_treewall_setup)
def _treewall(spec, chambers, rng, tally, context):
    building = spec.building
    label = rng.choice(building.diagram.types)
    tree = context[('tree', label)]
    if rng.randrange(2):
        c1, c2 = rng.choice(chambers), rng.choice(chambers)
        try:
            distance = tree_walls.tw_distance(building, label, c1, c2,
                                              chambers, graph=tree)
        except exception.PathEscapesBall:
            return
        epsilon = distance - 2 * building.i_distance(c1, c2, label)
        tally.check(epsilon in (-1, 0, 1),
                    {'type': label, 'chambers': [_json(c1), _json(c2)],
                     'tw_distance': distance})
        return
    panel = building.panel(rng.choice(chambers), label)
    tree_wall = tree_walls.tree_wall_of(building, panel)
    payload = {'type': label, 'panel': _json(panel.rep)}
    perp = building.diagram.perp((label,))
    if label in building.diagram.rung_types():
        try:
            tree_walls.tree_wall_panels(building, tree_wall)
        except exception.InfiniteTreeWall:
            tally.ok()
        else:
            tally.fail(payload)
        return
    panels = tree_walls.tree_wall_panels(building, tree_wall)
    size = 1
    for j in perp:
        size *= building.params[j]
    other = rng.choice(panels)
    ok = (len(panels) == size and len(set(panels)) == size and
          tree_walls.tree_wall_of(building, other) == tree_wall and
          (other == panel or building.are_parallel(panel, other)))
    tally.check(ok, payload)


@suite('portrait-algebra')
def _portrait_algebra(spec, chambers, rng, tally, context):
    building = spec.building
    g = _random_portrait(spec, rng, context)
    h = _random_portrait(spec, rng, context)
    c = rng.choice(_near(spec, context, 2))
    label = rng.choice(building.diagram.types)
    panel = building.panel(c, label)
    payload = {'g': g.to_json(), 'h': h.to_json(),
               'panel': _panel_json(panel)}

    composed = portraits.compose(g, h).local_action(panel)
    moved = building.panel(h.apply(panel.rep), label)
    ok = composed == groups.compose(g.local_action(moved),
                                    h.local_action(panel))

    image = building.panel(g.apply(panel.rep), label)
    ok = ok and (portraits.inverse(g).local_action(image) ==
                 groups.inverse(g.local_action(panel)))

    perp = building.diagram.sort_types(building.diagram.perp((label,)))
    if perp:
        j = rng.choice(perp)
        parallel = building.panel(
            building.move(panel.rep, j, rng.randrange(building.params[j])),
            label)
        ok = ok and g.local_action(parallel) == g.local_action(panel)

    e = building.move(c, label, rng.randrange(1, building.params[label]))
    ok = ok and building.adjacency(g.apply(c), g.apply(e)) == label
    tally.check(ok, payload)


def _non_rung_types(building):
    rungs = building.diagram.rung_types()
    return [t for t in building.diagram.types if t not in rungs]


def _orbits_setup(spec, chambers, tally, context):
    building = spec.building
    labels = _non_rung_types(building)
    if not labels:
        return
    census = membership.orbit_census(building, spec.local)
    context['census'] = census
    ball = set(chambers)
    reachable = set(
        membership.harmony_class(building, p, spec.local)
        for p in census.representatives if p.rep in ball)
    found = set(
        membership.harmony_class(building, building.panel(c, t), spec.local)
        for c in chambers for t in labels)
    distinct = len(census.representatives) == census.count and all(
        not membership.harmonious(building, p, r, spec.local)
        for p, r in itertools.combinations(census.representatives, 2)
        if p.types == r.types)
    if all(p.rep in ball for p in census.representatives):
        counted = len(found) == census.count
    else:
        counted = len(found) <= census.count
    tally.check(reachable <= found and counted and distinct,
                {'count': census.count, 'found': len(found)})


@suite('orbits', setup=_orbits_setup)
def _orbits(spec, chambers, rng, tally, context):
    building = spec.building
    labels = _non_rung_types(building)
    if not labels:
        return
    census = context['census']
    panel = building.panel(rng.choice(chambers), rng.choice(labels))
    matches = [r for r in census.representatives
               if r.types == panel.types and
               membership.harmonious(building, panel, r, spec.local)]
    tally.check(len(matches) == 1, _panel_json(panel))


def _check_extension_pair(spec, chambers, rng, tally):
    building = spec.building
    c, e = rng.choice(chambers), rng.choice(chambers)
    first = building.residue_key(c, ())
    second = building.residue_key(e, ())
    payload = {'from': _json(c), 'to': _json(e)}
    closed = panel_closed.PanelClosedSet(building, [c], validate=False)
    if not membership.harmonious(building, first, second, spec.local):
        try:
            extension.extend_partial(building, closed, {c: e}, spec.local, 0)
        except exception.NotHarmonious:
            tally.ok()
        else:
            tally.fail(payload)
        return
    result = extension.extend_partial(building, closed, {c: e}, spec.local,
                                      1)
    label = rng.choice(building.diagram.types)
    action = result.local_action(building.panel(c, label))
    found = membership.classify_membership(result, spec.local, spec.acute)
    tally.check(result.apply(c) == e and found.in_U_F and
                spec.local[label].contains(action), payload)


def _check_kp(spec, chambers, rng, tally, context):
    building = spec.building
    labels = _non_rung_types(building)
    if not labels:
        return
    label = rng.choice(labels)
    panel = building.panel(rng.choice(_near(spec, context)), label)
    action = rng.choice(spec.acute[label].elements())
    g = extension.kp_element(building, panel, action, spec.local)
    payload = {'panel': _panel_json(panel), 'action': list(action)}
    tree_wall = tree_walls.tree_wall_of(building, panel)
    stabilizes = all(building.in_residue(g.apply(c), panel)
                     for c in building.panel_chambers(panel))
    other = rng.choice(tree_walls.tree_wall_panels(building, tree_wall))
    prescribed = (g.local_action(panel) == action and
                  g.local_action(other) == action)
    elsewhere = building.panel(rng.choice(chambers),
                               rng.choice(building.diagram.types))
    local_ok = (tree_walls.tree_wall_of(building, elsewhere) == tree_wall or
                spec.local[next(iter(elsewhere.types))].contains(
                    g.local_action(elsewhere)))
    found = membership.classify_membership(g, spec.local, spec.acute)
    singular = [t for t, _p in found.report.singular_tree_walls]
    expected = [] if spec.local[label].contains(action) else [tree_wall]
    tally.check(stabilizes and prescribed and local_ok and
                found.in_G_F_Facute and singular == expected, payload)


def _check_full_panel(spec, chambers, rng, tally, context):
    building = spec.building
    label = rng.choice(building.diagram.types)
    group = (spec.local[label] if label in building.diagram.rung_types()
             else spec.acute[label])
    action = rng.choice(group.elements())
    panel = building.panel(rng.choice(_near(spec, context)), label)
    members = building.panel_chambers(panel)
    closed = panel_closed.PanelClosedSet(building, members, validate=False)
    x = building.color(panel.rep, label)
    partial = dict((c, building.move(panel.rep, label,
                                     action[building.color(c, label)] - x))
                   for c in members)
    result = extension.extend_partial(building, closed, partial, spec.local,
                                      1)
    tree_wall = tree_walls.tree_wall_of(building, panel)
    elsewhere = building.panel(rng.choice(building.ball(closed, 1)),
                               rng.choice(building.diagram.types))
    local_ok = (tree_walls.tree_wall_of(building, elsewhere) == tree_wall or
                spec.local[next(iter(elsewhere.types))].contains(
                    result.local_action(elsewhere)))
    tally.check(result.local_action(panel) == action and local_ok,
                {'panel': _panel_json(panel), 'action': list(action)})


def _check_cosets(spec, chambers, rng, tally, context):
    building = spec.building
    labels = _non_rung_types(building)
    if not labels:
        return
    label = rng.choice(labels)
    panel = building.panel(building.base, label)
    f1 = rng.choice(spec.acute[label].elements())
    f2 = rng.choice(spec.acute[label].elements())
    g1 = extension.kp_element(building, panel, f1, spec.local)
    g2 = extension.kp_element(building, panel, f2, spec.local)
    quotient = portraits.compose(portraits.inverse(g1), g2)
    found = membership.classify_membership(quotient, spec.local, spec.acute)
    same_coset = spec.local[label].contains(
        groups.compose(groups.inverse(f1), f2))
    cosets = set(frozenset(groups.compose(f, k)
                           for k in spec.local[label].elements())
                 for f in spec.acute[label].elements())
    index = groups.subgroup_index(spec.local[label], spec.acute[label])
    tally.check(found.in_U_F == same_coset and len(cosets) == index,
                {'type': label, 'f1': list(f1), 'f2': list(f2)})


@suite('extension')
def _extension(spec, chambers, rng, tally, context):
    choice = rng.randrange(4)
    if choice == 0:
        _check_extension_pair(spec, chambers, rng, tally)
    elif choice == 1:
        _check_kp(spec, chambers, rng, tally, context)
    elif choice == 2:
        _check_full_panel(spec, chambers, rng, tally, context)
    else:
        _check_cosets(spec, chambers, rng, tally, context)


@suite('independence')
def _independence(spec, chambers, rng, tally, context):
    building = spec.building
    diagram = building.diagram
    pairs = [(i, j) for i in diagram.types for j in diagram.types
             if diagram.m_value(i, j) == graph.INFINITY]
    if not pairs:
        return
    i, j = rng.choice(pairs)
    panel = building.panel(building.base, i)
    members = building.panel_chambers(panel)
    c = rng.choice(members)
    inner_panel = building.panel(c, j)
    x = building.color(inner_panel.rep, j)
    group = (spec.local[j] if j in diagram.rung_types() else spec.acute[j])
    fixing = [f for f in group.elements() if f[x] == x]
    g = extension.kp_element(building, inner_panel, rng.choice(fixing),
                             spec.local)
    pieces = [extension.wing_restrict(building, g, panel, d)
              for d in members]
    product = pieces[0]
    for piece in pieces[1:]:
        product = portraits.compose(product, piece)
    test_ball = _near(spec, context, min(context['radius'], 3))
    payload = {'g': g.to_json(), 'panel': _panel_json(panel)}
    if portraits.agree_on(product, g, test_ball) is not None:
        tally.fail(payload)
        return
    whole = membership.classify_membership(g, spec.local, spec.acute)
    restricted = membership.classify_membership(
        pieces[members.index(c)], spec.local, spec.acute)
    tally.check(whole.in_G_F_Facute == restricted.in_G_F_Facute, payload)


def check_suite(spec, name, radius=None, samples=None, seed=None):
    """Run one property suite.

    :param spec: a BuildingSpec.
    :param name: one of SUITES.
    :returns: dict with ``suite``, ``checked``, ``violations`` and
        ``counterexample``.
    :raises: UnknownSuite, BallTooLarge
    """
    if name not in SUITES:
        raise exception.UnknownSuite(suite=name, known=sorted(SUITES))
    if radius is None:
        radius = CONF.suites.default_radius
    if samples is None:
        samples = CONF.suites.default_samples
    if seed is None:
        seed = CONF.suites.default_seed
    radius = utils.validate_non_negative(radius, 'radius')
    samples = utils.validate_non_negative(samples, 'samples')

    chambers = spec.building.ball(spec.building.base, radius)
    tally = Tally(name)
    context = {'radius': radius}
    if name in SETUPS:
        try:
            SETUPS[name](spec, chambers, tally, context)
        except exception.PropertyViolation as e:
            tally.fail({'setup': name, 'error': six.text_type(e)})
            return tally.summary()
    attempts = samples * CONF.suites.max_attempts_factor
    index = 0
    while tally.checked < samples and index < attempts:
        try:
            SUITES[name](spec, chambers, sample_rng(seed, index), tally,
                         context)
        except exception.PropertyViolation as e:
            tally.fail({'sample': index, 'error': six.text_type(e)})
        index += 1
    if tally.checked < samples:
        LOG.warning(_LW('Suite %(suite)s found only %(checked)d matching '
                        'configurations in %(attempts)d draws'),
                    {'suite': name, 'checked': tally.checked,
                     'attempts': attempts})
    LOG.info(_LI('Suite %(suite)s checked %(checked)d configurations, '
                 '%(violations)d violations'),
             {'suite': name, 'checked': tally.checked,
              'violations': tally.violations})
    return tally.summary()
