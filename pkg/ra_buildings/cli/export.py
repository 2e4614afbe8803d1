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

"""DOT and JSON exports of balls, tree-walls and tree-wall trees."""

from oslo_config import cfg
from oslo_log import log
import six

from ra_buildings.building import chambers
from ra_buildings.building import tree_walls
from ra_buildings.common import exception
from ra_buildings.common.i18n import _
from ra_buildings.common import utils
from ra_buildings.words import normal_form


LOG = log.getLogger(__name__)

opts = [
    cfg.IntOpt('default_radius',
               default=2,
               min=0,
               help=_('Radius of exported balls and tree-wall trees.')),
]

CONF = cfg.CONF
opt_group = cfg.OptGroup(name='export', title='Options for graph exports')
CONF.register_group(opt_group)
CONF.register_opts(opts, opt_group)

DOT = 'dot'
JSON = 'json'
FORMATS = (DOT, JSON)

BALL = 'ball'
TREEWALL = 'treewall'
GAMMA = 'gamma'
WHAT = (BALL, TREEWALL, GAMMA)


def _quote(text):
    return '"%s"' % text.replace('\\', '\\\\').replace('"', '\\"')


def _dot(name, nodes, edges, clusters=()):
    lines = ['graph %s {' % name]
    for node in nodes:
        lines.append('    %s;' % _quote(node))
    for k, (label, members) in enumerate(clusters):
        lines.append('    subgraph cluster_%d {' % k)
        lines.append('        label=%s;' % _quote(label))
        for node in members:
            lines.append('        %s;' % _quote(node))
        lines.append('    }')
    for first, second, label in edges:
        lines.append('    %s -- %s [label=%s];' % (
            _quote(first), _quote(second), _quote(six.text_type(label))))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def ball_graph(building, radius):
    """Chambers of the ball around the base chamber and their adjacencies.

    :returns: (chambers in BFS order, [(index, index, type)]).
    """
    members = building.ball(building.base, radius)
    index = dict((c, k) for k, c in enumerate(members))
    edges = []
    for k, c in enumerate(members):
        for label, e in building.neighbours(c):
            if index.get(e, -1) > k:
                edges.append((k, index[e], label))
    return members, edges


def export_ball(building, radius, fmt):
    members, edges = ball_graph(building, radius)
    if fmt == JSON:
        return utils.dumps({
            'chambers': [normal_form.to_json(c) for c in members],
            'edges': [list(edge) for edge in edges]})
    labels = [chambers.word_label(c) for c in members]
    return _dot('ball', labels,
                [(labels[a], labels[b], t) for a, b, t in edges])


def export_treewall(building, label, fmt):
    """The panels of the type-i tree-wall through the base chamber.

    :raises: InfiniteTreeWall
    """
    tree_wall = tree_walls.tree_wall_at(building, building.base, label)
    panels = tree_walls.tree_wall_panels(building, tree_wall)
    if fmt == JSON:
        return utils.dumps({
            'type': label,
            'residue': normal_form.to_json(tree_wall.residue.rep),
            'panels': [{'rep': normal_form.to_json(p.rep),
                        'chambers': [normal_form.to_json(c) for c in
                                     building.panel_chambers(p)]}
                       for p in panels]})
    clusters = []
    edges = []
    for panel in panels:
        members = [chambers.word_label(c)
                   for c in building.panel_chambers(panel)]
        clusters.append((chambers.word_label(panel.rep), members))
        for k, first in enumerate(members):
            for second in members[k + 1:]:
                edges.append((first, second, label))
    return _dot('treewall', [], edges, clusters)


def _node_label(node):
    kind, key = node
    rep = key.residue.rep if kind == tree_walls.TREE_WALL_NODE else key.rep
    prefix = 'T' if kind == tree_walls.TREE_WALL_NODE else 'R'
    return '%s:%s' % (prefix, chambers.word_label(rep))


def export_gamma(building, label, radius, fmt):
    """The i-tree-wall tree met by the ball around the base chamber."""
    graph = tree_walls.tree_wall_tree(
        building, label, building.ball(building.base, radius))
    nodes = sorted(graph.nodes(), key=lambda n: (n[0], _node_label(n)))
    edges = sorted(
        (tuple(sorted((_node_label(u), _node_label(v)))),
         chambers.word_label(data['residue'].rep))
        for u, v, data in graph.edges(data=True))
    if fmt == JSON:
        return utils.dumps({
            'type': label,
            'tree_walls': [_node_label(n) for n in nodes
                           if n[0] == tree_walls.TREE_WALL_NODE],
            'residues': [_node_label(n) for n in nodes
                         if n[0] == tree_walls.RESIDUE_NODE],
            'edges': [[pair[0], pair[1], residue]
                      for pair, residue in edges]})
    return _dot('gamma', [_node_label(n) for n in nodes],
                [(pair[0], pair[1], residue) for pair, residue in edges])


def export(spec, what, fmt, label=None, radius=None):
    """Render one of the exports of a specification.

    :param what: ``ball``, ``treewall`` or ``gamma``.
    :param fmt: ``dot`` or ``json``.
    :param label: the type, required for ``treewall`` and ``gamma``.
    :raises: InvalidParameters, UnknownType, BallTooLarge, InfiniteTreeWall
    """
    if radius is None:
        radius = CONF.export.default_radius
    radius = utils.validate_non_negative(radius, 'radius')
    if fmt not in FORMATS:
        raise exception.InvalidParameters(
            reason=_('unknown format %s') % fmt)
    building = spec.building
    LOG.debug('Exporting %(what)s as %(fmt)s',
              {'what': what, 'fmt': fmt})
    if what == BALL:
        return export_ball(building, radius, fmt)
    if what not in WHAT:
        raise exception.InvalidParameters(
            reason=_('unknown export %s') % what)
    if label is None:
        raise exception.InvalidParameters(
            reason=_('%s needs a type') % what)
    label = building.diagram.check_type(label)
    if what == TREEWALL:
        return export_treewall(building, label, fmt)
    return export_gamma(building, label, radius, fmt)
