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
Tree-walls and tree-wall trees.

Two i-panels are parallel iff they lie in a common residue of type
{i} + i-perp, so that residue keys the tree-wall. The i-tree-wall tree has
the i-tree-walls and the residues of type I - {i} as vertices and the
residues of type i-perp as edges.
"""

import collections
import itertools

import networkx as nx
from oslo_log import log

from ra_buildings.building import chambers as building_chambers
from ra_buildings.common import exception


LOG = log.getLogger(__name__)

TreeWall = collections.namedtuple('TreeWall', ['type', 'residue'])

TREE_WALL_NODE = 'tree_wall'
RESIDUE_NODE = 'residue'


def tree_wall_of(building, panel):
    """:raises: NotAPanel"""
    label = building.panel_type(panel)
    types = building.diagram.perp((label,)) | frozenset([label])
    return TreeWall(label, building.residue_key(panel.rep, types))


def tree_wall_at(building, c, label):
    return tree_wall_of(building, building.panel(c, label))


def tree_wall_panels(building, tree_wall):
    """All panels of a tree-wall.

    A tree-wall of non-rung type i has one panel per element of the
    product of the groups Z/q_j over j in i-perp, which pairwise commute.

    :raises: InfiniteTreeWall for a rung type.
    """
    label = tree_wall.type
    if label in building.diagram.rung_types():
        raise exception.InfiniteTreeWall(label=label)
    perp = building.diagram.sort_types(building.diagram.perp((label,)))
    rep = tree_wall.residue.rep
    panels = []
    for colors in itertools.product(*[range(building.params[j])
                                      for j in perp]):
        c = rep
        for j, color in zip(perp, colors):
            c = building.move(c, j, color)
        panels.append(building.panel(c, label))
    return panels


def _edge_of(building, label, c, complement, perp):
    tree_wall = tree_wall_at(building, c, label)
    residue = building.residue_key(c, complement)
    return ((TREE_WALL_NODE, tree_wall), (RESIDUE_NODE, residue),
            building.residue_key(c, perp))


def tree_wall_tree(building, label, chambers):
    """The part of the i-tree-wall tree met by a set of chambers.

    :returns: an undirected networkx MultiGraph whose nodes are
        ``('tree_wall', TreeWall)`` and ``('residue', ResidueKey)`` pairs;
        each edge is keyed by its i-perp residue and carries it under the
        ``residue`` key, so two residues joining the same vertices stay
        two edges.
    """
    building.diagram.check_type(label)
    complement = frozenset(t for t in building.diagram.types if t != label)
    perp = building.diagram.perp((label,))
    graph = nx.MultiGraph()
    for c in chambers:
        first, second, residue = _edge_of(building, label, c, complement,
                                          perp)
        graph.add_edge(first, second, key=residue, residue=residue)
    LOG.debug('Tree-wall tree of type %(label)s has %(nodes)d vertices and '
              '%(edges)d edges', {'label': label,
                                  'nodes': graph.number_of_nodes(),
                                  'edges': graph.number_of_edges()})
    return graph


def tw_distance(building, label, c1, c2, chambers, graph=None):
    """Line-graph distance in the i-tree-wall tree between the edges of c1
    and c2.

    :param chambers: the ball the tree is truncated to.
    :param graph: a tree built by tree_wall_tree from the same chambers.
    :raises: PathEscapesBall
    """
    if graph is None:
        graph = tree_wall_tree(building, label, chambers)
    complement = frozenset(t for t in building.diagram.types if t != label)
    perp = building.diagram.perp((label,))
    first = _edge_of(building, label, c1, complement, perp)
    second = _edge_of(building, label, c2, complement, perp)
    if first[2] == second[2]:
        return 0
    best = None
    for u in first[:2]:
        for v in second[:2]:
            try:
                length = nx.shortest_path_length(graph, u, v)
            except (nx.NetworkXNoPath, nx.NodeNotFound):
                continue
            if best is None or length < best:
                best = length
    if best is None:
        raise exception.PathEscapesBall(
            first=building_chambers.word_label(c1),
            second=building_chambers.word_label(c2))
    return best + 1
