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
Census of irreducible ladderful diagrams.

Connected graphs are generated up to isomorphism by vertex augmentation:
every connected graph on n vertices is a connected graph on n - 1 vertices
plus one vertex joined to a non-empty set of old vertices. Candidates are
bucketed by degree sequence and Weisfeiler-Lehman hash, duplicates are
dropped with an exact isomorphism test.
"""

import itertools

import networkx as nx
from oslo_config import cfg
from oslo_log import log

from ra_buildings.common import exception
from ra_buildings.common.i18n import _
from ra_buildings.diagram import graph as diagram_graph


LOG = log.getLogger(__name__)

opts = [
    cfg.IntOpt('max_rank',
               default=8,
               min=1,
               help=_('Largest rank accepted by the ladderful census.')),
]

CONF = cfg.CONF
opt_group = cfg.OptGroup(name='diagram',
                         title='Options for the diagram census')
CONF.register_group(opt_group)
CONF.register_opts(opts, opt_group)


def _invariant_key(graph):
    degrees = tuple(sorted(d for _v, d in graph.degree()))
    return degrees, nx.weisfeiler_lehman_graph_hash(graph, iterations=3)


def connected_graphs(n):
    """Connected graphs on the vertices 0..n-1, one per isomorphism class."""
    level = [nx.empty_graph(1)]
    for size in range(2, n + 1):
        buckets = {}
        result = []
        new_vertex = size - 1
        for base in level:
            for mask in range(1, 2 ** new_vertex):
                candidate = base.copy()
                candidate.add_node(new_vertex)
                candidate.add_edges_from(
                    (v, new_vertex) for v in range(new_vertex)
                    if mask >> v & 1)
                bucket = buckets.setdefault(_invariant_key(candidate), [])
                if any(nx.is_isomorphic(candidate, other)
                       for other in bucket):
                    continue
                bucket.append(candidate)
                result.append(candidate)
        LOG.debug('Found %(count)d connected graphs on %(size)d vertices',
                  {'count': len(result), 'size': size})
        level = result
    return level


def canonical_form(graph):
    """Canonical edge list of a graph.

    Vertices are first split into cells by (degree, neighbour degrees);
    the canonical form is the least sorted edge list over all orderings
    that list the cells in invariant order.

    :returns: a tuple of (i, j) pairs with i < j over 0..n-1.
    """
    invariants = dict(
        (v, (graph.degree(v),
             tuple(sorted(graph.degree(u) for u in graph[v]))))
        for v in graph)
    cells = {}
    for v, inv in invariants.items():
        cells.setdefault(inv, []).append(v)
    ordered_cells = [sorted(cells[inv]) for inv in sorted(cells)]

    best = None
    for parts in itertools.product(*[itertools.permutations(cell)
                                     for cell in ordered_cells]):
        position = {}
        for v in itertools.chain.from_iterable(parts):
            position[v] = len(position)
        code = tuple(sorted(tuple(sorted((position[a], position[b])))
                            for a, b in graph.edges()))
        if best is None or code < best:
            best = code
    return best


def enumerate_ladderful(n):
    """All irreducible ladderful diagrams of rank n up to isomorphism.

    :param n: the rank.
    :returns: a list of Diagrams over the types 0..n-1 in canonical order
        (fewer edges first, then the canonical edge list).
    :raises: RankTooLarge if n exceeds the configured bound,
        InvalidParameters if n < 1.
    """
    if n < 1:
        raise exception.InvalidParameters(
            reason=_('rank must be positive, got %s') % n)
    if n > CONF.diagram.max_rank:
        raise exception.RankTooLarge(rank=n, bound=CONF.diagram.max_rank)

    found = []
    for candidate in connected_graphs(n):
        diagram = diagram_graph.Diagram(range(n), candidate.edges())
        if diagram.decompose().irreducible and diagram.is_ladderful():
            found.append(canonical_form(candidate))
    found.sort(key=lambda code: (len(code), code))
    LOG.debug('Rank %(rank)d has %(count)d ladderful diagrams',
              {'rank': n, 'count': len(found)})
    return [diagram_graph.Diagram(range(n), code) for code in found]


def census(max_rank):
    """Per-rank list of ladderful diagrams for ranks 1..max_rank."""
    if max_rank > CONF.diagram.max_rank:
        raise exception.RankTooLarge(rank=max_rank,
                                     bound=CONF.diagram.max_rank)
    return [(rank, enumerate_ladderful(rank))
            for rank in range(1, max_rank + 1)]


def dot_names(diagram):
    return dict((t, 'v%d' % k) for k, t in enumerate(diagram.types))
