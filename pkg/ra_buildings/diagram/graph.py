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
Right-angled Coxeter diagrams.

A diagram is a graph on the index set I whose edges are the pairs with
m(i, j) = infinity; every other pair of distinct types commutes (m = 2).
"""

import collections

import networkx as nx
import six

from ra_buildings.common import exception
from ra_buildings.common.i18n import _


INFINITY = float('inf')

Decomposition = collections.namedtuple(
    'Decomposition', ['components', 'isolated', 'irreducible'])


class Diagram(object):
    """An immutable right-angled Coxeter diagram.

    :param types: ordered labels of the index set; the order is the one used
        by ShortLex normal forms.
    :param infinity_edges: iterable of two-element iterables, the pairs with
        m = infinity.
    :raises: InvalidDiagram, UnknownType
    """

    def __init__(self, types, infinity_edges=()):
        types = tuple(types)
        if not types:
            raise exception.InvalidDiagram(reason=_('the index set is empty'))
        if len(set(types)) != len(types):
            raise exception.InvalidDiagram(
                reason=_('type labels are not distinct: %s') % (types,))
        self.types = types
        self._order = dict((label, k) for k, label in enumerate(types))

        graph = nx.Graph()
        graph.add_nodes_from(types)
        for edge in infinity_edges:
            edge = tuple(edge)
            if len(edge) != 2:
                raise exception.InvalidDiagram(
                    reason=_('edge %s does not have two endpoints') % (edge,))
            i, j = edge
            self.check_type(i)
            self.check_type(j)
            if i == j:
                raise exception.InvalidDiagram(
                    reason=_('self-loop at type %s') % (i,))
            graph.add_edge(i, j)
        self.graph = nx.freeze(graph)

        self._blocking = dict(
            (t, frozenset(graph[t]) | frozenset([t])) for t in types)

    def __eq__(self, other):
        return (isinstance(other, Diagram) and self.types == other.types and
                self.infinity_edges() == other.infinity_edges())

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.types, tuple(self.infinity_edges())))

    def __repr__(self):
        return 'Diagram(%r, %r)' % (list(self.types),
                                    [list(e) for e in self.infinity_edges()])

    @property
    def rank(self):
        return len(self.types)

    def check_type(self, label):
        if label not in self._order:
            raise exception.UnknownType(label=label)
        return label

    def order(self, label):
        """Position of a type in the declared order."""
        try:
            return self._order[label]
        except (KeyError, TypeError):
            raise exception.UnknownType(label=label)

    def sort_types(self, labels):
        return sorted(labels, key=self.order)

    def infinity_edges(self):
        """The infinity edges as pairs sorted by the declared order."""
        edges = []
        for i, j in self.graph.edges():
            pair = tuple(self.sort_types((i, j)))
            edges.append(pair)
        return sorted(edges, key=lambda e: (self.order(e[0]),
                                            self.order(e[1])))

    def m_value(self, i, j):
        """Coxeter matrix entry m(i, j): 1, 2 or INFINITY."""
        self.check_type(i)
        self.check_type(j)
        if i == j:
            return 1
        if self.graph.has_edge(i, j):
            return INFINITY
        return 2

    def commute(self, i, j):
        """True iff i and j are distinct types with m(i, j) = 2."""
        return j not in self._blocking[i]

    def blocking(self, i):
        """Types whose letters block a letter of type i (i included)."""
        return self._blocking[i]

    def perp(self, types):
        """J-perp: the types outside J commuting with every type in J."""
        types = frozenset(types)
        for label in types:
            self.check_type(label)
        return frozenset(i for i in self.types
                         if i not in types and
                         all(self.commute(i, j) for j in types))

    def rung_types(self):
        """Types i having an infinity edge {j, k} inside the perp of i."""
        rungs = set()
        for i in self.types:
            if any(j not in self._blocking[i] and k not in self._blocking[i]
                   for j, k in self.graph.edges()):
                rungs.add(i)
        return frozenset(rungs)

    def is_ladderful(self):
        return self.rung_types() == frozenset(self.types)

    def decompose(self):
        """Split the diagram into its irreducible pieces.

        :returns: a Decomposition with the components of at least two
            types (in declared order of their first type), the isolated
            types and the irreducibility flag.
        """
        components = []
        isolated = []
        for comp in nx.connected_components(self.graph):
            if len(comp) >= 2:
                components.append(frozenset(comp))
            else:
                isolated.extend(comp)
        components.sort(key=lambda c: min(self.order(t) for t in c))
        irreducible = ((len(components) == 1 and not isolated) or
                       self.rank == 1)
        return Decomposition(components, self.sort_types(isolated),
                             irreducible)

    def vertex_cover_within(self, types):
        """True iff every infinity edge has an endpoint in the given set."""
        types = frozenset(types)
        for label in types:
            self.check_type(label)
        return all(i in types or j in types for i, j in self.graph.edges())

    def uncovered_edges(self, types):
        types = frozenset(types)
        return [e for e in self.infinity_edges()
                if e[0] not in types and e[1] not in types]

    def is_combinatorially_dense(self):
        """True iff no type is isolated in the infinity graph."""
        return all(self.graph.degree(t) > 0 for t in self.types)

    def to_json(self):
        return {'types': list(self.types),
                'infinity_edges': [list(e) for e in self.infinity_edges()]}

    def to_dot(self, name='diagram', names=None):
        """DOT document of the infinity graph.

        :param names: optional mapping from types to node identifiers,
            labels are quoted as they are otherwise.
        """
        if names is None:
            names = dict((t, '"%s"' % six.text_type(t)) for t in self.types)
        lines = ['graph %s {' % name]
        for t in self.types:
            lines.append('    %s;' % names[t])
        for i, j in self.infinity_edges():
            lines.append('    %s -- %s;' % (names[i], names[j]))
        lines.append('}')
        return '\n'.join(lines) + '\n'
