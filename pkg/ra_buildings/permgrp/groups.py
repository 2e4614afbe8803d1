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
Permutation groups of small degree.

A permutation of degree n is the tuple of its images of 0..n-1 and
compose(p, q) applies q first. Groups are enumerated in full, breadth first
from the identity, up to ``[permgrp] max_group_order`` elements.
"""

import collections
import math

import networkx as nx
from oslo_concurrency import lockutils
from oslo_config import cfg
from oslo_log import log
import six

from ra_buildings.common import exception
from ra_buildings.common.i18n import _


LOG = log.getLogger(__name__)

opts = [
    cfg.IntOpt('max_group_order',
               default=1000000,
               min=1,
               help=_('Largest permutation group that is enumerated.')),
]

CONF = cfg.CONF
opt_group = cfg.OptGroup(name='permgrp',
                         title='Options for permutation groups')
CONF.register_group(opt_group)
CONF.register_opts(opts, opt_group)

StabilizerAnalysis = collections.namedtuple(
    'StabilizerAnalysis', ['gen_by_point_stabs', 'free'])
LocalDataReport = collections.namedtuple(
    'LocalDataReport', ['valid', 'violations'])


def identity(degree):
    return tuple(range(degree))


def compose(p, q):
    """The permutation x -> p(q(x))."""
    return tuple(p[x] for x in q)


def inverse(p):
    images = [0] * len(p)
    for x, y in enumerate(p):
        images[y] = x
    return tuple(images)


def is_permutation(images, degree=None):
    try:
        images = tuple(images)
    except TypeError:
        return False
    if degree is not None and len(images) != degree:
        return False
    if not all(isinstance(x, six.integer_types) and
               not isinstance(x, bool) for x in images):
        return False
    return sorted(images) == list(range(len(images)))


def check_permutation(images, degree):
    """:raises: InvalidPermutation"""
    if not is_permutation(images, degree):
        raise exception.InvalidPermutation(images=images, degree=degree)
    return tuple(images)


def from_cycles(cycles, degree):
    """Permutation of the given degree from a list of disjoint cycles."""
    images = list(range(degree))
    seen = set()
    for cycle in cycles:
        for x in cycle:
            if x in seen or not 0 <= x < degree:
                raise exception.InvalidPermutation(images=cycles,
                                                   degree=degree)
            seen.add(x)
        for k, x in enumerate(cycle):
            images[x] = cycle[(k + 1) % len(cycle)]
    return tuple(images)


def format_cycles(p):
    cycles = []
    seen = set()
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = p[x]
        cycles.append('(%s)' % ' '.join(str(x) for x in cycle))
    return ''.join(cycles) or '()'


class PermGroup(object):
    """A permutation group given by generators.

    :param degree: the number of points.
    :param generators: iterable of image sequences of that degree.
    :raises: InvalidPermutation
    """

    def __init__(self, degree, generators=()):
        if (isinstance(degree, bool) or
                not isinstance(degree, six.integer_types) or degree < 1):
            raise exception.InvalidParameters(
                reason=_('degree must be a positive integer, got %s') %
                degree)
        self.degree = degree
        self.generators = tuple(check_permutation(g, degree)
                                for g in generators)
        self._elements = None
        self._element_set = None

    def __repr__(self):
        return 'PermGroup(%d, [%s])' % (
            self.degree, ', '.join(format_cycles(g) for g in self.generators))

    def elements(self, bound=None):
        """All elements, identity first, in breadth-first order.

        :param bound: overrides ``[permgrp] max_group_order``.
        :raises: GroupTooLarge
        """
        if bound is None:
            bound = CONF.permgrp.max_group_order
        with lockutils.lock('permgrp-%d' % id(self)):
            if self._elements is None:
                found = [identity(self.degree)]
                seen = set(found)
                position = 0
                while position < len(found):
                    current = found[position]
                    position += 1
                    for g in self.generators:
                        product = compose(g, current)
                        if product not in seen:
                            if len(found) >= bound:
                                raise exception.GroupTooLarge(bound=bound)
                            seen.add(product)
                            found.append(product)
                LOG.debug('Enumerated %(order)d elements of %(group)r',
                          {'order': len(found), 'group': self})
                self._element_set = frozenset(seen)
                self._elements = tuple(found)
        return self._elements

    def order(self):
        return len(self.elements())

    def contains(self, p):
        if len(p) != self.degree:
            return False
        self.elements()
        return tuple(p) in self._element_set

    def __contains__(self, p):
        return self.contains(p)

    def is_subgroup_of(self, other):
        return (self.degree == other.degree and
                all(other.contains(g) for g in self.generators))

    def same_group(self, other):
        return self.is_subgroup_of(other) and other.is_subgroup_of(self)

    def is_trivial(self):
        return all(g == identity(self.degree) for g in self.generators)

    def orbits(self):
        """The orbit partition as sorted blocks, ordered by least point."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.degree))
        for g in self.generators:
            graph.add_edges_from((x, g[x]) for x in range(self.degree)
                                 if g[x] != x)
        return sorted((sorted(block)
                       for block in nx.connected_components(graph)),
                      key=lambda block: block[0])

    def orbit_of(self, point):
        for block in self.orbits():
            if point in block:
                return block

    def is_transitive(self):
        return len(self.orbits()) == 1

    def is_symmetric(self):
        return self.order() == math.factorial(self.degree)

    def to_json(self):
        return {'degree': self.degree,
                'generators': [list(g) for g in self.generators]}


def symmetric_group(degree):
    if degree < 2:
        return PermGroup(degree)
    return PermGroup(degree, [from_cycles([(0, 1)], degree),
                              from_cycles([tuple(range(degree))], degree)])


def young_overgroup(group):
    """All permutations preserving every orbit of the group.

    Generated by the adjacent transpositions inside each orbit block.
    """
    generators = []
    for block in group.orbits():
        for a, b in zip(block, block[1:]):
            generators.append(from_cycles([(a, b)], group.degree))
    return PermGroup(group.degree, generators)


def stabilizer_analysis(group):
    """Whether the point stabilizers generate the group and whether they are
    all trivial.

    :raises: GroupTooLarge
    """
    elements = group.elements()
    stabilizing = [g for g in elements
                   if any(g[x] == x for x in range(group.degree))]
    free = all(g == identity(group.degree) for g in stabilizing)
    generated = PermGroup(group.degree, stabilizing)
    return StabilizerAnalysis(generated.order() == len(elements), free)


def subgroup_index(subgroup, group):
    """[G : H] for H <= G.

    :raises: DegreeMismatch, NotASubgroup, GroupTooLarge
    """
    if subgroup.degree != group.degree:
        raise exception.DegreeMismatch(degree=subgroup.degree,
                                       expected=group.degree,
                                       what=_('subgroup'))
    for g in subgroup.generators:
        if not group.contains(g):
            raise exception.NotASubgroup(perm=format_cycles(g))
    return group.order() // subgroup.order()


def validate_local_data(local, acute, params):
    """Check F_i <= F'_i <= Young(F_i) with equal orbits for every type.

    :param local: mapping type -> PermGroup (F).
    :param acute: mapping type -> PermGroup (F').
    :param params: Parameters; every group degree must equal q_i.
    :returns: LocalDataReport(valid, violations) where each violation is a
        dict with ``type``, ``code`` and ``message``.
    :raises: DegreeMismatch, InvalidParameters
    """
    violations = []
    for label in sorted(params, key=six.text_type):
        for name, data in (('F', local), ('Facute', acute)):
            if label not in data:
                raise exception.InvalidParameters(
                    reason=_('%(name)s has no group for type %(label)s') %
                    {'name': name, 'label': label})
            if data[label].degree != params[label]:
                raise exception.DegreeMismatch(
                    degree=data[label].degree, expected=params[label],
                    what='%s[%s]' % (name, label))
        group, over = local[label], acute[label]
        if not group.is_subgroup_of(over):
            violations.append({
                'type': label, 'code': 'not_subgroup',
                'message': _('F is not contained in Facute')})
        if not over.is_subgroup_of(young_overgroup(group)):
            violations.append({
                'type': label, 'code': 'exceeds_young_overgroup',
                'message': _('Facute exceeds the Young overgroup of F')})
        if group.orbits() != over.orbits():
            violations.append({
                'type': label, 'code': 'orbits_differ',
                'message': _('F and Facute have different orbits')})
    for name, data in (('F', local), ('Facute', acute)):
        for label in data:
            if label not in params:
                raise exception.UnknownType(label=label)
    return LocalDataReport(not violations, violations)
