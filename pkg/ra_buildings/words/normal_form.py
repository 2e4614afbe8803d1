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
Normal forms of colored words.

Words live in the graph product of the cyclic groups Z/q_i over the
commutation graph of a diagram: letters of distinct types commute iff
m = 2. A word is normal when it is reduced (no two letters of equal type
can be brought next to each other by commutations) and ShortLex minimal
for the declared order of the types among its commutation class.

Reduction uses one pile per type: a letter of type t pushes itself onto
the pile of t and a blocker onto the pile of every type it does not commute
with, and it merges with the top of the pile of t when that top is a letter
of type t. The ShortLex pass takes the least linear extension of the heap
of the reduced word.
"""

import collections
import heapq

import six

from ra_buildings.common import exception
from ra_buildings.common.i18n import _


PREFIX = 'prefix'
SUFFIX = 'suffix'

Letter = collections.namedtuple('Letter', ['type', 'color'])
Weyl = collections.namedtuple('Weyl', ['word', 'length'])

EMPTY = ()


class Parameters(object):
    """Panel sizes q_i of a semiregular building.

    :param q: mapping of type labels to integers >= 2.
    :raises: InvalidParameters
    """

    def __init__(self, q):
        self._q = dict(q)
        for label, value in self._q.items():
            if (isinstance(value, bool) or
                    not isinstance(value, six.integer_types) or value < 2):
                raise exception.InvalidParameters(
                    reason=_('q of type %(label)s must be an integer >= 2, '
                             'got %(value)s') % {'label': label,
                                                 'value': value})

    def __getitem__(self, label):
        try:
            return self._q[label]
        except (KeyError, TypeError):
            raise exception.UnknownType(label=label)

    def __contains__(self, label):
        return label in self._q

    def __iter__(self):
        return iter(self._q)

    def __eq__(self, other):
        return isinstance(other, Parameters) and self._q == other._q

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(frozenset(self._q.items()))

    def __repr__(self):
        return 'Parameters(%r)' % self._q

    @property
    def thick(self):
        return all(value >= 3 for value in self._q.values())

    def check_diagram(self, diagram):
        """Ensure exactly the types of the diagram carry a parameter."""
        for label in diagram.types:
            if label not in self._q:
                raise exception.InvalidParameters(
                    reason=_('missing q for type %s') % (label,))
        for label in self._q:
            diagram.check_type(label)

    def to_json(self, diagram):
        return dict((six.text_type(t), self._q[t]) for t in diagram.types)


def _checked_letters(word, params, diagram):
    for item in word:
        label, color = item
        diagram.check_type(label)
        top = params[label] - 1
        if (isinstance(color, bool) or
                not isinstance(color, six.integer_types) or
                not 1 <= color <= top):
            raise exception.ColorOutOfRange(label=label, color=color, top=top)
        yield Letter(label, color)


def _pile(letters, params, diagram):
    entries = []
    piles = dict((t, []) for t in diagram.types)
    for letter in letters:
        label = letter.type
        pile = piles[label]
        while pile and entries[pile[-1][1]] is None:
            pile.pop()
        if pile and pile[-1][0]:
            index = pile[-1][1]
            color = (entries[index].color + letter.color) % params[label]
            if color:
                entries[index] = Letter(label, color)
            else:
                entries[index] = None
                pile.pop()
            continue
        index = len(entries)
        entries.append(letter)
        pile.append((True, index))
        for other in diagram.blocking(label):
            if other != label:
                piles[other].append((False, index))
    return [e for e in entries if e is not None]


def _heap(letters, diagram):
    """Covering relation of the heap of a reduced word."""
    successors = [[] for _letter in letters]
    indegree = [0] * len(letters)
    last_seen = {}
    for k, letter in enumerate(letters):
        for other in diagram.blocking(letter.type):
            if other in last_seen:
                successors[last_seen[other]].append(k)
                indegree[k] += 1
        last_seen[letter.type] = k
    return successors, indegree


def _shortlex(letters, diagram):
    successors, indegree = _heap(letters, diagram)
    ready = [(diagram.order(letters[k].type), k)
             for k in range(len(letters)) if not indegree[k]]
    heapq.heapify(ready)
    out = []
    while ready:
        _order, k = heapq.heappop(ready)
        out.append(letters[k])
        for succ in successors[k]:
            indegree[succ] -= 1
            if not indegree[succ]:
                heapq.heappush(ready,
                               (diagram.order(letters[succ].type), succ))
    return tuple(out)


def reduce_letters(letters, params, diagram):
    """Normal form of a sequence of valid Letters (no input checks)."""
    return _shortlex(_pile(letters, params, diagram), diagram)


def normalize(word, params, diagram):
    """Return the normal form of a word.

    :param word: iterable of (type, color) pairs.
    :param params: Parameters.
    :param diagram: Diagram.
    :returns: the normal word as a tuple of Letters.
    :raises: UnknownType, ColorOutOfRange
    """
    return reduce_letters(list(_checked_letters(word, params, diagram)),
                          params, diagram)


def multiply(u, v, params, diagram):
    return reduce_letters(list(u) + list(v), params, diagram)


def invert(u, params, diagram):
    inverse = [Letter(letter.type, params[letter.type] - letter.color)
               for letter in reversed(u)]
    return reduce_letters(inverse, params, diagram)


def step(u, label, delta, params, diagram):
    """u times the letter (label, delta mod q), the identity when delta = 0.
    """
    delta %= params[label]
    if not delta:
        return tuple(u)
    return reduce_letters(list(u) + [Letter(label, delta)], params, diagram)


def weyl(u):
    types = tuple(letter.type for letter in u)
    return Weyl(types, len(types))


def i_count(u, label, diagram):
    diagram.check_type(label)
    return sum(1 for letter in u if letter.type == label)


def abelianization(u, params, diagram):
    """Per-type sum of colors modulo q."""
    sums = dict((t, 0) for t in diagram.types)
    for letter in u:
        sums[letter.type] = (sums[letter.type] + letter.color) % params[
            letter.type]
    return sums


def split(u, types, side, params, diagram):
    """Factor a normal word as u = first * second.

    For ``side=SUFFIX`` the second factor is the maximal word of letters
    with types in J that can be moved to the right end by commutations; for
    ``side=PREFIX`` the first factor is the maximal such word moved to the
    left end.

    :returns: a pair of normal words (first, second).
    :raises: UnknownType, ValueError for an unknown side.
    """
    wanted = frozenset(diagram.check_type(t) for t in types)
    if side not in (PREFIX, SUFFIX):
        raise ValueError(_('side must be %(p)s or %(s)s') %
                         {'p': PREFIX, 's': SUFFIX})
    letters = list(u)
    indices = range(len(letters))
    if side == SUFFIX:
        indices = reversed(indices)
    blocked = set()
    taken = []
    kept = []
    for k in indices:
        letter = letters[k]
        if letter.type in wanted and letter.type not in blocked:
            taken.append(k)
        else:
            kept.append(k)
            blocked.update(diagram.blocking(letter.type))
    taken_word = _shortlex([letters[k] for k in sorted(taken)], diagram)
    kept_word = _shortlex([letters[k] for k in sorted(kept)], diagram)
    if side == SUFFIX:
        return kept_word, taken_word
    return taken_word, kept_word


def reduced_expressions(u, diagram, limit=None):
    """All letter orderings of a normal word related by commutations.

    :param limit: stop after this many expressions.
    :returns: a list of tuples of Letters, the normal form first.
    """
    letters = list(u)
    successors, indegree = _heap(letters, diagram)
    found = []

    def _extend(prefix, indegree, available):
        if limit is not None and len(found) >= limit:
            return
        if not available:
            found.append(tuple(letters[k] for k in prefix))
            return
        for k in sorted(available,
                        key=lambda k: diagram.order(letters[k].type)):
            degrees = list(indegree)
            rest = set(available)
            rest.discard(k)
            for succ in successors[k]:
                degrees[succ] -= 1
                if not degrees[succ]:
                    rest.add(succ)
            _extend(prefix + [k], degrees, rest)

    _extend([], indegree,
            set(k for k in range(len(letters)) if not indegree[k]))
    return found


def to_json(u):
    return [[letter.type, letter.color] for letter in u]


def from_json(data, params, diagram):
    try:
        pairs = [tuple(item) for item in data]
    except TypeError:
        raise exception.InvalidParameters(
            reason=_('word %s is not a list of [type, color] pairs') % data)
    if any(len(pair) != 2 for pair in pairs):
        raise exception.InvalidParameters(
            reason=_('word %s is not a list of [type, color] pairs') % data)
    return normalize(pairs, params, diagram)
