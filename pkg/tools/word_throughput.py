#!/usr/bin/env python
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

"""Normalization throughput on random words.

    python tools/word_throughput.py [--spec spec.json] [--length 10000]
        [--words 20] [--seed 0]
"""

import random
import sys
import timeit

from oslo_config import cfg
from oslo_log import log

from ra_buildings.cli import spec as spec_mod
from ra_buildings.diagram import graph
from ra_buildings.words import normal_form


LOG = log.getLogger(__name__)

CONF = cfg.CONF

cli_opts = [
    cfg.StrOpt('spec',
               help='Specification whose diagram and q are used; the '
                    'pentagon with q = 3 when omitted.'),
    cfg.IntOpt('length', default=10000, min=1,
               help='Letters per random word.'),
    cfg.IntOpt('words', default=20, min=1,
               help='Number of random words.'),
    cfg.IntOpt('seed', default=0, help='Seed of the word generator.'),
]


def _diagram_and_params():
    if CONF.spec:
        with open(CONF.spec, 'rb') as f:
            parsed = spec_mod.parse_spec(f.read())
        return parsed.diagram, parsed.params
    diagram = graph.Diagram([1, 2, 3, 4, 5],
                            [[1, 2], [2, 3], [3, 4], [4, 5], [5, 1]])
    return diagram, normal_form.Parameters(
        dict((t, 3) for t in diagram.types))


def random_word(rng, diagram, params, length):
    word = []
    for _k in range(length):
        label = rng.choice(diagram.types)
        word.append((label, rng.randint(1, params[label] - 1)))
    return word


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    CONF.register_cli_opts(cli_opts)
    log.register_options(CONF)
    CONF(argv, project='ra-buildings')
    log.setup(CONF, 'ra-buildings')

    diagram, params = _diagram_and_params()
    rng = random.Random(CONF.seed)
    words = [random_word(rng, diagram, params, CONF.length)
             for _k in range(CONF.words)]
    letters = 0
    start = timeit.default_timer()
    for word in words:
        letters += len(normal_form.normalize(word, params, diagram))
    elapsed = timeit.default_timer() - start
    LOG.info('Normalized %(count)d words of %(length)d letters in '
             '%(elapsed).3fs, %(rate).0f letters/s, mean normal length '
             '%(mean).1f',
             {'count': len(words), 'length': CONF.length,
              'elapsed': elapsed,
              'rate': len(words) * CONF.length / max(elapsed, 1e-9),
              'mean': float(letters) / len(words)})
    return 0


if __name__ == '__main__':
    sys.exit(main())
