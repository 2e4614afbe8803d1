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
Command line front end of ra-buildings.

    ra-buildings analyze <spec.json> [--json]
    ra-buildings census --max-rank N [--dot DIR]
    ra-buildings check <spec.json> --suite S [--radius R] [--samples K]
        [--seed X]
    ra-buildings export <spec.json> --what ball|treewall|gamma [--type i]
        [--radius R] [--format dot|json]
"""

import os
import sys

from oslo_config import cfg
from oslo_log import log
from oslo_utils import fileutils

from ra_buildings.cli import analyzer
from ra_buildings.cli import export
from ra_buildings.cli import spec as spec_mod
from ra_buildings.cli import suites
from ra_buildings.common import exception
from ra_buildings.common.i18n import _
from ra_buildings.common.i18n import _LE
from ra_buildings.common.i18n import _LI
from ra_buildings.common import utils
from ra_buildings.diagram import census
from ra_buildings import version


LOG = log.getLogger(__name__)

CONF = cfg.CONF


def _out(text):
    sys.stdout.write(text)
    if not text.endswith('\n'):
        sys.stdout.write('\n')


def _load(path):
    try:
        with open(path, 'rb') as f:
            text = f.read()
    except (IOError, OSError) as e:
        raise exception.ParseError(line=0, pos=0, reason=e)
    return spec_mod.parse_spec(text)


def _verdict_line(name, verdict):
    line = '%s: %s' % (name, verdict['value'])
    if verdict['reasons']:
        line += ' (%s)' % '; '.join(r['message'] for r in verdict['reasons'])
    return line


class Commands(object):

    def analyze(self, args):
        report = analyzer.analyze(_load(args.spec))
        if args.json:
            _out(utils.dumps(report))
            return 0
        lines = ['thick: %s' % report['thick'],
                 'irreducible: %s' % report['irreducible'],
                 'ladderful: %s' % report['ladderful'],
                 'collapse: %s' % report['collapse'],
                 'discrete: %s' % report['discrete'],
                 'orbit count: %s' % report['orbit_count'],
                 _verdict_line('U(Facute) simple', report['u_acute_simple']),
                 _verdict_line('G(F, Facute) virtually simple',
                               report['g_virtually_simple'])]
        lines.extend('%s: %s' % item
                     for item in sorted(report['informational'].items()))
        _out('\n'.join(lines))
        return 0

    def census(self, args):
        table = census.census(args.max_rank)
        if args.dot:
            fileutils.ensure_tree(args.dot)
        for rank, diagrams in table:
            _out('%d: %d' % (rank, len(diagrams)))
            if not args.dot:
                continue
            for k, diagram in enumerate(diagrams, 1):
                name = 'rank-%d-%d' % (rank, k)
                path = os.path.join(args.dot, '%s.dot' % name)
                with open(path, 'w') as f:
                    f.write(diagram.to_dot(name=name.replace('-', '_'),
                                           names=census.dot_names(diagram)))
                LOG.info(_LI('Wrote %s'), path)
        return 0

    def check(self, args):
        summary = suites.check_suite(_load(args.spec), args.suite,
                                     radius=args.radius,
                                     samples=args.samples, seed=args.seed)
        _out(utils.dumps(summary))
        if summary['violations']:
            return exception.EXIT_VIOLATION
        return 0

    def export(self, args):
        spec = _load(args.spec)
        label = args.type
        if label is not None:
            labels = dict((utils.label_key(t), t)
                          for t in spec.diagram.types)
            label = labels.get(label, label)
        _out(export.export(spec, args.what, args.format, label=label,
                           radius=args.radius))
        return 0


def add_command_parsers(subparsers):
    command_object = Commands()

    parser = subparsers.add_parser(
        'analyze', help=_('Decide simplicity and collapse statements for a '
                          'specification.'))
    parser.set_defaults(func=command_object.analyze)
    parser.add_argument('spec', help=_('Path of the JSON specification.'))
    parser.add_argument('--json', action='store_true',
                        help=_('Print the full report as JSON.'))

    parser = subparsers.add_parser(
        'census', help=_('Count irreducible ladderful diagrams per rank.'))
    parser.set_defaults(func=command_object.census)
    parser.add_argument('--max-rank', type=int, required=True,
                        help=_('Largest rank to enumerate.'))
    parser.add_argument('--dot', metavar='DIR',
                        help=_('Directory receiving one DOT file per '
                               'diagram.'))

    parser = subparsers.add_parser(
        'check', help=_('Run a randomized property suite.'))
    parser.set_defaults(func=command_object.check)
    parser.add_argument('spec', help=_('Path of the JSON specification.'))
    parser.add_argument('--suite', required=True,
                        choices=sorted(suites.SUITES),
                        help=_('Suite to run.'))
    parser.add_argument('--radius', type=int,
                        help=_('Radius of the sampled ball.'))
    parser.add_argument('--samples', type=int,
                        help=_('Number of configurations to check.'))
    parser.add_argument('--seed', type=int, help=_('Sample seed.'))

    parser = subparsers.add_parser(
        'export', help=_('Export a ball, a tree-wall or a tree-wall tree.'))
    parser.set_defaults(func=command_object.export)
    parser.add_argument('spec', help=_('Path of the JSON specification.'))
    parser.add_argument('--what', required=True, choices=export.WHAT,
                        help=_('Object to export.'))
    parser.add_argument('--type', help=_('Type of the tree-wall.'))
    parser.add_argument('--radius', type=int,
                        help=_('Radius of the exported ball.'))
    parser.add_argument('--format', default=export.DOT,
                        choices=export.FORMATS, help=_('Output format.'))


command_opt = cfg.SubCommandOpt('command',
                                title='Command',
                                help=_('Available commands'),
                                handler=add_command_parsers)


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    CONF.register_cli_opt(command_opt)
    log.register_options(CONF)
    CONF(argv, project='ra-buildings',
         version=version.version_info.release_string())
    log.setup(CONF, 'ra-buildings')
    try:
        return CONF.command.func(CONF.command)
    except exception.RABuildingsException as e:
        LOG.error(_LE('%(command)s failed: %(error)s'),
                  {'command': CONF.command.name, 'error': e})
        return e.exit_code
