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

"""Test class for the command line front end."""

import argparse
import json
import os

import fixtures
import mock

from ra_buildings.cli import commands
from ra_buildings.common import exception
from ra_buildings.tests import base
from ra_buildings.tests.unit import utils


class CommandsTestCase(base.TestCase):

    def setUp(self):
        super(CommandsTestCase, self).setUp()
        self.commands = commands.Commands()
        self.tempdir = self.useFixture(fixtures.TempDir()).path
        self.spec_path = self._write('tree.json',
                                     utils.spec_text(utils.tree_diagram()))
        self.output = []
        patcher = mock.patch.object(commands, '_out', autospec=True,
                                    side_effect=self.output.append)
        patcher.start()
        self.addCleanup(patcher.stop)

    def _write(self, name, content):
        path = os.path.join(self.tempdir, name)
        with open(path, 'wb') as f:
            f.write(content)
        return path

    def test_analyze_json(self):
        args = argparse.Namespace(spec=self.spec_path, json=True)
        self.assertEqual(0, self.commands.analyze(args))
        report = json.loads(self.output[0])
        self.assertEqual('G_equals_U_by_equal_data', report['collapse'])

    def test_analyze_text(self):
        args = argparse.Namespace(spec=self.spec_path, json=False)
        self.assertEqual(0, self.commands.analyze(args))
        lines = self.output[0].splitlines()
        self.assertIn('collapse: G_equals_U_by_equal_data', lines)
        self.assertIn('generating_k_p_classes: 2', lines)

    def test_analyze_missing_file(self):
        args = argparse.Namespace(
            spec=os.path.join(self.tempdir, 'missing.json'), json=False)
        self.assertRaises(exception.ParseError, self.commands.analyze, args)

    def test_census(self):
        args = argparse.Namespace(max_rank=5, dot=None)
        self.assertEqual(0, self.commands.census(args))
        self.assertEqual(['1: 0', '2: 0', '3: 0', '4: 0', '5: 1'],
                         self.output)

    def test_census_dot(self):
        target = os.path.join(self.tempdir, 'dot')
        args = argparse.Namespace(max_rank=5, dot=target)
        self.assertEqual(0, self.commands.census(args))
        self.assertEqual(['rank-5-1.dot'], os.listdir(target))
        with open(os.path.join(target, 'rank-5-1.dot')) as f:
            text = f.read()
        self.assertTrue(text.startswith('graph rank_5_1 {'))
        self.assertEqual(5, text.count(' -- '))

    def test_check(self):
        args = argparse.Namespace(spec=self.spec_path, suite='coloring',
                                  radius=1, samples=4, seed=0)
        self.assertEqual(0, self.commands.check(args))
        self.assertEqual(0, json.loads(self.output[0])['violations'])

    @mock.patch.object(commands.suites, 'check_suite', autospec=True)
    def test_check_violation(self, mock_check):
        mock_check.return_value = {'suite': 'coloring', 'checked': 1,
                                   'violations': 1, 'counterexample': {}}
        args = argparse.Namespace(spec=self.spec_path, suite='coloring',
                                  radius=1, samples=1, seed=0)
        self.assertEqual(exception.EXIT_VIOLATION, self.commands.check(args))

    def test_export_resolves_type(self):
        args = argparse.Namespace(spec=self.spec_path, what='treewall',
                                  type='1', radius=None, format='json')
        self.assertEqual(0, self.commands.export(args))
        self.assertEqual(1, json.loads(self.output[0])['type'])


class MainTestCase(base.TestCase):

    def setUp(self):
        super(MainTestCase, self).setUp()
        self.tempdir = self.useFixture(fixtures.TempDir()).path
        self.spec_path = os.path.join(self.tempdir, 'tree.json')
        with open(self.spec_path, 'wb') as f:
            f.write(utils.spec_text(utils.tree_diagram()))
        patcher = mock.patch.object(commands.log, 'setup', autospec=True)
        patcher.start()
        self.addCleanup(patcher.stop)

    @mock.patch.object(commands.Commands, 'check', autospec=True)
    def test_dispatch(self, mock_check):
        mock_check.return_value = 0
        self.assertEqual(0, commands.main(
            ['check', self.spec_path, '--suite', 'gate', '--samples', '3']))
        args = mock_check.call_args[0][1]
        self.assertEqual('gate', args.suite)
        self.assertEqual(3, args.samples)
        self.assertIsNone(args.radius)

    @mock.patch.object(commands.Commands, 'check', autospec=True)
    def test_resource_error_exit_code(self, mock_check):
        mock_check.side_effect = exception.BallTooLarge(radius=9, bound=10)
        self.assertEqual(exception.EXIT_RESOURCE, commands.main(
            ['check', self.spec_path, '--suite', 'gate']))

    @mock.patch.object(commands.Commands, 'analyze', autospec=True)
    def test_input_error_exit_code(self, mock_analyze):
        mock_analyze.side_effect = exception.SchemaError(field='q',
                                                         reason='bad')
        self.assertEqual(exception.EXIT_INPUT, commands.main(
            ['analyze', self.spec_path]))

    @mock.patch.object(commands.Commands, 'census', autospec=True)
    def test_violation_exit_code(self, mock_census):
        mock_census.side_effect = exception.PropertyViolation(reason='x')
        self.assertEqual(exception.EXIT_VIOLATION, commands.main(
            ['census', '--max-rank', '3']))
