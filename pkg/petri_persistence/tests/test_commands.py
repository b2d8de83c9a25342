import json
import os
import shutil
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase
from mock import ANY, patch

from petri_persistence.cli import run_command
from petri_persistence.management.commands.net_check import Command as CheckCommand
from petri_persistence.models import AnalysisRecord, StoredNet
from petri_persistence.netfile import format_net
from petri_persistence.nets import fire_word

from .corpus import N1, N3, N4, N5, N6, N8


class NetFilesMixin:
    """
    Writes the corpus nets to a temporary directory as ``<name>.pn``.
    """

    nets = (N1, N3, N4, N5, N6, N8)

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.directory = tempfile.mkdtemp()
        cls.paths = {}
        for net in cls.nets:
            path = os.path.join(cls.directory, '%s.pn' % net.name)
            with open(path, 'w', encoding='utf-8') as f:
                f.write(format_net(net))
            cls.paths[net.name] = path

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls.directory)
        super().tearDownClass()

    def run_json(self, *argv):
        code, output = run_command(list(argv) + ['--json'])
        return code, json.loads(output)


class CheckCommandTests(NetFilesMixin, SimpleTestCase):

    def test_el_k_holds(self):
        code, report = self.run_json('check', '--file', self.paths['delay_1'], '--property', 'el-k', '--k', '1')
        self.assertEqual(code, 0)
        self.assertEqual(report['verdict'], 'holds')
        self.assertEqual(report['parameters']['property'], 'el-1')
        self.assertEqual(report['net'], 'delay_1')

    def test_el_k_violated(self):
        code, report = self.run_json('check', '--file', self.paths['delay_1'], '--property', 'el-k', '--k', '0')
        self.assertEqual(code, 1)
        self.assertEqual(report['witnesses'][0]['pair'], ['a', 'b'])

    def test_el_violated_with_replayable_witness(self):
        code, report = self.run_json('check', '--file', self.paths['conflict'])
        self.assertEqual(code, 1)
        witness = report['witnesses'][0]
        self.assertEqual(witness['pair'], ['a', 'b'])
        self.assertEqual(witness['marking'], '1')
        self.assertEqual(fire_word(N1, N1.initial, witness['word']), (1,))

    def test_alt_procedure(self):
        code, report = self.run_json('check', '--file', self.paths['delay_3'],
                                     '--property', 'el-k', '--k', '3', '--alt')
        self.assertEqual(code, 0)
        self.assertEqual(report['parameters']['method'], 'alt')
        code, _ = run_command(['check', '--file', self.paths['delay_3'], '--property', 'el-k', '--k', '2', '--alt'])
        self.assertEqual(code, 1)

    def test_classical_properties(self):
        path = self.paths['indirect_kill']
        self.assertEqual(run_command(['check', '--file', path, '--property', 'ee'])[0], 1)
        self.assertEqual(run_command(['check', '--file', path, '--property', 'll'])[0], 1)
        self.assertEqual(run_command(['check', '--file', path, '--property', 'el'])[0], 0)

    def test_pair(self):
        path = self.paths['indirect_kill']
        code, report = self.run_json('check', '--file', path, '--property', 'll', '--pair', 'a', 'b')
        self.assertEqual(code, 1)
        self.assertEqual(report['witnesses'][0]['marking'], '1,1,0')
        self.assertEqual(run_command(['check', '--file', path, '--property', 'el', '--pair', 'a', 'b'])[0], 0)

    def test_marking(self):
        path = self.paths['delay_1']
        code, report = self.run_json('check', '--file', path, '--property', 'el-k', '--k', '0', '--marking', '1,0')
        self.assertEqual(code, 1)
        self.assertEqual(report['details']['violations'], ['a,b'])
        self.assertEqual(run_command(['check', '--file', path, '--property', 'el-k', '--k', '1',
                                      '--marking', '1,0'])[0], 0)
        self.assertEqual(run_command(['check', '--file', path, '--property', 'ee',
                                      '--marking', '1,0', '--step', 'b'])[0], 0)

    def test_marking_of_inhibitor_net(self):
        code, report = self.run_json('check', '--file', self.paths['inhibitor_postpone'],
                                     '--property', 'el-k', '--k', '3', '--marking', '1,4,0', '--step', 'a')
        self.assertEqual(code, 1)
        self.assertEqual(report['details']['violations'], ['a,inc', 'a,b'])
        self.assertEqual(report['witnesses'][0]['word'], None)

    def test_text_output(self):
        code, output = run_command(['check', '--file', self.paths['delay_1'], '--property', 'ee'])
        self.assertEqual(code, 1)
        self.assertTrue(output.startswith('check delay_1: VIOLATED'))
        self.assertIn('a disables b', output)


class AnalysisCommandTests(NetFilesMixin, SimpleTestCase):

    def test_classify(self):
        code, report = self.run_json('classify', '--file', self.paths['delay_3'])
        self.assertEqual(code, 0)
        self.assertEqual(report['details']['kind'], 'el-k')
        self.assertEqual(report['details']['k'], 3)

    def test_classify_not_el(self):
        code, report = self.run_json('classify', '--file', self.paths['conflict'], '--hierarchy')
        self.assertEqual(code, 1)
        self.assertEqual(report['details']['kind'], 'not-el')
        self.assertEqual(report['details']['el'], 'violated')

    def test_min_re(self):
        code, report = self.run_json('min-re', 'a', 'b', '--file', self.paths['delay_1'])
        self.assertEqual(code, 0)
        self.assertEqual(report['details']['minimal'], ['1,0'])
        self.assertEqual(report['witnesses'][0]['word'], [])

    def test_k_ab(self):
        code, report = self.run_json('k-ab', 'a', 'b', '--file', self.paths['delay_3'])
        self.assertEqual(code, 0)
        self.assertEqual(report['details']['k_ab'], 3)
        code, report = self.run_json('k-ab', 'a', 'b', '--file', self.paths['conflict'])
        self.assertEqual(code, 1)
        self.assertEqual(report['reason'], 'a kills b')

    def test_coverability(self):
        code, report = self.run_json('coverability', '--file', self.paths['unbounded'])
        self.assertEqual(code, 0)
        self.assertEqual(report['details']['vertices'], ['1,0', '1,w'])
        self.assertFalse(report['details']['bounded'])
        self.assertEqual(report['details']['unbounded_places'], ['p2'])
        self.assertEqual(report['details']['dead_transitions'], [])

    def test_cover(self):
        path = self.paths['unbounded']
        self.assertEqual(run_command(['coverability', '--file', path, '--cover', '1,7'])[0], 0)
        self.assertEqual(run_command(['coverability', '--file', path, '--cover', '2,0'])[0], 1)

    def test_cover_reports_vertex_and_path(self):
        code, report = self.run_json('coverability', '--file', self.paths['unbounded'], '--cover', '1,7')
        self.assertEqual(code, 0)
        self.assertEqual(report['witnesses'], [])
        self.assertEqual(report['details']['covering_vertex'], '1,w')
        self.assertEqual(report['details']['covering_path'], ['a'])

        code, report = self.run_json('coverability', '--file', self.paths['delay_3'], '--cover', '0,0,0,1')
        self.assertEqual(code, 0)
        self.assertEqual(report['details']['covering_vertex'], '0,0,0,1')
        self.assertEqual(report['details']['covering_path'], ['a', 'c', 'd'])
        self.assertEqual(fire_word(N4, N4.initial, report['details']['covering_path']), (0, 0, 0, 1))

    def test_coverability_dot(self):
        dot = os.path.join(self.directory, 'unbounded.dot')
        code, _ = run_command(['coverability', '--file', self.paths['unbounded'], '--dot', dot])
        self.assertEqual(code, 0)
        with open(dot) as f:
            text = f.read()
        self.assertTrue(text.startswith('digraph "cover_unbounded"'))
        self.assertIn('label="[1,w]"', text)

    def test_reach_tree(self):
        code, report = self.run_json('reach-tree', '--file', self.paths['delay_1'], '--depth', '2')
        self.assertEqual(code, 0)
        self.assertEqual(report['details']['nodes'], 6)
        self.assertEqual(report['details']['labels'], ['a', 'b', 'c'])

    def test_reachable(self):
        path = self.paths['unbounded']
        self.assertEqual(run_command(['reachable', '--file', path, '--marking', '1,3'])[0], 0)
        self.assertEqual(run_command(['reachable', '--file', path, '--marking', '0,3'])[0], 1)
        code, report = self.run_json('reachable', '--file', path, '--marking', '1,5', '--budget', '3')
        self.assertEqual(code, 2)
        self.assertEqual(report['verdict'], 'unknown')


class CommandErrorTests(NetFilesMixin, SimpleTestCase):

    def test_errors_exit_with_three(self):
        path = self.paths['delay_1']
        for argv in (
            ['check'],
            ['check', '--file', os.path.join(self.directory, 'missing.pn')],
            ['check', '--file', path, '--property', 'el-k'],
            ['check', '--file', path, '--property', 'xx'],
            ['check', '--file', path, '--property', 'el-k', '--k', '-1'],
            ['check', '--file', path, '--step', 'a'],
            ['check', '--file', path, '--property', 'el', '--marking', '1,0'],
            ['check', '--file', path, '--marking', '1,w', '--property', 'ee'],
            ['check', '--file', path, '--marking', '1,0,0', '--property', 'ee'],
            ['check', '--file', path, '--budget', '0'],
            ['check', '--file', path, '--pair', 'a', 'zz'],
            ['check', '--file', path, '--pair', 'a', 'a'],
            ['check', '--file', self.paths['inhibitor_postpone']],
            ['min-re', 'a', 'b', '--file', self.paths['inhibitor_postpone']],
            ['reachable', '--file', self.paths['unbounded'], '--marking', '1,5', '--budget', '3', '--exact'],
            ['nonsense'],
        ):
            code, output = run_command(argv)
            self.assertEqual(code, 3, argv)
            self.assertTrue(output, argv)

    def test_syntax_error_position(self):
        path = os.path.join(self.directory, 'broken.pn')
        with open(path, 'w') as f:
            f.write("place p\ntrans a in zz\n")
        code, output = run_command(['classify', '--file', path])
        self.assertEqual(code, 3)
        self.assertIn("line 2, column 12", output)

    def test_call_command_raises(self):
        with self.assertRaises(CommandError) as cm:
            call_command('net_check', file=self.paths['delay_1'], property='el-k', stdout=StringIO())
        self.assertEqual(cm.exception.returncode, 3)

    def test_run_from_argv_exit_codes(self):
        with patch('sys.stdout', new_callable=StringIO):
            with self.assertRaises(SystemExit) as cm:
                CheckCommand().run_from_argv(['manage.py', 'net_check', '--file', self.paths['conflict']])
        self.assertEqual(cm.exception.code, 1)

        with patch('sys.stderr', new_callable=StringIO):
            with self.assertRaises(SystemExit) as cm:
                CheckCommand().run_from_argv(['manage.py', 'net_check', '--file',
                                              os.path.join(self.directory, 'missing.pn')])
        self.assertEqual(cm.exception.code, 3)

    def test_signal_is_sent(self):
        with patch('petri_persistence.management.commands.analysis_finished') as signal:
            code, _ = run_command(['classify', '--file', self.paths['delay_1']])
        self.assertEqual(code, 0)
        signal.send.assert_called_once_with(sender=ANY, report=ANY, options=ANY)
        report = signal.send.call_args[1]['report']
        self.assertEqual(report.command, 'classify')
        self.assertEqual(report.exit_code, 0)


class StoredNetCommandTests(NetFilesMixin, TestCase):

    def test_import(self):
        code, output = run_command(['import', self.paths['delay_1']])
        self.assertEqual(code, 0)
        self.assertIn('Stored delay_1', output)
        self.assertEqual(StoredNet.objects.get(name='delay_1').as_net(), N3)

    def test_import_twice(self):
        run_command(['import', self.paths['delay_1']])
        self.assertEqual(run_command(['import', self.paths['delay_1']])[0], 3)
        code, output = run_command(['import', self.paths['delay_1'], '--replace'])
        self.assertEqual(code, 0)
        self.assertIn('Replaced delay_1', output)
        self.assertEqual(StoredNet.objects.count(), 1)

    def test_import_under_other_name(self):
        run_command(['import', self.paths['delay_1'], '--name', 'renamed'])
        stored = StoredNet.objects.get(name='renamed')
        self.assertEqual(stored.as_net().name, 'renamed')
        stored.full_clean()

    def test_stored(self):
        StoredNet.objects.create_from_net(N4)
        code, report = self.run_json('classify', '--stored', 'delay_3')
        self.assertEqual(code, 0)
        self.assertEqual(report['details']['k'], 3)
        self.assertEqual(run_command(['classify', '--stored', 'missing'])[0], 3)

    def test_file_and_stored_exclude_each_other(self):
        StoredNet.objects.create_from_net(N4)
        code, _ = run_command(['classify', '--stored', 'delay_3', '--file', self.paths['delay_3']])
        self.assertEqual(code, 3)

    def test_save(self):
        code, _ = run_command(['check', '--file', self.paths['conflict'], '--save'])
        self.assertEqual(code, 1)
        record = AnalysisRecord.objects.get()
        self.assertEqual(record.net_name, 'conflict')
        self.assertEqual(record.command, 'check')
        self.assertEqual(record.verdict, 'violated')
        self.assertIsNone(record.net)
        self.assertEqual(record.payload['witnesses'][0]['pair'], ['a', 'b'])

    def test_save_links_stored_net(self):
        stored = StoredNet.objects.create_from_net(N3)
        run_command(['classify', '--stored', 'delay_1', '--save'])
        self.assertEqual(list(stored.analyses.values_list('verdict', flat=True)), ['holds'])

    def test_without_save(self):
        run_command(['classify', '--file', self.paths['delay_1']])
        self.assertFalse(AnalysisRecord.objects.exists())
