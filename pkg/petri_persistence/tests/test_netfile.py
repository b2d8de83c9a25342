import os
import tempfile

from django.test import SimpleTestCase

from petri_persistence.exceptions import (DuplicateIdentifierError, NetFileError,
                                          NetSyntaxError, UnknownPlaceError)
from petri_persistence.netfile import format_net, name_from_path, parse_net, read_net

from .corpus import N1, N2, N3, N3_TEXT, N4, N4_TEXT, N5, N6, N7, N8


class ParseNetTests(SimpleTestCase):

    def test_parse(self):
        net = parse_net(N3_TEXT)
        self.assertEqual(net, N3)
        self.assertEqual(net.name, 'delay_1')
        self.assertEqual(net.places, ('p1', 'p2'))
        self.assertEqual(net.transitions, ('a', 'b', 'c'))
        self.assertEqual(net.initial, (1, 0))

    def test_declaration_order(self):
        net = parse_net(N4_TEXT)
        self.assertEqual(net.places, ('s', 'q1', 'q2', 'q3'))
        self.assertEqual(net, N4)

    def test_self_loop(self):
        net = parse_net("place p init 1\ntrans t in p out p\n")
        self.assertEqual(net.pre('t'), (1,))
        self.assertEqual(net.post('t'), (1,))
        self.assertEqual(net.incidence('t'), (0,))

    def test_inhibitor_arc(self):
        net = parse_net("place p\nplace q\ntrans t in p inhibit q\n")
        self.assertFalse(net.is_pure)
        self.assertEqual(net.inhibitor_places('t'), ('q',))

    def test_comments_and_blank_lines(self):
        net = parse_net("# header\n\nplace p init 2   # two tokens\n   \ntrans t in p # eats one\n")
        self.assertEqual(net.initial, (2,))
        self.assertEqual(net.transitions, ('t',))

    def test_default_name(self):
        self.assertEqual(parse_net("place p\n").name, 'net')
        self.assertEqual(parse_net("place p\n", name='fallback').name, 'fallback')
        self.assertEqual(parse_net("net given\nplace p\n", name='fallback').name, 'given')

    def test_transition_without_arcs(self):
        net = parse_net("place p\ntrans t\n")
        self.assertEqual(net.pre('t'), (0,))


class ParseErrorTests(SimpleTestCase):

    def assertParseError(self, text, exception, line, column):
        with self.assertRaises(exception) as cm:
            parse_net(text)
        self.assertEqual((cm.exception.line, cm.exception.column), (line, column))
        self.assertTrue(str(cm.exception).startswith("line %d, column %d: " % (line, column)))
        return cm.exception

    def test_unknown_place(self):
        error = self.assertParseError("place p\ntrans a in zz\n", UnknownPlaceError, 2, 12)
        self.assertIn("unknown place 'zz'", str(error))

    def test_duplicate_identifier(self):
        self.assertParseError("place p\nplace p\n", DuplicateIdentifierError, 2, 7)
        self.assertParseError("place p\ntrans p\n", DuplicateIdentifierError, 2, 7)

    def test_negative_initial_tokens(self):
        self.assertParseError("place p init -1\n", NetSyntaxError, 1, 14)

    def test_bad_keyword(self):
        self.assertParseError("place p\n  arc p t\n", NetSyntaxError, 2, 3)

    def test_arc_without_section(self):
        self.assertParseError("place p\ntrans t p\n", NetSyntaxError, 2, 9)

    def test_missing_identifier(self):
        self.assertParseError("place\n", NetSyntaxError, 1, 6)

    def test_errors_are_value_errors(self):
        with self.assertRaises(ValueError):
            parse_net("place p init x\n")
        with self.assertRaises(NetFileError):
            parse_net("trans t in p\n")


class ReadNetTests(SimpleTestCase):

    def test_name_from_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'mutex.pn')
            with open(path, 'w') as f:
                f.write("place p init 1\ntrans a in p\ntrans b in p\n")
            net = read_net(path)
        self.assertEqual(net.name, 'mutex')
        self.assertEqual(net, N1)

    def test_name_from_awkward_file_name(self):
        with tempfile.TemporaryDirectory() as directory:
            for filename, expected in [('my net.pn', 'my_net'), ('2#pass.pn', '_2_pass'),
                                       ('!.pn', '_'), ('place.pn', 'place')]:
                path = os.path.join(directory, filename)
                with open(path, 'w') as f:
                    f.write("place p init 1\ntrans a in p\n")
                net = read_net(path)
                self.assertEqual(net.name, expected)
                parsed = parse_net(format_net(net))
                self.assertEqual(parsed, net)
                self.assertEqual(parsed.name, expected)

    def test_name_helper(self):
        self.assertEqual(name_from_path('/tmp/mutex.pn'), 'mutex')
        self.assertEqual(name_from_path('/tmp/-x.pn'), '_-x')
        self.assertEqual(name_from_path('/tmp/a b/ünï.pn'), '_n_')

    def test_missing_file(self):
        with self.assertRaises(OSError):
            read_net('/nonexistent/net.pn')


class FormatNetTests(SimpleTestCase):

    def test_format(self):
        self.assertEqual(format_net(N1), "net conflict\nplace p init 1\ntrans a in p\ntrans b in p\n")

    def test_parse_inverts_format(self):
        for net in (N1, N2, N3, N4, N5, N6, N7, N8):
            parsed = parse_net(format_net(net))
            self.assertEqual(parsed, net)
            self.assertEqual(parsed.name, net.name)

    def test_default_name_survives(self):
        net = parse_net("place p init 1\n")
        self.assertEqual(net.name, 'net')
        self.assertEqual(parse_net(format_net(net)).name, 'net')
