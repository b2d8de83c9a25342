"""
Line-oriented net files::

    # comments run to the end of the line
    net <name>
    place <id> [init <n>]
    trans <id> [in <id> ...] [out <id> ...] [inhibit <id> ...]

Places and transitions keep their declaration order. ``parse_net`` and
``format_net`` are inverse up to whitespace and comments.
"""
import logging
import os
import re

from .exceptions import (DuplicateIdentifierError, NetStructureError,
                         NetSyntaxError, UnknownPlaceError)
from .nets import Net

logger = logging.getLogger(__name__)

IDENTIFIER = re.compile(r'^[A-Za-z_][A-Za-z0-9_.\-]*$')
ARC_KEYWORDS = ('in', 'out', 'inhibit')
KEYWORDS = ('net', 'place', 'trans', 'init') + ARC_KEYWORDS


def _tokens(line):
    """
    ``(column, word)`` pairs of a line with its comment stripped.
    """
    line = line.split('#', 1)[0]
    return [(match.start() + 1, match.group()) for match in re.finditer(r'\S+', line)]


def _identifier(token, lineno, what, reserved=KEYWORDS):
    column, word = token
    if not IDENTIFIER.match(word) or word in reserved:
        raise NetSyntaxError("invalid %s identifier %r" % (what, word), lineno, column)
    return word


class _Parser:

    def __init__(self):
        self.name = None
        self.places = []
        self.initial = {}
        self.transitions = []
        self.arcs = {keyword: {} for keyword in ARC_KEYWORDS}
        self.seen = {}

    def declare(self, token, lineno):
        column, word = token
        if word in self.seen:
            raise DuplicateIdentifierError(
                "%r is already declared on line %d" % (word, self.seen[word]), lineno, column)
        self.seen[word] = lineno

    def parse_line(self, tokens, lineno):
        (column, keyword), rest = tokens[0], tokens[1:]
        handler = getattr(self, 'parse_%s' % keyword, None)
        if keyword not in ('net', 'place', 'trans') or handler is None:
            raise NetSyntaxError("expected 'net', 'place' or 'trans', got %r" % keyword, lineno, column)
        if not rest:
            raise NetSyntaxError("%r needs an identifier" % keyword, lineno, column + len(keyword))
        handler(rest, lineno)

    def parse_net(self, tokens, lineno):
        if self.name is not None:
            raise NetSyntaxError("the net is already named %r" % self.name, lineno, tokens[0][0])
        if len(tokens) > 1:
            raise NetSyntaxError("unexpected %r" % tokens[1][1], lineno, tokens[1][0])
        # the name stands alone on its line, so keywords are fine
        self.name = _identifier(tokens[0], lineno, 'net', reserved=())

    def parse_place(self, tokens, lineno):
        place = _identifier(tokens[0], lineno, 'place')
        self.declare(tokens[0], lineno)
        tokens = tokens[1:]
        count = 0
        if tokens:
            column, word = tokens[0]
            if word != 'init':
                raise NetSyntaxError("expected 'init', got %r" % word, lineno, column)
            if len(tokens) != 2:
                raise NetSyntaxError("'init' takes exactly one number", lineno, column)
            column, word = tokens[1]
            if not re.match(r'^-?\d+$', word):
                raise NetSyntaxError("expected a token count, got %r" % word, lineno, column)
            count = int(word)
            if count < 0:
                raise NetSyntaxError("negative initial tokens %d" % count, lineno, column)
        self.places.append(place)
        self.initial[place] = count

    def parse_trans(self, tokens, lineno):
        transition = _identifier(tokens[0], lineno, 'transition')
        self.declare(tokens[0], lineno)
        self.transitions.append(transition)
        section = None
        for column, word in tokens[1:]:
            if word in ARC_KEYWORDS:
                section = word
                self.arcs[section].setdefault(transition, [])
                continue
            if section is None:
                raise NetSyntaxError("expected 'in', 'out' or 'inhibit', got %r" % word, lineno, column)
            self.arcs[section][transition].append((lineno, column, word))

    def resolve(self, text_name):
        places = set(self.places)
        mappings = {}
        for keyword, arcs in self.arcs.items():
            mappings[keyword] = {}
            for transition, targets in arcs.items():
                resolved = []
                for lineno, column, word in targets:
                    if word not in places:
                        raise UnknownPlaceError("unknown place %r" % word, lineno, column)
                    if word in resolved:
                        raise DuplicateIdentifierError(
                            "%r is listed twice in %r of %s" % (word, keyword, transition), lineno, column)
                    resolved.append(word)
                mappings[keyword][transition] = resolved
        try:
            return Net(self.places, self.transitions, mappings['in'], mappings['out'],
                       [self.initial[p] for p in self.places], inhibit=mappings['inhibit'],
                       name=self.name or text_name)
        except NetStructureError as e:
            raise NetSyntaxError(str(e))


def parse_net(text: str, name: str = 'net') -> Net:
    """
    Builds a ``Net`` from the text of a net file. ``name`` is used when the
    file has no ``net`` line.
    """
    parser = _Parser()
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(line)
        if tokens:
            parser.parse_line(tokens, lineno)
    net = parser.resolve(name)
    logger.debug("Parsed %r", net)
    return net


def name_from_path(path) -> str:
    """
    A net name for files without a ``net`` line: the file name without its
    extension, with characters an identifier cannot hold replaced by ``_``.
    """
    stem = os.path.splitext(os.path.basename(str(path)))[0]
    name = re.sub(r'[^A-Za-z0-9_.\-]', '_', stem)
    if not name:
        return 'net'
    if not IDENTIFIER.match(name):
        name = '_' + name
    return name


def read_net(path) -> Net:
    with open(path, encoding='utf-8') as f:
        text = f.read()
    return parse_net(text, name=name_from_path(path))


def format_net(net: Net) -> str:
    lines = ['net %s' % net.name]
    for place, tokens in zip(net.places, net.initial):
        lines.append('place %s init %d' % (place, tokens) if tokens else 'place %s' % place)
    for t in net.transitions:
        parts = ['trans', t]
        for keyword, places in (('in', net.preset(t)), ('out', net.postset(t)),
                                ('inhibit', net.inhibitor_places(t))):
            if places:
                parts.append(keyword)
                parts.extend(places)
        lines.append(' '.join(parts))
    return '\n'.join(lines) + '\n'
