"""
Place/transition nets with optional inhibitor arcs, markings and the
sequential firing rule.

Markings are plain tuples of non-negative integers in place declaration
order; firing words are tuples of transition identifiers. Every function in
this module is pure.
"""
import logging
from collections import Counter
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .exceptions import (DimensionError, FiringError, NetStructureError,
                         SameTransitionError, UnknownTransitionError)

logger = logging.getLogger(__name__)

Marking = Tuple[int, ...]
FiringWord = Tuple[str, ...]


class Net:
    """
    Immutable p/t-net ``(P, T, F, I, M0)``.

    ``pre``, ``post`` and ``inhibit`` map a transition to the collection of
    places that are its entries, exits and inhibitor entries. Arcs are
    unweighted, so the incidence vectors are 0/1 vectors.
    """

    __slots__ = ('name', 'places', 'transitions', '_place_index', '_pre',
                 '_post', '_inhibit', 'initial')

    def __init__(self, places, transitions, pre, post, initial,
                 inhibit=None, name='net'):
        places = tuple(places)
        transitions = tuple(transitions)
        if len(set(places)) != len(places):
            raise NetStructureError("Duplicate place identifier in %r" % (places,))
        if len(set(transitions)) != len(transitions):
            raise NetStructureError("Duplicate transition identifier in %r" % (transitions,))
        overlap = set(places) & set(transitions)
        if overlap:
            raise NetStructureError(
                "Places and transitions must be disjoint, both contain %s" % sorted(overlap))

        object.__setattr__(self, 'name', name)
        object.__setattr__(self, 'places', places)
        object.__setattr__(self, 'transitions', transitions)
        object.__setattr__(self, '_place_index', {p: i for i, p in enumerate(places)})

        inhibit = inhibit or {}
        for mapping in (pre, post, inhibit):
            unknown = set(mapping) - set(transitions)
            if unknown:
                raise UnknownTransitionError(sorted(unknown)[0])

        object.__setattr__(self, '_pre', self._vectors(pre))
        object.__setattr__(self, '_post', self._vectors(post))
        object.__setattr__(self, '_inhibit', {
            t: frozenset(self._place_position(p) for p in inhibit.get(t, ()))
            for t in transitions
        })

        initial = tuple(initial)
        if len(initial) != len(places):
            raise DimensionError(
                "Initial marking has %d entries, the net has %d places" % (len(initial), len(places)))
        if any(not isinstance(n, int) or n < 0 for n in initial):
            raise NetStructureError("Initial marking must be non-negative integers: %r" % (initial,))
        object.__setattr__(self, 'initial', initial)

    def __setattr__(self, key, value):
        raise AttributeError("Net is immutable")

    def __repr__(self):
        return '<Net %s |P|=%d |T|=%d>' % (self.name, len(self.places), len(self.transitions))

    def __eq__(self, other):
        if not isinstance(other, Net):
            return NotImplemented
        return (self.places == other.places and self.transitions == other.transitions
                and self._pre == other._pre and self._post == other._post
                and self._inhibit == other._inhibit and self.initial == other.initial)

    def __hash__(self):
        return hash((self.places, self.transitions, self.initial))

    def _place_position(self, place):
        try:
            return self._place_index[place]
        except KeyError:
            raise NetStructureError("Unknown place %r" % (place,))

    def _vectors(self, mapping):
        vectors = {}
        for t in self.transitions:
            vector = [0] * len(self.places)
            for p in mapping.get(t, ()):
                vector[self._place_position(p)] = 1
            vectors[t] = tuple(vector)
        return vectors

    @property
    def dimension(self):
        return len(self.places)

    @property
    def is_pure(self):
        """
        True for plain p/t-nets, False as soon as one inhibitor arc exists.
        """
        return not any(self._inhibit.values())

    def place_index(self, place):
        return self._place_position(place)

    def check_transition(self, t):
        if t not in self._pre:
            raise UnknownTransitionError(t)
        return t

    def pre(self, t) -> Marking:
        return self._pre[self.check_transition(t)]

    def post(self, t) -> Marking:
        return self._post[self.check_transition(t)]

    def inhibitors(self, t):
        """
        Indices of the inhibitor entries of ``t``.
        """
        return self._inhibit[self.check_transition(t)]

    def inhibitor_places(self, t):
        return tuple(p for i, p in enumerate(self.places) if i in self.inhibitors(t))

    def preset(self, t):
        return tuple(p for p, n in zip(self.places, self.pre(t)) if n)

    def postset(self, t):
        return tuple(p for p, n in zip(self.places, self.post(t)) if n)

    def incidence(self, t):
        return tuple(o - i for i, o in zip(self.pre(t), self.post(t)))

    def check_marking(self, m):
        if len(m) != len(self.places):
            raise DimensionError(
                "Marking %r has %d entries, the net has %d places" % (tuple(m), len(m), len(self.places)))
        return tuple(m)

    def marking(self, tokens: Optional[Mapping[str, int]] = None) -> Marking:
        """
        Builds a marking from a ``{place: tokens}`` mapping; missing places
        hold no token.
        """
        tokens = tokens or {}
        vector = [0] * len(self.places)
        for place, n in tokens.items():
            vector[self._place_position(place)] = n
        return tuple(vector)


def enabled(net: Net, m: Sequence, t: str) -> bool:
    """
    ``•t <= m`` and, for inhibitor nets, every inhibitor entry of ``t`` is
    empty in ``m``. Also accepts ω-vectors.
    """
    pre = net.pre(t)
    m = net.check_marking(m)
    if any(need > have for need, have in zip(pre, m)):
        return False
    return all(m[i] == 0 for i in net.inhibitors(t))


def fire(net: Net, m: Sequence, t: str) -> Marking:
    if not enabled(net, m, t):
        raise FiringError(tuple(m), t)
    return tuple(n - i + o for n, i, o in zip(m, net.pre(t), net.post(t)))


def fire_word(net: Net, m: Sequence, w: Iterable[str]) -> Marking:
    current = net.check_marking(m)
    for position, t in enumerate(w):
        if not enabled(net, current, t):
            raise FiringError(current, t, position=position)
        current = fire(net, current, t)
    return current


def parikh(w: Iterable[str], net: Net) -> Tuple[int, ...]:
    counts = Counter(net.check_transition(t) for t in w)
    return tuple(counts[t] for t in net.transitions)


def disables_at(net: Net, m: Sequence, a: str, b: str) -> bool:
    """
    True iff ``b`` is enabled in ``m`` and the execution of ``a`` leaves it
    disabled.
    """
    if a == b:
        raise SameTransitionError(a)
    if not enabled(net, m, a):
        raise FiringError(tuple(m), a)
    if not enabled(net, m, b):
        return False
    return not enabled(net, fire(net, m, a), b)


def enabled_transitions(net: Net, m: Sequence) -> Tuple[str, ...]:
    return tuple(t for t in net.transitions if enabled(net, m, t))


def place_dict(net: Net, m: Sequence) -> Dict[str, object]:
    return dict(zip(net.places, m))


def min_enabling(net: Net, a: str, b: str) -> Marking:
    """
    The least marking enabling both ``a`` and ``b``: the componentwise
    maximum of their presets.
    """
    if a == b:
        raise SameTransitionError(a)
    return tuple(max(x, y) for x, y in zip(net.pre(a), net.pre(b)))
