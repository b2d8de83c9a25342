"""
Three-valued reachability for markings and convex sets of markings.

The answer is exact on bounded nets and whenever the breadth-first
enumeration finishes within the state budget. Otherwise two sound
refutations are tried (coverability of the lower generators, place
invariants) before settling for ``Unknown``.
"""
import enum
import logging
from functools import reduce
from typing import Optional, Sequence

from sympy import Matrix, ilcm

from .exceptions import DimensionError, ExactnessError, UnsupportedNetError
from .nets import Net
from .omega import ConvexSet, format_vector
from .statespace import build_coverability_graph, explore
from .utils import get_require_exact, get_state_budget

logger = logging.getLogger(__name__)


class Status(enum.Enum):
    HOLDS = 'holds'
    VIOLATED = 'violated'
    UNKNOWN = 'unknown'


class Witness:
    """
    A marking together with a firing word leading to it from the initial
    marking (``word`` is ``None`` when the marking is not claimed
    reachable).
    """

    __slots__ = ('marking', 'word', 'pair')

    def __init__(self, marking=None, word=None, pair=None):
        self.marking = tuple(marking) if marking is not None else None
        self.word = tuple(word) if word is not None else None
        self.pair = tuple(pair) if pair is not None else None

    def __eq__(self, other):
        return (isinstance(other, Witness) and self.marking == other.marking
                and self.word == other.word and self.pair == other.pair)

    def __repr__(self):
        parts = []
        if self.pair:
            parts.append('pair=%s' % (self.pair,))
        if self.marking is not None:
            parts.append('marking=[%s]' % format_vector(self.marking))
        if self.word is not None:
            parts.append('word=%s' % ' '.join(self.word))
        return 'Witness(%s)' % ', '.join(parts)

    def as_dict(self):
        return {
            'pair': list(self.pair) if self.pair else None,
            'marking': format_vector(self.marking) if self.marking is not None else None,
            'word': list(self.word) if self.word is not None else None,
        }


class Verdict:
    """
    Outcome of an analysis: ``Holds``, ``Violated`` or ``Unknown``. Callers
    that compute a value (an antichain, a number) attach it as ``value``.
    """

    __slots__ = ('status', 'witness', 'value', 'reason')

    def __init__(self, status, witness=None, value=None, reason=''):
        self.status = status
        self.witness = witness
        self.value = value
        self.reason = reason

    @classmethod
    def holds(cls, witness=None, value=None, reason=''):
        return cls(Status.HOLDS, witness, value, reason)

    @classmethod
    def violated(cls, witness=None, value=None, reason=''):
        return cls(Status.VIOLATED, witness, value, reason)

    @classmethod
    def unknown(cls, reason):
        return cls(Status.UNKNOWN, reason=reason)

    @property
    def is_holds(self):
        return self.status is Status.HOLDS

    @property
    def is_violated(self):
        return self.status is Status.VIOLATED

    @property
    def is_unknown(self):
        return self.status is Status.UNKNOWN

    def __repr__(self):
        extra = []
        if self.witness is not None:
            extra.append(repr(self.witness))
        if self.value is not None:
            extra.append('value=%r' % (self.value,))
        if self.reason:
            extra.append(self.reason)
        return '<Verdict %s%s>' % (self.status.value, (' ' + '; '.join(extra)) if extra else '')


class OracleConfig:

    __slots__ = ('state_budget', 'require_exact')

    def __init__(self, state_budget=1000000, require_exact=False):
        if state_budget <= 0:
            raise ValueError("state_budget must be positive, got %r" % (state_budget,))
        self.state_budget = state_budget
        self.require_exact = require_exact

    @classmethod
    def from_settings(cls, state_budget=None, require_exact=None):
        return cls(
            state_budget=get_state_budget() if state_budget is None else state_budget,
            require_exact=get_require_exact() if require_exact is None else require_exact,
        )

    def __repr__(self):
        return 'OracleConfig(state_budget=%d, require_exact=%s)' % (self.state_budget, self.require_exact)


def place_invariants(net: Net):
    """
    Integer basis of ``{y : y·(t• - •t) = 0 for every t}``. Every reachable
    marking ``m`` satisfies ``y·m == y·M0`` for each basis vector ``y``.
    """
    if not net.transitions:
        return [tuple(1 if i == j else 0 for j in range(net.dimension)) for i in range(net.dimension)]
    incidence = Matrix([list(net.incidence(t)) for t in net.transitions])
    basis = []
    for column in incidence.nullspace():
        scale = reduce(ilcm, (x.q for x in column), 1)
        basis.append(tuple(int(x * scale) for x in column))
    return basis


class ReachabilityOracle:
    """
    Answers reachability questions about one net. The coverability graph
    and the enumeration are computed once and reused across queries.
    """

    def __init__(self, net: Net, cfg: OracleConfig = None):
        if not net.is_pure:
            raise UnsupportedNetError(
                "Reachability analysis needs the monotonicity property; %s has inhibitor arcs" % net.name)
        self.net = net
        self.cfg = cfg or OracleConfig.from_settings()
        self._graph = None
        self._exploration = None
        self._invariants = None
        self.queries = 0

    @property
    def graph(self):
        if self._graph is None:
            self._graph = build_coverability_graph(self.net)
        return self._graph

    @property
    def exploration(self):
        if self._exploration is None:
            self._exploration = explore(self.net, self.cfg.state_budget)
            if not self._exploration.complete:
                logger.warning("Enumeration of %s stopped at the budget of %d markings",
                               self.net.name, self.cfg.state_budget)
        return self._exploration

    @property
    def invariants(self):
        if self._invariants is None:
            self._invariants = place_invariants(self.net)
        return self._invariants

    @property
    def is_bounded(self):
        return self.graph.is_bounded

    @property
    def is_exact(self):
        return self.graph.is_bounded or self.exploration.complete

    def statistics(self):
        """
        Reports only what earlier queries computed; never starts an
        enumeration on its own.
        """
        exploration = self._exploration
        bounded = self._graph.is_bounded if self._graph is not None else None
        if bounded:
            exact = True
        else:
            exact = exploration.complete if exploration is not None else None
        return {
            'states_explored': len(exploration) if exploration is not None else 0,
            'exact': exact,
            'bounded': bounded,
            'state_budget': self.cfg.state_budget,
            'queries': self.queries,
        }

    def _refuted_by_invariants(self, m):
        for y in self.invariants:
            if sum(a * b for a, b in zip(y, m)) != sum(a * b for a, b in zip(y, self.net.initial)):
                return True
        return False

    def set_reachable(self, x: ConvexSet) -> Verdict:
        """
        Holds (with a shortest witness) iff some reachable marking lies in
        ``x``.
        """
        if x.dimension != self.net.dimension:
            raise DimensionError("Set of dimension %d for a net with %d places"
                                 % (x.dimension, self.net.dimension))
        self.queries += 1

        if x.is_empty():
            return Verdict.violated(reason='empty set')
        if not any(self.graph.covers(g) for g in x.lower.generators):
            return Verdict.violated(reason='no lower generator is coverable')

        singleton = self._singleton(x)
        if singleton is not None and self._refuted_by_invariants(singleton):
            return Verdict.violated(reason='place invariant')

        if self.graph.is_bounded:
            # the vertices are exactly the reachable markings
            found = self.graph.first_path(lambda m: m in x)
            if found is not None:
                return Verdict.holds(Witness(*found))
            return Verdict.violated(reason='coverability graph is complete')

        exploration = self.exploration
        found = exploration.first(lambda m: m in x)
        if found is not None:
            return Verdict.holds(Witness(found, exploration.word_to(found)))
        if exploration.complete:
            return Verdict.violated(reason='enumeration complete')

        reason = 'state budget of %d exhausted' % self.cfg.state_budget
        if self.cfg.require_exact:
            raise ExactnessError("Cannot decide reachability of %r in %s: %s" % (x, self.net.name, reason))
        return Verdict.unknown(reason)

    @staticmethod
    def _singleton(x):
        if len(x.lower.generators) == 1 and len(x.upper.bounds) == 1:
            (g,) = x.lower.generators
            (b,) = x.upper.bounds
            if g == b:
                return g
        return None

    def marking_reachable(self, m: Sequence) -> Verdict:
        m = self.net.check_marking(m)
        return self.set_reachable(ConvexSet.singleton(m))


def set_reachable(net: Net, x: ConvexSet, cfg: OracleConfig = None) -> Verdict:
    return ReachabilityOracle(net, cfg).set_reachable(x)


def marking_reachable(net: Net, m: Sequence, cfg: OracleConfig = None) -> Verdict:
    return ReachabilityOracle(net, cfg).marking_reachable(m)


def oracle_for(net: Net, cfg: Optional[OracleConfig] = None, oracle: Optional[ReachabilityOracle] = None):
    """
    Reuses ``oracle`` when it already belongs to ``net``.
    """
    if oracle is not None and oracle.net is net:
        return oracle
    return ReachabilityOracle(net, cfg)
