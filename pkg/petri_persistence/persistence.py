"""
Persistence deciders.

The classical notions compare what a step does to another transition:
e/e (it stays enabled), l/l (a live one stays live) and e/l (an enabled one
stays live). e/l-k sits in between: every transition disabled by a step
must be enabled again after at most ``k`` further steps.

Transition- and net-level questions are reduced to the minimal reachable
markings enabling both transitions. Disabling, killing and postponing are
anti-monotone in the marking, so checking the minimal ones is enough.
"""
import logging
from collections import namedtuple
from typing import Optional, Sequence

from .basis import compute_min, res_eakb, res_live, res_re, res_reachable
from .exceptions import AnalysisLimitError, FiringError, SameTransitionError
from .nets import Net, disables_at, enabled, enabled_transitions, fire, min_enabling
from .omega import ConvexSet, UpSet, upset_complement, upset_intersect
from .oracle import OracleConfig, Verdict, Witness, oracle_for
from .statespace import is_coverable, is_live_from, occurs_within, shallowest_occurrence
from .utils import get_postponement_cap_factor, ordered_pairs

logger = logging.getLogger(__name__)


class PersistenceKind:
    """
    ``EE``, ``LL``, ``EL`` or ``ELK(k)``. Renders as ``ee``, ``ll``, ``el``
    and ``el-<k>``.
    """

    __slots__ = ('name', 'k')

    def __init__(self, name, k=None):
        object.__setattr__(self, 'name', name)
        object.__setattr__(self, 'k', k)

    def __setattr__(self, key, value):
        raise AttributeError("PersistenceKind is immutable")

    @classmethod
    def ELK(cls, k):
        if k is None or k < 0:
            raise ValueError("e/l-k needs a non-negative k, got %r" % (k,))
        return cls('el-k', k)

    @classmethod
    def parse(cls, text, k=None):
        text = text.lower()
        if text in ('ee', 'll', 'el'):
            return getattr(cls, text.upper())
        if text == 'el-k':
            return cls.ELK(k)
        if text.startswith('el-') and text[3:].isdigit():
            return cls.ELK(int(text[3:]))
        raise ValueError("Unknown persistence kind %r" % text)

    @property
    def label(self):
        """
        e/e, l/l, e/l or e/l-<k>.
        """
        return {'ee': 'e/e', 'll': 'l/l', 'el': 'e/l'}.get(self.name) or 'e/l-%d' % self.k

    @property
    def is_classic(self):
        return self.k is None

    def __eq__(self, other):
        return isinstance(other, PersistenceKind) and (self.name, self.k) == (other.name, other.k)

    def __hash__(self):
        return hash((self.name, self.k))

    def __str__(self):
        return self.name if self.k is None else 'el-%d' % self.k

    def __repr__(self):
        return 'PersistenceKind(%s)' % self


PersistenceKind.EE = PersistenceKind('ee')
PersistenceKind.LL = PersistenceKind('ll')
PersistenceKind.EL = PersistenceKind('el')


class PairReport:

    __slots__ = ('pair', 'verdict', 'witness', 'k_ab')

    def __init__(self, pair, verdict, witness=None, k_ab=None):
        self.pair = tuple(pair)
        self.verdict = verdict
        self.witness = witness
        self.k_ab = k_ab

    def __repr__(self):
        return '<PairReport %s,%s %s k_ab=%r>' % (self.pair + (self.verdict.status.value, self.k_ab))

    def as_dict(self):
        return {
            'pair': list(self.pair),
            'verdict': self.verdict.status.value,
            'reason': self.verdict.reason,
            'witness': self.witness.as_dict() if self.witness else None,
            'k_ab': self.k_ab,
        }


class Classification:
    """
    Where a net sits in the e/l hierarchy: ``not-el`` (some step kills an
    enabled transition), ``el-k`` with the least such ``k``, or ``unknown``.
    """

    NOT_EL = 'not-el'
    EL_K = 'el-k'
    UNKNOWN = 'unknown'

    __slots__ = ('kind', 'k', 'witness', 'pairs', 'reason')

    def __init__(self, kind, k=None, witness=None, pairs=(), reason=''):
        self.kind = kind
        self.k = k
        self.witness = witness
        self.pairs = tuple(pairs)
        self.reason = reason

    @property
    def verdict(self):
        if self.kind == self.EL_K:
            return Verdict.holds(value=self.k)
        if self.kind == self.NOT_EL:
            return Verdict.violated(self.witness, reason=self.reason)
        return Verdict.unknown(self.reason)

    @property
    def persistence_kind(self) -> Optional[PersistenceKind]:
        return PersistenceKind.ELK(self.k) if self.kind == self.EL_K else None

    def __repr__(self):
        if self.kind == self.EL_K:
            return '<Classification el-%d>' % self.k
        return '<Classification %s>' % self.kind

    def as_dict(self):
        return {
            'kind': self.kind,
            'k': self.k,
            'reason': self.reason,
            'witness': self.witness.as_dict() if self.witness else None,
            'pairs': [p.as_dict() for p in self.pairs],
        }


Hierarchy = namedtuple('Hierarchy', 'ee ll el classification')


def _distinct(net, a, b):
    net.check_transition(a)
    net.check_transition(b)
    if a == b:
        raise SameTransitionError(a)


def _check_k(k):
    if k < 0:
        raise ValueError("k must be non-negative, got %r" % (k,))


def _in_order(markings):
    return sorted(markings, key=lambda m: (sum(m), m))


def _reachable_witness(reach, m, pair):
    found = reach.marking_reachable(m)
    word = found.witness.word if found.is_holds else None
    return Witness(m, word, pair)


def mutually_enabled_reachable(net: Net, a: str, b: str, graph=None) -> bool:
    """
    Whether some reachable marking enables ``a`` and ``b`` at once, decided
    by covering their least common enabling marking.
    """
    _distinct(net, a, b)
    return is_coverable(net, net.initial, min_enabling(net, a, b), graph)


def min_re(net: Net, a: str, b: str, cfg: OracleConfig = None, oracle=None) -> Verdict:
    """
    Minimal reachable markings enabling both ``a`` and ``b``, as ``value``
    of a ``Holds`` verdict (empty when they are never co-enabled).
    """
    _distinct(net, a, b)
    reach = oracle_for(net, cfg, oracle)
    if not mutually_enabled_reachable(net, a, b, reach.graph):
        return Verdict.holds(value=frozenset(), reason='never co-enabled')
    return compute_min(res_re(net, a, b, oracle=reach))


def step_violations(net: Net, m: Sequence, a: str, k: int):
    """
    Transitions enabled at ``m`` that are not enabled again within ``k``
    steps after firing ``a``.
    """
    _check_k(k)
    m = net.check_marking(m)
    if not enabled(net, m, a):
        raise FiringError(m, a)
    after = fire(net, m, a)
    return tuple(b for b in enabled_transitions(net, m)
                 if b != a and not occurs_within(net, after, b, k + 1))


def elk_step(net: Net, m: Sequence, a: str, k: int) -> bool:
    return not step_violations(net, m, a, k)


def elk_marking(net: Net, m: Sequence, k: int) -> bool:
    _check_k(k)
    return all(elk_step(net, m, a, k) for a in enabled_transitions(net, m))


def elk_transition_violation(net: Net, a: str, b: str, k: int,
                             cfg: OracleConfig = None, oracle=None) -> Verdict:
    """
    Does ``a`` postpone ``b`` for more than ``k`` steps? ``Holds`` carries
    the violating minimal marking and a word reaching it.
    """
    _distinct(net, a, b)
    _check_k(k)
    reach = oracle_for(net, cfg, oracle)
    minimal = min_re(net, a, b, oracle=reach)
    if minimal.is_unknown:
        return minimal
    for m in _in_order(minimal.value):
        if not occurs_within(net, fire(net, m, a), b, k + 1):
            return Verdict.holds(_reachable_witness(reach, m, (a, b)),
                                 reason='%s postpones %s for more than %d steps' % (a, b, k))
    return Verdict.violated(reason=minimal.reason or 'no postponement beyond %d steps' % k)


def _net_verdict(net, decide, description):
    """
    ``Holds`` iff ``decide(a, b)`` is ``Violated`` for every ordered pair.
    The first violation in pair order wins; an undecided pair turns an
    otherwise clean result into ``Unknown``.
    """
    undecided = []
    for a, b in ordered_pairs(net.transitions):
        verdict = decide(a, b)
        if verdict.is_holds:
            logger.info("%s is not %s: %s", net.name, description, verdict.reason)
            return Verdict.violated(verdict.witness, reason=verdict.reason)
        if verdict.is_unknown:
            undecided.append('%s,%s: %s' % (a, b, verdict.reason))
    if undecided:
        logger.warning("%s: %s undecided for %d pairs", net.name, description, len(undecided))
        return Verdict.unknown('; '.join(undecided))
    return Verdict.holds(reason='%s is %s' % (net.name, description))


def elk_net(net: Net, k: int, cfg: OracleConfig = None, oracle=None) -> Verdict:
    _check_k(k)
    reach = oracle_for(net, cfg, oracle)
    return _net_verdict(
        net, lambda a, b: elk_transition_violation(net, a, b, k, oracle=reach),
        'e/l-%d-persistent' % k)


def elk_net_alt(net: Net, k: int, cfg: OracleConfig = None, oracle=None) -> Verdict:
    """
    Same question as ``elk_net``, answered by one reachability query per
    pair: is some marking enabling ``a`` and ``b`` reachable outside the
    set from which ``b`` follows ``a`` within ``k`` steps?
    """
    _check_k(k)
    reach = oracle_for(net, cfg, oracle)
    dimension = net.dimension

    def decide(a, b):
        within = compute_min(res_eakb(net, a, b, k))
        outside = upset_complement(UpSet(dimension, within.value))
        enabling = upset_intersect(UpSet(dimension, [net.pre(a)]), UpSet(dimension, [net.pre(b)]))
        found = reach.set_reachable(ConvexSet(enabling, outside))
        if found.is_holds:
            witness = Witness(found.witness.marking, found.witness.word, (a, b))
            return Verdict.holds(witness, reason='%s postpones %s for more than %d steps' % (a, b, k))
        return found

    return _net_verdict(net, decide, 'e/l-%d-persistent' % k)


def _min_live_enabling(net, a, b, reach):
    """
    Minimal reachable markings enabling ``a`` in which ``b`` is live.
    """
    live = compute_min(res_live(net, b))
    candidates = upset_intersect(UpSet(net.dimension, [net.pre(a)]), UpSet(net.dimension, live.value))
    if not candidates:
        return Verdict.holds(value=frozenset())
    res = res_reachable(net, candidates, oracle=reach)
    res.name = 'RE(%s)Live(%s)' % (a, b)
    return compute_min(res)


def classic_violation(net: Net, kind: PersistenceKind, a: str, b: str,
                      cfg: OracleConfig = None, oracle=None) -> Verdict:
    """
    ``Holds`` iff ``a`` disables an enabled ``b`` (EE), kills a live ``b``
    (LL) or kills an enabled ``b`` (EL) at some reachable marking.
    """
    _distinct(net, a, b)
    if not kind.is_classic:
        return elk_transition_violation(net, a, b, kind.k, cfg, oracle)
    reach = oracle_for(net, cfg, oracle)

    if kind == PersistenceKind.LL:
        minimal = _min_live_enabling(net, a, b, reach)
    else:
        minimal = min_re(net, a, b, oracle=reach)
    if minimal.is_unknown:
        return minimal

    for m in _in_order(minimal.value):
        if kind == PersistenceKind.EE:
            violated = disables_at(net, m, a, b)
            what = 'disables'
        else:
            violated = not is_live_from(net, fire(net, m, a), b)
            what = 'kills'
        if violated:
            return Verdict.holds(_reachable_witness(reach, m, (a, b)), reason='%s %s %s' % (a, what, b))
    return Verdict.violated(reason=minimal.reason)


def classic_net(net: Net, kind: PersistenceKind, cfg: OracleConfig = None, oracle=None) -> Verdict:
    reach = oracle_for(net, cfg, oracle)
    return _net_verdict(
        net, lambda a, b: classic_violation(net, kind, a, b, oracle=reach),
        '%s-persistent' % kind.label)


def k_enabled(net: Net, m: Sequence, t: str, k: int) -> bool:
    """
    Whether some word of length at most ``k`` leads from ``m`` to a marking
    enabling ``t``.
    """
    _check_k(k)
    return occurs_within(net, m, t, k + 1)


def k_ab(net: Net, a: str, b: str, cfg: OracleConfig = None, oracle=None) -> Verdict:
    """
    Least ``k`` such that after ``a`` at any reachable marking enabling
    ``a`` and ``b``, ``b`` comes back within ``k`` steps.

    ``Holds`` with ``value`` None when the pair is never co-enabled,
    ``Violated`` (with witness) when ``a`` kills ``b``.
    """
    _distinct(net, a, b)
    reach = oracle_for(net, cfg, oracle)
    minimal = min_re(net, a, b, oracle=reach)
    if minimal.is_unknown:
        return minimal
    if not minimal.value:
        return Verdict.holds(value=None, reason='never co-enabled')

    markings = _in_order(minimal.value)
    for m in markings:
        if not is_live_from(net, fire(net, m, a), b):
            return Verdict.violated(_reachable_witness(reach, m, (a, b)), reason='%s kills %s' % (a, b))

    cap = get_postponement_cap_factor() * len(reach.graph) * max(len(net.transitions), 1)
    worst = 0
    for m in markings:
        depth = shallowest_occurrence(net, fire(net, m, a), b, cap)
        if depth is None:
            raise AnalysisLimitError(
                "%s does not come back within %d steps after %s at %s" % (b, cap, a, list(m)))
        worst = max(worst, depth - 1)
    logger.info("k(%s,%s) = %d on %s", a, b, worst, net.name)
    return Verdict.holds(value=worst)


def classify(net: Net, cfg: OracleConfig = None, oracle=None) -> Classification:
    """
    Least ``k`` for which ``net`` is e/l-k-persistent, the maximum of
    ``k_ab`` over all ordered pairs.
    """
    reach = oracle_for(net, cfg, oracle)
    reports = []
    undecided = []
    k = 0
    for a, b in ordered_pairs(net.transitions):
        verdict = k_ab(net, a, b, oracle=reach)
        reports.append(PairReport((a, b), verdict, verdict.witness, verdict.value))
        if verdict.is_violated:
            return Classification(Classification.NOT_EL, witness=verdict.witness,
                                  pairs=reports, reason=verdict.reason)
        if verdict.is_unknown:
            undecided.append('%s,%s: %s' % (a, b, verdict.reason))
        elif verdict.value is not None:
            k = max(k, verdict.value)
    if undecided:
        return Classification(Classification.UNKNOWN, pairs=reports, reason='; '.join(undecided))
    return Classification(Classification.EL_K, k=k, pairs=reports)


def hierarchy(net: Net, cfg: OracleConfig = None, oracle=None) -> Hierarchy:
    reach = oracle_for(net, cfg, oracle)
    return Hierarchy(
        ee=classic_net(net, PersistenceKind.EE, oracle=reach),
        ll=classic_net(net, PersistenceKind.LL, oracle=reach),
        el=classic_net(net, PersistenceKind.EL, oracle=reach),
        classification=classify(net, oracle=reach),
    )
