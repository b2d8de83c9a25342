"""
Minimal elements of right-closed sets given by a RES oracle, that is a
procedure answering "does ``↓v`` meet ``X``?" for ω-vectors ``v``.

``compute_min`` runs a residual descent: it keeps the part of N^k not yet
covered by discovered minimal elements as a ``DownSet``, asks the oracle
about each of its bounds, and shrinks one ``Holds`` bound coordinate by
coordinate down to a minimal element of ``X``.
"""
import logging
from typing import Callable, Optional, Sequence

from .exceptions import (AnalysisLimitError, OracleContractError,
                         SameTransitionError, UnsupportedNetError)
from .nets import Net, fire, min_enabling
from .omega import (OMEGA, ConvexSet, DownSet, UpSet, downset_intersect,
                    format_vector, leq, upset_complement)
from .oracle import OracleConfig, Verdict, oracle_for
from .statespace import is_live_from, occurs_within
from .utils import get_basis_max_rounds

logger = logging.getLogger(__name__)


class _Undecided(Exception):

    def __init__(self, verdict):
        super().__init__(verdict.reason)
        self.verdict = verdict


class ResOracle:
    """
    Wraps ``query(v) -> Verdict`` for a right-closed subset of N^dimension.
    Answers are cached per vector and checked for monotonicity: a ``Holds``
    below a ``Violated`` raises ``OracleContractError``.
    """

    def __init__(self, dimension: int, query: Callable[[tuple], Verdict], name='res'):
        self.dimension = dimension
        self.query = query
        self.name = name
        self.queries = 0
        self._answers = {}
        self._holds = []
        self._violated = []

    def __repr__(self):
        return '<ResOracle %s dimension=%d>' % (self.name, self.dimension)

    def __call__(self, v: Sequence) -> Verdict:
        v = tuple(v)
        cached = self._answers.get(v)
        if cached is not None:
            return cached
        self.queries += 1
        verdict = self.query(v)
        logger.debug("%s [%s] -> %s", self.name, format_vector(v), verdict.status.value)
        if verdict.is_holds:
            if any(leq(v, u) for u in self._violated):
                raise OracleContractError(
                    "%s holds at [%s] but is violated above it" % (self.name, format_vector(v)))
            self._holds.append(v)
        elif verdict.is_violated:
            if any(leq(h, v) for h in self._holds):
                raise OracleContractError(
                    "%s is violated at [%s] but holds below it" % (self.name, format_vector(v)))
            self._violated.append(v)
        self._answers[v] = verdict
        return verdict

    def known_violated(self, v):
        return any(leq(v, u) for u in self._violated)

    def holds(self, v) -> bool:
        verdict = self(v)
        if verdict.is_unknown:
            raise _Undecided(verdict)
        return verdict.is_holds


def _least_feasible(oracle, current, i):
    """
    Least ``n`` keeping ``oracle`` true with coordinate ``i`` set to ``n``.
    Gallops 0, 1, 2, 4, ... and then bisects the last gap.
    """
    def probe(n):
        candidate = list(current)
        candidate[i] = n
        return oracle.holds(candidate)

    upper = current[i]
    if probe(0):
        return 0
    low, step = 0, 1
    while True:
        if upper != OMEGA and step >= upper:
            high = upper
            break
        if probe(step):
            high = step
            break
        low, step = step, step * 2
    # probe(low) is false, probe(high) is true
    while high - low > 1:
        middle = (low + high) // 2
        if probe(middle):
            high = middle
        else:
            low = middle
    return high


def _minimize(oracle, v):
    current = list(v)
    for i in range(oracle.dimension):
        current[i] = _least_feasible(oracle, current, i)
    return tuple(int(n) for n in current)


def compute_min(oracle: ResOracle, max_rounds: Optional[int] = None) -> Verdict:
    """
    ``Holds`` with ``value`` the antichain ``Min(X)``, or ``Unknown`` as
    soon as one oracle answer is ``Unknown``.
    """
    if max_rounds is None:
        max_rounds = get_basis_max_rounds()
    k = oracle.dimension
    residual = DownSet.full(k)
    minimal = set()
    rounds = 0
    try:
        while True:
            bound = None
            for v in sorted(residual.bounds):
                if not oracle.known_violated(v) and oracle.holds(v):
                    bound = v
                    break
            if bound is None:
                break
            rounds += 1
            if rounds > max_rounds:
                raise AnalysisLimitError(
                    "%s: no fixpoint after %d rounds" % (oracle.name, max_rounds))
            m = _minimize(oracle, bound)
            logger.debug("%s: minimal element [%s]", oracle.name, format_vector(m))
            minimal.add(m)
            residual = downset_intersect(residual, upset_complement(UpSet(k, [m])))
    except _Undecided as e:
        logger.warning("%s: minimal elements unknown (%s)", oracle.name, e.verdict.reason)
        return Verdict.unknown(e.verdict.reason)

    logger.info("%s: %d minimal elements after %d queries", oracle.name, len(minimal), oracle.queries)
    return Verdict.holds(value=frozenset(minimal))


def _distinct(net, a, b):
    net.check_transition(a)
    net.check_transition(b)
    if a == b:
        raise SameTransitionError(a)


def _require_pure(net):
    if not net.is_pure:
        raise UnsupportedNetError(
            "Minimal elements need the monotonicity property; %s has inhibitor arcs" % net.name)


def res_upset(upset: UpSet) -> ResOracle:
    def query(v):
        return Verdict.holds() if any(leq(g, v) for g in upset.generators) else Verdict.violated()
    return ResOracle(upset.dimension, query, name='upset')


def res_reachable(net: Net, upset: UpSet, cfg: OracleConfig = None, oracle=None) -> ResOracle:
    """
    RES oracle of ``(R ∩ upset)↑`` where ``R`` is the reachability set.
    """
    reach = oracle_for(net, cfg, oracle)

    def query(v):
        return reach.set_reachable(ConvexSet(upset, DownSet(net.dimension, [v])))
    return ResOracle(net.dimension, query, name='reachable %r' % (upset,))


def res_re(net: Net, a: str, b: str, cfg: OracleConfig = None, oracle=None) -> ResOracle:
    """
    RES oracle of the markings reachable in ``net`` that enable both ``a``
    and ``b``.
    """
    _distinct(net, a, b)
    _require_pure(net)
    res = res_reachable(net, UpSet(net.dimension, [min_enabling(net, a, b)]), cfg, oracle)
    res.name = 'RE(%s,%s)' % (a, b)
    return res


def res_eakb(net: Net, a: str, b: str, k: int) -> ResOracle:
    """
    RES oracle of the markings where ``a`` is enabled and, after ``a``,
    some word of length at most ``k`` leads to ``b``. Decided on the
    ω-rooted tree directly, so the answer is always exact.
    """
    _distinct(net, a, b)
    _require_pure(net)
    if k < 0:
        raise ValueError("k must be non-negative, got %r" % (k,))
    pre = net.pre(a)

    def query(v):
        if not leq(pre, v):
            return Verdict.violated()
        if occurs_within(net, fire(net, v, a), b, k + 1):
            return Verdict.holds()
        return Verdict.violated()
    return ResOracle(net.dimension, query, name='E(%s,%d,%s)' % (a, k, b))


def res_live(net: Net, b: str) -> ResOracle:
    """
    RES oracle of the markings in which ``b`` is live; liveness at an
    ω-vector is liveness at every large enough marking below it.
    """
    net.check_transition(b)
    _require_pure(net)

    def query(v):
        return Verdict.holds() if is_live_from(net, v, b) else Verdict.violated()
    return ResOracle(net.dimension, query, name='Live(%s)' % b)
