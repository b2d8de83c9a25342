"""
Reachability trees, depth-bounded k-components, exhaustive enumeration and
the colored coverability-graph construction.
"""
import logging
from collections import deque, namedtuple
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

from .exceptions import AnalysisLimitError, UnsupportedNetError
from .nets import Net, enabled, fire
from .omega import OMEGA, is_finite, leq
from .utils import get_coverability_max_vertices

logger = logging.getLogger(__name__)

BLUE = 'blue'
YELLOW = 'yellow'
GREY = 'grey'

TreeNode = namedtuple('TreeNode', 'id marking depth parent transition')


def _check_root(net, m):
    m = net.check_marking(m)
    if not is_finite(m) and not net.is_pure:
        raise UnsupportedNetError(
            "ω-markings need the monotonicity property; %s has inhibitor arcs" % net.name)
    return m


def _require_pure(net, what):
    if not net.is_pure:
        raise UnsupportedNetError(
            "%s needs the monotonicity property; %s has inhibitor arcs" % (what, net.name))


def successors(net: Net, m: Sequence):
    for t in net.transitions:
        if enabled(net, m, t):
            yield t, fire(net, m, t)


class ReachTree:
    """
    Initial part of the reachability tree rooted at ``root``. Nodes are
    ``TreeNode``s indexed by id; node 0 is the root.
    """

    def __init__(self, root, depth):
        self.root = tuple(root)
        self.depth = depth
        self.nodes = [TreeNode(0, self.root, 0, None, None)]

    def add(self, parent: TreeNode, transition, marking):
        node = TreeNode(len(self.nodes), tuple(marking), parent.depth + 1, parent.id, transition)
        self.nodes.append(node)
        return node

    @property
    def edges(self):
        return [(n.parent, n.transition, n.id) for n in self.nodes[1:]]

    def labels(self):
        return {n.transition for n in self.nodes[1:]}

    def word_to(self, node_id):
        word = []
        node = self.nodes[node_id]
        while node.parent is not None:
            word.append(node.transition)
            node = self.nodes[node.parent]
        return tuple(reversed(word))

    def __len__(self):
        return len(self.nodes)


def build_k_component(net: Net, m: Sequence, k: int) -> ReachTree:
    """
    Every firing sequence of length at most ``k`` from ``m``, as a tree.
    """
    if k < 0:
        raise ValueError("k must be non-negative, got %r" % (k,))
    tree = ReachTree(_check_root(net, m), k)
    frontier = [tree.nodes[0]]
    for _ in range(k):
        next_frontier = []
        for node in frontier:
            for t, child in successors(net, node.marking):
                next_frontier.append(tree.add(node, t, child))
        frontier = next_frontier
    return tree


def shallowest_occurrence(net: Net, m: Sequence, b: str, limit: int) -> Optional[int]:
    """
    Depth of the shallowest ``b``-labelled edge in the ``limit``-component
    rooted at ``m``, or ``None``. An edge at depth ``d`` means some word of
    length ``d - 1`` leads to a marking enabling ``b``.

    Firing is deterministic, so the search keeps one frontier of distinct
    markings per level instead of the whole tree.
    """
    net.check_transition(b)
    frontier = {_check_root(net, m)}
    for depth in range(1, limit + 1):
        if any(enabled(net, marking, b) for marking in frontier):
            return depth
        frontier = {child for marking in frontier for _, child in successors(net, marking)}
        if not frontier:
            return None
    return None


def occurs_within(net: Net, m: Sequence, b: str, k: int) -> bool:
    if k < 0:
        raise ValueError("k must be non-negative, got %r" % (k,))
    return shallowest_occurrence(net, m, b, k) is not None


class CoverabilityGraph:
    """
    Finite graph of ω-markings. ``vertices`` are labels indexed by vertex
    id (id 0 is the root); ``edges`` are ``(source_id, transition,
    target_id)``.
    """

    def __init__(self, net, vertices, edges):
        self.net = net
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self._index = {label: i for i, label in enumerate(self.vertices)}

    @property
    def root(self):
        return self.vertices[0]

    def vertex(self, label):
        return self._index[tuple(label)]

    def labelled_edges(self):
        return [(self.vertices[s], t, self.vertices[d]) for s, t, d in self.edges]

    def covers(self, target: Sequence) -> bool:
        return any(leq(target, v) for v in self.vertices)

    def covering_vertex(self, target: Sequence):
        for v in self.vertices:
            if leq(target, v):
                return v
        return None

    def first_path(self, predicate):
        """
        Breadth-first search from the root over the edges. Returns
        ``(label, word)`` for the first vertex whose label satisfies
        ``predicate``, or ``None``; the word is a shortest firing sequence
        along graph edges.
        """
        outgoing = {}
        for s, t, d in self.edges:
            outgoing.setdefault(s, []).append((t, d))
        order = {t: i for i, t in enumerate(self.net.transitions)}
        parent = {0: None}
        queue = deque([0])
        while queue:
            vid = queue.popleft()
            label = self.vertices[vid]
            if predicate(label):
                word = []
                while parent[vid] is not None:
                    vid, t = parent[vid]
                    word.append(t)
                return label, tuple(reversed(word))
            for t, d in sorted(outgoing.get(vid, ()), key=lambda e: order[e[0]]):
                if d not in parent:
                    parent[d] = (vid, t)
                    queue.append(d)
        return None

    @property
    def is_bounded(self):
        return all(is_finite(v) for v in self.vertices)

    def unbounded_places(self):
        return tuple(p for i, p in enumerate(self.net.places)
                     if any(v[i] == OMEGA for v in self.vertices))

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return '<CoverabilityGraph %s: %d vertices, %d edges>' % (
            self.net.name, len(self.vertices), len(self.edges))


class _CoverabilityBuilder:
    """
    The blue/yellow/grey construction. Blue vertices wait for expansion,
    yellow ones for the coverability check, grey ones are final.
    """

    def __init__(self, net, root, max_vertices):
        self.net = net
        self.max_vertices = max_vertices
        self.labels = {}
        self.index = {}
        self.colour = {}
        self.preds = {}
        self.edges = set()
        self.blue = deque()
        self.yellow = deque()
        self.next_id = 0
        self._new_vertex(root, BLUE)
        self.blue.append(0)

    def _new_vertex(self, label, colour):
        if len(self.labels) >= self.max_vertices:
            raise AnalysisLimitError(
                "Coverability graph of %s exceeds %d vertices" % (self.net.name, self.max_vertices))
        vid = self.next_id
        self.next_id += 1
        self.labels[vid] = label
        self.index[label] = vid
        self.colour[vid] = colour
        self.preds[vid] = set()
        return vid

    def _add_edge(self, source, t, target):
        self.edges.add((source, t, target))
        self.preds[target].add(source)

    def expand(self, vid):
        label = self.labels[vid]
        for t, child in successors(self.net, label):
            target = self.index.get(child)
            if target is None:
                target = self._new_vertex(child, YELLOW)
                self.yellow.append(target)
            self._add_edge(vid, t, target)
        self.colour[vid] = GREY

    def ancestors(self, vid):
        seen = set()
        stack = list(self.preds[vid])
        while stack:
            v = stack.pop()
            if v not in seen:
                seen.add(v)
                stack.extend(self.preds[v])
        seen.discard(vid)
        return seen

    def check(self, vid):
        label = self.labels[vid]
        ancestors = self.ancestors(vid)
        changed = True
        while changed:
            changed = False
            for a in sorted(ancestors):
                smaller = self.labels[a]
                if smaller != label and leq(smaller, label):
                    promoted = tuple(OMEGA if x > y else x for x, y in zip(label, smaller))
                    if promoted != label:
                        label = promoted
                        changed = True

        if label == self.labels[vid]:
            self.colour[vid] = BLUE
            self.blue.append(vid)
            return

        logger.debug("Promoted vertex %d to %s", vid, label)
        existing = self.index.get(label)
        del self.index[self.labels[vid]]
        if existing is not None:
            self._merge(vid, existing)
        else:
            self.labels[vid] = label
            self.index[label] = vid
            self.colour[vid] = BLUE
            self.blue.append(vid)

    def _merge(self, vid, into):
        # a yellow vertex has no outgoing edges yet
        for source, t, target in list(self.edges):
            if target == vid:
                self.edges.discard((source, t, target))
                self._add_edge(source, t, into)
        del self.labels[vid]
        del self.colour[vid]
        del self.preds[vid]
        for preds in self.preds.values():
            preds.discard(vid)

    def run(self):
        while self.blue:
            self.expand(self.blue.popleft())
            while self.yellow:
                self.check(self.yellow.popleft())

        order = sorted(self.labels)
        renumber = {vid: i for i, vid in enumerate(order)}
        vertices = [self.labels[vid] for vid in order]
        edges = sorted(((renumber[s], t, renumber[d]) for s, t, d in self.edges),
                       key=lambda e: (e[0], self.net.transitions.index(e[1]), e[2]))
        return CoverabilityGraph(self.net, vertices, edges)


def build_coverability_graph(net: Net, m0: Sequence = None, max_vertices: int = None) -> CoverabilityGraph:
    _require_pure(net, "The coverability graph")
    root = net.check_marking(net.initial if m0 is None else m0)
    if max_vertices is None:
        max_vertices = get_coverability_max_vertices()
    graph = _CoverabilityBuilder(net, tuple(root), max_vertices).run()
    logger.info("Built coverability graph of %s: %d vertices, %d edges",
                net.name, len(graph.vertices), len(graph.edges))
    return graph


def is_coverable(net: Net, m0: Sequence, target: Sequence, graph: CoverabilityGraph = None) -> bool:
    target = net.check_marking(target)
    if graph is None:
        graph = build_coverability_graph(net, m0)
    return graph.covers(target)


def is_live_from(net: Net, m: Sequence, t: str) -> bool:
    """
    ``t`` is live in ``m`` iff ``•t`` is coverable from ``m``.
    """
    _require_pure(net, "Liveness")
    if enabled(net, m, t):
        return True
    return is_coverable(net, m, net.pre(t))


def liveness_summary(net: Net, graph: CoverabilityGraph = None) -> Dict[str, bool]:
    """
    ``{transition: live at M0}``; a transition mapped to False is dead.
    """
    if graph is None:
        graph = build_coverability_graph(net)
    return {t: graph.covers(net.pre(t)) for t in net.transitions}


def is_bounded(net: Net, graph: CoverabilityGraph = None) -> bool:
    if graph is None:
        graph = build_coverability_graph(net)
    return graph.is_bounded


class Exploration:
    """
    Breadth-first closure of the markings reachable from ``root``, stopped
    after ``budget`` distinct markings. ``markings`` maps every stored
    marking to ``(parent, transition)`` and iterates in BFS order.
    """

    def __init__(self, net, root, markings, complete):
        self.net = net
        self.root = root
        self.markings = markings
        self.complete = complete

    def __contains__(self, m):
        return tuple(m) in self.markings

    def __len__(self):
        return len(self.markings)

    def word_to(self, m) -> Tuple[str, ...]:
        word = []
        m = tuple(m)
        parent, t = self.markings[m]
        while parent is not None:
            word.append(t)
            parent, t = self.markings[parent]
        return tuple(reversed(word))

    def first(self, predicate):
        """
        The first stored marking satisfying ``predicate``; BFS order makes
        its word a shortest one.
        """
        for m in self.markings:
            if predicate(m):
                return m
        return None


def explore(net: Net, budget: int, root: Sequence = None) -> Exploration:
    if budget <= 0:
        raise ValueError("budget must be positive, got %r" % (budget,))
    root = net.check_marking(net.initial if root is None else root)
    markings: Dict[tuple, tuple] = {root: (None, None)}
    queue = deque([root])
    complete = True
    while queue:
        m = queue.popleft()
        for t, child in successors(net, m):
            if child in markings:
                continue
            if len(markings) >= budget:
                complete = False
                queue.clear()
                break
            markings[child] = (m, t)
            queue.append(child)
    logger.debug("Explored %d markings of %s (complete=%s)", len(markings), net.name, complete)
    return Exploration(net, root, markings, complete)


def enumerate_reachable(net: Net, budget: int) -> Tuple[FrozenSet[tuple], bool]:
    exploration = explore(net, budget)
    return frozenset(exploration.markings), exploration.complete
