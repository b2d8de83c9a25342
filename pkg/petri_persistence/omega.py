"""
ω-vectors and finite representations of right-closed, left-closed and
convex subsets of N^k.

ω is ``float('inf')``, so ``ω + n == ω``, ``ω - n == ω`` and ``n < ω`` hold
with ordinary arithmetic. Right-closed sets are kept as their antichain of
minimal generators, left-closed sets as an antichain of ω-bounds.
"""
import logging
from itertools import product
from typing import Iterable, Sequence, Tuple, Union

from .exceptions import DimensionError

logger = logging.getLogger(__name__)

OMEGA = float('inf')

Entry = Union[int, float]
OmegaVector = Tuple[Entry, ...]


def omega_vector(dimension: int) -> OmegaVector:
    return (OMEGA,) * dimension


def is_finite(v: Sequence) -> bool:
    return all(n != OMEGA for n in v)


def leq(u: Sequence, v: Sequence) -> bool:
    return all(x <= y for x, y in zip(u, v))


def lt(u: Sequence, v: Sequence) -> bool:
    return leq(u, v) and tuple(u) != tuple(v)


def comparable(u: Sequence, v: Sequence) -> bool:
    return leq(u, v) or leq(v, u)


def vmax(u: Sequence, v: Sequence) -> OmegaVector:
    return tuple(max(x, y) for x, y in zip(u, v))


def vmin(u: Sequence, v: Sequence) -> OmegaVector:
    return tuple(min(x, y) for x, y in zip(u, v))


def vadd(u: Sequence, v: Sequence) -> OmegaVector:
    return tuple(x + y for x, y in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> OmegaVector:
    return tuple(x - y for x, y in zip(u, v))


def format_vector(v: Sequence) -> str:
    return ','.join('w' if n == OMEGA else str(int(n)) for n in v)


def parse_vector(text: str, dimension: int = None) -> OmegaVector:
    """
    Parses ``"1,0,w"``. Raises ``ValueError`` on malformed entries and
    ``DimensionError`` if ``dimension`` is given and does not match.
    """
    entries = []
    for raw in text.split(','):
        raw = raw.strip()
        if raw.lower() in ('w', 'ω', 'omega'):
            entries.append(OMEGA)
            continue
        n = int(raw)
        if n < 0:
            raise ValueError("Negative vector entry %r" % raw)
        entries.append(n)
    if dimension is not None and len(entries) != dimension:
        raise DimensionError("Expected %d entries, got %d in %r" % (dimension, len(entries), text))
    return tuple(entries)


def _same_dimension(vs):
    dims = {len(v) for v in vs}
    if len(dims) > 1:
        raise DimensionError("Vectors of mixed dimensions %s" % sorted(dims))
    return dims.pop() if dims else None


def min_antichain(vs: Iterable[Sequence]) -> frozenset:
    """
    The ≤-minimal members of ``vs``, deduplicated.
    """
    vs = {tuple(v) for v in vs}
    _same_dimension(vs)
    # sorting by sum puts every strict predecessor first
    result = []
    for v in sorted(vs, key=lambda v: (sum(v), v)):
        if not any(leq(g, v) for g in result):
            result.append(v)
    return frozenset(result)


def max_antichain(vs: Iterable[Sequence]) -> frozenset:
    vs = {tuple(v) for v in vs}
    _same_dimension(vs)
    result = []
    for v in sorted(vs, key=lambda v: (sum(v), v), reverse=True):
        if not any(leq(v, b) for b in result):
            result.append(v)
    return frozenset(result)


def is_antichain(vs: Iterable[Sequence]) -> bool:
    vs = list(vs)
    return all(not comparable(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def _sorted(vs):
    return tuple(sorted(vs))


class UpSet:
    """
    Right-closed set ``Min(X) + N^k`` given by its minimal generators.
    """

    __slots__ = ('dimension', 'generators')

    def __init__(self, dimension: int, generators: Iterable[Sequence] = ()):
        generators = min_antichain(generators)
        for g in generators:
            if len(g) != dimension:
                raise DimensionError("Generator %r is not of dimension %d" % (g, dimension))
            if not is_finite(g):
                raise ValueError("Generators of an up-set must be finite: %r" % (g,))
        self.dimension = dimension
        self.generators = generators

    @classmethod
    def full(cls, dimension):
        return cls(dimension, [(0,) * dimension])

    def __contains__(self, z):
        return any(leq(g, z) for g in self.generators)

    def __eq__(self, other):
        return (isinstance(other, UpSet) and self.dimension == other.dimension
                and self.generators == other.generators)

    def __hash__(self):
        return hash((UpSet, self.dimension, self.generators))

    def __repr__(self):
        return 'UpSet(%s)' % ', '.join('[%s]' % format_vector(g) for g in _sorted(self.generators))

    def __bool__(self):
        return bool(self.generators)


class DownSet:
    """
    Left-closed set ``↓B`` given by an antichain of ω-bounds.
    """

    __slots__ = ('dimension', 'bounds')

    def __init__(self, dimension: int, bounds: Iterable[Sequence] = ()):
        bounds = max_antichain(bounds)
        for b in bounds:
            if len(b) != dimension:
                raise DimensionError("Bound %r is not of dimension %d" % (b, dimension))
        self.dimension = dimension
        self.bounds = bounds

    @classmethod
    def full(cls, dimension):
        return cls(dimension, [omega_vector(dimension)])

    def __contains__(self, z):
        return any(leq(z, b) for b in self.bounds)

    def __eq__(self, other):
        return (isinstance(other, DownSet) and self.dimension == other.dimension
                and self.bounds == other.bounds)

    def __hash__(self):
        return hash((DownSet, self.dimension, self.bounds))

    def __repr__(self):
        return 'DownSet(%s)' % ', '.join('[%s]' % format_vector(b) for b in _sorted(self.bounds))

    def __bool__(self):
        return bool(self.bounds)


class ConvexSet:
    """
    ``lower ∩ upper``: a right-closed set cut by a left-closed one.
    """

    __slots__ = ('lower', 'upper')

    def __init__(self, lower: UpSet, upper: DownSet = None):
        if upper is None:
            upper = DownSet.full(lower.dimension)
        if lower.dimension != upper.dimension:
            raise DimensionError("Convex set bounds of dimensions %d and %d"
                                 % (lower.dimension, upper.dimension))
        self.lower = lower
        self.upper = upper

    @classmethod
    def singleton(cls, m: Sequence):
        m = tuple(m)
        return cls(UpSet(len(m), [m]), DownSet(len(m), [m]))

    @property
    def dimension(self):
        return self.lower.dimension

    def __contains__(self, z):
        return convex_member(self, z)

    def __repr__(self):
        return 'ConvexSet(%r, %r)' % (self.lower, self.upper)

    def is_empty(self):
        """
        Emptiness is decided exactly: some generator lies below some bound.
        """
        return not any(leq(g, b) for g in self.lower.generators for b in self.upper.bounds)


def _check_dims(x, y):
    if x.dimension != y.dimension:
        raise DimensionError("Dimension mismatch: %d and %d" % (x.dimension, y.dimension))


def upset_intersect(x: UpSet, y: UpSet) -> UpSet:
    _check_dims(x, y)
    return UpSet(x.dimension, (vmax(g, h) for g, h in product(x.generators, y.generators)))


def upset_union(x: UpSet, y: UpSet) -> UpSet:
    _check_dims(x, y)
    return UpSet(x.dimension, x.generators | y.generators)


def downset_intersect(x: DownSet, y: DownSet) -> DownSet:
    _check_dims(x, y)
    return DownSet(x.dimension, (vmin(b, c) for b, c in product(x.bounds, y.bounds)))


def upset_complement(x: UpSet) -> DownSet:
    """
    N^k minus ``x``. A point avoids ``g↑`` iff it is below ``g`` in some
    coordinate, so the complement is the intersection over generators of
    the ideals ``{z : z_i <= g_i - 1}``.
    """
    k = x.dimension
    result = DownSet.full(k)
    for g in sorted(x.generators):
        avoid = DownSet(k, (
            tuple(g[j] - 1 if j == i else OMEGA for j in range(k))
            for i in range(k) if g[i] > 0
        ))
        result = downset_intersect(result, avoid)
        if not result:
            break
    return result


def convex_member(x: ConvexSet, z: Sequence) -> bool:
    if len(z) != x.dimension:
        raise DimensionError("Vector %r is not of dimension %d" % (tuple(z), x.dimension))
    return z in x.lower and z in x.upper
