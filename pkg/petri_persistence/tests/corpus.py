"""
Nets shared by the test modules, and a seeded generator of small bounded
nets.
"""
import random

from petri_persistence.nets import Net
from petri_persistence.statespace import explore


def conflict():
    """Two transitions competing for one token."""
    return Net(['p'], ['a', 'b'], {'a': ['p'], 'b': ['p']}, {}, [1], name='conflict')


def ping_pong():
    return Net(['p1', 'p2'], ['a', 'b'],
               {'a': ['p1'], 'b': ['p2']}, {'a': ['p2'], 'b': ['p1']},
               [1, 0], name='ping_pong')


def delay_1():
    """a disables b for one step: c gives the token back."""
    return Net(['p1', 'p2'], ['a', 'b', 'c'],
               {'a': ['p1'], 'b': ['p1'], 'c': ['p2']},
               {'a': ['p2'], 'b': ['p1'], 'c': ['p1']},
               [1, 0], name='delay_1')


def delay_3():
    return Net(['s', 'q1', 'q2', 'q3'], ['a', 'b', 'c', 'd', 'e'],
               {'a': ['s'], 'b': ['s'], 'c': ['q1'], 'd': ['q2'], 'e': ['q3']},
               {'a': ['q1'], 'b': ['s'], 'c': ['q2'], 'd': ['q3'], 'e': ['s']},
               [1, 0, 0, 0], name='delay_3')


def unbounded():
    return Net(['p1', 'p2'], ['a'], {'a': ['p1']}, {'a': ['p1', 'p2']}, [1, 0], name='unbounded')


def inhibitor_postpone():
    """
    Every ``inc`` puts a token on q that has to be consumed by ``dec``
    before ``back`` may return the token to p and re-enable ``b``.
    """
    return Net(['p', 'q', 'r'], ['inc', 'a', 'b', 'dec', 'back'],
               {'inc': ['p'], 'a': ['p'], 'b': ['p'], 'dec': ['r', 'q'], 'back': ['r']},
               {'inc': ['p', 'q'], 'a': ['r'], 'b': ['p'], 'dec': ['r'], 'back': ['p']},
               [1, 0, 0], inhibit={'back': ['q']}, name='inhibitor_postpone')


def two_minima():
    return Net(['p1', 'p2', 'p3'], ['a', 'b', 't'],
               {'a': ['p1'], 'b': ['p3'], 't': ['p2']},
               {'a': ['p2'], 'b': ['p3'], 't': ['p1']},
               [1, 1, 1], name='two_minima')


def indirect_kill():
    """a takes the token b will need once c and d have moved u over to v."""
    return Net(['u', 'x', 'v'], ['a', 'b', 'c', 'd'],
               {'a': ['u', 'x'], 'b': ['v', 'x'], 'c': ['u'], 'd': ['v']},
               {'a': ['u'], 'b': ['v', 'x'], 'c': ['v'], 'd': ['u']},
               [1, 1, 0], name='indirect_kill')


N1 = conflict()
N2 = ping_pong()
N3 = delay_1()
N4 = delay_3()
N5 = unbounded()
N6 = inhibitor_postpone()
N7 = two_minima()
N8 = indirect_kill()

BOUNDED = (N1, N2, N3, N4, N7, N8)
PURE = BOUNDED + (N5,)

N3_TEXT = """\
# a disables b, c re-enables it
net delay_1
place p1 init 1
place p2
trans a in p1 out p2
trans b in p1 out p1
trans c in p2 out p1
"""

N1_TEXT = """\
net conflict
place p init 1
trans a in p
trans b in p
"""

N4_TEXT = """\
net delay_3
place s init 1
place q1
place q2
place q3
trans a in s out q1
trans b in s out s
trans c in q1 out q2
trans d in q2 out q3
trans e in q3 out s
"""

N5_TEXT = """\
net unbounded
place p1 init 1
place p2
trans a in p1 out p1 p2
"""


def random_bounded_nets(count, seed=2024, max_places=5, max_transitions=5,
                        max_tokens=3, max_states=2000):
    """
    ``count`` pure nets whose reachability sets have at most ``max_states``
    markings. The same seed always gives the same nets.
    """
    rng = random.Random(seed)
    nets = []
    attempt = 0
    while len(nets) < count:
        attempt += 1
        places = ['p%d' % i for i in range(rng.randint(1, max_places))]
        transitions = ['t%d' % i for i in range(rng.randint(1, max_transitions))]
        pre, post = {}, {}
        for t in transitions:
            pre[t] = [p for p in places if rng.random() < 0.4] or [rng.choice(places)]
            post[t] = [p for p in places if rng.random() < 0.35]
        initial = [0] * len(places)
        for _ in range(rng.randint(1, max_tokens)):
            initial[rng.randrange(len(places))] += 1
        net = Net(places, transitions, pre, post, initial, name='random_%d' % attempt)
        if explore(net, max_states + 1).complete:
            nets.append(net)
    return nets
