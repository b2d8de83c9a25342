from contextlib import contextmanager
from contextvars import ContextVar
import os

from django.conf import settings

STATE_BUDGET_ENV = 'PETRI_STATE_BUDGET'

_current_analysis = ContextVar('petri_persistence_analysis', default=None)


@contextmanager
def analysis_context(net_name, analysis=''):
    """
    Marks the enclosed code as running ``analysis`` on ``net_name``; log
    records emitted inside carry both (see ``log.NetContextFilter``).
    """
    token = _current_analysis.set((net_name, analysis))
    try:
        yield
    finally:
        _current_analysis.reset(token)


def get_current_analysis():
    """
    ``(net_name, analysis)`` of the innermost ``analysis_context``, or
    ``None`` outside of any.
    """
    return _current_analysis.get()


def get_state_budget():
    """
    The environment variable wins over the ``PETRI_STATE_BUDGET`` setting.
    """
    from_env = os.environ.get(STATE_BUDGET_ENV)
    if from_env:
        return int(from_env)
    return getattr(settings, 'PETRI_STATE_BUDGET', 1000000)


def get_require_exact():
    return getattr(settings, 'PETRI_REQUIRE_EXACT', False)


def get_coverability_max_vertices():
    return getattr(settings, 'PETRI_COVERABILITY_MAX_VERTICES', 100000)


def get_basis_max_rounds():
    return getattr(settings, 'PETRI_BASIS_MAX_ROUNDS', 10000)


def get_postponement_cap_factor():
    return getattr(settings, 'PETRI_POSTPONEMENT_CAP_FACTOR', 2)


def ordered_pairs(transitions):
    """
    All ``(a, b)`` with ``a != b`` in declaration order; this order decides
    which witness a net-level check reports.
    """
    return [(a, b) for a in transitions for b in transitions if a != b]
