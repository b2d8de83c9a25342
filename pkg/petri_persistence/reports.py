import json
import time
from contextlib import contextmanager

from django.core.serializers.json import DjangoJSONEncoder

from .oracle import Status, Verdict

EXIT_CODES = {
    Status.HOLDS: 0,
    Status.VIOLATED: 1,
    Status.UNKNOWN: 2,
}
EXIT_ERROR = 3


class AnalysisReport:
    """
    What a management command found out about a net: the verdict, the
    witnesses backing it, how long it took and what the oracle had to do.
    """

    def __init__(self, net_name, command, verdict: Verdict, parameters=None,
                 witnesses=(), details=None, statistics=None, elapsed=None):
        self.net_name = net_name
        self.command = command
        self.verdict = verdict
        self.parameters = dict(parameters or {})
        self.witnesses = [w for w in witnesses if w is not None]
        self.details = dict(details or {})
        self.statistics = dict(statistics or {})
        self.elapsed = elapsed

    @property
    def exit_code(self):
        return EXIT_CODES[self.verdict.status]

    def as_dict(self):
        return {
            'net': self.net_name,
            'command': self.command,
            'parameters': self.parameters,
            'verdict': self.verdict.status.value,
            'reason': self.verdict.reason,
            'witnesses': [w.as_dict() for w in self.witnesses],
            'details': self.details,
            'timing': {'seconds': self.elapsed},
            'oracle': self.statistics,
        }

    def to_json(self):
        return json.dumps(self.as_dict(), cls=DjangoJSONEncoder, indent=2, sort_keys=True)

    def as_text(self):
        lines = ['%s %s: %s' % (self.command, self.net_name, self.verdict.status.value.upper())]
        if self.verdict.reason:
            lines.append('  %s' % self.verdict.reason)
        for key, value in sorted(self.parameters.items()):
            if value is not None:
                lines.append('  %s = %s' % (key, value))
        for w in self.witnesses:
            lines.append('  witness: %r' % (w,))
        for key, value in sorted(self.details.items()):
            if isinstance(value, (list, tuple)):
                lines.append('  %s:' % key)
                lines.extend('    %s' % (item,) for item in value)
            else:
                lines.append('  %s: %s' % (key, value))
        if self.statistics.get('states_explored'):
            lines.append('  states explored: %(states_explored)d (exact: %(exact)s)' % self.statistics)
        if self.elapsed is not None:
            lines.append('  time: %.3fs' % self.elapsed)
        return '\n'.join(lines)


class Stopwatch:

    def __init__(self):
        self.elapsed = None


@contextmanager
def stopwatch():
    watch = Stopwatch()
    start = time.perf_counter()
    try:
        yield watch
    finally:
        watch.elapsed = time.perf_counter() - start
