"""
Entry point with the short command names (``check``, ``classify``, ...).

Usage::

    python -m petri_persistence.cli classify --file n4.pn

Django must be configured (``DJANGO_SETTINGS_MODULE``) before running.
"""
import sys
from io import StringIO

from django.core.management import call_command, load_command_class
from django.core.management.base import CommandError

from .reports import EXIT_ERROR

COMMANDS = {
    'check': 'net_check',
    'coverability': 'net_coverability',
    'min-re': 'net_min_re',
    'k-ab': 'net_k_ab',
    'classify': 'net_classify',
    'reach-tree': 'net_reach_tree',
    'reachable': 'net_reachable',
    'import': 'net_import',
}


def run_command(argv):
    """
    Runs ``argv`` (without the program name) and returns ``(exit_code,
    output)``. Bad arguments and unreadable nets give exit code 3.
    """
    if not argv or argv[0] not in COMMANDS:
        return EXIT_ERROR, "Unknown command %r; expected one of %s" % (
            argv[0] if argv else '', ', '.join(sorted(COMMANDS)))

    command = load_command_class('petri_persistence', COMMANDS[argv[0]])
    out = StringIO()
    try:
        call_command(command, *argv[1:], stdout=out)
    except CommandError as e:
        return EXIT_ERROR, str(e)
    return getattr(command, 'exit_code', 0), out.getvalue()


def main(argv=None):
    import django
    django.setup()
    code, output = run_command(sys.argv[1:] if argv is None else argv)
    (sys.stdout if code in (0, 1, 2) else sys.stderr).write(output.rstrip('\n') + '\n')
    return code


if __name__ == '__main__':
    sys.exit(main())
