from django.core.management.base import CommandError

from petri_persistence.management.commands import BaseNetCommand
from petri_persistence.nets import enabled_transitions
from petri_persistence.oracle import Verdict, Witness
from petri_persistence.persistence import (PersistenceKind, classic_net, classic_violation,
                                           elk_net, elk_net_alt, step_violations)
from petri_persistence.reports import EXIT_ERROR

PROPERTIES = ('ee', 'll', 'el', 'el-k')


def _flip(verdict):
    """
    Turns a "violation exists" verdict into a "property holds" one.
    """
    if verdict.is_holds:
        return Verdict.violated(verdict.witness, reason=verdict.reason)
    if verdict.is_violated:
        return Verdict.holds(reason=verdict.reason)
    return verdict


class Command(BaseNetCommand):
    help = "Checks e/e, l/l, e/l or e/l-k persistence of a net, a transition pair, a marking or a step."
    analysis = 'check'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--property", dest="property", choices=PROPERTIES, default='el')
        parser.add_argument("--k", dest="k", type=int, help="postponement bound for el-k")
        parser.add_argument("--pair", dest="pair", nargs=2, metavar=("A", "B"),
                            help="only ask whether A violates the property towards B")
        parser.add_argument("--marking", dest="marking",
                            help="check this marking instead of the net, e.g. 1,0,2")
        parser.add_argument("--step", dest="step", help="with --marking, check only this step")
        parser.add_argument("--alt", dest="alt", action="store_true", default=False,
                            help="decide el-k net persistence with one reachability query per pair")

    def get_kind(self, **options):
        k = options.get('k')
        if options['property'] == 'el-k':
            if k is None:
                raise CommandError("--property el-k needs --k", returncode=EXIT_ERROR)
            return PersistenceKind.ELK(k)
        return PersistenceKind.parse(options['property'])

    def analyse(self, net, cfg, **options):
        kind = self.get_kind(**options)
        parameters = {'property': str(kind), 'k': kind.k, 'budget': cfg.state_budget}

        if options.get('marking'):
            return self.check_marking(net, kind, parameters, **options)
        if options.get('step'):
            raise CommandError("--step needs --marking", returncode=EXIT_ERROR)

        if options.get('pair'):
            a, b = options['pair']
            parameters['pair'] = '%s,%s' % (a, b)
            verdict = _flip(classic_violation(net, kind, a, b, oracle=self.get_oracle(net, cfg)))
        elif kind.is_classic:
            verdict = classic_net(net, kind, oracle=self.get_oracle(net, cfg))
        elif options.get('alt'):
            parameters['method'] = 'alt'
            verdict = elk_net_alt(net, kind.k, oracle=self.get_oracle(net, cfg))
        else:
            verdict = elk_net(net, kind.k, oracle=self.get_oracle(net, cfg))
        return self.report(net, verdict, parameters=parameters, witnesses=[verdict.witness])

    def check_marking(self, net, kind, parameters, **options):
        if kind.is_classic and kind != PersistenceKind.EE:
            raise CommandError("Marking and step checks support ee and el-k only", returncode=EXIT_ERROR)
        k = kind.k or 0
        m = self.parse_marking(net, options['marking'])
        parameters['marking'] = options['marking']
        steps = [options['step']] if options.get('step') else list(enabled_transitions(net, m))
        if options.get('step'):
            parameters['step'] = options['step']

        failures = [(a, b) for a in steps for b in step_violations(net, m, a, k)]
        if failures:
            witness = Witness(m, None, failures[0])
            reason = '%s postpones %s for more than %d steps' % (failures[0] + (k,))
            verdict = Verdict.violated(witness, reason=reason)
        else:
            verdict = Verdict.holds(reason='persistent at this marking')
        return self.report(net, verdict, parameters=parameters, witnesses=[verdict.witness],
                           details={'violations': ['%s,%s' % pair for pair in failures]})
