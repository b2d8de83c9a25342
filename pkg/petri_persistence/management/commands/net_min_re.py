from petri_persistence.omega import format_vector
from petri_persistence.persistence import min_re
from petri_persistence.management.commands import BaseNetCommand


class Command(BaseNetCommand):
    help = "Computes the minimal reachable markings enabling two transitions at once."
    analysis = 'min-re'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("a")
        parser.add_argument("b")

    def analyse(self, net, cfg, **options):
        a, b = options['a'], options['b']
        verdict = min_re(net, a, b, oracle=self.get_oracle(net, cfg))
        witnesses = []
        details = {}
        if verdict.is_holds:
            markings = sorted(verdict.value, key=lambda m: (sum(m), m))
            details['minimal'] = [format_vector(m) for m in markings]
            witnesses = [self.reachable_witness(net, cfg, m, (a, b)) for m in markings]
        return self.report(net, verdict, parameters={'pair': '%s,%s' % (a, b), 'budget': cfg.state_budget},
                           witnesses=witnesses, details=details)
