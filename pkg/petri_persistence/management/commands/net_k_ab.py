from petri_persistence.persistence import k_ab
from petri_persistence.management.commands import BaseNetCommand


class Command(BaseNetCommand):
    help = "Computes for how many steps a transition can postpone another one."
    analysis = 'k-ab'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("a")
        parser.add_argument("b")

    def analyse(self, net, cfg, **options):
        a, b = options['a'], options['b']
        verdict = k_ab(net, a, b, oracle=self.get_oracle(net, cfg))
        details = {'k_ab': verdict.value} if verdict.is_holds else {}
        return self.report(net, verdict, parameters={'pair': '%s,%s' % (a, b), 'budget': cfg.state_budget},
                           witnesses=[verdict.witness], details=details)
