from petri_persistence.management.commands import BaseNetCommand


class Command(BaseNetCommand):
    help = "Asks the reachability oracle whether a marking is reachable."
    analysis = 'reachable'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--marking", dest="marking", required=True)

    def analyse(self, net, cfg, **options):
        m = self.parse_marking(net, options['marking'])
        verdict = self.get_oracle(net, cfg).marking_reachable(m)
        return self.report(net, verdict, parameters={'marking': options['marking'], 'budget': cfg.state_budget},
                           witnesses=[verdict.witness])
