from petri_persistence.persistence import classify, hierarchy
from petri_persistence.management.commands import BaseNetCommand


class Command(BaseNetCommand):
    help = "Finds the least k for which a net is e/l-k-persistent."
    analysis = 'classify'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--hierarchy", dest="hierarchy", action="store_true", default=False,
                            help="also decide e/e, l/l and e/l persistence")

    def analyse(self, net, cfg, **options):
        oracle = self.get_oracle(net, cfg)
        details = {}
        if options.get('hierarchy'):
            levels = hierarchy(net, oracle=oracle)
            classification = levels.classification
            for name in ('ee', 'll', 'el'):
                details[name] = getattr(levels, name).status.value
        else:
            classification = classify(net, oracle=oracle)

        details['kind'] = classification.kind
        details['k'] = classification.k
        details['pairs'] = ['%s,%s: %s%s' % (p.pair + (p.verdict.status.value,
                                                       '' if p.k_ab is None else ' k=%d' % p.k_ab))
                            for p in classification.pairs]
        verdict = classification.verdict
        return self.report(net, verdict, parameters={'budget': cfg.state_budget},
                           witnesses=[classification.witness], details=details)
