import sys

from django.core.management.base import BaseCommand, CommandError

from petri_persistence.exceptions import PetriNetError
from petri_persistence.netfile import read_net
from petri_persistence.omega import is_finite, parse_vector
from petri_persistence.oracle import OracleConfig, ReachabilityOracle, Witness
from petri_persistence.reports import EXIT_ERROR, AnalysisReport, stopwatch
from petri_persistence.signals import analysis_finished
from petri_persistence.utils import analysis_context


class BaseNetCommand(BaseCommand):
    """
    Generic command class for analyses of one net. Subclasses implement
    ``analyse(net, cfg, **options)`` and return an ``AnalysisReport``.

    The net comes from ``--file`` or from a stored net (``--stored``). The
    process exits with 0, 1 or 2 for Holds, Violated and Unknown and with 3
    on bad input.
    """

    analysis = None

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.exit_code = 0
        self.oracle = None

    def add_arguments(self, parser):
        super().add_arguments(parser)
        source = parser.add_mutually_exclusive_group()
        source.add_argument("--file", dest="file", help="net file to analyse")
        source.add_argument("--stored", dest="stored", help="name of a stored net to analyse")
        parser.add_argument("--json", dest="json", action="store_true", default=False,
                            help="print the report as JSON")
        parser.add_argument("--budget", dest="budget", type=int,
                            help="number of markings the reachability oracle may enumerate")
        parser.add_argument("--exact", dest="exact", action="store_true", default=None,
                            help="fail instead of answering Unknown")
        parser.add_argument("--save", dest="save", action="store_true", default=False,
                            help="store the report as an analysis record")

    def load_net(self, **options):
        if options.get('file'):
            try:
                return read_net(options['file'])
            except OSError as e:
                raise CommandError("Cannot read %s: %s" % (options['file'], e.strerror), returncode=EXIT_ERROR)
        if options.get('stored'):
            from petri_persistence.models import StoredNet
            try:
                return StoredNet.objects.get(name=options['stored']).as_net()
            except StoredNet.DoesNotExist:
                raise CommandError("No stored net named %r" % options['stored'], returncode=EXIT_ERROR)
        raise CommandError("Give a net with --file or --stored", returncode=EXIT_ERROR)

    def get_config(self, **options):
        budget = options.get('budget')
        if budget is not None and budget <= 0:
            raise CommandError("--budget must be positive", returncode=EXIT_ERROR)
        return OracleConfig.from_settings(state_budget=budget, require_exact=options.get('exact'))

    def get_oracle(self, net, cfg):
        if self.oracle is None or self.oracle.net is not net:
            self.oracle = ReachabilityOracle(net, cfg)
        return self.oracle

    def parse_marking(self, net, text):
        m = parse_vector(text, net.dimension)
        if not is_finite(m):
            raise CommandError("A marking cannot contain ω: %s" % text, returncode=EXIT_ERROR)
        return m

    def reachable_witness(self, net, cfg, m, pair=None):
        found = self.get_oracle(net, cfg).marking_reachable(m)
        return Witness(m, found.witness.word if found.is_holds else None, pair)

    def report(self, net, verdict, **kwargs):
        return AnalysisReport(net.name, self.analysis, verdict, **kwargs)

    def analyse(self, net, cfg, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            net = self.load_net(**options)
            cfg = self.get_config(**options)
            with analysis_context(net.name, self.analysis), stopwatch() as watch:
                report = self.analyse(net, cfg, **options)
        except (PetriNetError, ValueError) as e:
            raise CommandError(str(e), returncode=EXIT_ERROR)
        report.elapsed = watch.elapsed
        if self.oracle is not None:
            report.statistics = self.oracle.statistics()

        analysis_finished.send(sender=self.__class__, report=report, options=options)
        self.exit_code = report.exit_code
        self.stdout.write(report.to_json() if options['json'] else report.as_text())

    def run_from_argv(self, argv):
        super().run_from_argv(argv)
        if self.exit_code:
            sys.exit(self.exit_code)
