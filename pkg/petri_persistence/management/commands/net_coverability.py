from petri_persistence.dot import coverability_dot
from petri_persistence.omega import format_vector, leq, parse_vector
from petri_persistence.oracle import Verdict
from petri_persistence.statespace import build_coverability_graph, liveness_summary
from petri_persistence.management.commands import BaseNetCommand


class Command(BaseNetCommand):
    help = "Builds the coverability graph of a net, optionally asking whether a marking is coverable."
    analysis = 'coverability'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--dot", dest="dot", help="write the graph in DOT format to this file")
        parser.add_argument("--cover", dest="cover", help="marking to cover, e.g. 0,3")

    def analyse(self, net, cfg, **options):
        graph = build_coverability_graph(net)
        live = liveness_summary(net, graph)
        details = {
            'vertices': [format_vector(v) for v in graph.vertices],
            'edges': ['%d -%s-> %d' % edge for edge in graph.edges],
            'bounded': graph.is_bounded,
            'unbounded_places': list(graph.unbounded_places()),
            'dead_transitions': [t for t in net.transitions if not live[t]],
        }
        if options.get('dot'):
            with open(options['dot'], 'w', encoding='utf-8') as f:
                f.write(coverability_dot(graph))

        parameters = {'cover': options.get('cover')}
        if options.get('cover'):
            target = parse_vector(options['cover'], net.dimension)
            found = graph.first_path(lambda v: leq(target, v))
            if found is None:
                verdict = Verdict.violated(reason='[%s] is not coverable' % format_vector(target))
            else:
                # a path along graph edges; it replays only up to the ω entries
                vertex, path = found
                details['covering_vertex'] = format_vector(vertex)
                details['covering_path'] = list(path)
                verdict = Verdict.holds(reason='covered by [%s]' % format_vector(vertex))
        else:
            verdict = Verdict.holds(reason='%d vertices, %d edges' % (len(graph.vertices), len(graph.edges)))
        return self.report(net, verdict, parameters=parameters, details=details)
