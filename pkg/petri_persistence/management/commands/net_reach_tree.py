from petri_persistence.dot import reach_tree_dot
from petri_persistence.omega import format_vector
from petri_persistence.oracle import Verdict
from petri_persistence.statespace import build_k_component
from petri_persistence.management.commands import BaseNetCommand


class Command(BaseNetCommand):
    help = "Builds the first levels of the reachability tree of a net."
    analysis = 'reach-tree'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--depth", dest="depth", type=int, required=True)
        parser.add_argument("--marking", dest="marking", help="root of the tree, the initial marking by default")
        parser.add_argument("--dot", dest="dot", help="write the tree in DOT format to this file")

    def analyse(self, net, cfg, **options):
        root = self.parse_marking(net, options['marking']) if options.get('marking') else net.initial
        tree = build_k_component(net, root, options['depth'])
        if options.get('dot'):
            with open(options['dot'], 'w', encoding='utf-8') as f:
                f.write(reach_tree_dot(tree, net))
        details = {
            'nodes': len(tree),
            'labels': sorted(tree.labels(), key=net.transitions.index),
            'leaves': sorted({format_vector(n.marking) for n in tree.nodes if n.depth == tree.depth}),
        }
        verdict = Verdict.holds(reason='%d nodes up to depth %d' % (len(tree), tree.depth))
        return self.report(net, verdict, parameters={'depth': tree.depth, 'root': format_vector(root)},
                           details=details)
