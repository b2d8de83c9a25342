"""
Graphviz exports. Vertices are written in id order and edges sorted, so the
same graph always gives the same text.
"""
from .omega import format_vector


def _quote(text):
    return '"%s"' % str(text).replace('\\', '\\\\').replace('"', '\\"')


def _marking_label(m):
    return '[%s]' % format_vector(m)


def coverability_dot(graph) -> str:
    lines = ['digraph %s {' % _quote('cover_%s' % graph.net.name),
             '  // places: %s' % ', '.join(graph.net.places)]
    for i, label in enumerate(graph.vertices):
        attrs = 'label=%s' % _quote(_marking_label(label))
        if i == 0:
            attrs += ', peripheries=2'
        lines.append('  v%d [%s];' % (i, attrs))
    for source, t, target in graph.edges:
        lines.append('  v%d -> v%d [label=%s];' % (source, target, _quote(t)))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def reach_tree_dot(tree, net) -> str:
    lines = ['digraph %s {' % _quote('tree_%s_%d' % (net.name, tree.depth)),
             '  // places: %s' % ', '.join(net.places)]
    for node in tree.nodes:
        lines.append('  n%d [label=%s];' % (node.id, _quote(_marking_label(node.marking))))
    for parent, t, child in tree.edges:
        lines.append('  n%d -> n%d [label=%s];' % (parent, child, _quote(t)))
    lines.append('}')
    return '\n'.join(lines) + '\n'
