"""
weighted majority graphs and the graph algorithms the rules need

Cycles are enumerated with networkx (Johnson's algorithm), widest paths with a
Floyd-Warshall style maximin pass over a numpy matrix.
"""

import jinja2
import numpy as np
import networkx as nx
from werkzeug.utils import cached_property

from .exceptions import GraphError
from .ballots import Ballot, Profile, check_candidate

__all__ = ['MarginGraph', 'MajorityGraph', 'QualitativeMarginGraph', 'Cycle',
           'margin_graph', 'majority_graph', 'qualitative_view', 'simple_cycles',
           'cycles_through_edge', 'splitting_number', 'widest_path_strength',
           'widest_path_matrix', 'mcgarvey', 'to_dot']


class MarginGraph(object):
    """an asymmetric directed graph with positive integer edge weights

    :param nodes: the candidates
    :param edges: a mapping ``(x, y) -> weight``
    """

    def __init__(self, nodes, edges):
        self.nodes = frozenset(check_candidate(n) for n in nodes)
        edges = dict(edges)
        self.edges = {}
        for (x, y), w in edges.items():
            if x not in self.nodes or y not in self.nodes:
                raise GraphError("edge %s->%s has an endpoint outside the graph" %(x, y))
            if x == y:
                raise GraphError("self loop on %s" %x)
            if isinstance(w, bool) or int(w) != w or w <= 0:
                raise GraphError("edge %s->%s needs a positive integer weight, got %r" %(x, y, w))
            if (y, x) in edges:
                raise GraphError("edges %s->%s and %s->%s make the graph symmetric" %(x, y, y, x))
            self.edges[(x, y)] = int(w)

    @cached_property
    def sorted_nodes(self):
        return tuple(sorted(self.nodes))

    def weight(self, x, y):
        """weight of the edge ``x -> y``, 0 if there is none"""
        return self.edges.get((x, y), 0)

    def margin(self, x, y):
        """the signed margin of ``x`` over ``y``"""
        return self.weight(x, y) - self.weight(y, x)

    def successors(self, x):
        return sorted(y for (a, y) in self.edges if a == x)

    def has_edge(self, x, y):
        return (x, y) in self.edges

    def scaled(self, k):
        """the graph with every weight multiplied by ``k``"""
        return MarginGraph(self.nodes, dict((e, w * k) for e, w in self.edges.items()))

    def majority(self):
        return MajorityGraph(self.nodes, self.edges)

    def to_networkx(self):
        """a :class:`networkx.DiGraph` with a ``weight`` attribute on every edge"""
        g = nx.DiGraph()
        g.add_nodes_from(self.sorted_nodes)
        for (x, y), w in sorted(self.edges.items()):
            g.add_edge(x, y, weight=w)
        return g

    def to_json(self):
        return {
            'nodes': list(self.sorted_nodes),
            'edges': [{'from': x, 'to': y, 'weight': w} for (x, y), w in sorted(self.edges.items())],
        }

    to_dict = to_json

    @classmethod
    def from_json(cls, data):
        """build a graph from the ``{"nodes": [...], "edges": [...]}`` form"""
        try:
            edges = dict(((e['from'], e['to']), e['weight']) for e in data['edges'])
            return cls(data['nodes'], edges)
        except (KeyError, TypeError) as e:
            raise GraphError("malformed margin graph JSON: %s" %e)

    @cached_property
    def _widest(self):
        return widest_path_matrix(self)

    def __eq__(self, other):
        return isinstance(other, MarginGraph) and self.nodes == other.nodes and self.edges == other.edges

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.nodes, frozenset(self.edges.items())))

    def __repr__(self):
        return "<MarginGraph %s>" %", ".join("%s->%s:%s" %(x, y, w) for (x, y), w in sorted(self.edges.items()))


class MajorityGraph(object):
    """the unweighted majority relation"""

    def __init__(self, nodes, edges):
        self.nodes = frozenset(nodes)
        self.edges = frozenset(edges)
        for x, y in self.edges:
            if (y, x) in self.edges:
                raise GraphError("majority graph must be asymmetric (%s, %s)" %(x, y))

    def __eq__(self, other):
        return isinstance(other, MajorityGraph) and self.nodes == other.nodes and self.edges == other.edges

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.nodes, self.edges))


class QualitativeMarginGraph(object):
    """the majority graph plus a strict weak order on its edges

    :param majority: a :class:`MajorityGraph`
    :param tiers: a sequence of edge sets, weakest edges first
    """

    def __init__(self, majority, tiers):
        self.majority = majority
        self.tiers = tuple(frozenset(t) for t in tiers)
        ranked = [e for t in self.tiers for e in t]
        if len(ranked) != len(set(ranked)) or set(ranked) != set(majority.edges):
            raise GraphError("tiers must rank exactly the majority edges")

    def __eq__(self, other):
        return (isinstance(other, QualitativeMarginGraph) and self.majority == other.majority
                and self.tiers == other.tiers)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.majority, self.tiers))


class Cycle(object):
    """a simple cycle ``x1, ..., xn, x1``, stored rotated so that it starts at
    its lexicographically least node

    :param nodes: either the closed form (first node repeated at the end) or
        the open node sequence
    """

    def __init__(self, nodes):
        nodes = list(nodes)
        if len(nodes) > 1 and nodes[0] == nodes[-1]:
            nodes = nodes[:-1]
        if len(set(nodes)) != len(nodes):
            raise GraphError("cycle %s repeats a node" %(nodes,))
        if len(nodes) < 3:
            raise GraphError("a cycle needs at least three distinct nodes")
        i = nodes.index(min(nodes))
        self.open_nodes = tuple(nodes[i:] + nodes[:i])

    @property
    def nodes(self):
        """the closed node sequence"""
        return self.open_nodes + (self.open_nodes[0],)

    def edges(self):
        return list(zip(self.nodes, self.nodes[1:]))

    def __contains__(self, node):
        return node in self.open_nodes

    def __len__(self):
        return len(self.open_nodes)

    def __eq__(self, other):
        return isinstance(other, Cycle) and self.open_nodes == other.open_nodes

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return (len(self), self.open_nodes) < (len(other), other.open_nodes)

    def __hash__(self):
        return hash(self.open_nodes)

    def __repr__(self):
        return "<Cycle %s>" %",".join(self.nodes)


####
#### constructing graphs from profiles
####

def margin_graph(P):
    """the margin graph of a profile: an edge ``x -> y`` for every positive margin"""
    m = P.margin_matrix()
    order = P.sorted_candidates
    edges = {}
    for i, j in zip(*np.nonzero(m > 0)):
        edges[(order[i], order[j])] = int(m[i, j])
    return MarginGraph(P.candidates, edges)


def majority_graph(P):
    return margin_graph(P).majority()


def qualitative_view(G):
    """group the edges of ``G`` into tiers of equal weight, weakest first"""
    tiers = {}
    for e, w in G.edges.items():
        tiers.setdefault(w, set()).add(e)
    return QualitativeMarginGraph(G.majority(), [tiers[w] for w in sorted(tiers)])


####
#### cycles and paths
####

def simple_cycles(G):
    """every simple cycle of ``G``, each once, sorted by length then nodes"""
    return sorted(Cycle(c) for c in nx.simple_cycles(G.to_networkx()))


def cycles_through_edge(G, x, y):
    """all cycles of the form ``x -> y -> ... -> x``"""
    if not G.has_edge(x, y):
        return []
    g = G.to_networkx()
    return sorted(Cycle([x] + path) for path in nx.all_simple_paths(g, y, x) if len(path) >= 2)


def splitting_number(G, cycle):
    """the smallest weight on the cycle"""
    if not isinstance(cycle, Cycle):
        cycle = Cycle(cycle)
    weights = []
    for a, b in cycle.edges():
        if not G.has_edge(a, b):
            raise GraphError("%r is not a cycle of the graph, %s->%s is missing" %(cycle, a, b))
        weights.append(G.weight(a, b))
    return min(weights)


def widest_path_matrix(G):
    """all-pairs strongest path strengths

    :return: ``(order, S)`` where ``order`` is the sorted node tuple and
        ``S[i, j]`` the largest bottleneck weight over paths from ``order[i]``
        to ``order[j]``, 0 if there is no path. The diagonal is 0.
    """
    order = G.sorted_nodes
    index = dict((c, i) for i, c in enumerate(order))
    n = len(order)
    s = np.zeros((n, n), dtype=np.int64)
    for (x, y), w in G.edges.items():
        s[index[x], index[y]] = w
    for k in range(n):
        s = np.maximum(s, np.minimum(s[:, k:k+1], s[k:k+1, :]))
    np.fill_diagonal(s, 0)
    return order, s


def widest_path_strength(G, x, y):
    """strength of the strongest path from ``x`` to ``y``; 0 without a path"""
    for c in (x, y):
        if c not in G.nodes:
            raise GraphError("unknown node %r" %(c,))
    if x == y:
        raise GraphError("widest path needs two distinct nodes")
    order, s = G._widest
    return int(s[order.index(x), order.index(y)])


####
#### synthesis
####

def mcgarvey(G):
    """build a profile whose margin graph is exactly ``G``

    For an edge ``a -> b`` of weight ``2k`` we add ``k`` pairs of ballots
    ``a > b > rest`` and ``reversed(rest) > a > b`` with ``rest`` in lexicographic
    order. Every other pair cancels within one such pair.
    """
    if len(G.nodes) < 2:
        raise GraphError("McGarvey synthesis needs at least two nodes")
    for (a, b), w in G.edges.items():
        if w % 2:
            raise GraphError("edge %s->%s has odd weight %s" %(a, b, w))
    ballots = []
    for (a, b), w in sorted(G.edges.items()):
        rest = sorted(G.nodes - set([a, b]))
        for _ in range(w // 2):
            ballots.append(Ballot([a, b] + rest))
            ballots.append(Ballot(list(reversed(rest)) + [a, b]))
    if not ballots:
        # all margins zero, a single reversed pair keeps the profile non-empty
        b = Ballot(G.sorted_nodes)
        ballots = [b, b.reversed()]
    return Profile.from_ballots(ballots, G.nodes)


####
#### export
####

_jinja_env = None

def default_jinja_env():
    """the template environment used when no engine provides one"""
    global _jinja_env
    if _jinja_env is None:
        _jinja_env = jinja2.Environment(
            loader=jinja2.PackageLoader("splitcycle", "templates"),
            keep_trailing_newline=True, trim_blocks=True, lstrip_blocks=True)
    return _jinja_env


def to_dot(G, defeat=None, env=None, name="margins"):
    """render ``G`` as a DOT digraph

    :param G: the :class:`MarginGraph`
    :param defeat: an optional defeat relation; its pairs are drawn bold red,
        pairs without a margin edge as dashed red edges
    :param env: a jinja2 environment, defaults to :func:`default_jinja_env`
    """
    pairs = set()
    if defeat is not None:
        pairs = set(defeat)
        for x, y in pairs:
            if x not in G.nodes or y not in G.nodes:
                raise GraphError("defeat pair %s->%s is outside the graph" %(x, y))
    edges = [dict(source=x, target=y, weight=w, defeat=(x, y) in pairs)
             for (x, y), w in sorted(G.edges.items())]
    extra = [dict(source=x, target=y) for (x, y) in sorted(pairs) if not G.has_edge(x, y)]
    env = env or default_jinja_env()
    return env.get_template("margin_graph.dot").render(
        name=name, nodes=G.sorted_nodes, edges=edges, extra=extra)
