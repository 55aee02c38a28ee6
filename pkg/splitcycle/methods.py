"""
the registry of collective choice rules

Every rule maps a :class:`~splitcycle.ballots.Profile` to an asymmetric
:class:`DefeatRelation`. Rules register themselves with the :func:`vccr`
decorator which also records what they depend on (see :class:`VccrDescriptor`).
"""

import itertools

import logbook
import networkx as nx
from werkzeug.datastructures import ImmutableDict

from .exceptions import UnknownMethod, EmptyChoice, ConfigurationError, ProfileError
from .ballots import Profile, restrict, enumerate_profiles
from .graphs import (margin_graph, simple_cycles, cycles_through_edge, splitting_number,
                     MarginGraph)

__all__ = ['DefeatRelation', 'VccrDescriptor', 'METHOD_IDS', 'SPLIT_CYCLE_FORMULATIONS',
           'registry', 'descriptor', 'defeat', 'scores', 'split_cycle',
           'split_cycle_threshold_of', 'undefeated', 'induced_winners', 'global_choice',
           'local_choice', 'tabulate', 'compare_resoluteness', 'ResolutenessVerdict']

log = logbook.Logger("splitcycle.methods")

METHOD_IDS = (
    'simple_majority', 'left_covering', 'right_covering', 'fishburn', 'copeland',
    'borda', 'plurality', 'hare', 'weighted_covering', 'beat_path', 'split_cycle',
    'pareto', 'positive_negative', 'minimax', 'null', 'global_split',
    'pareto_separation',
)

SPLIT_CYCLE_FORMULATIONS = ('threshold', 'all_cycles', 'edge_cycles', 'widest_path')


class DefeatRelation(object):
    """an asymmetric relation over a candidate set

    :param pairs: ordered ``(winner, loser)`` pairs
    :param universe: the candidates the relation ranges over
    """

    def __init__(self, pairs, universe):
        self.universe = frozenset(universe)
        self.pairs = frozenset((x, y) for x, y in pairs)
        for x, y in self.pairs:
            if x not in self.universe or y not in self.universe:
                raise ProfileError("defeat pair (%s, %s) outside of the candidates" %(x, y))
            if x == y or (y, x) in self.pairs:
                raise ProfileError("defeat relation is not asymmetric at (%s, %s)" %(x, y))

    def defeats(self, x, y):
        return (x, y) in self.pairs

    def __contains__(self, pair):
        return tuple(pair) in self.pairs

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __len__(self):
        return len(self.pairs)

    def __eq__(self, other):
        return (isinstance(other, DefeatRelation) and self.pairs == other.pairs
                and self.universe == other.universe)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.pairs, self.universe))

    def __repr__(self):
        return "<DefeatRelation %s>" %", ".join("%s>%s" %p for p in self)

    def issubset(self, other):
        return self.pairs <= other.pairs

    def undefeated(self):
        """the candidates nobody defeats"""
        beaten = set(y for x, y in self.pairs)
        return frozenset(c for c in self.universe if c not in beaten)

    def undefeated_within(self, Y):
        """members of ``Y`` not defeated by another member of ``Y``"""
        Y = frozenset(Y)
        return frozenset(y for y in Y if not any((z, y) in self.pairs for z in Y))

    def restricted_to(self, Y):
        Y = frozenset(Y)
        return DefeatRelation([(x, y) for x, y in self.pairs if x in Y and y in Y], Y)

    def is_acyclic(self):
        g = nx.DiGraph()
        g.add_nodes_from(self.universe)
        g.add_edges_from(self.pairs)
        return nx.is_directed_acyclic_graph(g)

    def is_strict_weak_order(self):
        """asymmetric and negatively transitive"""
        for (x, y), z in itertools.product(self.pairs, self.universe):
            if (x, z) not in self.pairs and (z, y) not in self.pairs:
                return False
        return True

    def to_dict(self):
        return {
            'candidates': sorted(self.universe),
            'defeats': [{'from': x, 'to': y} for x, y in self],
            'winners': sorted(self.undefeated()),
        }


class VccrDescriptor(object):
    """registry entry describing one rule

    :param id: the method token
    :param function: ``function(P) -> DefeatRelation``
    :param majority_based: output depends only on the majority graph
    :param qualitative_margin_based: output depends only on the qualitative margin graph
    :param margin_based: output depends only on the margin graph
    :param acyclic_claimed: the rule never produces a defeat cycle
    :param vswf: the output is always a strict weak order (score based rules)
    :param score: for score based rules, ``score(P) -> {candidate: number}``
    """

    def __init__(self, id, function, majority_based=False, qualitative_margin_based=False,
                 margin_based=False, acyclic_claimed=False, vswf=False, score=None):
        if majority_based and not qualitative_margin_based:
            raise ConfigurationError("%s: majority based rules are qualitative margin based" %id)
        if qualitative_margin_based and not margin_based:
            raise ConfigurationError("%s: qualitative margin based rules are margin based" %id)
        self.id = id
        self.function = function
        self.majority_based = majority_based
        self.qualitative_margin_based = qualitative_margin_based
        self.margin_based = margin_based
        self.acyclic_claimed = acyclic_claimed
        self.vswf = vswf
        self.score = score
        self.description = (function.__doc__ or "").strip().split("\n")[0]

    def to_dict(self):
        return {
            'id': self.id,
            'majority_based': self.majority_based,
            'qualitative_margin_based': self.qualitative_margin_based,
            'margin_based': self.margin_based,
            'acyclic_claimed': self.acyclic_claimed,
            'vswf': self.vswf,
            'description': self.description,
        }

    def __repr__(self):
        return "<VccrDescriptor %s>" %self.id


_registry = {}

def vccr(id, **flags):
    """register the decorated function as the rule ``id``"""
    def decorator(function):
        _registry[id] = VccrDescriptor(id, function, **flags)
        return function
    return decorator


def registry():
    """a read-only mapping ``method id -> VccrDescriptor``"""
    return ImmutableDict(_registry)


def descriptor(m):
    try:
        return _registry[m]
    except KeyError:
        raise UnknownMethod("unknown method %r, use one of %s" %(m, ", ".join(METHOD_IDS)))


def defeat(m, P):
    """the defeat relation of rule ``m`` on profile ``P``"""
    return descriptor(m).function(P)


def scores(m, P):
    """the score map of a score based rule"""
    d = descriptor(m)
    if d.score is None:
        raise UnknownMethod("%s is not a score based method" %m)
    return d.score(P)


def undefeated(D):
    return D.undefeated()


def induced_winners(m, P):
    """the voting method rationalized by ``m``: its undefeated candidates"""
    return defeat(m, P).undefeated()


def tabulate(m, P):
    """the defeat output of ``m`` on ``P`` as a JSON-ready dict. ``margins``
    holds ``[x, y, margin(x, y)]`` for every pair with ``x < y``."""
    D = defeat(m, P)
    out = D.to_dict()
    out['method'] = m
    out['margins'] = [[x, y, P.margin(x, y)]
                      for x, y in itertools.combinations(P.sorted_candidates, 2)]
    return out


####
#### helpers
####

def _pairs(P):
    return itertools.permutations(P.sorted_candidates, 2)

def _by_score(P, score):
    """the strict order induced by a score map"""
    return DefeatRelation([(x, y) for x, y in _pairs(P) if score[x] > score[y]], P.candidates)

def _majority(P, x, y):
    return P.margin(x, y) > 0


####
#### majority graph based rules
####

@vccr('simple_majority', majority_based=True, qualitative_margin_based=True, margin_based=True)
def simple_majority(P):
    """x defeats y if more voters rank x above y than y above x"""
    return DefeatRelation([(x, y) for x, y in _pairs(P) if _majority(P, x, y)], P.candidates)


def _left_covers(P, x, y):
    return _majority(P, x, y) and all(
        _majority(P, z, y) for z in P.sorted_candidates if z != x and _majority(P, z, x))


@vccr('left_covering', majority_based=True, qualitative_margin_based=True, margin_based=True,
      acyclic_claimed=True)
def left_covering(P):
    """x defeats y if x beats y and everyone beating x also beats y"""
    return DefeatRelation([(x, y) for x, y in _pairs(P) if _left_covers(P, x, y)], P.candidates)


@vccr('right_covering', majority_based=True, qualitative_margin_based=True, margin_based=True,
      acyclic_claimed=True)
def right_covering(P):
    """x defeats y if x beats y and x beats everyone y beats"""
    def covers(x, y):
        return _majority(P, x, y) and all(
            _majority(P, x, z) for z in P.sorted_candidates if z != y and _majority(P, y, z))
    return DefeatRelation([(x, y) for x, y in _pairs(P) if covers(x, y)], P.candidates)


@vccr('fishburn', majority_based=True, qualitative_margin_based=True, margin_based=True,
      acyclic_claimed=True)
def fishburn(P):
    """x defeats y if x left-covers y and not the other way round"""
    return DefeatRelation([(x, y) for x, y in _pairs(P)
                           if _left_covers(P, x, y) and not _left_covers(P, y, x)], P.candidates)


def copeland_scores(P):
    score = dict.fromkeys(P.candidates, 0)
    for x, y in _pairs(P):
        if _majority(P, x, y):
            score[x] += 1
            score[y] -= 1
    return score


@vccr('copeland', majority_based=True, qualitative_margin_based=True, margin_based=True,
      acyclic_claimed=True, vswf=True, score=copeland_scores)
def copeland(P):
    """x defeats y if x has more majority wins minus losses"""
    return _by_score(P, copeland_scores(P))


####
#### positional and elimination rules
####

def borda_scores(P):
    """k points for every candidate ranked below, i.e. 0..m-1 points"""
    score = dict.fromkeys(P.candidates, 0)
    last = len(P.candidates) - 1
    for ballot in P.ballots:
        for i, c in enumerate(ballot):
            score[c] += last - i
    return score


@vccr('borda', margin_based=True, acyclic_claimed=True, vswf=True, score=borda_scores)
def borda(P):
    """x defeats y if x has the greater Borda score"""
    return _by_score(P, borda_scores(P))


def plurality_scores(P, candidates=None):
    """number of voters ranking a candidate first among ``candidates``"""
    candidates = P.candidates if candidates is None else candidates
    score = dict.fromkeys(candidates, 0)
    for ballot in P.ballots:
        score[next(c for c in ballot if c in candidates)] += 1
    return score


@vccr('plurality', acyclic_claimed=True, vswf=True, score=plurality_scores)
def plurality(P):
    """x defeats y if more voters rank x first"""
    return _by_score(P, plurality_scores(P))


def hare_scores(P):
    """number of elimination rounds a candidate survives

    Each round eliminates every candidate with the lowest plurality score among
    the remaining ones; the rounds end when all remaining candidates tie.
    """
    score = dict.fromkeys(P.candidates, 0)
    remaining = P.candidates
    while True:
        counts = plurality_scores(P, remaining)
        low = min(counts.values())
        if all(v == low for v in counts.values()):
            break
        remaining = frozenset(c for c in remaining if counts[c] > low)
        for c in remaining:
            score[c] += 1
    return score


@vccr('hare', acyclic_claimed=True, vswf=True, score=hare_scores)
def hare(P):
    """x defeats y if x survives more elimination rounds"""
    return _by_score(P, hare_scores(P))


def positive_negative_scores(P):
    score = dict.fromkeys(P.candidates, 0)
    for ballot in P.ballots:
        score[ballot.top] += 1
        score[ballot.bottom] -= 1
    return score


@vccr('positive_negative', acyclic_claimed=True, vswf=True, score=positive_negative_scores)
def positive_negative(P):
    """one point per first place, minus one per last place"""
    return _by_score(P, positive_negative_scores(P))


def minimax_scores(P):
    """minus the largest majority loss, 0 for candidates nobody beats"""
    score = {}
    for x in P.sorted_candidates:
        losses = [P.margin(z, x) for z in P.sorted_candidates if z != x]
        score[x] = -max([0] + losses)
    return score


@vccr('minimax', qualitative_margin_based=True, margin_based=True, acyclic_claimed=True,
      vswf=True, score=minimax_scores)
def minimax(P):
    """x defeats y if x's largest majority loss is smaller than y's"""
    return _by_score(P, minimax_scores(P))


####
#### margin graph rules
####

@vccr('weighted_covering', qualitative_margin_based=True, margin_based=True, acyclic_claimed=True)
def weighted_covering(P):
    """x defeats y if x beats y and x does at least as well as y against everyone"""
    def margin0(a, b):
        return 0 if a == b else P.margin(a, b)
    return DefeatRelation(
        [(x, y) for x, y in _pairs(P)
         if _majority(P, x, y) and all(margin0(x, z) >= margin0(y, z) for z in P.sorted_candidates)],
        P.candidates)


@vccr('beat_path', qualitative_margin_based=True, margin_based=True, acyclic_claimed=True)
def beat_path(P):
    """x defeats y if the strongest path from x to y beats the strongest path back"""
    G = margin_graph(P)
    order, s = G._widest
    i = dict((c, k) for k, c in enumerate(order))
    return DefeatRelation([(x, y) for x, y in _pairs(P) if s[i[x], i[y]] > s[i[y], i[x]]],
                          P.candidates)


####
#### split cycle
####

def _threshold_table(G):
    """for every edge ``(x, y)`` the smallest ``n`` such that no majority cycle
    containing ``x`` and ``y`` has all margins above ``n``"""
    levels = sorted(set([0]) | set(G.edges.values()))
    open_edges = set(G.edges)
    table = {}
    for t in levels:
        if not open_edges:
            break
        strong = MarginGraph(G.nodes, dict((e, w) for e, w in G.edges.items() if w > t))
        cycles = simple_cycles(strong)
        for x, y in sorted(open_edges):
            if not any(x in c and y in c for c in cycles):
                table[(x, y)] = t
                open_edges.discard((x, y))
    return table


def split_cycle_threshold_of(P, x, y):
    """the smallest n such that no majority cycle through ``x`` and ``y``
    has every margin above n"""
    G = margin_graph(P)
    if G.has_edge(x, y):
        return _threshold_table(G)[(x, y)]
    if G.has_edge(y, x):
        return _threshold_table(G)[(y, x)]
    return 0


def _split_cycle_pairs(G, formulation):
    if formulation == 'threshold':
        table = _threshold_table(G)
        return [e for e, w in G.edges.items() if w > table[e]]
    if formulation == 'all_cycles':
        cycles = [(c, splitting_number(G, c)) for c in simple_cycles(G)]
        return [(x, y) for (x, y), w in G.edges.items()
                if all(w > s for c, s in cycles if x in c and y in c)]
    if formulation == 'edge_cycles':
        return [(x, y) for (x, y), w in G.edges.items()
                if all(w > splitting_number(G, c) for c in cycles_through_edge(G, x, y))]
    if formulation == 'widest_path':
        order, s = G._widest
        i = dict((c, k) for k, c in enumerate(order))
        return [(x, y) for (x, y), w in G.edges.items() if s[i[y], i[x]] < w]
    raise UnknownMethod("unknown split cycle formulation %r, use one of %s"
                        %(formulation, ", ".join(SPLIT_CYCLE_FORMULATIONS)))


def split_cycle(P, formulation='widest_path'):
    """Split Cycle: x defeats y if the margin of x over y is larger than the
    splitting number of every majority cycle containing both

    :param P: the profile
    :param formulation: one of ``threshold``, ``all_cycles``, ``edge_cycles``
        or ``widest_path``. They compute the same relation.
    """
    return DefeatRelation(_split_cycle_pairs(margin_graph(P), formulation), P.candidates)


@vccr('split_cycle', qualitative_margin_based=True, margin_based=True, acyclic_claimed=True)
def _split_cycle(P):
    """x defeats y if its margin beats the splitting number of every cycle containing both"""
    return split_cycle(P)


@vccr('global_split', qualitative_margin_based=True, margin_based=True, acyclic_claimed=True)
def global_split(P):
    """x defeats y if its margin beats the splitting number of every majority cycle"""
    G = margin_graph(P)
    top = max([0] + [splitting_number(G, c) for c in simple_cycles(G)])
    return DefeatRelation([e for e, w in G.edges.items() if w > top], P.candidates)


####
#### unanimity based rules
####

def _unanimous(P, x, y):
    return P.margin(x, y) == P.num_voters


@vccr('pareto', acyclic_claimed=True)
def pareto(P):
    """x defeats y if every voter ranks x above y"""
    return DefeatRelation([(x, y) for x, y in _pairs(P) if _unanimous(P, x, y)], P.candidates)


@vccr('pareto_separation', acyclic_claimed=True)
def pareto_separation(P):
    """x defeats y if every voter ranks x above y and some z is beaten by x but not by y"""
    def separated(x, y):
        return any(_majority(P, x, z) and not _majority(P, y, z)
                   for z in P.sorted_candidates if z not in (x, y))
    return DefeatRelation([(x, y) for x, y in _pairs(P) if _unanimous(P, x, y) and separated(x, y)],
                          P.candidates)


@vccr('null', majority_based=True, qualitative_margin_based=True, margin_based=True,
      acyclic_claimed=True)
def null(P):
    """nobody defeats anybody"""
    return DefeatRelation([], P.candidates)


####
#### choice functions
####

def _check_subset(P, Y):
    Y = frozenset(Y)
    if not Y:
        raise EmptyChoice("choice over an empty candidate set")
    if not Y <= P.candidates:
        raise ProfileError("%s are not candidates of the profile" %sorted(Y - P.candidates))
    return Y


def global_choice(m, P, Y):
    """members of ``Y`` undefeated by members of ``Y`` in the full profile"""
    Y = _check_subset(P, Y)
    chosen = defeat(m, P).undefeated_within(Y)
    if not chosen:
        raise EmptyChoice("%s chooses nothing from %s" %(m, sorted(Y)))
    return chosen


def local_choice(m, P, Y):
    """the undefeated candidates after restricting the profile to ``Y``"""
    Y = _check_subset(P, Y)
    chosen = defeat(m, restrict(P, Y)).undefeated()
    if not chosen:
        raise EmptyChoice("%s chooses nothing from %s" %(m, sorted(Y)))
    return chosen


####
#### resoluteness
####

class ResolutenessVerdict(object):
    """outcome of :func:`compare_resoluteness`

    ``f_only`` is the first ``(profile, pair)`` where ``f`` has a defeat ``g``
    lacks, ``g_only`` the other way round; either may be ``None``.
    """

    def __init__(self, f, g, f_only, g_only, scanned):
        self.f = f
        self.g = g
        self.f_only = f_only
        self.g_only = g_only
        self.scanned = scanned

    @property
    def verdict(self):
        if self.f_only is None and self.g_only is None:
            return 'equal'
        if self.f_only is None:
            return 'g_at_least_f'
        if self.g_only is None:
            return 'f_at_least_g'
        return 'incomparable'

    def to_dict(self):
        def witness(w):
            if w is None:
                return None
            P, (x, y) = w
            return {'profile': P.to_vote_text(), 'pair': [x, y]}
        return {
            'f': self.f, 'g': self.g, 'verdict': self.verdict, 'scanned': self.scanned,
            'f_only': witness(self.f_only), 'g_only': witness(self.g_only),
        }


def compare_resoluteness(f, g, D, budget=10**7):
    """compare the defeat relations of ``f`` and ``g`` on every profile of ``D``

    :param D: a :class:`~splitcycle.ballots.ProfileDomain` or an iterable of profiles
    """
    profiles = D if not hasattr(D, 'mode') else enumerate_profiles(D, budget)
    f_only = g_only = None
    scanned = 0
    for P in profiles:
        scanned += 1
        df, dg = defeat(f, P), defeat(g, P)
        if f_only is None:
            extra = sorted(df.pairs - dg.pairs)
            if extra:
                f_only = (P, extra[0])
        if g_only is None:
            extra = sorted(dg.pairs - df.pairs)
            if extra:
                g_only = (P, extra[0])
        if f_only is not None and g_only is not None:
            break
    log.info("compared {0} with {1} on {2} profiles", f, g, scanned)
    return ResolutenessVerdict(f, g, f_only, g_only, scanned)
