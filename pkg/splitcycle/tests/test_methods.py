from splitcycle.methods import (DefeatRelation, VccrDescriptor, METHOD_IDS,
                                SPLIT_CYCLE_FORMULATIONS, registry, descriptor, defeat, scores,
                                split_cycle, split_cycle_threshold_of, undefeated,
                                induced_winners, tabulate, global_choice, local_choice,
                                compare_resoluteness)
from splitcycle.ballots import (Ballot, Profile, ProfileDomain, enumerate_profiles, restrict,
                                add_reversed_pair, condorcet_winner, replicate)
from splitcycle.graphs import margin_graph, mcgarvey
from splitcycle.helpers import powerset
from splitcycle.exceptions import (UnknownMethod, EmptyChoice, ProfileError, ConfigurationError)
import itertools
import pytest


def pairs(*items):
    return frozenset(tuple(p) for p in items)

SMALL = ProfileDomain("abc", (1, 3))


####
#### registry
####

def test_registry_is_complete():
    assert set(registry()) == set(METHOD_IDS)
    for m in METHOD_IDS:
        assert descriptor(m).id == m

def test_registry_is_read_only():
    with pytest.raises(TypeError):
        registry()['mine'] = None

def test_unknown_method(q):
    with pytest.raises(UnknownMethod):
        defeat("dodgson", q)
    with pytest.raises(KeyError):
        descriptor("dodgson")

def test_descriptor_hierarchy():
    with pytest.raises(ConfigurationError):
        VccrDescriptor("broken", lambda P: None, qualitative_margin_based=True)
    with pytest.raises(ConfigurationError):
        VccrDescriptor("broken", lambda P: None, majority_based=True, margin_based=True)
    for d in registry().values():
        if d.majority_based:
            assert d.qualitative_margin_based
        if d.qualitative_margin_based:
            assert d.margin_based

def test_descriptor_flags():
    assert descriptor("split_cycle").qualitative_margin_based
    assert not descriptor("split_cycle").majority_based
    assert descriptor("copeland").majority_based
    assert not descriptor("borda").qualitative_margin_based
    assert descriptor("borda").margin_based
    assert not descriptor("plurality").margin_based
    assert descriptor("hare").vswf
    assert descriptor("split_cycle").to_dict()['description']


####
#### defeat relations
####

def test_defeat_relation_invariants():
    with pytest.raises(ProfileError):
        DefeatRelation([("a", "b"), ("b", "a")], "ab")
    with pytest.raises(ProfileError):
        DefeatRelation([("a", "z")], "ab")
    with pytest.raises(ProfileError):
        DefeatRelation([("a", "a")], "ab")

def test_defeat_relation_helpers():
    D = DefeatRelation([("a", "b"), ("b", "c")], "abc")
    assert D.undefeated() == frozenset("a")
    assert D.undefeated_within("bc") == frozenset("b")
    assert D.restricted_to("bc").pairs == pairs("bc")
    assert D.is_acyclic()
    assert not D.is_strict_weak_order()
    assert DefeatRelation([("a", "b"), ("b", "c"), ("a", "c")], "abc").is_strict_weak_order()
    assert not DefeatRelation([("a", "b"), ("b", "c"), ("c", "a")], "abc").is_acyclic()
    assert undefeated(DefeatRelation([], "abc")) == frozenset("abc")
    assert list(D) == [("a", "b"), ("b", "c")]


####
#### split cycle
####

FOUR_CANDIDATE_DEFEATS = pairs("ab", "bc", "ad", "bd", "cd")

@pytest.mark.parametrize("formulation", SPLIT_CYCLE_FORMULATIONS)
def test_split_cycle_four_candidates(four_candidates, formulation):
    D = split_cycle(four_candidates, formulation)
    assert D.pairs == FOUR_CANDIDATE_DEFEATS
    assert D.undefeated() == frozenset("a")

def test_split_cycle_q(q):
    D = defeat("split_cycle", q)
    assert D.pairs == pairs("ab", "bc")
    assert q.margin("a", "b") == 5

def test_split_cycle_perfect_cycle(perfect_cycle):
    assert defeat("split_cycle", perfect_cycle).pairs == frozenset()
    assert defeat("split_cycle", replicate(perfect_cycle, 3)).pairs == frozenset()

def test_split_cycle_unknown_formulation(q):
    with pytest.raises(UnknownMethod):
        split_cycle(q, "dfs")

def test_split_cycle_threshold_of(q, four_candidates):
    assert split_cycle_threshold_of(q, "a", "b") == 1
    assert split_cycle_threshold_of(q, "b", "a") == 1
    assert split_cycle_threshold_of(four_candidates, "a", "d") == 0
    assert split_cycle_threshold_of(four_candidates, "c", "a") == 3

def test_formulations_agree_exhaustively():
    for P in enumerate_profiles(ProfileDomain("abc", (1, 4))):
        relations = set(split_cycle(P, f) for f in SPLIT_CYCLE_FORMULATIONS)
        assert len(relations) == 1

def test_formulations_agree_on_random_profiles():
    D = ProfileDomain("abcde", (9, 9), "random", sample_count=1000, seed=2020)
    for P in enumerate_profiles(D):
        reference = split_cycle(P, "all_cycles")
        for f in ("threshold", "edge_cycles", "widest_path"):
            assert split_cycle(P, f) == reference

def test_formulations_agree_with_zero_margins():
    D = ProfileDomain("abcdef", (2, 8), "random", sample_count=400, seed=77)
    ties = 0
    for P in enumerate_profiles(D):
        reference = split_cycle(P, "all_cycles")
        for f in ("threshold", "edge_cycles", "widest_path"):
            assert split_cycle(P, f) == reference
        ties += any(P.margin(x, y) == 0 for x, y in itertools.combinations("abcdef", 2))
    assert ties > 0

def test_split_cycle_properties():
    D = ProfileDomain("abcd", (1, 9), "random", sample_count=300, seed=11)
    for P in itertools.chain(enumerate_profiles(SMALL), enumerate_profiles(D)):
        S = defeat("split_cycle", P)
        assert S.is_acyclic()
        assert S.undefeated()
        for x, y in S:
            assert P.margin(x, y) > 0
        c = condorcet_winner(P)
        if c is not None:
            assert S.undefeated() == frozenset([c])
        assert S.issubset(defeat("beat_path", P))
        for x, y in itertools.permutations(P.sorted_candidates, 2):
            if P.margin(x, y) == P.num_voters:
                assert (x, y) in S

def test_split_cycle_is_majority_on_two_candidates():
    for P in enumerate_profiles(ProfileDomain("ab", (1, 6))):
        assert defeat("split_cycle", P) == defeat("simple_majority", P)

def test_qualitative_margin_invariance():
    D = ProfileDomain("abcd", (3, 7), "random", sample_count=100, seed=5)
    for P in enumerate_profiles(D):
        G = margin_graph(P)
        # same qualitative margin graph, different weights
        Q = mcgarvey(type(G)(G.nodes, dict((e, 2 * w * w) for e, w in G.edges.items())))
        for m in ("split_cycle", "beat_path", "weighted_covering", "minimax"):
            assert defeat(m, P).pairs == defeat(m, Q).pairs

def test_borda_is_margin_based():
    D = ProfileDomain("abcd", (3, 7), "random", sample_count=100, seed=6)
    for P in enumerate_profiles(D):
        Q = mcgarvey(margin_graph(P).scaled(2))
        assert defeat("borda", P).pairs == defeat("borda", Q).pairs


####
#### the other rules
####

def test_borda_pair(borda_pair):
    P, P_prime = borda_pair
    assert scores("borda", P) == {"x": 13, "y": 12, "a": 5, "b": 5, "c": 5}
    assert ("x", "y") in defeat("borda", P)
    assert ("y", "x") in defeat("borda", P_prime)

def test_borda_margin_sums():
    random = ProfileDomain("abcd", (1, 9), "random", sample_count=1000, seed=4)
    for P in itertools.chain(enumerate_profiles(SMALL), enumerate_profiles(random)):
        D = defeat("borda", P)
        total = dict((x, sum(P.margin(x, z) for z in P.candidates if z != x)) for x in P.candidates)
        for x, y in itertools.permutations(P.sorted_candidates, 2):
            assert ((x, y) in D) == (total[x] > total[y])

def test_copeland(four_candidates):
    assert defeat("copeland", four_candidates).pairs == pairs("ad", "bd", "cd")
    assert scores("copeland", four_candidates) == {"a": 1, "b": 1, "c": 1, "d": -3}
    assert undefeated(defeat("copeland", four_candidates)) == frozenset("abc")

def test_hare(q):
    assert scores("hare", q) == {"c": 2, "a": 1, "b": 0}
    assert defeat("hare", q).pairs == pairs("ca", "cb", "ab")

def test_simple_majority(q):
    assert defeat("simple_majority", q).pairs == pairs("ab", "bc", "ca")

def test_beat_path(four_candidates):
    assert defeat("beat_path", four_candidates).pairs == pairs("ab", "bc", "ac", "ad", "bd", "cd")

def test_covering_rules(four_candidates, q):
    for m in ("left_covering", "right_covering", "fishburn"):
        assert defeat(m, four_candidates).pairs == pairs("ad", "bd", "cd")
        assert defeat(m, q).pairs == frozenset()

def test_weighted_covering(four_candidates, q):
    assert defeat("weighted_covering", four_candidates).pairs == pairs("ad")
    assert defeat("weighted_covering", q).pairs == frozenset()

def test_plurality(q):
    assert scores("plurality", q) == {"a": 4, "b": 2, "c": 3}
    assert defeat("plurality", q).pairs == pairs("ac", "ab", "cb")

def test_positive_negative(q):
    assert scores("positive_negative", q) == {"a": 2, "b": -1, "c": -1}
    assert defeat("positive_negative", q).pairs == pairs("ab", "ac")

def test_minimax(q, four_candidates):
    assert scores("minimax", q) == {"a": -1, "b": -5, "c": -3}
    assert defeat("minimax", q).pairs == pairs("ac", "ab", "cb")
    assert scores("minimax", four_candidates)["a"] == -3

def test_pareto():
    P = Profile.from_ballots([Ballot("xyz"), Ballot("xzy")])
    assert defeat("pareto", P).pairs == pairs("xy", "xz")
    assert defeat("pareto", add_reversed_pair(P, Ballot("zyx"))).pairs == frozenset()

def test_pareto_separation():
    P = Profile.from_ballots([Ballot("xzy")] * 2)
    assert defeat("pareto_separation", P).pairs == pairs("xy")
    P_prime = Profile.from_ballots([Ballot("xyz")] * 2)
    assert defeat("pareto_separation", P_prime).pairs == pairs("xz")

def test_global_split(four_candidates):
    assert defeat("global_split", four_candidates).pairs == pairs("ab", "bc")

def test_null(four_candidates):
    assert defeat("null", four_candidates).pairs == frozenset()

def test_scores_needs_score_based_rule(q):
    with pytest.raises(UnknownMethod):
        scores("split_cycle", q)

def test_score_based_rules_are_strict_weak_orders():
    for P in enumerate_profiles(SMALL):
        for m, d in registry().items():
            if d.vswf:
                assert defeat(m, P).is_strict_weak_order()

@pytest.mark.parametrize("m", METHOD_IDS)
def test_every_method_is_asymmetric(m, four_candidates, q, borda_pair):
    for P in (four_candidates, q) + borda_pair:
        D = defeat(m, P)
        assert all((y, x) not in D for x, y in D)
        if descriptor(m).acyclic_claimed:
            assert D.is_acyclic()

def test_induced_winners(four_candidates):
    assert induced_winners("split_cycle", four_candidates) == frozenset("a")

def test_tabulate(four_candidates):
    out = tabulate("split_cycle", four_candidates)
    assert out['method'] == "split_cycle"
    assert out['candidates'] == ["a", "b", "c", "d"]
    assert out['winners'] == ["a"]
    assert out['defeats'][0] == {'from': "a", 'to': "b"}
    assert len(out['defeats']) == 5
    assert out['margins'][0] == ["a", "b", 5]
    assert ["a", "c", -3] in out['margins']
    assert len(out['margins']) == 6


####
#### choice functions
####

def test_choice_dead_candidate(dead_candidate):
    full = frozenset("wxyz")
    assert local_choice("borda", dead_candidate, full) == frozenset("x")
    assert local_choice("borda", dead_candidate, "xzw") == frozenset("xz")
    assert global_choice("borda", dead_candidate, "xzw") == frozenset("x")

def test_choice_borda_pair(borda_pair):
    P, _ = borda_pair
    assert global_choice("borda", P, "xya") == frozenset("x")
    assert local_choice("borda", P, "xya") == frozenset("y")

def test_local_choice_on_everything():
    for P in enumerate_profiles(SMALL):
        for m in ("split_cycle", "borda", "beat_path"):
            assert local_choice(m, P, P.candidates) == defeat(m, P).undefeated()

def test_pairwise_rules_choose_alike_globally_and_locally():
    for P in enumerate_profiles(SMALL):
        for Y in powerset(P.candidates, 1):
            for m in ("simple_majority", "pareto"):
                assert defeat(m, P).undefeated_within(Y) == defeat(m, restrict(P, Y)).undefeated()
            if defeat("pareto", P).undefeated_within(Y):
                assert global_choice("pareto", P, Y) == local_choice("pareto", P, Y)

def test_choice_errors(q, perfect_cycle):
    with pytest.raises(EmptyChoice):
        global_choice("split_cycle", q, [])
    with pytest.raises(ProfileError):
        local_choice("split_cycle", q, "az")
    with pytest.raises(EmptyChoice):
        global_choice("simple_majority", q, "abc")


####
#### resoluteness
####

def test_null_is_least_resolute(q):
    v = compare_resoluteness("null", "split_cycle", SMALL)
    assert v.verdict == "g_at_least_f"
    assert v.f_only is None
    v = compare_resoluteness("null", "split_cycle", [q])
    assert v.g_only == (q, ("a", "b"))

def test_global_split_against_split_cycle(four_candidates):
    v = compare_resoluteness("global_split", "split_cycle", [four_candidates])
    assert v.verdict == "g_at_least_f"
    assert v.g_only[1] == ("a", "d")
    assert v.to_dict()['g_only']['pair'] == ["a", "d"]

def test_split_cycle_against_beat_path():
    v = compare_resoluteness("split_cycle", "beat_path", ProfileDomain("abc", (1, 3)))
    assert v.f_only is None
    assert v.verdict in ("g_at_least_f", "equal")

def test_rival_rules_are_subsets_of_split_cycle():
    for P in enumerate_profiles(SMALL):
        S = defeat("split_cycle", P)
        assert defeat("null", P).issubset(S)
        assert defeat("global_split", P).issubset(S)

def test_equal_verdict(q):
    v = compare_resoluteness("split_cycle", "split_cycle", [q])
    assert v.verdict == "equal"
    assert v.scanned == 1
