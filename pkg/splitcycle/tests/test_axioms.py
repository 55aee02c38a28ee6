from splitcycle.axioms import (AXIOM_IDS, AxiomVerdict, Instance, get_axiom, check_axiom,
                               check_axiom_on_profiles, check_axiom_on_pairs, replay,
                               coherent_iia_related, modified_iia_related, HOLDS,
                               COUNTEREXAMPLE, BUDGET_EXCEEDED)
from splitcycle.ballots import Ballot, Profile, ProfileDomain, parse_profile, restrict
from splitcycle.events import Events
from splitcycle.methods import METHOD_IDS, descriptor
from splitcycle.exceptions import UnknownAxiom, ProfileError
import pytest


SMALL = ProfileDomain("abc", (1, 3))

CORE_AXIOMS = ('anonymity', 'neutrality', 'availability', 'upward_homogeneity',
               'monotonicity_two_candidate', 'neutral_reversal_up', 'neutral_reversal_down',
               'coherent_iia')


def test_every_axiom_is_known():
    for a in AXIOM_IDS:
        assert get_axiom(a).id == a
    with pytest.raises(UnknownAxiom):
        get_axiom("positive_responsiveness")


####
#### relatedness
####

def test_coherent_iia_related(borda_pair):
    P, P_prime = borda_pair
    assert coherent_iia_related(P, P_prime, "x", "y")
    assert not coherent_iia_related(P_prime, P, "x", "y")
    assert coherent_iia_related(P, restrict(P, "xy"), "x", "y")

def test_coherent_iia_cannot_raise_margins(perfect_cycle):
    P = parse_profile("candidates: a b c\n1: a > b > c\n1: b > a > c\n1: c > a > b\n")
    assert not coherent_iia_related(P, perfect_cycle, "a", "b")
    with pytest.raises(ProfileError):
        coherent_iia_related(P, P, "a", "a")

def test_modified_iia_related(intensity_pair):
    P, P_prime = intensity_pair
    assert modified_iia_related(P, P_prime, "a", "b")
    assert modified_iia_related(P, P_prime, "a", "b", "intensity")
    assert not modified_iia_related(P, P_prime, "c", "d")
    with pytest.raises(ProfileError):
        modified_iia_related(P, P_prime, "a", "b", "distance")

def test_intensity_is_weaker_than_modified():
    P = Profile.from_ballots([Ballot("acbd")])
    Q = Profile.from_ballots([Ballot("adbc")])
    assert not modified_iia_related(P, Q, "a", "b")
    assert modified_iia_related(P, Q, "a", "b", "intensity")


####
#### verdicts and instances
####

def test_verdict_invariant():
    with pytest.raises(ValueError):
        AxiomVerdict("pareto", "null", {}, COUNTEREXAMPLE)
    with pytest.raises(ValueError):
        AxiomVerdict("pareto", "null", {}, HOLDS, witness=Instance("pareto", []))

def test_instance_roundtrip(q):
    inst = Instance("local_alpha", [q], ("a",), Y=["a", "b"], Z=["a"])
    again = Instance.from_dict(inst.to_dict())
    assert again.P == q
    assert again.candidates == ("a",)
    assert again.extra == {"Y": ["a", "b"], "Z": ["a"]}

def test_verdict_json_keys():
    v = check_axiom("availability", "split_cycle", SMALL)
    assert set(v.to_dict()) == set(["axiom", "method", "domain", "status", "scanned", "witness"])
    assert v.to_dict()["witness"] is None
    assert v.scanned == 83


####
#### core axioms and the rival rules
####

@pytest.mark.parametrize("method", ["split_cycle", "null", "global_split"])
@pytest.mark.parametrize("axiom", CORE_AXIOMS)
def test_core_axioms(axiom, method):
    v = check_axiom(axiom, method, SMALL)
    assert v.status == HOLDS, v.to_dict()

def test_sequence_only_axioms_upgrade_the_domain():
    v = check_axiom("anonymity", "split_cycle", ProfileDomain("abc", (1, 2)))
    assert v.domain["mode"] == "exhaustive-sequence"
    assert "voter identity" in v.note
    v = check_axiom("availability", "split_cycle", ProfileDomain("abc", (1, 2)))
    assert v.domain["mode"] == "exhaustive-multiset"
    assert v.note is None

def test_split_cycle_condorcet_and_majority_defeat():
    random = ProfileDomain("abcd", (1, 9), "random", sample_count=1000, seed=8)
    for D in (SMALL, random):
        for a in ("condorcet_consistency", "majority_defeat", "pareto", "acyclicity"):
            assert check_axiom(a, "split_cycle", D).holds

def test_split_cycle_more_axioms():
    for a in ("binary_majoritarianism", "monotonicity", "immunity_to_spoilers",
              "strong_stability", "weak_iia", "global_alpha"):
        assert check_axiom(a, "split_cycle", SMALL).holds, a

def test_coherent_iia_implies_weak_iia():
    D = ProfileDomain("abc", (1, 2))
    for m in METHOD_IDS:
        if check_axiom("coherent_iia", m, D).holds:
            assert check_axiom("weak_iia", m, D).holds, m

DERIVATION_HYPOTHESES = ("anonymity", "neutrality", "monotonicity_two_candidate", "coherent_iia")

@pytest.mark.parametrize("method", METHOD_IDS)
@pytest.mark.parametrize("derived", ["majority_defeat", "strong_stability"])
def test_derived_axioms(method, derived):
    D = ProfileDomain("abc", (1, 2))
    if all(check_axiom(a, method, D).holds for a in DERIVATION_HYPOTHESES):
        assert check_axiom(derived, method, D).holds

def test_global_alpha_for_acyclic_methods():
    D = ProfileDomain("abcd", (1, 2))
    acyclic = [m for m in METHOD_IDS if descriptor(m).acyclic_claimed]
    assert "split_cycle" in acyclic
    for m in acyclic:
        assert check_axiom("global_alpha", m, D).holds, m

def test_unanimity_rules():
    assert check_axiom("pareto", "null", SMALL).status == COUNTEREXAMPLE
    assert check_axiom("binary_majoritarianism", "pareto_separation", SMALL).status == COUNTEREXAMPLE
    assert check_axiom("local_alpha", "pareto_separation", ProfileDomain("xyz", (1, 3))).holds

def test_simple_majority_is_cyclic():
    v = check_axiom("acyclicity", "simple_majority", SMALL)
    assert v.status == COUNTEREXAMPLE
    assert replay(v)


####
#### known violations found by search
####

@pytest.mark.parametrize("axiom, method, domain", [
    ("coherent_iia", "borda", ProfileDomain("abc", (1, 2))),
    ("neutral_reversal_up", "plurality", ProfileDomain("abc", (1, 2))),
    ("monotonicity", "hare", ProfileDomain("abc", (10, 10))),
    ("local_alpha", "split_cycle", ProfileDomain("abc", (3, 3))),
])
def test_known_violations(axiom, method, domain):
    v = check_axiom(axiom, method, domain)
    assert v.status == COUNTEREXAMPLE
    assert v.witness.axiom == axiom
    assert replay(v)
    assert replay(v.to_dict())

def test_witness_is_deterministic():
    first = check_axiom("neutral_reversal_up", "plurality", ProfileDomain("abc", (1, 2)))
    second = check_axiom("neutral_reversal_up", "plurality", ProfileDomain("abc", (1, 2)))
    assert first.to_dict() == second.to_dict()

def test_fiia_for_split_cycle():
    P = parse_profile("candidates: a b c\n1: a > b > c\n1: b > a > c\n1: c > a > b\n")
    P_prime = parse_profile("candidates: a b c\n1: a > b > c\n1: b > c > a\n1: c > a > b\n")
    v = check_axiom_on_profiles("fiia", "split_cycle", [P, P_prime])
    assert v.status == COUNTEREXAMPLE
    assert v.witness.candidates == ("a", "b")
    assert replay(v)

def test_borda_spoiler(spoiler):
    P, _ = spoiler
    v = check_axiom_on_profiles("immunity_to_spoilers", "borda", [P])
    assert v.status == COUNTEREXAMPLE
    assert v.witness.candidates == ("a", "b")
    assert check_axiom_on_profiles("immunity_to_spoilers", "split_cycle", [P]).holds

def test_modified_and_intensity_iia(intensity_pair):
    for a in ("modified_iia", "intensity_iia"):
        v = check_axiom_on_profiles(a, "split_cycle", list(intensity_pair))
        assert v.status == COUNTEREXAMPLE
        assert v.witness.candidates == ("a", "b")
        assert replay(v)

def test_derived_pairs_on_random_domains():
    D = ProfileDomain("abcd", (4, 4), "random", sample_count=200, seed=3)
    v = check_axiom("modified_iia", "split_cycle", D, derived_pairs=4)
    assert v.status in (HOLDS, COUNTEREXAMPLE)
    if v.witness is not None:
        assert replay(v)
    assert check_axiom("modified_iia", "simple_majority", D, derived_pairs=2).holds


####
#### pairs and budgets
####

def test_check_axiom_on_pairs(borda_pair):
    v = check_axiom_on_pairs("coherent_iia", "borda", [borda_pair], candidates="xyabc")
    assert v.status == COUNTEREXAMPLE
    assert v.witness.candidates == ("x", "y")
    assert replay(v)
    assert check_axiom_on_pairs("coherent_iia", "split_cycle", [borda_pair]).holds

def test_check_axiom_on_pairs_needs_a_pair_axiom(borda_pair):
    with pytest.raises(UnknownAxiom):
        check_axiom_on_pairs("availability", "borda", [borda_pair])

def test_budget_exceeded():
    v = check_axiom("availability", "split_cycle", ProfileDomain("abcde", (1, 5)), budget=1000)
    assert v.status == BUDGET_EXCEEDED
    assert v.witness is None
    assert v.scanned == 0


####
#### events
####

def test_events_are_fired():
    events = Events()
    seen = []
    for name in ("axioms.scan_started", "axioms.counterexample", "axioms.scan_finished"):
        events.register(name, lambda name, config, **kw: seen.append((name, config, kw)))
    v = check_axiom("acyclicity", "simple_majority", SMALL, events=events, config="cfg")
    assert [s[0] for s in seen] == ["axioms.scan_started", "axioms.counterexample",
                                    "axioms.scan_finished"]
    assert seen[0][2]["axiom"] == "acyclicity"
    assert seen[2][2]["verdict"] is v
    assert all(s[1] == "cfg" for s in seen)
