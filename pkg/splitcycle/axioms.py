"""
executable axioms and the domain checker

Every axiom is an :class:`Axiom` subclass which generates :class:`Instance`
objects from the profiles of a domain and decides whether a rule violates a
given instance. Instances only carry concrete profiles and candidates, so a
reported witness can be replayed on its own with :func:`replay`.
"""

import itertools

import logbook
import numpy as np

from .exceptions import UnknownAxiom, ProfileError, BudgetExceeded
from .helpers import powerset
from .ballots import (Profile, Ballot, restrict, replicate, add_reversed_pair,
                      permute_candidates, condorcet_winner, all_ballots,
                      enumerate_profiles)
from .methods import defeat, descriptor

__all__ = ['AXIOM_IDS', 'Axiom', 'Instance', 'AxiomVerdict', 'Evaluator', 'get_axiom',
           'coherent_iia_related', 'modified_iia_related', 'check_axiom',
           'check_axiom_on_profiles', 'check_axiom_on_pairs', 'replay']

log = logbook.Logger("splitcycle.axioms")

AXIOM_IDS = (
    'anonymity', 'neutrality', 'availability', 'upward_homogeneity', 'monotonicity',
    'monotonicity_two_candidate', 'neutral_reversal_up', 'neutral_reversal_down',
    'coherent_iia', 'weak_iia', 'fiia', 'viia', 'modified_iia', 'intensity_iia', 'pareto',
    'majority_defeat', 'condorcet_consistency', 'binary_majoritarianism',
    'immunity_to_spoilers', 'strong_stability', 'local_alpha', 'global_alpha', 'alpha_bar',
    'acyclicity',
)

HOLDS = 'holds_on_domain'
COUNTEREXAMPLE = 'counterexample'
BUDGET_EXCEEDED = 'budget_exceeded'


####
#### relatedness predicates
####

def _same_pair_order(P, Q, x, y):
    """both profiles have the same voters and every voter orders x and y alike"""
    q = dict(Q.voters)
    if set(q) != set(P.voter_ids):
        return False
    return all(b.prefers(x, y) == q[v].prefers(x, y) for v, b in P.voters)


def coherent_iia_related(P, Q, x, y):
    """``Q`` arises from ``P`` by deleting candidates other than ``x`` and ``y``
    and deleting or reducing margins on edges not connecting ``x`` and ``y``"""
    if x == y:
        raise ProfileError("coherent IIA needs two distinct candidates")
    if not (set([x, y]) <= Q.candidates <= P.candidates):
        return False
    if not _same_pair_order(P, Q, x, y):
        return False
    for u, v in itertools.permutations(Q.sorted_candidates, 2):
        if set([u, v]) == set([x, y]):
            continue
        mq = Q.margin(u, v)
        if mq > 0 and P.margin(u, v) < mq:
            return False
    return True


def modified_iia_related(P, Q, x, y, mode='modified'):
    """every voter orders ``x`` and ``y`` alike in both profiles and ranks the
    same candidates (``modified``) or as many candidates (``intensity``) between them"""
    if x == y:
        raise ProfileError("modified IIA needs two distinct candidates")
    if mode not in ('modified', 'intensity'):
        raise ProfileError("unknown relatedness mode %r" %(mode,))
    for c in (x, y):
        if c not in P.candidates or c not in Q.candidates:
            return False
    if not _same_pair_order(P, Q, x, y):
        return False
    q = dict(Q.voters)
    for v, b in P.voters:
        between, other = b.between(x, y), q[v].between(x, y)
        if mode == 'modified' and between != other:
            return False
        if mode == 'intensity' and len(between) != len(other):
            return False
    return True


####
#### instances, verdicts, evaluation
####

def _profile_to_dict(P):
    return {'candidates': list(P.sorted_candidates), 'ballots': [str(b) for b in P.ballots]}

def _profile_from_dict(d):
    return Profile.from_ballots([Ballot.parse(b) for b in d['ballots']], d['candidates'])


class Instance(object):
    """one concrete case of an axiom

    :param axiom: the axiom id
    :param profiles: the profiles involved, the original one first
    :param candidates: the distinguished candidates
    :param extra: further data such as subsets, a voter or a ballot
    """

    def __init__(self, axiom, profiles, candidates=(), **extra):
        self.axiom = axiom
        self.profiles = tuple(profiles)
        self.candidates = tuple(candidates)
        self.extra = extra

    @property
    def P(self):
        return self.profiles[0]

    def to_dict(self):
        return {
            'axiom': self.axiom,
            'profiles': [_profile_to_dict(P) for P in self.profiles],
            'candidates': list(self.candidates),
            'extra': dict((k, sorted(v) if isinstance(v, (set, frozenset)) else v)
                          for k, v in self.extra.items()),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d['axiom'], [_profile_from_dict(p) for p in d['profiles']],
                   d.get('candidates', ()), **d.get('extra', {}))

    def __repr__(self):
        return "<Instance %s %s>" %(self.axiom, ",".join(self.candidates))


class Evaluator(object):
    """evaluates one rule and remembers the results per profile"""

    max_cache = 200000

    def __init__(self, method):
        self.method = method
        descriptor(method)
        self._cache = {}

    def defeat(self, P):
        try:
            return self._cache[P]
        except KeyError:
            pass
        if len(self._cache) > self.max_cache:
            self._cache.clear()
        d = self._cache[P] = defeat(self.method, P)
        return d

    def undefeated(self, P):
        return self.defeat(P).undefeated()


class AxiomVerdict(object):
    """result of checking one axiom for one rule over one domain"""

    def __init__(self, axiom, method, domain, status, witness=None, scanned=0, note=None):
        if (status == COUNTEREXAMPLE) != (witness is not None):
            raise ValueError("a verdict has a witness exactly when it is a counterexample")
        self.axiom = axiom
        self.method = method
        self.domain = domain
        self.status = status
        self.witness = witness
        self.scanned = scanned
        self.note = note

    @property
    def holds(self):
        return self.status == HOLDS

    def to_dict(self):
        d = {
            'axiom': self.axiom,
            'method': self.method,
            'domain': self.domain,
            'status': self.status,
            'scanned': self.scanned,
            'witness': self.witness.to_dict() if self.witness is not None else None,
        }
        if self.note:
            d['note'] = self.note
        return d

    def __repr__(self):
        return "<AxiomVerdict %s/%s %s>" %(self.axiom, self.method, self.status)


####
#### axiom base classes
####

class Axiom(object):
    """base class for axioms

    ``sequence_only`` axioms depend on voter identity and are never checked
    over multiset representatives.
    """

    id = None
    shape = 'single'
    sequence_only = False

    def instances(self, P, ev):
        """generate the instances rooted at profile ``P``"""
        raise NotImplementedError

    def violated(self, instance, ev):
        """``True`` if the rule behind evaluator ``ev`` violates ``instance``"""
        raise NotImplementedError

    def instance(self, profiles, candidates=(), **extra):
        return Instance(self.id, profiles, candidates, **extra)


def _two_candidate_profiles(P):
    if len(P.candidates) == 2:
        yield P
    elif len(P.candidates) > 2:
        for pair in itertools.combinations(P.sorted_candidates, 2):
            yield restrict(P, pair)


####
#### single profile axioms
####

class Availability(Axiom):
    id = 'availability'

    def instances(self, P, ev):
        yield self.instance([P])

    def violated(self, inst, ev):
        return not ev.undefeated(inst.P)


class Acyclicity(Availability):
    id = 'acyclicity'

    def violated(self, inst, ev):
        return not ev.defeat(inst.P).is_acyclic()


class Pareto(Axiom):
    id = 'pareto'

    def instances(self, P, ev):
        for x, y in itertools.permutations(P.sorted_candidates, 2):
            if P.margin(x, y) == P.num_voters:
                yield self.instance([P], (x, y))

    def violated(self, inst, ev):
        x, y = inst.candidates
        return (x, y) not in ev.defeat(inst.P)


class MajorityDefeat(Availability):
    id = 'majority_defeat'

    def violated(self, inst, ev):
        return any(inst.P.margin(x, y) <= 0 for x, y in ev.defeat(inst.P))


class CondorcetConsistency(Axiom):
    id = 'condorcet_consistency'

    def instances(self, P, ev):
        c = condorcet_winner(P)
        if c is not None:
            yield self.instance([P], (c,))

    def violated(self, inst, ev):
        return ev.undefeated(inst.P) != frozenset(inst.candidates)


class BinaryMajoritarianism(Axiom):
    """on two candidates the rule is simple majority"""
    id = 'binary_majoritarianism'

    def instances(self, P, ev):
        for Q in _two_candidate_profiles(P):
            yield self.instance([Q], Q.sorted_candidates)

    def violated(self, inst, ev):
        x, y = inst.candidates
        P = inst.P
        expected = set()
        if P.margin(x, y) > 0:
            expected.add((x, y))
        elif P.margin(y, x) > 0:
            expected.add((y, x))
        return ev.defeat(P).pairs != expected


class GlobalAlpha(Axiom):
    """Z & G(Y) is a subset of G(Z) for the global choice function G"""
    id = 'global_alpha'

    def instances(self, P, ev):
        for Y in powerset(P.candidates, 1):
            for Z in powerset(Y, 1):
                if Z != Y:
                    yield self.instance([P], Y=sorted(Y), Z=sorted(Z))

    def choice(self, ev, P, Y):
        return ev.defeat(P).undefeated_within(Y)

    def violated(self, inst, ev):
        Y, Z = frozenset(inst.extra["Y"]), frozenset(inst.extra["Z"])
        return not (Z & self.choice(ev, inst.P, Y)) <= self.choice(ev, inst.P, Z)


class LocalAlpha(GlobalAlpha):
    """Z & L(Y) is a subset of L(Z) for the local choice function L"""
    id = 'local_alpha'

    def choice(self, ev, P, Y):
        return ev.undefeated(restrict(P, Y))


class AlphaBar(Axiom):
    """the winners of P that survive in Z still win in P restricted to Z"""
    id = 'alpha_bar'

    def instances(self, P, ev):
        for Z in powerset(P.candidates, 1):
            if Z != P.candidates:
                yield self.instance([P], Z=sorted(Z))

    def violated(self, inst, ev):
        Z = frozenset(inst.extra["Z"])
        return not (Z & ev.undefeated(inst.P)) <= ev.undefeated(restrict(inst.P, Z))


####
#### transform axioms
####

class Anonymity(Axiom):
    id = 'anonymity'
    shape = 'transform'
    sequence_only = True

    def instances(self, P, ev):
        voters = P.voters
        for i, j in itertools.combinations(range(len(voters)), 2):
            if voters[i][1] == voters[j][1]:
                continue
            swapped = list(voters)
            swapped[i] = (voters[i][0], voters[j][1])
            swapped[j] = (voters[j][0], voters[i][1])
            yield self.instance([P, Profile(P.candidates, swapped)],
                                voters=[voters[i][0], voters[j][0]])

    def violated(self, inst, ev):
        return ev.defeat(inst.profiles[0]) != ev.defeat(inst.profiles[1])


class Neutrality(Axiom):
    id = 'neutrality'
    shape = 'transform'

    def instances(self, P, ev):
        for x, y in itertools.combinations(P.sorted_candidates, 2):
            sigma = dict((c, c) for c in P.candidates)
            sigma[x], sigma[y] = y, x
            yield self.instance([P, permute_candidates(P, sigma)], (x, y))

    def violated(self, inst, ev):
        x, y = inst.candidates
        swap = {x: y, y: x}
        moved = set((swap.get(u, u), swap.get(v, v)) for u, v in ev.defeat(inst.profiles[0]))
        return moved != ev.defeat(inst.profiles[1]).pairs


class UpwardHomogeneity(Axiom):
    id = 'upward_homogeneity'
    shape = 'transform'

    def instances(self, P, ev):
        yield self.instance([P, replicate(P, 2)])

    def violated(self, inst, ev):
        return not ev.defeat(inst.profiles[0]).issubset(ev.defeat(inst.profiles[1]))


class Monotonicity(Axiom):
    """lifting a defeater one position keeps the defeat"""
    id = 'monotonicity'
    shape = 'transform'

    def roots(self, P):
        yield P

    def instances(self, P, ev):
        for Q in self.roots(P):
            for x, y in ev.defeat(Q):
                for i, (v, b) in enumerate(Q.voters):
                    if b.top == x:
                        continue
                    voters = list(Q.voters)
                    voters[i] = (v, b.lift(x))
                    yield self.instance([Q, Profile(Q.candidates, voters)], (x, y), voter=i)

    def violated(self, inst, ev):
        x, y = inst.candidates
        return (x, y) in ev.defeat(inst.profiles[0]) and (x, y) not in ev.defeat(inst.profiles[1])


class MonotonicityTwoCandidate(Monotonicity):
    id = 'monotonicity_two_candidate'

    def roots(self, P):
        return _two_candidate_profiles(P)


class NeutralReversalUp(Axiom):
    """adding a reversed ballot pair keeps every defeat"""
    id = 'neutral_reversal_up'
    shape = 'transform'

    def instances(self, P, ev):
        for b in all_ballots(P.candidates):
            if b < b.reversed():
                yield self.instance([P, add_reversed_pair(P, b)], ballot=str(b))

    def violated(self, inst, ev):
        return not ev.defeat(inst.profiles[0]).issubset(ev.defeat(inst.profiles[1]))


class NeutralReversalDown(NeutralReversalUp):
    """adding a reversed ballot pair creates no new defeat"""
    id = 'neutral_reversal_down'

    def violated(self, inst, ev):
        return not ev.defeat(inst.profiles[1]).issubset(ev.defeat(inst.profiles[0]))


class ImmunityToSpoilers(Axiom):
    """a undefeated without b, a beats b and b defeated: a stays undefeated"""
    id = 'immunity_to_spoilers'
    shape = 'transform'

    def instances(self, P, ev):
        if len(P.candidates) < 2:
            return
        for b in P.sorted_candidates:
            without = P.without(b)
            for a in without.sorted_candidates:
                yield self.instance([P, without], (a, b))

    def applies(self, inst, ev):
        P, without = inst.profiles
        a, b = inst.candidates
        return (a in ev.undefeated(without) and P.margin(a, b) > 0
                and b not in ev.undefeated(P))

    def violated(self, inst, ev):
        a, b = inst.candidates
        return self.applies(inst, ev) and a not in ev.undefeated(inst.P)


class StrongStability(ImmunityToSpoilers):
    """a undefeated without b and b not majority preferred to a: a stays undefeated"""
    id = 'strong_stability'

    def applies(self, inst, ev):
        P, without = inst.profiles
        a, b = inst.candidates
        return a in ev.undefeated(without) and not P.margin(b, a) > 0


####
#### pair axioms
####

class PairAxiom(Axiom):
    """axioms comparing two profiles over the same voters which agree on ``x`` vs ``y``

    :meth:`related` decides whether ``(P, Q, x, y)`` is an instance at all;
    :meth:`bucket_key` groups candidate partners so that only plausible pairs
    are compared.
    """

    shape = 'pair'
    sequence_only = True
    with_restrictions = False

    def related(self, P, Q, x, y):
        return (Q.candidates == P.candidates) and _same_pair_order(P, Q, x, y)

    def bucket_key(self, P, x, y):
        return (P.voter_ids, P.candidates, x, y, tuple(b.prefers(x, y) for b in P.ballots))

    def partners(self, P, x, y):
        """extra partners of ``P`` outside the domain"""
        if self.with_restrictions:
            for Y in powerset(P.candidates, 2):
                if x in Y and y in Y and Y != P.candidates:
                    yield restrict(P, Y)

    def instances_for(self, profiles):
        """all instances over a list of profiles, in scan order"""
        buckets = {}
        for P in profiles:
            for x, y in itertools.permutations(P.sorted_candidates, 2):
                buckets.setdefault(self.bucket_key(P, x, y), []).append(P)
        for P in profiles:
            for x, y in itertools.permutations(P.sorted_candidates, 2):
                for Q in buckets.get(self.bucket_key(P, x, y), []):
                    if Q is not P and self.related(P, Q, x, y):
                        yield self.instance([P, Q], (x, y))
                for Q in self.partners(P, x, y):
                    if self.related(P, Q, x, y):
                        yield self.instance([P, Q], (x, y))

    def instances_for_pairs(self, pairs, candidates=None):
        for P, Q in pairs:
            common = sorted(P.candidates & Q.candidates)
            if candidates is not None:
                common = [c for c in common if c in candidates]
            for x, y in itertools.permutations(common, 2):
                if self.related(P, Q, x, y):
                    yield self.instance([P, Q], (x, y))

    def verdict_differs(self, inst, ev):
        x, y = inst.candidates
        return ((x, y) in ev.defeat(inst.profiles[0])) != ((x, y) in ev.defeat(inst.profiles[1]))

    def violated(self, inst, ev):
        x, y = inst.candidates
        P, Q = inst.profiles
        return self.related(P, Q, x, y) and self.verdict_differs(inst, ev)


class FixedIIA(PairAxiom):
    id = 'fiia'


class VariableIIA(PairAxiom):
    id = 'viia'
    with_restrictions = True

    def related(self, P, Q, x, y):
        return (x in Q.candidates and y in Q.candidates and x in P.candidates
                and y in P.candidates and _same_pair_order(P, Q, x, y))


class WeakIIA(PairAxiom):
    """x defeats y in P, so y does not defeat x in a profile agreeing on x vs y"""
    id = 'weak_iia'

    def verdict_differs(self, inst, ev):
        x, y = inst.candidates
        return (x, y) in ev.defeat(inst.profiles[0]) and (y, x) in ev.defeat(inst.profiles[1])


class CoherentIIA(PairAxiom):
    id = 'coherent_iia'
    with_restrictions = True

    def related(self, P, Q, x, y):
        return coherent_iia_related(P, Q, x, y)

    def verdict_differs(self, inst, ev):
        x, y = inst.candidates
        return (x, y) in ev.defeat(inst.profiles[0]) and (x, y) not in ev.defeat(inst.profiles[1])


class ModifiedIIA(PairAxiom):
    id = 'modified_iia'
    mode = 'modified'

    def related(self, P, Q, x, y):
        return modified_iia_related(P, Q, x, y, self.mode)

    def bucket_key(self, P, x, y):
        between = tuple(self.between_key(b.between(x, y)) for b in P.ballots)
        return super(ModifiedIIA, self).bucket_key(P, x, y) + (between,)

    def between_key(self, between):
        return tuple(sorted(between))

    def derive(self, P, x, y, rng):
        """a random profile related to ``P`` for ``x`` and ``y``"""
        voters = []
        for v, b in P.voters:
            top, bottom = (x, y) if b.prefers(x, y) else (y, x)
            others = sorted(P.candidates - set([x, y]))
            if self.mode == 'modified':
                between = sorted(b.between(x, y))
            else:
                k = len(b.between(x, y))
                between = [others[i] for i in rng.permutation(len(others))[:k]]
            rest = [c for c in others if c not in between]
            rest = [rest[i] for i in rng.permutation(len(rest))]
            split = int(rng.integers(0, len(rest) + 1))
            between = [between[i] for i in rng.permutation(len(between))]
            voters.append((v, Ballot(rest[:split] + [top] + between + [bottom] + rest[split:])))
        return Profile(P.candidates, voters)


class IntensityIIA(ModifiedIIA):
    id = 'intensity_iia'
    mode = 'intensity'

    def between_key(self, between):
        return len(between)


_axioms = dict((cls.id, cls()) for cls in [
    Anonymity, Neutrality, Availability, UpwardHomogeneity, Monotonicity,
    MonotonicityTwoCandidate, NeutralReversalUp, NeutralReversalDown, CoherentIIA, WeakIIA,
    FixedIIA, VariableIIA, ModifiedIIA, IntensityIIA, Pareto, MajorityDefeat,
    CondorcetConsistency, BinaryMajoritarianism, ImmunityToSpoilers, StrongStability,
    LocalAlpha, GlobalAlpha, AlphaBar, Acyclicity,
])


def get_axiom(a):
    try:
        return _axioms[a]
    except KeyError:
        raise UnknownAxiom("unknown axiom %r, use one of %s" %(a, ", ".join(AXIOM_IDS)))


####
#### checking
####

def _fire(events, name, config, **kw):
    if events is not None:
        events.handle(name, config, **kw)


def _scan(axiom, ev, instances):
    """run through ``instances``; return ``(first violated instance or None, scanned)``"""
    scanned = 0
    for inst in instances:
        scanned += 1
        if axiom.violated(inst, ev):
            return inst, scanned
    return None, scanned


def _single_instances(axiom, ev, profiles):
    for P in profiles:
        for inst in axiom.instances(P, ev):
            yield inst


def _derived_instances(axiom, profiles, per_pair, seed):
    rng = np.random.default_rng(seed)
    for P in profiles:
        for x, y in itertools.permutations(P.sorted_candidates, 2):
            for _ in range(per_pair):
                yield axiom.instance([P, axiom.derive(P, x, y, rng)], (x, y))


def _instances(axiom, ev, profiles, domain=None, derived_pairs=4):
    if axiom.shape != 'pair':
        return _single_instances(axiom, ev, profiles)
    if domain is not None and domain.mode == 'random' and hasattr(axiom, 'derive'):
        return _derived_instances(axiom, profiles, derived_pairs, domain.seed)
    return axiom.instances_for(list(profiles))


def _finish(axiom, method, domain, witness, scanned, events, config, note=None):
    status = COUNTEREXAMPLE if witness is not None else HOLDS
    verdict = AxiomVerdict(axiom.id, method, domain, status, witness, scanned, note)
    if witness is not None:
        log.notice("{0} violates {1}: {2!r}", method, axiom.id, witness)
        _fire(events, "axioms.counterexample", config, verdict=verdict)
    log.info("{0}/{1}: {2} after {3} instances", axiom.id, method, status, scanned)
    _fire(events, "axioms.scan_finished", config, verdict=verdict)
    return verdict


def check_axiom(a, m, D, budget=10**7, derived_pairs=4, events=None, config=None):
    """check axiom ``a`` for rule ``m`` on every profile of domain ``D``

    :param a: the axiom id
    :param m: the method id
    :param D: a :class:`~splitcycle.ballots.ProfileDomain`
    :param budget: the enumeration budget
    :param derived_pairs: related profiles derived per profile and candidate pair
        for modified and intensity IIA on random domains
    :param events: an optional :class:`~splitcycle.events.Events` instance
    :param config: the configuration passed on to event handlers
    :return: an :class:`AxiomVerdict`
    """
    axiom = get_axiom(a)
    ev = Evaluator(m)
    note = None
    if axiom.sequence_only and D.mode == 'exhaustive-multiset':
        D = D.replace(mode='exhaustive-sequence')
        note = "domain scanned as exhaustive-sequence, %s depends on voter identity" %axiom.id
    summary = D.to_dict()
    log.info("checking {0} for {1} on {2!r}", a, m, D)
    _fire(events, "axioms.scan_started", config, axiom=a, method=m, domain=summary)
    try:
        profiles = enumerate_profiles(D, budget)
    except BudgetExceeded as e:
        log.warning("{0}/{1} not checked: {2}", a, m, e.msg)
        verdict = AxiomVerdict(a, m, summary, BUDGET_EXCEEDED, None, 0, e.msg)
        _fire(events, "axioms.scan_finished", config, verdict=verdict)
        return verdict
    witness, scanned = _scan(axiom, ev, _instances(axiom, ev, profiles, D, derived_pairs))
    return _finish(axiom, m, summary, witness, scanned, events, config, note)


def check_axiom_on_profiles(a, m, profiles, events=None, config=None):
    """check axiom ``a`` on an explicit list of profiles"""
    axiom = get_axiom(a)
    ev = Evaluator(m)
    profiles = list(profiles)
    summary = {'profiles': len(profiles)}
    witness, scanned = _scan(axiom, ev, _instances(axiom, ev, profiles))
    return _finish(axiom, m, summary, witness, scanned, events, config)


def check_axiom_on_pairs(a, m, pairs, candidates=None, events=None, config=None):
    """check a pair axiom on explicit ``(P, Q)`` pairs

    :param candidates: if given, only pairs of these candidates are examined
    """
    axiom = get_axiom(a)
    if axiom.shape != 'pair':
        raise UnknownAxiom("%s does not compare pairs of profiles" %a)
    ev = Evaluator(m)
    pairs = list(pairs)
    summary = {'pairs': len(pairs)}
    if candidates is not None:
        summary['candidates'] = sorted(candidates)
    witness, scanned = _scan(axiom, ev, axiom.instances_for_pairs(pairs, candidates))
    return _finish(axiom, m, summary, witness, scanned, events, config)


def replay(verdict):
    """re-run the axiom predicate on the witness of ``verdict`` alone

    :param verdict: an :class:`AxiomVerdict` or its ``to_dict()`` form
    :return: ``True`` if the witness still violates the axiom
    """
    if isinstance(verdict, dict):
        method, witness = verdict['method'], verdict.get('witness')
        if witness is not None:
            witness = Instance.from_dict(witness)
    else:
        method, witness = verdict.method, verdict.witness
    if witness is None:
        return False
    return get_axiom(witness.axiom).violated(witness, Evaluator(method))
