"""
canned counterexamples and the witness file format

A :class:`WitnessCase` bundles named profiles with a list of expectations.
Cases are plain JSON-compatible dicts so the built-in suite and user supplied
witness files go through the same code path.
"""

import json

import logbook

from .exceptions import WitnessError, SplitCycleException
from .ballots import parse_profile, restrict, is_clone, ProfileDomain
from .methods import defeat, registry, global_choice, local_choice, split_cycle
from .axioms import (coherent_iia_related, modified_iia_related, check_axiom,
                     check_axiom_on_profiles, replay)

__all__ = ['WitnessCase', 'WitnessReport', 'builtin_cases', 'get_case', 'load_cases',
           'verify_witness', 'EXPECTATION_KINDS', 'ALIASES']

log = logbook.Logger("splitcycle.witnesses")


####
#### expectations
####

_checks = {}

def expectation(kind):
    """register a checker ``check(case, item) -> (passed, detail)``"""
    def decorator(function):
        _checks[kind] = function
        return function
    return decorator


def _pair(item):
    x, y = item['pair']
    return x, y


@expectation('margin')
def _check_margin(case, item):
    x, y = _pair(item)
    got = case.profile(item['profile']).margin(x, y)
    return got == item['expected'], "margin(%s, %s) = %s" %(x, y, got)


@expectation('defeat')
def _check_defeat(case, item):
    x, y = _pair(item)
    D = defeat(item['method'], case.profile(item['profile']))
    present = (x, y) in D
    return present == item.get('present', True), "%s: %s defeats %s is %s" %(item['method'], x, y, present)


@expectation('relation')
def _check_relation(case, item):
    P = case.profile(item['profile'])
    if item.get('formulation'):
        D = split_cycle(P, item['formulation'])
    else:
        D = defeat(item['method'], P)
    expected = set(tuple(p) for p in item['defeats'])
    return D.pairs == expected, "%s gives %s" %(item['method'], sorted(D.pairs))


@expectation('winners')
def _check_winners(case, item):
    got = defeat(item['method'], case.profile(item['profile'])).undefeated()
    return got == frozenset(item['expected']), "winners %s" %sorted(got)


@expectation('defeated')
def _check_defeated(case, item):
    got = defeat(item['method'], case.profile(item['profile'])).undefeated()
    beaten = item['candidate'] not in got
    return beaten == item.get('expected', True), "%s defeated is %s" %(item['candidate'], beaten)


@expectation('global_choice')
def _check_global(case, item):
    got = global_choice(item['method'], case.profile(item['profile']), item['subset'])
    return got == frozenset(item['expected']), "global choice %s" %sorted(got)


@expectation('local_choice')
def _check_local(case, item):
    got = local_choice(item['method'], case.profile(item['profile']), item['subset'])
    return got == frozenset(item['expected']), "local choice %s" %sorted(got)


@expectation('related')
def _check_related(case, item):
    P, Q = [case.profile(n) for n in item['profiles']]
    x, y = _pair(item)
    if item['predicate'] == 'coherent_iia':
        got = coherent_iia_related(P, Q, x, y)
    else:
        got = modified_iia_related(P, Q, x, y, item['predicate'])
    return got == item.get('expected', True), "%s related is %s" %(item['predicate'], got)


@expectation('clone')
def _check_clone(case, item):
    got = is_clone(case.profile(item['profile']), item['candidate'], item['of'])
    return got == item.get('expected', True), "%s clone of %s is %s" %(item['candidate'], item['of'], got)


@expectation('restriction')
def _check_restriction(case, item):
    got = restrict(case.profile(item['profile']), item['subset'])
    return got == case.profile(item['equals']), "restriction has %s voters" %got.num_voters


@expectation('axiom')
def _check_axiom(case, item):
    """run an axiom over the named profiles (pair axioms pair them up); a
    counterexample must also replay on its own"""
    profiles = [case.profile(n) for n in item['profiles']]
    verdict = check_axiom_on_profiles(item['axiom'], item['method'], profiles)
    ok = verdict.status == item['expected']
    if ok and verdict.witness is not None:
        ok = replay(verdict)
    return ok, "%s/%s: %s" %(item['axiom'], item['method'], verdict.status)


@expectation('axiom_domain')
def _check_axiom_domain(case, item):
    d = item['domain']
    D = ProfileDomain(d['candidates'], tuple(d['voters']), d.get('mode', 'exhaustive-multiset'))
    verdict = check_axiom(item['axiom'], item['method'], D)
    return verdict.status == item['expected'], "%s/%s on %r: %s" %(item['axiom'], item['method'], D, verdict.status)


@expectation('local_alpha_impossibility')
def _check_impossibility(case, item):
    """every registered rule that is binary majoritarian and available on the
    profile violates local alpha there"""
    P = case.profile(item['profile'])
    qualified = []
    for m in sorted(registry()):
        bm = check_axiom_on_profiles('binary_majoritarianism', m, [P])
        available = check_axiom_on_profiles('availability', m, [P])
        if not (bm.holds and available.holds):
            continue
        qualified.append(m)
        if check_axiom_on_profiles('local_alpha', m, [P]).holds:
            return False, "%s satisfies all three" %m
    return bool(qualified), "violated by %s" %", ".join(qualified)


EXPECTATION_KINDS = tuple(sorted(_checks))


####
#### cases and reports
####

class WitnessCase(object):
    """named profiles plus expectations

    :param name: the case token
    :param profiles: mapping ``name -> Profile``
    :param expectations: list of expectation dicts, each with a ``kind``
    """

    def __init__(self, name, profiles, expectations, description="", axiom=None,
                 method=None, candidates=None):
        self.name = name
        self.profiles = profiles
        self.expectations = expectations
        self.description = description
        self.axiom = axiom
        self.method = method
        self.candidates = candidates

    def profile(self, name):
        try:
            return self.profiles[name]
        except KeyError:
            raise WitnessError("case %s has no profile %r" %(self.name, name))

    @classmethod
    def from_dict(cls, d):
        try:
            name = d['name']
            profiles = dict((k, parse_profile(v)) for k, v in d['profiles'].items())
            expectations = list(d['expectations'])
        except (KeyError, TypeError, AttributeError) as e:
            raise WitnessError("malformed witness case: missing %s" %e)
        except SplitCycleException as e:
            raise WitnessError("witness case %s: %s" %(d.get('name'), e.msg))
        for item in expectations:
            if not isinstance(item, dict) or item.get('kind') not in _checks:
                raise WitnessError("case %s: unknown expectation %r" %(name, item))
        return cls(name, profiles, expectations, d.get('description', ""),
                   d.get('axiom'), d.get('method'), d.get('candidates'))


class WitnessReport(object):
    """pass/fail per expectation of one case"""

    def __init__(self, name, results):
        self.name = name
        self.results = results

    @property
    def passed(self):
        return all(r['passed'] for r in self.results)

    def to_dict(self):
        return {'name': self.name, 'passed': self.passed, 'results': self.results}


def verify_witness(w, events=None, config=None):
    """check every expectation of ``w``

    :param w: a :class:`WitnessCase`, a case dict or the name of a built-in case
    :param events: an optional :class:`~splitcycle.events.Events` instance which
        receives ``witness.verified`` with the report
    """
    if isinstance(w, str):
        w = get_case(w)
    elif isinstance(w, dict):
        w = WitnessCase.from_dict(w)
    results = []
    for item in w.expectations:
        try:
            passed, detail = _checks[item['kind']](w, item)
        except WitnessError:
            raise
        except (SplitCycleException, KeyError, ValueError, TypeError) as e:
            passed, detail = False, "error: %s" %e
        results.append({'kind': item['kind'], 'passed': bool(passed), 'detail': detail})
    report = WitnessReport(w.name, results)
    log.info("witness {0}: {1}", w.name, "pass" if report.passed else "fail")
    if events is not None:
        events.handle("witness.verified", config, report=report)
    return report


def load_cases(text):
    """parse a witness file holding one case or ``{"cases": [...]}``"""
    try:
        data = json.loads(text)
    except ValueError as e:
        raise WitnessError("witness file is not valid JSON: %s" %e)
    if isinstance(data, dict) and 'cases' in data:
        data = data['cases']
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise WitnessError("witness file must hold a case or a list of cases")
    return [WitnessCase.from_dict(d) for d in data]


####
#### the built-in suite
####

FOUR_CANDIDATES = """candidates: a b c d
3: a > b > c > d
2: d > c > a > b
3: b > c > a > d
3: d > a > b > c
3: c > a > b > d
2: d > b > c > a
1: a > d > b > c
1: c > b > a > d
1: b > d > a > c
1: c > d > a > b
1: b > a > c > d
"""

PERFECT_CYCLE = """candidates: a b c
1: a > b > c
1: b > c > a
1: c > a > b
"""

BORDA_PAIR = """candidates: a b c x y
1: x > a > b > c > y
1: y > x > a > b > c
2: y > x > c > b > a
"""

BORDA_PAIR_REDUCED = """candidates: a b c x y
1: a > b > c > x > y
1: y > a > b > c > x
2: y > x > c > b > a
"""

_builtin = [
    {
        'name': 'split_cycle_four_candidates',
        'description': "a three cycle with split number 3 above a candidate beaten by everyone",
        'profiles': {'P': FOUR_CANDIDATES},
        'method': 'split_cycle',
        'expectations': [
            {'kind': 'margin', 'profile': 'P', 'pair': ['a', 'b'], 'expected': 5},
            {'kind': 'margin', 'profile': 'P', 'pair': ['b', 'c'], 'expected': 7},
            {'kind': 'margin', 'profile': 'P', 'pair': ['c', 'a'], 'expected': 3},
            {'kind': 'relation', 'method': 'split_cycle', 'profile': 'P',
             'defeats': [['a', 'b'], ['b', 'c'], ['a', 'd'], ['b', 'd'], ['c', 'd']]},
        ] + [
            {'kind': 'relation', 'method': 'split_cycle', 'formulation': f, 'profile': 'P',
             'defeats': [['a', 'b'], ['b', 'c'], ['a', 'd'], ['b', 'd'], ['c', 'd']]}
            for f in ('threshold', 'all_cycles', 'edge_cycles', 'widest_path')
        ] + [
            {'kind': 'winners', 'method': 'split_cycle', 'profile': 'P', 'expected': ['a']},
            {'kind': 'relation', 'method': 'global_split', 'profile': 'P',
             'defeats': [['a', 'b'], ['b', 'c']]},
            {'kind': 'relation', 'method': 'copeland', 'profile': 'P',
             'defeats': [['a', 'd'], ['b', 'd'], ['c', 'd']]},
        ],
    },
    {
        'name': 'split_cycle_iia_scaffold',
        'description': "reversing one edge of an acyclic profile into a perfect cycle removes a defeat",
        'profiles': {
            'P': "candidates: a b c\n1: a > b > c\n1: b > a > c\n1: c > a > b\n",
            'P_prime': PERFECT_CYCLE,
        },
        'method': 'split_cycle',
        'candidates': ['a', 'b'],
        'expectations': [
            {'kind': 'defeat', 'method': 'split_cycle', 'profile': 'P', 'pair': ['a', 'b']},
            {'kind': 'relation', 'method': 'split_cycle', 'profile': 'P_prime', 'defeats': []},
            {'kind': 'related', 'predicate': 'coherent_iia', 'profiles': ['P', 'P_prime'],
             'pair': ['a', 'b'], 'expected': False},
            {'kind': 'axiom', 'axiom': 'fiia', 'method': 'split_cycle',
             'profiles': ['P', 'P_prime'], 'expected': 'counterexample'},
        ],
    },
    {
        'name': 'borda_coherent_iia',
        'description': "deleting edges not connecting x and y flips the Borda verdict between them",
        'profiles': {'P': BORDA_PAIR, 'P_prime': BORDA_PAIR_REDUCED},
        'axiom': 'coherent_iia',
        'method': 'borda',
        'candidates': ['x', 'y'],
        'expectations': [
            {'kind': 'defeat', 'method': 'borda', 'profile': 'P', 'pair': ['x', 'y']},
            {'kind': 'defeat', 'method': 'borda', 'profile': 'P_prime', 'pair': ['y', 'x']},
            {'kind': 'margin', 'profile': 'P', 'pair': ['y', 'x'], 'expected': 2},
            {'kind': 'defeat', 'method': 'split_cycle', 'profile': 'P', 'pair': ['y', 'x']},
            {'kind': 'related', 'predicate': 'coherent_iia', 'profiles': ['P', 'P_prime'],
             'pair': ['x', 'y']},
            {'kind': 'axiom', 'axiom': 'coherent_iia', 'method': 'borda',
             'profiles': ['P', 'P_prime'], 'expected': 'counterexample'},
            {'kind': 'axiom', 'axiom': 'coherent_iia', 'method': 'split_cycle',
             'profiles': ['P', 'P_prime'], 'expected': 'holds_on_domain'},
        ],
    },
    {
        'name': 'borda_global_local',
        'description': "Borda's global and local choice differ on the same subset",
        'profiles': {'P': BORDA_PAIR},
        'method': 'borda',
        'expectations': [
            {'kind': 'global_choice', 'method': 'borda', 'profile': 'P',
             'subset': ['x', 'y', 'a'], 'expected': ['x']},
            {'kind': 'local_choice', 'method': 'borda', 'profile': 'P',
             'subset': ['x', 'y', 'a'], 'expected': ['y']},
        ],
    },
    {
        'name': 'borda_spoiler_clone',
        'description': "adding a clone of c makes c beat a under Borda",
        'profiles': {
            'P_minus_b': "candidates: a c\n2: c > a\n3: a > c\n",
            'P': "candidates: a b c\n2: c > b > a\n3: a > c > b\n",
        },
        'axiom': 'immunity_to_spoilers',
        'method': 'borda',
        'candidates': ['a', 'b'],
        'expectations': [
            {'kind': 'restriction', 'profile': 'P', 'subset': ['a', 'c'], 'equals': 'P_minus_b'},
            {'kind': 'defeat', 'method': 'borda', 'profile': 'P_minus_b', 'pair': ['a', 'c']},
            {'kind': 'defeat', 'method': 'borda', 'profile': 'P', 'pair': ['c', 'a']},
            {'kind': 'defeated', 'method': 'borda', 'profile': 'P', 'candidate': 'b'},
            {'kind': 'margin', 'profile': 'P', 'pair': ['a', 'b'], 'expected': 1},
            {'kind': 'clone', 'profile': 'P', 'candidate': 'b', 'of': 'c'},
            {'kind': 'axiom', 'axiom': 'immunity_to_spoilers', 'method': 'borda',
             'profiles': ['P'], 'expected': 'counterexample'},
            {'kind': 'axiom', 'axiom': 'immunity_to_spoilers', 'method': 'split_cycle',
             'profiles': ['P'], 'expected': 'holds_on_domain'},
        ],
    },
    {
        'name': 'split_cycle_modified_iia',
        'description': "same x-vs-y orders and between sets, yet the defeat of a over b disappears",
        'profiles': {
            'P': "candidates: a b c d\n1: a > b > c > d\n1: b > c > d > a\n1: a > b > c > d\n1: a > b > d > c\n",
            'P_prime': "candidates: a b c d\n1: a > b > c > d\n1: b > c > d > a\n1: c > d > a > b\n1: d > a > b > c\n",
        },
        'method': 'split_cycle',
        'candidates': ['a', 'b'],
        'expectations': [
            {'kind': 'defeat', 'method': 'split_cycle', 'profile': 'P', 'pair': ['a', 'b']},
            {'kind': 'relation', 'method': 'split_cycle', 'profile': 'P_prime', 'defeats': []},
            {'kind': 'margin', 'profile': 'P', 'pair': ['b', 'd'], 'expected': 4},
            {'kind': 'related', 'predicate': 'modified', 'profiles': ['P', 'P_prime'],
             'pair': ['a', 'b']},
            {'kind': 'related', 'predicate': 'intensity', 'profiles': ['P', 'P_prime'],
             'pair': ['a', 'b']},
            {'kind': 'axiom', 'axiom': 'modified_iia', 'method': 'split_cycle',
             'profiles': ['P', 'P_prime'], 'expected': 'counterexample'},
            {'kind': 'axiom', 'axiom': 'intensity_iia', 'method': 'split_cycle',
             'profiles': ['P', 'P_prime'], 'expected': 'counterexample'},
        ],
    },
    {
        'name': 'local_alpha_impossibility',
        'description': "on a perfect cycle binary majoritarianism and availability force a local alpha violation",
        'profiles': {'P': PERFECT_CYCLE},
        'axiom': 'local_alpha',
        'method': 'split_cycle',
        'expectations': [
            {'kind': 'relation', 'method': 'split_cycle', 'profile': 'P', 'defeats': []},
            {'kind': 'local_alpha_impossibility', 'profile': 'P'},
            {'kind': 'axiom', 'axiom': 'local_alpha', 'method': 'split_cycle',
             'profiles': ['P'], 'expected': 'counterexample'},
        ],
    },
    {
        'name': 'borda_dead_candidate',
        'description': "deleting a losing candidate turns the Borda winner into a tie",
        'profiles': {'P': "candidates: w x y z\n2: x > y > z > w\n1: z > w > x > y\n"},
        'method': 'borda',
        'expectations': [
            {'kind': 'winners', 'method': 'borda', 'profile': 'P', 'expected': ['x']},
            {'kind': 'local_choice', 'method': 'borda', 'profile': 'P',
             'subset': ['x', 'z', 'w'], 'expected': ['x', 'z']},
            {'kind': 'global_choice', 'method': 'borda', 'profile': 'P',
             'subset': ['x', 'z', 'w'], 'expected': ['x']},
        ],
    },
    {
        'name': 'pareto_separation_local_alpha',
        'description': "a rule satisfying local alpha that still violates fixed-agenda IIA",
        'profiles': {
            'P': "candidates: x y z\n2: x > z > y\n",
            'P_prime': "candidates: x y z\n2: x > y > z\n",
        },
        'axiom': 'fiia',
        'method': 'pareto_separation',
        'candidates': ['x', 'y'],
        'expectations': [
            {'kind': 'defeat', 'method': 'pareto_separation', 'profile': 'P', 'pair': ['x', 'y']},
            {'kind': 'defeat', 'method': 'pareto_separation', 'profile': 'P_prime',
             'pair': ['x', 'y'], 'present': False},
            {'kind': 'axiom', 'axiom': 'fiia', 'method': 'pareto_separation',
             'profiles': ['P', 'P_prime'], 'expected': 'counterexample'},
            {'kind': 'axiom_domain', 'axiom': 'local_alpha', 'method': 'pareto_separation',
             'domain': {'candidates': ['x', 'y', 'z'], 'voters': [1, 3]},
             'expected': 'holds_on_domain'},
        ],
    },
]


def builtin_cases():
    """the built-in suite, in a fixed order"""
    return [WitnessCase.from_dict(d) for d in _builtin]


# command line tokens for some of the cases above
ALIASES = {
    "example12_borda": "borda_coherent_iia",
    "prop13_cycle": "local_alpha_impossibility",
    "appendixB_arrow_borda": "borda_dead_candidate",
}


def get_case(name):
    name = ALIASES.get(name, name)
    for d in _builtin:
        if d['name'] == name:
            return WitnessCase.from_dict(d)
    raise WitnessError("unknown witness case %r, use one of %s"
                       %(name, ", ".join(d['name'] for d in _builtin)))
