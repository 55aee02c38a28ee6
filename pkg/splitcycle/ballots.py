"""
profiles, ballots and the transformations the axioms are phrased in

A :class:`Profile` maps voters to strict linear :class:`Ballot` orders over one
candidate set. Profiles are immutable; every transformation returns a new one.
"""

import re
import math
import itertools

import logbook
import numpy as np
from werkzeug.utils import cached_property

from .exceptions import ProfileError, ParseError, BudgetExceeded, ConfigurationError

__all__ = ['Ballot', 'Profile', 'ProfileDomain', 'parse_profile', 'load_profile',
           'restrict', 'replicate', 'add_reversed_pair', 'permute_voters',
           'permute_candidates', 'margin', 'condorcet_winner', 'is_clone',
           'enumerate_profiles', 'count_profiles', 'all_ballots', 'DOMAIN_MODES']

log = logbook.Logger("splitcycle.ballots")

CANDIDATE_RE = re.compile(r"^[A-Za-z0-9_]+$")

DOMAIN_MODES = ('exhaustive-multiset', 'exhaustive-sequence', 'random')


def check_candidate(token):
    """make sure ``token`` is a valid candidate id and return it"""
    if not isinstance(token, str) or not CANDIDATE_RE.match(token):
        raise ProfileError("invalid candidate token %r" %(token,))
    return token


class Ballot(object):
    """a strict linear order over candidates, highest ranked first"""

    __slots__ = ['ranking', '_positions']

    def __init__(self, ranking):
        ranking = tuple(ranking)
        for c in ranking:
            check_candidate(c)
        if len(set(ranking)) != len(ranking):
            raise ProfileError("duplicate candidate in ballot %s" %" > ".join(ranking))
        if not ranking:
            raise ProfileError("empty ballot")
        self.ranking = ranking
        self._positions = dict((c, i) for i, c in enumerate(ranking))

    @classmethod
    def parse(cls, text):
        """parse ``"a > b > c"``"""
        return cls(t.strip() for t in text.split(">"))

    def __iter__(self):
        return iter(self.ranking)

    def __len__(self):
        return len(self.ranking)

    def __eq__(self, other):
        return isinstance(other, Ballot) and self.ranking == other.ranking

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.ranking < other.ranking

    def __hash__(self):
        return hash(self.ranking)

    def __repr__(self):
        return "<Ballot %s>" %self

    def __str__(self):
        return " > ".join(self.ranking)

    @property
    def candidates(self):
        return frozenset(self.ranking)

    @property
    def top(self):
        return self.ranking[0]

    @property
    def bottom(self):
        return self.ranking[-1]

    def position(self, c):
        """0-based position of ``c``, 0 being the top"""
        return self._positions[c]

    def prefers(self, x, y):
        """``True`` if ``x`` is ranked above ``y``"""
        return self._positions[x] < self._positions[y]

    def restrict(self, candidates):
        """the order-preserving restriction to ``candidates``"""
        return Ballot(c for c in self.ranking if c in candidates)

    def reversed(self):
        return Ballot(reversed(self.ranking))

    def rename(self, mapping):
        """rewrite every candidate token ``c`` as ``mapping[c]``"""
        return Ballot(mapping[c] for c in self.ranking)

    def between(self, x, y):
        """the set of candidates ranked strictly between ``x`` and ``y``"""
        i, j = sorted((self._positions[x], self._positions[y]))
        return frozenset(self.ranking[i+1:j])

    def lift(self, x):
        """move ``x`` above the candidate ranked immediately above it

        :param x: a candidate which is not ranked first
        """
        i = self._positions[x]
        if i == 0:
            raise ProfileError("%s is already ranked first" %x)
        r = list(self.ranking)
        r[i-1], r[i] = r[i], r[i-1]
        return Ballot(r)


class Profile(object):
    """an election: an ordered list of ``(voter, ballot)`` pairs over a fixed
    candidate set.

    :param candidates: the candidate tokens
    :param voters: a sequence of ``(voter_id, ballot)`` pairs. Ballots may be
        given as :class:`Ballot` instances or as sequences of candidates.
    """

    def __init__(self, candidates, voters):
        candidates = frozenset(check_candidate(c) for c in candidates)
        if not candidates:
            raise ProfileError("a profile needs at least one candidate")
        ballots = []
        seen = set()
        for voter, ballot in voters:
            if not isinstance(ballot, Ballot):
                ballot = Ballot(ballot)
            if voter in seen:
                raise ProfileError("duplicate voter %r" %(voter,))
            seen.add(voter)
            if ballot.candidates != candidates:
                missing = sorted(candidates - ballot.candidates)
                unknown = sorted(ballot.candidates - candidates)
                raise ProfileError("ballot %s does not rank exactly the candidates (missing %s, unknown %s)"
                                   %(ballot, missing, unknown))
            ballots.append((voter, ballot))
        if not ballots:
            raise ProfileError("a profile needs at least one voter")
        self.candidates = candidates
        self.voters = tuple(ballots)

    @classmethod
    def from_ballots(cls, ballots, candidates=None):
        """build a profile with voters ``0..n-1`` from a list of ballots"""
        ballots = [b if isinstance(b, Ballot) else Ballot(b) for b in ballots]
        if candidates is None:
            candidates = ballots[0].candidates if ballots else ()
        return cls(candidates, enumerate(ballots))

    @classmethod
    def from_counts(cls, groups, candidates=None):
        """build a profile from ``(count, ballot)`` groups, voters numbered in group order"""
        ballots = []
        for count, ballot in groups:
            ballots.extend([ballot] * count)
        return cls.from_ballots(ballots, candidates)

    ####
    #### accessors
    ####

    @cached_property
    def sorted_candidates(self):
        return tuple(sorted(self.candidates))

    @property
    def ballots(self):
        return tuple(b for v, b in self.voters)

    @property
    def voter_ids(self):
        return tuple(v for v, b in self.voters)

    @property
    def num_voters(self):
        return len(self.voters)

    @cached_property
    def index(self):
        """candidate -> row/column in :meth:`margin_matrix`"""
        return dict((c, i) for i, c in enumerate(self.sorted_candidates))

    @cached_property
    def _margins(self):
        n = len(self.sorted_candidates)
        m = np.zeros((n, n), dtype=np.int64)
        for ballot in self.ballots:
            positions = np.array([ballot.position(c) for c in self.sorted_candidates])
            m += np.sign(positions[None, :] - positions[:, None])
        return m

    def margin_matrix(self):
        """the antisymmetric margin matrix indexed by :attr:`sorted_candidates`"""
        return self._margins.copy()

    def margin(self, x, y):
        """number of voters ranking ``x`` over ``y`` minus those ranking ``y`` over ``x``"""
        if x == y:
            raise ProfileError("margin of %s over itself is undefined" %x)
        for c in (x, y):
            if c not in self.candidates:
                raise ProfileError("unknown candidate %r" %(c,))
        return int(self._margins[self.index[x], self.index[y]])

    def anonymized(self):
        """``(count, ballot)`` groups in order of first appearance"""
        counts = {}
        order = []
        for ballot in self.ballots:
            if ballot not in counts:
                order.append(ballot)
                counts[ballot] = 0
            counts[ballot] += 1
        return [(counts[b], b) for b in order]

    def without(self, c):
        """the profile with candidate ``c`` deleted"""
        return restrict(self, self.candidates - set([c]))

    def to_vote_text(self):
        """serialize into the ``.vote`` format; voter ids are not preserved"""
        lines = ["candidates: %s" %" ".join(self.sorted_candidates)]
        for count, ballot in self.anonymized():
            lines.append("%s: %s" %(count, ballot))
        return "\n".join(lines) + "\n"

    def to_dict(self):
        return {
            'candidates': list(self.sorted_candidates),
            'ballots': [[count, list(ballot)] for count, ballot in self.anonymized()],
        }

    ####
    #### comparison
    ####

    def __eq__(self, other):
        return (isinstance(other, Profile) and self.candidates == other.candidates
                and self.voters == other.voters)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.candidates, self.voters))

    def __len__(self):
        return len(self.voters)

    def __repr__(self):
        return "<Profile %s voters over %s>" %(self.num_voters, ",".join(self.sorted_candidates))


####
#### parsing
####

def parse_profile(text):
    """parse the contents of a ``.vote`` file

    The first non-comment line declares the candidates (``candidates: a b c``),
    each further line is a ballot group ``<count>: c1 > c2 > ... > ck``. ``#``
    starts a comment. Voters are numbered sequentially in file order.
    """
    candidates = None
    groups = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if candidates is None:
            key, sep, rest = line.partition(":")
            if not sep or key.strip() != "candidates":
                raise ParseError("expected 'candidates:' declaration", lineno)
            tokens = rest.split()
            if not tokens:
                raise ParseError("no candidates declared", lineno)
            for t in tokens:
                if not CANDIDATE_RE.match(t):
                    raise ParseError("invalid candidate token %r" %t, lineno)
            if len(set(tokens)) != len(tokens):
                raise ParseError("duplicate candidate declaration", lineno)
            candidates = frozenset(tokens)
            continue
        count, sep, rest = line.partition(":")
        if not sep:
            raise ParseError("malformed ballot line %r" %raw, lineno)
        try:
            count = int(count.strip())
        except ValueError:
            raise ParseError("count is not an integer: %r" %count.strip(), lineno)
        if count <= 0:
            raise ParseError("count must be positive, got %s" %count, lineno)
        tokens = [t.strip() for t in rest.split(">")]
        for t in tokens:
            if t not in candidates:
                raise ParseError("unknown candidate %r" %t, lineno)
        if len(set(tokens)) != len(tokens):
            raise ParseError("duplicate candidate in ballot", lineno)
        if len(tokens) != len(candidates):
            missing = sorted(candidates - set(tokens))
            raise ParseError("ballot misses %s" %", ".join(missing), lineno)
        groups.append((count, Ballot(tokens)))
    if candidates is None:
        raise ParseError("empty ballot file")
    if not groups:
        raise ParseError("no ballots given")
    return Profile.from_counts(groups, candidates)


def load_profile(path):
    """read and parse a ``.vote`` file"""
    with open(path, encoding="utf-8") as fp:
        return parse_profile(fp.read())


####
#### transformations
####

def restrict(P, Y):
    """restrict every ballot of ``P`` to the candidates in ``Y``"""
    Y = frozenset(Y)
    if not Y:
        raise ProfileError("cannot restrict to an empty candidate set")
    if not Y <= P.candidates:
        raise ProfileError("%s are not candidates of the profile" %sorted(Y - P.candidates))
    if Y == P.candidates:
        return P
    return Profile(Y, [(v, b.restrict(Y)) for v, b in P.voters])


def replicate(P, m):
    """replace each voter by ``m`` copies of that voter

    Copies of voter ``v`` get the ids ``(v, 0) .. (v, m-1)``; for ``m == 1`` the
    profile is returned as is.
    """
    if m < 1:
        raise ProfileError("replication factor must be positive, got %s" %m)
    if m == 1:
        return P
    return Profile(P.candidates, [((v, k), b) for v, b in P.voters for k in range(m)])


def _fresh_voter_ids(P, n):
    ints = [v for v in P.voter_ids if isinstance(v, int) and not isinstance(v, bool)]
    start = max(ints) + 1 if ints else 0
    taken = set(P.voter_ids)
    ids = []
    while len(ids) < n:
        if start not in taken:
            ids.append(start)
        start += 1
    return ids


def add_reversed_pair(P, b):
    """append two fresh voters, one with ballot ``b`` and one with ``b`` reversed"""
    if not isinstance(b, Ballot):
        b = Ballot(b)
    if b.candidates != P.candidates:
        raise ProfileError("ballot %s does not range over the profile's candidates" %b)
    first, second = _fresh_voter_ids(P, 2)
    return Profile(P.candidates, list(P.voters) + [(first, b), (second, b.reversed())])


def _check_bijection(mapping, domain, what):
    if set(mapping) != set(domain) or set(mapping.values()) != set(domain):
        raise ProfileError("not a bijection on the %s" %what)


def permute_voters(P, pi):
    """reassign ballots: voter ``pi[v]`` receives the ballot of voter ``v``

    Voter order is kept, so the identity returns ``P`` and ``pi`` followed by its
    inverse restores ``P``.
    """
    _check_bijection(pi, P.voter_ids, "voters")
    assigned = dict((pi[v], b) for v, b in P.voters)
    return Profile(P.candidates, [(v, assigned[v]) for v in P.voter_ids])


def permute_candidates(P, sigma):
    """rewrite every candidate token ``c`` as ``sigma[c]`` within each ballot

    ``sigma`` maps old names to new ones, so a ballot ``[c1, .., ck]`` becomes
    ``[sigma[c1], .., sigma[ck]]`` and
    ``margin(sigma P, sigma(x), sigma(y)) == margin(P, x, y)``. Read the other
    way, ``margin(sigma P, x, y) == margin(P, sigma^-1(x), sigma^-1(y))``.
    """
    _check_bijection(sigma, P.candidates, "candidates")
    return Profile(P.candidates, [(v, b.rename(sigma)) for v, b in P.voters])


####
#### margins and winners
####

def margin(P, x, y):
    return P.margin(x, y)


def condorcet_winner(P):
    """the candidate with positive margin over every other one, or ``None``"""
    for x in P.sorted_candidates:
        if all(P.margin(x, y) > 0 for y in P.sorted_candidates if y != x):
            return x
    return None


def is_clone(P, c, of):
    """``True`` if ``c`` and ``of`` are adjacent in every ballot, i.e. no voter
    ranks another candidate between them"""
    return all(not b.between(c, of) for b in P.ballots)


####
#### domains
####

def all_ballots(candidates):
    """every strict linear order over ``candidates`` in lexicographic order"""
    return [Ballot(r) for r in itertools.permutations(sorted(candidates))]


class ProfileDomain(object):
    """describes a set of profiles to quantify over

    :param candidates: the candidate tokens
    :param voters: inclusive ``(min, max)`` voter counts
    :param mode: one of ``exhaustive-multiset``, ``exhaustive-sequence`` or ``random``
    :param sample_count: number of profiles to draw in random mode
    :param seed: random seed for random mode
    """

    def __init__(self, candidates, voters=(1, 3), mode="exhaustive-multiset",
                 sample_count=1000, seed=0):
        self.candidates = frozenset(check_candidate(c) for c in candidates)
        if not self.candidates:
            raise ConfigurationError("a domain needs at least one candidate")
        lo, hi = voters
        if lo < 1 or hi < lo:
            raise ConfigurationError("invalid voter range %s..%s" %(lo, hi))
        if mode not in DOMAIN_MODES:
            raise ConfigurationError("unknown domain mode %r, use one of %s" %(mode, ", ".join(DOMAIN_MODES)))
        if mode == "random" and sample_count < 1:
            raise ConfigurationError("sample_count must be positive")
        self.voters = (lo, hi)
        self.mode = mode
        self.sample_count = sample_count
        self.seed = seed

    def replace(self, **kw):
        """a copy of this domain with some fields changed"""
        params = dict(candidates=self.candidates, voters=self.voters, mode=self.mode,
                      sample_count=self.sample_count, seed=self.seed)
        params.update(kw)
        return ProfileDomain(**params)

    def to_dict(self):
        d = {
            'candidates': sorted(self.candidates),
            'voters': "%s..%s" %self.voters,
            'mode': self.mode,
        }
        if self.mode == "random":
            d['samples'] = self.sample_count
            d['seed'] = self.seed
        return d

    def __repr__(self):
        return "<ProfileDomain %s %s..%s %s>" %(",".join(sorted(self.candidates)),
                                                self.voters[0], self.voters[1], self.mode)


def count_profiles(D):
    """number of profiles :func:`enumerate_profiles` would produce for ``D``"""
    if D.mode == "random":
        return D.sample_count
    m = math.factorial(len(D.candidates))
    lo, hi = D.voters
    if D.mode == "exhaustive-sequence":
        return sum(m ** n for n in range(lo, hi+1))
    return sum(math.comb(n + m - 1, m - 1) for n in range(lo, hi+1))


def enumerate_profiles(D, budget=10**7):
    """generate the profiles of domain ``D``

    :param D: a :class:`ProfileDomain`
    :param budget: the maximal number of profiles; larger domains raise
        :class:`~splitcycle.exceptions.BudgetExceeded` before anything is generated
    """
    total = count_profiles(D)
    if total > budget:
        log.warning("refusing to enumerate {0!r}: {1} profiles over budget {2}", D, total, budget)
        raise BudgetExceeded(total, budget)
    return _generate(D)


def _generate(D):
    ballots = all_ballots(D.candidates)
    lo, hi = D.voters
    if D.mode == "exhaustive-sequence":
        for n in range(lo, hi+1):
            for combo in itertools.product(ballots, repeat=n):
                yield Profile.from_ballots(combo, D.candidates)
    elif D.mode == "exhaustive-multiset":
        for n in range(lo, hi+1):
            for combo in itertools.combinations_with_replacement(ballots, n):
                yield Profile.from_ballots(combo, D.candidates)
    else:
        rng = np.random.default_rng(D.seed)
        order = sorted(D.candidates)
        for _ in range(D.sample_count):
            n = int(rng.integers(lo, hi + 1))
            yield Profile.from_ballots(
                [[order[i] for i in rng.permutation(len(order))] for _ in range(n)],
                D.candidates)
