import os

import pytest

from splitcycle import Engine, parse_profile, load_profile

DATA = os.path.join(os.path.dirname(__file__), "data")


def data_path(name):
    return os.path.join(DATA, name)


class SampleEngine(Engine):
    """engine with small defaults for the tests"""

    defaults = {
        'budget'    : 100000,
        'log_level' : "DEBUG",
    }

    def finalize_setup(self):
        self.collected = []
        for name in ("axioms.scan_started", "axioms.counterexample",
                     "axioms.scan_finished", "witness.verified"):
            self.events.register(name, self.collect)

    def collect(self, name, config, **kw):
        self.collected.append((name, kw))


@pytest.fixture
def engine():
    return SampleEngine()


@pytest.fixture
def ini_engine():
    return SampleEngine(config_file=os.path.join(os.path.dirname(__file__), "testconfig.ini"))


@pytest.fixture
def q():
    return load_profile(data_path("q.vote"))


@pytest.fixture
def four_candidates():
    return load_profile(data_path("four_candidates.vote"))


@pytest.fixture
def borda_pair():
    P = parse_profile("""candidates: a b c x y
1: x > a > b > c > y
1: y > x > a > b > c
2: y > x > c > b > a
""")
    P_prime = parse_profile("""candidates: a b c x y
1: a > b > c > x > y
1: y > a > b > c > x
2: y > x > c > b > a
""")
    return P, P_prime


@pytest.fixture
def spoiler():
    P = parse_profile("candidates: a b c\n2: c > b > a\n3: a > c > b\n")
    P_minus_b = parse_profile("candidates: a c\n2: c > a\n3: a > c\n")
    return P, P_minus_b


@pytest.fixture
def intensity_pair():
    P = parse_profile("""candidates: a b c d
1: a > b > c > d
1: b > c > d > a
1: a > b > c > d
1: a > b > d > c
""")
    P_prime = parse_profile("""candidates: a b c d
1: a > b > c > d
1: b > c > d > a
1: c > d > a > b
1: d > a > b > c
""")
    return P, P_prime


@pytest.fixture
def perfect_cycle():
    return parse_profile("candidates: a b c\n1: a > b > c\n1: b > c > a\n1: c > a > b\n")


@pytest.fixture
def dead_candidate():
    return parse_profile("candidates: w x y z\n2: x > y > z > w\n1: z > w > x > y\n")


@pytest.fixture
def datadir():
    return data_path
