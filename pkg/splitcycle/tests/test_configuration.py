from splitcycle import AttributeMapper
from splitcycle.helpers import fix_types, parse_range, parse_tokens
from splitcycle.exceptions import ConfigurationError
from splitcycle.tests.conftest import SampleEngine
import logbook
import pytest


####
#### the attribute mapper
####

def test_basics():
    am = AttributeMapper({
        'a' : 3
    })

    assert am.a == 3
    assert am['a'] == 3

def test_nested_update():
    am = AttributeMapper({
        'a' : AttributeMapper({
            'b' : 9,
            'c' : 10,
        })
    })
    am.update({
        'foo' : 'bar',
        'a' : {
            'b' : 13
        }
    })

    assert am.a.b == 13
    assert am.a.c == 10
    assert am.foo == "bar"

def test_dotted_update():
    am = AttributeMapper({
        'a' : AttributeMapper({
            'b' : 9,
            'c' : AttributeMapper({
                'd' : 19
            }),
        })
    })

    am.update({
        'a.b' : 13,
        'a.c.d' : 21,
        'a.e' : 1,
    })

    assert am.a.b == 13
    assert am.a.c.d == 21
    assert am.a.e == 1

def test_dotted_update_first_missing():
    am = AttributeMapper({'a' : AttributeMapper({'b' : 9})})
    pytest.raises(ConfigurationError, am.update, {'e.b' : 13})

def test_dotted_update_no_mapper():
    am = AttributeMapper({'e' : "foobar"})
    pytest.raises(ConfigurationError, am.update, {'e.foo' : 'bar'})

def test_only_keys_are_attributes():
    am = AttributeMapper({'a' : 1})
    with pytest.raises(AttributeError):
        am.b
    assert not hasattr(am, "_clone")
    am.b = 2
    assert am == {'a' : 1, 'b' : 2}


####
#### helpers
####

def test_fix_types():
    fixed = fix_types({'budget': "5_000", 'debug': "yes", 'name': 3, 'seed': None},
                      {'budget': int, 'debug': bool, 'name': str, 'seed': int})
    assert fixed == {'budget': 5000, 'debug': True, 'name': "3", 'seed': None}
    with pytest.raises(ConfigurationError):
        fix_types({'budget': "lots"}, {'budget': int})

@pytest.mark.parametrize("value, expected", [("1..3", (1, 3)), ("4", (4, 4)), (" 2..2 ", (2, 2))])
def test_parse_range(value, expected):
    assert parse_range(value) == expected

@pytest.mark.parametrize("value", ["3..1", "a..b", ""])
def test_parse_range_errors(value):
    with pytest.raises(ConfigurationError):
        parse_range(value)

def test_parse_tokens():
    assert parse_tokens("a,b c") == ["a", "b", "c"]
    assert parse_tokens(("x", "y")) == ["x", "y"]


####
#### the engine
####

def test_defaults(engine):
    assert engine.config.budget == 100000
    assert engine.config.log_level == "DEBUG"

def test_enforced_defaults(engine):
    assert engine.config.derived_pairs == 4
    assert engine.config.domain.mode == "exhaustive-multiset"
    assert engine.config.domain.samples == 1000

def test_enforced_defaults_are_not_shared():
    first = SampleEngine(**{'domain.mode': "random"})
    second = SampleEngine()
    assert first.config.domain.mode == "random"
    assert second.config.domain.mode == "exhaustive-multiset"

def test_ini_file(ini_engine):
    assert ini_engine.config.budget == 5000
    assert ini_engine.config.log_level == "info"
    assert ini_engine.config.domain.candidates == "x y z"
    D = ini_engine.domain()
    assert D.candidates == frozenset("xyz")
    assert D.voters == (2, 3)
    assert D.mode == "exhaustive-sequence"

def test_keywords_win_over_config():
    e = SampleEngine({'budget': 7, 'domain.seed': "3"}, budget="9")
    assert e.config.budget == 9
    assert e.config.domain.seed == 3

@pytest.mark.parametrize("kw", [
    {'foo.bar': 1},
    {'budget': "many"},
    {'config_file': "/nonexistent/splitcycle.ini"},
])
def test_configuration_errors(kw):
    with pytest.raises(ConfigurationError):
        SampleEngine(**kw)

def test_domain_overrides(engine):
    D = engine.domain(voters="2..4", mode=None, seed="11")
    assert D.voters == (2, 4)
    assert D.mode == "exhaustive-multiset"
    assert D.seed == 11
    assert D.candidates == frozenset("abc")


####
#### logging
####

def test_logger(engine):
    handler = engine.setup_logger()
    assert isinstance(handler, logbook.StderrHandler)
    assert handler.level == logbook.DEBUG
    assert not handler.bubble

def test_bad_log_level():
    with pytest.raises(ConfigurationError):
        SampleEngine(log_level="loud").setup_logger()

def test_processor_tags_records(engine):
    with logbook.TestHandler() as handler, engine.processor("tabulate"):
        logbook.Logger("splitcycle.test").warning("hello")
    record = handler.records[0]
    assert record.extra['command'] == "tabulate"
    assert record.extra['domain']['voters'] == "1..3"


####
#### templates
####

def test_jinja_environment_is_cached(engine):
    assert engine.jinja_env is engine.jinja_env

def test_render(engine):
    out = engine.render("margin_graph.dot", name="g", nodes=["a"], edges=[], extra=[])
    assert out.startswith("digraph g {")
    assert '"a";' in out


####
#### operations and events
####

def test_check_fires_events(engine):
    v = engine.check("availability", "split_cycle")
    assert v.holds
    assert [name for name, kw in engine.collected] == ["axioms.scan_started",
                                                       "axioms.scan_finished"]
    assert engine.collected[1][1]['verdict'] is v

def test_check_uses_the_budget():
    v = SampleEngine(budget=10).check("availability", "split_cycle")
    assert v.status == "budget_exceeded"

def test_verify_fires_event(engine):
    report = engine.verify("prop13_cycle")
    assert report.passed
    assert engine.collected == [("witness.verified", {'report': report})]

def test_tabulate(engine, q):
    reports = engine.tabulate(["split_cycle", "borda"], q)
    assert [r['method'] for r in reports] == ["split_cycle", "borda"]
    assert reports[0]['winners'] == ["a"]
