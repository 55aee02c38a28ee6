"""
the engine ties configuration, logging, templates and events together.

The command line scripts create one :class:`Engine` per invocation. Library
users can create one as well if they want configured domains and budgets;
the domain modules themselves never need it.
"""

from configparser import ConfigParser

import jinja2
import logbook
import werkzeug.utils
from werkzeug.datastructures import ImmutableDict

from .exceptions import ConfigurationError
from .helpers import AttributeMapper, fix_types, parse_range, parse_tokens
from .events import Events
from .ballots import ProfileDomain
from . import axioms, methods, witnesses

__all__ = ['Engine']


class Engine(object):
    """configuration holder and factory for the things a run needs"""

    defaults = {}

    # these have to be existent in the config (DO NOT CHANGE!)
    enforced_defaults = {
        'config_file'       : None,
        'budget'            : 10000000,
        'derived_pairs'     : 4,
        'log_level'         : "WARNING",
        'log_format'        : "{record.channel} : {record.message} (in {record.filename}:{record.lineno})",
        'template_folder'   : "templates",
        'domain'            : ImmutableDict(
            candidates  = "a,b,c",
            voters      = "1..3",
            mode        = "exhaustive-multiset",
            samples     = 1000,
            seed        = 0,
        ),
    }

    # types for values which might come in as strings from INI files or the command line
    config_types = {
        'budget'            : int,
        'derived_pairs'     : int,
        'domain.samples'    : int,
        'domain.seed'       : int,
    }

    jinja_options = ImmutableDict(
        keep_trailing_newline = True,
        trim_blocks = True,
        lstrip_blocks = True,
    )

    jinja_filters = ImmutableDict()

    # section of an INI file whose options are top level keys
    main_section = "splitcycle"

    def __init__(self, config={}, **kw):
        """initialize the engine

        :param config: a dictionary of configuration values, dotted keys like
            ``domain.mode`` are allowed
        :param kw: more configuration values, these win over ``config``
        """
        enforced = dict(self.enforced_defaults)
        self.config = AttributeMapper(enforced)
        self.config['domain'] = AttributeMapper(enforced['domain'])
        self.config.update(self.defaults)

        config = dict(config)
        config_file = kw.get('config_file', config.get('config_file'))
        if config_file is not None:
            self.config.update(fix_types(self.read_config_file(config_file), self.config_types))

        self.config.update(fix_types(config, self.config_types))
        self.config.update(fix_types(kw, self.config_types))
        self.events = Events()
        self.finalize_setup()

    def read_config_file(self, path):
        """read an INI file into a flat dict of (dotted) keys"""
        cfg = ConfigParser()
        if not cfg.read(path):
            raise ConfigurationError("cannot read configuration file %s" %path)
        values = {}
        for section in cfg.sections():
            for option in cfg.options(section):
                if section == self.main_section:
                    values[option] = cfg.get(section, option)
                else:
                    values["%s.%s" %(section, option)] = cfg.get(section, option)
        return values

    def finalize_setup(self):
        """a hook you can use to finalize the setup, e.g. to register event
        handlers or to change configuration values"""

    ####
    #### logging
    ####

    def setup_logger(self):
        """return the stderr handler to use while a command runs"""
        try:
            level = logbook.lookup_level(str(self.config.log_level).upper())
        except LookupError:
            raise ConfigurationError("unknown log level %r" %self.config.log_level)
        return logbook.StderrHandler(
            level=level,
            format_string=self.config.log_format,
            bubble=False,
        )

    def processor(self, command):
        """a :class:`logbook.Processor` tagging records with the command and
        the configured domain"""
        domain = dict(self.config.domain)
        def inject(record):
            record.extra['command'] = command
            record.extra['domain'] = domain
        return logbook.Processor(inject)

    ####
    #### templates
    ####

    @werkzeug.utils.cached_property
    def jinja_env(self):
        """create the jinja environment"""
        options = dict(self.jinja_options)
        if 'loader' not in options:
            options['loader'] = jinja2.PackageLoader("splitcycle", self.config.template_folder)
        env = jinja2.Environment(**options)
        for name, flt in self.jinja_filters.items():
            env.filters[name] = flt
        return env

    def render(self, tmplname, **kw):
        """render template ``tmplname`` with the given context"""
        return self.jinja_env.get_template(tmplname).render(**kw)

    ####
    #### domain level operations with the configured defaults
    ####

    def domain(self, **overrides):
        """the :class:`ProfileDomain` described by ``config.domain``

        :param overrides: ``candidates``, ``voters``, ``mode``, ``samples`` or
            ``seed`` values which win over the configuration; ``None`` values are ignored
        """
        d = dict(self.config.domain)
        d.update((k, v) for k, v in overrides.items() if v is not None)
        d = fix_types(d, {'samples': int, 'seed': int})
        voters = d['voters']
        if not isinstance(voters, tuple):
            voters = parse_range(voters)
        return ProfileDomain(parse_tokens(d['candidates']), voters, d['mode'],
                             sample_count=d['samples'], seed=d['seed'])

    def check(self, axiom, method, domain=None):
        """run :func:`~splitcycle.axioms.check_axiom` with the configured budget"""
        if domain is None:
            domain = self.domain()
        return axioms.check_axiom(axiom, method, domain, budget=self.config.budget,
                                  derived_pairs=self.config.derived_pairs,
                                  events=self.events, config=self.config)

    def check_pairs(self, axiom, method, pairs, candidates=None):
        return axioms.check_axiom_on_pairs(axiom, method, pairs, candidates,
                                           events=self.events, config=self.config)

    def verify(self, case):
        return witnesses.verify_witness(case, events=self.events, config=self.config)

    def tabulate(self, method_ids, P):
        """the defeat output of every method in ``method_ids``, in order"""
        return [methods.tabulate(m, P) for m in method_ids]
