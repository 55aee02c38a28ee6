"""
the ``splitcycle`` command line tool

Every subcommand is a :class:`ScriptBase` subclass. :func:`run` parses the
arguments, builds an :class:`~splitcycle.engine.Engine` and maps exceptions to
exit codes:

====  =====================================================
0     success, the axiom holds or the witness passes
1     counterexample found or witness failed
2     usage or input error
3     domain larger than the enumeration budget
====  =====================================================
"""

import argparse
import json
import os
import sys

import logbook

from .exceptions import (SplitCycleException, BudgetExceeded, GraphError, ProfileError,
                         WitnessError)
from .engine import Engine
from .events import log_handler
from .decorators import asjson, render
from .helpers import dumps, parse_tokens
from .ballots import (load_profile, parse_profile, count_profiles, enumerate_profiles,
                      condorcet_winner, DOMAIN_MODES)
from .graphs import MarginGraph, margin_graph, simple_cycles, mcgarvey, to_dot
from .methods import METHOD_IDS, descriptor, defeat, registry
from .axioms import AXIOM_IDS, HOLDS, COUNTEREXAMPLE, BUDGET_EXCEEDED
from . import witnesses

__all__ = ['ScriptBase', 'COMMANDS', 'run', 'main']

log = logbook.Logger("splitcycle.scripts")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

STATUS_CODES = {
    HOLDS: EXIT_OK,
    COUNTEREXAMPLE: EXIT_FAILED,
    BUDGET_EXCEEDED: EXIT_BUDGET,
}


def _read_json(path, error=SplitCycleException):
    with open(path, encoding="utf-8") as fp:
        try:
            return json.load(fp)
        except ValueError as e:
            raise error("%s is not valid JSON: %s" %(path, e))


class ScriptBase(object):
    """base class for subcommands

    :param out: the stream results are written to
    """

    name = None
    description = "a script"

    def __init__(self, out):
        self.out = out
        self.engine = None
        self.parser = None

    def extend_parser(self):
        """hook for extending the parser by adding new parameters"""

    def add_domain_arguments(self):
        p = self.parser
        p.add_argument('--domain-candidates', metavar='TOKENS',
                       help='comma separated candidates of the domain')
        p.add_argument('--domain-voters', metavar='MIN..MAX', help='voter count range')
        p.add_argument('--domain-mode', choices=DOMAIN_MODES)
        p.add_argument('--samples', type=int, help='number of profiles in random mode')
        p.add_argument('--seed', type=int, help='random seed in random mode')
        p.add_argument('--budget', type=int, help='maximal number of profiles to enumerate')

    def domain_from_args(self, args):
        if args.budget is not None:
            self.engine.config.budget = args.budget
        return self.engine.domain(candidates=args.domain_candidates, voters=args.domain_voters,
                                  mode=args.domain_mode, samples=args.samples, seed=args.seed)

    def __call__(self, args):
        raise NotImplementedError


class Tabulate(ScriptBase):

    name = "tabulate"
    description = "evaluate methods on a ballot file"

    def extend_parser(self):
        self.parser.add_argument('file', help='the .vote file')
        self.parser.add_argument('--method', action='append', dest='methods', metavar='ID',
                                 help='method id, can be repeated (default: split_cycle)')
        self.parser.add_argument('--format', choices=('json', 'table', 'dot'), default='json')

    def __call__(self, args):
        method_ids = args.methods or ['split_cycle']
        for m in method_ids:
            descriptor(m)
        P = load_profile(args.file)
        if args.format == 'table':
            return self.table(P, method_ids)
        if args.format == 'dot':
            G = margin_graph(P)
            for m in method_ids:
                self.out.write(to_dot(G, defeat(m, P), env=self.engine.jinja_env, name=m))
            return EXIT_OK
        return self.as_json(P, method_ids)

    @asjson()
    def as_json(self, P, method_ids):
        return self.engine.tabulate(method_ids, P)

    @render("table.txt")
    def table(self, P, method_ids):
        reports = self.engine.tabulate(method_ids, P)
        return dict(
            candidates=P.sorted_candidates,
            num_voters=P.num_voters,
            groups=P.anonymized(),
            margins=reports[0]['margins'],
            reports=reports,
        )


class Axioms(ScriptBase):

    name = "axioms"
    description = "check an axiom for a method on a profile domain"

    def extend_parser(self):
        self.parser.add_argument('--axiom', required=True, choices=AXIOM_IDS)
        self.parser.add_argument('--method', required=True, metavar='ID')
        self.add_domain_arguments()
        self.parser.add_argument('--pairs-from', metavar='FILE',
                                 help='check explicit profile pairs from a JSON file instead of a domain')
        self.parser.add_argument('--candidates', metavar='TOKENS',
                                 help='only examine pairs of these candidates (with --pairs-from)')

    def __call__(self, args):
        descriptor(args.method)
        if args.pairs_from:
            verdict = self.engine.check_pairs(args.axiom, args.method, self.load_pairs(args.pairs_from),
                                              parse_tokens(args.candidates) if args.candidates else None)
        else:
            verdict = self.engine.check(args.axiom, args.method, self.domain_from_args(args))
        return self.report(verdict)

    @asjson()
    def report(self, verdict):
        return verdict, STATUS_CODES[verdict.status]

    def load_pairs(self, path):
        """read ``{"pairs": [{"P": <vote text>, "P_prime": <vote text>}]}``"""
        data = _read_json(path, ProfileError)
        try:
            return [(parse_profile(p['P']), parse_profile(p['P_prime'])) for p in data['pairs']]
        except (KeyError, TypeError):
            raise ProfileError("%s: expected {\"pairs\": [{\"P\": ..., \"P_prime\": ...}]}" %path)


class Witness(ScriptBase):

    name = "witness"
    description = "verify a built-in witness case or a witness file"

    def extend_parser(self):
        self.parser.add_argument('case', nargs='?', help='built-in case name or witness file')
        self.parser.add_argument('--list', action='store_true', help='list the built-in cases')

    def __call__(self, args):
        if args.list:
            for case in witnesses.builtin_cases():
                self.out.write("%s\n" %case.name)
            return EXIT_OK
        if not args.case:
            raise WitnessError("give a case name or a witness file, or use --list")
        if os.path.isfile(args.case):
            with open(args.case, encoding="utf-8") as fp:
                cases = witnesses.load_cases(fp.read())
            reports = [self.engine.verify(c) for c in cases]
            return self.report(reports, all(r.passed for r in reports))
        report = self.engine.verify(witnesses.get_case(args.case))
        return self.report(report, report.passed)

    @asjson()
    def report(self, data, passed):
        return data, EXIT_OK if passed else EXIT_FAILED


class Synth(ScriptBase):

    name = "synth"
    description = "build a profile realizing a margin graph"

    def extend_parser(self):
        self.parser.add_argument('graph', help='margin graph JSON file')

    def __call__(self, args):
        G = MarginGraph.from_json(_read_json(args.graph, GraphError))
        self.out.write(mcgarvey(G).to_vote_text())
        return EXIT_OK


class ExportDot(ScriptBase):

    name = "export-dot"
    description = "write the margin graph of a ballot file (or margin graph JSON) as DOT"

    def extend_parser(self):
        self.parser.add_argument('file', help='a .vote file or a margin graph .json file')
        self.parser.add_argument('--method', metavar='ID',
                                 help='highlight the defeats of this method')

    def __call__(self, args):
        D = None
        if args.file.endswith(".json"):
            if args.method:
                raise GraphError("--method needs a ballot file")
            G = MarginGraph.from_json(_read_json(args.file, GraphError))
        else:
            P = load_profile(args.file)
            G = margin_graph(P)
            if args.method:
                D = defeat(args.method, P)
        self.out.write(to_dot(G, D, env=self.engine.jinja_env))
        return EXIT_OK


class Enumerate(ScriptBase):

    name = "enumerate"
    description = "stream statistics of every profile in a domain"

    def extend_parser(self):
        self.add_domain_arguments()
        self.parser.add_argument('--count', action='store_true',
                                 help='only print the size of the domain')

    def __call__(self, args):
        D = self.domain_from_args(args)
        total = count_profiles(D)
        if args.count:
            self.out.write(dumps({'domain': D, 'profiles': total}, indent=None) + "\n")
            return EXIT_OK
        condorcet = 0
        for i, P in enumerate(enumerate_profiles(D, self.engine.config.budget)):
            winner = condorcet_winner(P)
            cycles = len(simple_cycles(margin_graph(P)))
            condorcet += winner is not None
            self.out.write(dumps({
                'index': i,
                'voters': P.num_voters,
                'condorcet_winner': winner,
                'majority_cycles': cycles,
            }, indent=None) + "\n")
        self.out.write(dumps({'domain': D, 'profiles': total, 'condorcet_winners': condorcet},
                             indent=None) + "\n")
        return EXIT_OK


class Methods(ScriptBase):

    name = "methods"
    description = "list the registered methods"

    @asjson()
    def __call__(self, args):
        r = registry()
        return [r[m] for m in METHOD_IDS]


COMMANDS = [Tabulate, Axioms, Witness, Synth, ExportDot, Enumerate, Methods]

EVENTS = ("axioms.scan_started", "axioms.counterexample", "axioms.scan_finished",
          "witness.verified")


def make_parser(commands):
    parser = argparse.ArgumentParser(prog="splitcycle",
                                     description="Split Cycle and friends on ranked ballots")
    parser.add_argument('-c', '--config', dest='config_file', metavar='CONFIG',
                        help='INI file with configuration values')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True
    for command in commands.values():
        command.parser = sub.add_parser(command.name, help=command.description,
                                        description=command.description)
        command.extend_parser()
    return parser


def run(argv=None, out=None, engine_class=Engine):
    """run the command line tool

    :param argv: the arguments without the program name, defaults to ``sys.argv[1:]``
    :param out: the result stream, defaults to ``sys.stdout``
    :param engine_class: the :class:`Engine` (sub)class to configure
    :return: the exit code
    """
    if out is None:
        out = sys.stdout
    commands = dict((cls.name, cls(out)) for cls in COMMANDS)
    parser = make_parser(commands)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_USAGE

    try:
        engine = engine_class(config_file=args.config_file)
        handler = engine.setup_logger()
    except SplitCycleException as e:
        log.error(e.msg)
        return EXIT_USAGE
    for name in EVENTS:
        engine.events.register(name, log_handler)
    command = commands[args.command]
    command.engine = engine

    with handler, engine.processor(args.command):
        try:
            return command(args)
        except BudgetExceeded as e:
            log.error(e.msg)
            return EXIT_BUDGET
        except SplitCycleException as e:
            log.error(e.msg)
            return EXIT_USAGE
        except OSError as e:
            log.error("{0}: {1}", e.filename or args.command, e.strerror or e)
            return EXIT_USAGE


def main():
    sys.exit(run())
