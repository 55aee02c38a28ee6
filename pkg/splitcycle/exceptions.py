# -*- coding: utf-8 -*-
"""
exceptions raised by splitcycle. All of them derive from
:class:`SplitCycleException` so callers (mostly the command line scripts)
can catch them in one place.
"""

__all__ = [
    'SplitCycleException', 'ConfigurationError', 'ProfileError', 'ParseError',
    'GraphError', 'UnknownMethod', 'UnknownAxiom', 'EmptyChoice',
    'BudgetExceeded', 'WitnessError',
]


class SplitCycleException(Exception):
    """Base class for splitcycle exceptions"""

    def __init__(self, msg):
        """initialize the exception"""
        super(SplitCycleException, self).__init__(msg)
        self.msg = msg

    def __repr__(self):
        return """<%s : %s>""" %(self.__class__.__name__, self.msg)

    __str__ = __repr__

class ConfigurationError(SplitCycleException):
    """something went wrong during the configuration phase"""

class ProfileError(SplitCycleException, ValueError):
    """a profile or ballot violates the strict linear order invariants"""

class ParseError(ProfileError):
    """a ballot file could not be parsed"""

    def __init__(self, msg, lineno=None):
        """initialize the exception

        :param msg: the error message
        :param lineno: the 1-based line number in the ballot file, if known
        """
        if lineno is not None:
            msg = "line %s: %s" %(lineno, msg)
        super(ParseError, self).__init__(msg)
        self.lineno = lineno

class GraphError(SplitCycleException, ValueError):
    """a margin graph, cycle or node reference is invalid"""

class UnknownMethod(SplitCycleException, KeyError):
    """the method id is not in the registry"""

class UnknownAxiom(SplitCycleException, KeyError):
    """the axiom id is not known"""

class EmptyChoice(SplitCycleException):
    """a choice function returned nothing, the method is not acyclic on this input"""

class BudgetExceeded(SplitCycleException):
    """a domain is larger than the configured enumeration budget"""

    def __init__(self, requested, budget):
        super(BudgetExceeded, self).__init__(
            "domain has %s profiles but the budget is %s" %(requested, budget))
        self.requested = requested
        self.budget = budget

class WitnessError(SplitCycleException, ValueError):
    """a witness case is unknown or malformed"""
