"""
some useful decorators for the command classes in :mod:`splitcycle.scripts`
"""

import functools

from .helpers import dumps

__all__ = ['asjson', 'render']


class asjson(object):
    """takes the data returned by a command method and writes it to the
    command's output stream as deterministic JSON. The method may return a
    ``(data, exit_code)`` tuple, otherwise the exit code is 0.
    """

    def __call__(self, method):

        @functools.wraps(method)
        def wrapper(self, *args, **kwargs):
            data, code = _split(method(self, *args, **kwargs))
            self.out.write(dumps(data) + "\n")
            return code

        return wrapper


class render(object):
    """a decorator which takes a dictionary from the wrapped method and
    pushes it into the engine's ``render()`` method.

    :param tmplname: The template name to use for rendering
    """

    def __init__(self, tmplname):
        self.tmplname = tmplname

    def __call__(self, method):

        that = self

        @functools.wraps(method)
        def wrapper(self, *args, **kwargs):
            data, code = _split(method(self, *args, **kwargs))
            self.out.write(self.engine.render(that.tmplname, **data))
            return code

        return wrapper


def _split(rv):
    if isinstance(rv, tuple):
        return rv
    return rv, 0
