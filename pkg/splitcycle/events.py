import logbook

__all__ = ['Events', 'log_handler']

log = logbook.Logger("splitcycle.events")


class Events(object):
    """a container for holding event queues"""

    def __init__(self):
        """initialize the event container"""
        self.handlers = {} # mapping event name -> list of handlers

    def register(self, name, handler):
        """register a new handler for a given event

        :param name: the name of the event this handler should be triggered for,
            e.g. ``axioms.counterexample``
        :param handler: a callable ``handler(name, config, **kw)``
        """
        self.handlers.setdefault(name, []).append(handler)

    def handle(self, name, config, **kw):
        """handle an event by calling all registered handlers for it

        :param name: The name of the event which was triggered
        :param config: The engine configuration
        :param kw: optional keyword arguments to be passed to each handler
        """
        for handler in self.handlers.get(name, []):
            handler(name, config, **kw)


def log_handler(name, config, **kw):
    """event handler which writes a debug line per event, used by the scripts"""
    if 'verdict' in kw:
        v = kw['verdict']
        log.debug("{0}: {1}/{2} {3} ({4} scanned)", name, v.axiom, v.method, v.status, v.scanned)
    elif 'report' in kw:
        log.debug("{0}: {1} passed={2}", name, kw['report'].name, kw['report'].passed)
    else:
        log.debug("{0}: {1}", name, ", ".join("%s=%s" %(k, kw[k]) for k in sorted(kw)))
