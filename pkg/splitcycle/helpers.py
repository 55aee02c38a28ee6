import json
import itertools

from .exceptions import ConfigurationError

__all__ = ['AttributeMapper', 'fix_types', 'powerset', 'parse_range',
           'parse_tokens', 'dumps']


class AttributeMapper(dict):
    """a dictionary like object which also is accessible via getattr/setattr"""

    __slots__ = []

    def __init__(self, default={}, *args, **kwargs):
        super(AttributeMapper, self).__init__(*args, **kwargs)
        self.update(default)
        self.update(kwargs)

    def __getattr__(self, k):
        """retrieve some data from the dict"""
        if k in self:
            return self[k]
        raise AttributeError(k)

    def __setattr__(self, k, v):
        """store an attribute in the map"""
        self[k] = v

    def update(self, d=(), **kw):
        """update the dictionary but make sure that existing included AttributeMappers
        are only updated as well. Dotted keys like ``domain.mode`` are routed into
        the nested mapper called ``domain``.
        """
        items = list(dict(d).items()) + list(kw.items())
        for a, v in items:
            if "." in a:
                prefix, remainder = a.split(".", 1)
                if prefix not in self:
                    raise ConfigurationError("%s does not exist! (from %s)" %(prefix, a))
                if isinstance(self[prefix], AttributeMapper):
                    self[prefix].update({remainder: v})
                    continue
                # existing default config type always wins
                raise ConfigurationError("tried to update %s but %s is not an AttributeMapper!" %(prefix, self[prefix]))

            if a not in self:
                self[a] = v
            elif isinstance(self[a], AttributeMapper) and isinstance(v, dict):
                self[a].update(v)
            elif type(self[a]) == dict and isinstance(v, dict):
                self[a].update(v)
            else:
                self[a] = v


def fix_types(params, type_map):
    """fixes parameters which might come in as string but need to be e.g. boolean

    :param params: A dictionary with configuration parameters
    :param type_map: A dictionary mapping parameter keys to types such as bool

    If a key is not present in the type map then it will simply be passed as it is.
    Dotted keys are looked up with their full name.

    Right now this method supports ``bool``, ``int`` and ``str``
    """
    new_config = {}
    for a, v in params.items():
        if a not in type_map or v is None:
            new_config[a] = v
            continue
        if type_map[a] == bool:
            if isinstance(v, bool):
                new_config[a] = v
            else:
                new_config[a] = str(v).strip().lower() in ("true", "yes", "on", "1")
        elif type_map[a] == int:
            try:
                new_config[a] = int(str(v).replace("_", ""))
            except ValueError:
                raise ConfigurationError("%s must be an integer, got %r" %(a, v))
        else:
            new_config[a] = type_map[a](v)
    return new_config


def powerset(items, min_size=0):
    """all subsets of ``items`` as frozensets, smallest first and in
    lexicographic order within one size"""
    items = sorted(items)
    for k in range(min_size, len(items)+1):
        for combo in itertools.combinations(items, k):
            yield frozenset(combo)


def parse_range(value):
    """parse ``"1..3"`` (or a single ``"3"``) into an inclusive ``(min, max)`` tuple"""
    value = str(value).strip()
    if ".." in value:
        lo, hi = value.split("..", 1)
    else:
        lo = hi = value
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise ConfigurationError("not a voter range: %r" %value)
    if lo > hi:
        raise ConfigurationError("empty voter range: %r" %value)
    return lo, hi


def parse_tokens(value):
    """split a comma or whitespace separated candidate list"""
    if isinstance(value, (list, tuple, set, frozenset)):
        return [str(v) for v in value]
    return [t for t in str(value).replace(",", " ").split() if t]


def jsonconverter(obj):
    """fallback for :func:`json.dumps` which serializes our value types"""
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError('Object of type %s with value of %s is not JSON serializable' % (type(obj), repr(obj)))


def dumps(data, indent=2):
    """deterministic JSON: sorted keys, fixed indentation. ``indent=None``
    gives a single line."""
    return json.dumps(data, default=jsonconverter, sort_keys=True, indent=indent)
