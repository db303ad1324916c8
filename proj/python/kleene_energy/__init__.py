"""Energy functions over the extended nonnegative rationals, energy automata
and the law suite, backed by the C++ library.

Functions and automata are passed in the same JSON shapes the CLI reads,
either as dicts or as JSON text.
"""

import json

from . import _kleene
from ._kleene import (
    BudgetExceeded,
    EpsilonInOmegaBase,
    ParseError,
    RegexSyntaxError,
    UnknownIdentity,
    ValidationError,
)

__all__ = [
    "BudgetExceeded",
    "EpsilonInOmegaBase",
    "ParseError",
    "RegexSyntaxError",
    "UnknownIdentity",
    "ValidationError",
    "buchi",
    "canonical",
    "compose",
    "evaluate",
    "join",
    "lang_equal",
    "laws",
    "omega",
    "reach",
    "star",
    "wordcheck",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def _energy(x):
    return str(x)


def canonical(f):
    return json.loads(_kleene.canonical(_text(f)))


def evaluate(f, x):
    """f(x) as a string: 'bot', 'top' or a rational."""
    return _kleene.eval(_text(f), _energy(x))


def star(f):
    return json.loads(_kleene.star(_text(f)))


def omega(f):
    return json.loads(_kleene.omega(_text(f)))


def compose(f, g):
    """Apply f, then g."""
    return json.loads(_kleene.compose(_text(f), _text(g)))


def join(f, g):
    return json.loads(_kleene.join(_text(f), _text(g)))


def reach(automaton, energy=0, verify=False):
    return json.loads(_kleene.reach(_text(automaton), _energy(energy), verify))


def buchi(automaton, energy=0, verify=False):
    return json.loads(_kleene.buchi(_text(automaton), _energy(energy), verify))


def laws(seed=1, cases=50, instance="energy", bound=6):
    return [json.loads(line) for line in _kleene.laws(seed, cases, instance, bound)]


def wordcheck(identity, alphabet="ab", bound=6, cases=20, seed=1):
    return json.loads(_kleene.wordcheck(identity, alphabet, bound, cases, seed))


def lang_equal(alphabet, x, y):
    return _kleene.lang_equal(alphabet, x, y)
