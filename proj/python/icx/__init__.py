"""Index coding toolkit: linear schemes, alignment feasibility and outer bounds.

Instances and schemes are plain dicts in the same JSON layout the command
line tool reads and writes.
"""

import json

from . import _icx
from ._icx import IcxError

__all__ = [
    "IcxError",
    "gen",
    "validate",
    "check_feasibility",
    "scalar_scheme",
    "spread_scheme",
    "family_scheme",
    "verify",
    "simulate",
    "bounds",
    "minrank",
    "example",
    "run",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def gen(family, K, U=0, D=0, L=1):
    return json.loads(_icx.gen(family, K, U, D, L))


def validate(instance):
    return json.loads(_icx.validate(_text(instance)))


def check_feasibility(instance, L):
    return json.loads(_icx.check_feasibility(_text(instance), L))


def scalar_scheme(instance, L):
    return json.loads(_icx.scalar_scheme(_text(instance), L))


def spread_scheme(instance):
    return json.loads(_icx.spread_scheme(_text(instance)))


def family_scheme(instance):
    return json.loads(_icx.family_scheme(_text(instance)))


def verify(instance, scheme, mode="auto"):
    return json.loads(_icx.verify(_text(instance), _text(scheme), mode))


def simulate(instance, scheme, budget=1 << 24):
    return json.loads(_icx.simulate(_text(instance), _text(scheme), budget))


def bounds(instance, L=0, maxN=4):
    return json.loads(_icx.bounds(_text(instance), L, maxN))


def minrank(instance):
    return json.loads(_icx.minrank(_text(instance)))


def example(id, p=2):
    return json.loads(_icx.example(id, p))


def run(args):
    """Run the command line tool in process; returns (exit code, stdout, stderr)."""
    return _icx.run([str(a) for a in args])
