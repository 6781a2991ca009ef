"""Exact structure-constant engine for finite-dimensional Hopf algebras.

The compiled core speaks JSON text; this package converts at the boundary so
callers work with plain dicts. Algebra and pair dicts use the same format the
``hopfsc`` command-line tool reads and writes.
"""

import json as _json

from ._core import InputError, MathCheckError
from . import _core

__all__ = [
    "InputError",
    "MathCheckError",
    "algebra",
    "pair",
    "verify",
    "check_pair",
    "probe",
    "bicross",
    "drinfeld_double",
    "census",
    "isomorphic",
    "automorphisms",
    "reproduce",
]

__version__ = "0.1.0"


def _text(obj):
    """Accept either a dict or already-serialized JSON text."""
    if isinstance(obj, str):
        return obj
    return _json.dumps(obj)


def algebra(designator, field=""):
    """Resolve a preset (h4, kc2, h16:<scale>, h4xh4) or a JSON file path.

    ``field`` is "Q" or "Fp:<p>" and applies to presets; files carry their
    own field. Returns the algebra as a dict.
    """
    return _json.loads(_core.algebra(designator, field))


def pair(designator, field=""):
    """Resolve a pair preset (trivial, canonical:<scale>, double) or a file."""
    return _json.loads(_core.pair(designator, field))


def verify(alg):
    """Run the Hopf axiom checks. Returns {"ok": bool, "checks": [...]}."""
    return _json.loads(_core.verify(_text(alg)))


def check_pair(mp):
    """Run the matched-pair compatibility checks on a pair dict."""
    return _json.loads(_core.check_pair(_text(mp)))


def probe(alg, kind):
    """Invariants of a sound algebra: "grouplikes", "primitives",
    "integrals", or "semisimple"."""
    return _json.loads(_core.probe(_text(alg), kind))


def bicross(mp):
    """Bicrossed product of a matched pair, as an algebra dict."""
    return _json.loads(_core.bicross(_text(mp)))


def drinfeld_double(alg):
    """Drinfel'd double of a Hopf algebra, as an algebra dict."""
    return _json.loads(_core.drinfeld_double(_text(alg)))


def census(prime):
    """All matched pairs of two Sweedler algebras over F_p."""
    return _json.loads(_core.census(prime))


def isomorphic(pair_e, pair_f):
    """Isomorphism test for two bicrossed products given as pair dicts."""
    return _json.loads(_core.isomorphic(_text(pair_e), _text(pair_f)))


def automorphisms(mp):
    """Automorphism group report for a bicrossed product."""
    return _json.loads(_core.automorphisms(_text(mp)))


def reproduce(prime):
    """Census, isomorphism classes, automorphism orders, and the double."""
    return _json.loads(_core.reproduce(prime))
