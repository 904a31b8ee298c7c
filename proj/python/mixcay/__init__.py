"""Arc connectivity of mixed Cayley digraphs.

Instances are dicts such as ``{"group": "Z4", "s0": [2], "s1": [2],
"t0": [0, 1], "t1": [0, 2]}``; a ``"table"`` key (list of rows) may replace
``"group"``. Every call returns the same documents as the command line tool.
"""

import json

from . import _mixcay
from ._mixcay import SCHEMA_VERSION, MixcayError

__all__ = ["SCHEMA_VERSION", "MixcayError", "analyze", "classify", "crosscheck", "export", "params"]


def params(group, s0=(), s1=(), t0=(), t1=()):
    return {"group": group, "s0": list(s0), "s1": list(s1), "t0": list(t0), "t1": list(t1)}


def analyze(instance, atom_cap=20):
    return json.loads(_mixcay.analyze(json.dumps(instance), atom_cap))


def classify(instance, literal=False):
    return json.loads(_mixcay.classify(json.dumps(instance), literal))


def export(instance, format="json"):
    """Graph document (dict) for "json", Graphviz text for "dot"."""
    if format == "json":
        return json.loads(_mixcay.export_json(json.dumps(instance)))
    if format == "dot":
        return _mixcay.export_dot(json.dumps(instance))
    raise ValueError(f"unknown format {format!r} (expected dot or json)")


def crosscheck(space):
    return json.loads(_mixcay.crosscheck(json.dumps(space)))
