"""Partitions of edge-colored infinite complete graphs into monochromatic
paths, powers of paths, and tight paths, certified on finite prefixes.

Thin wrapper over the _monopath extension module; heavy results cross the
boundary as JSON.
"""

import json as _json

try:
    from . import _monopath as _impl
except ImportError:  # running against a build tree
    import _monopath as _impl

__all__ = [
    "partition",
    "verify",
    "classify",
    "counterexample_report",
    "color_of",
    "triangle_order",
    "sweep_pokrovskiy",
]


def partition(mode, coloring, r=0, k=0, prefix=50, horizon=0, power=2):
    """Build a partition of [0, prefix), verify it, and return a dict with
    'partition' and 'verification' entries."""
    return _json.loads(_impl.partition_json(mode, coloring, r, k, prefix, horizon, power))


def verify(coloring, r, k, partition_dict):
    payload = partition_dict.get("partition", partition_dict)
    return _json.loads(_impl.verify_json(coloring, r, k, _json.dumps(payload)))


def classify(coloring, r=0, prefix=50, horizon=0):
    return _json.loads(_impl.classify_json(coloring, r, prefix, horizon))


def counterexample_report():
    return _json.loads(_impl.counterexample_json())


def color_of(coloring, r, k, edge):
    return _impl.color_of(coloring, r, k, list(edge))


def triangle_order(ell, k):
    return _impl.triangle_order(ell, k)


def sweep_pokrovskiy(n, k=2, samples=0, seed=0):
    instances, alarms = _impl.sweep_pokrovskiy(n, k, samples, seed)
    return {"instances": instances, "alarms": alarms}
