"""Gray-Hervella classes of the almost Hermitian structures on product twistor spaces."""

import json

from ._core import (
    Error,
    InputError,
    ValidationError,
    compose,
    decompose,
    hodge_star,
    model,
    model_names,
    residual,
    reverse_orientation,
    run_oracles,
    sphere_to_J,
    theorem_ids,
)
from . import _core

__all__ = [
    "Error",
    "InputError",
    "ValidationError",
    "classify",
    "compose",
    "decompose",
    "hodge_star",
    "model",
    "model_names",
    "residual",
    "reverse_orientation",
    "run_oracles",
    "sphere_to_J",
    "theorem_ids",
    "verify_theorem",
]


def classify(R, component, **kwargs):
    """Classify the 6x6 operator R on a component; returns the report as a dict.

    Keyword arguments: t1, t2, n, seed, samples, triples, tol,
    w2w3_as_printed, w1w3_as_printed.
    """
    return json.loads(_core.classify_json(R, component, **kwargs))


def verify_theorem(theorem_id, **kwargs):
    """Run one theorem check (e.g. "4.6b"); keyword arguments: seed, samples, triples, tol."""
    return json.loads(_core.verify_theorem_json(theorem_id, **kwargs))
