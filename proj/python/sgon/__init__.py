"""Sparse lattice vectors and planar virtual rectangularity."""

import json
import os

from ._sgon import SgonError, commands, default_precision
from ._sgon import analyze_json as _analyze_json

__all__ = ["SgonError", "analyze", "commands", "default_precision"]


def analyze(command, input=None, *, k=None, radius=None, terms=10, precision=None, seed=1):
    """Run one analysis and return the report as a dict.

    ``input`` is the path of a lattice or tau JSON file; ``verify-suite``
    takes none.
    """
    if input is not None:
        input = os.fspath(input)
    if radius is not None:
        radius = str(radius)
    return json.loads(_analyze_json(command, input, k, radius, terms, precision, seed))
