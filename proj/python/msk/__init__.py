"""Morse-Smale graphs on the sphere: moves, persistence, nesting posets and embedding counts.

Graphs, histories and barcodes are plain dicts in the JSON file formats; `load`
reads one from disk.
"""

import json

from ._core import *  # noqa: F401,F403
from ._core import DomainError, MalformedInput  # noqa: F401


def load(path):
    with open(path) as f:
        return json.load(f)
