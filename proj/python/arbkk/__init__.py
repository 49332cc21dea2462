"""Exact mixed volumes and arithmetic height bounds for Laurent systems over Q.

Documents follow the JSON problem format of the ``arbkk`` command line tool
and may be passed either as dicts or as JSON text.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    DimensionError,
    DomainError,
    Error,
    ParseError,
    PrecisionError,
    ResidualError,
    SchemaError,
    parse_laurent,
)

__all__ = [
    "DimensionError",
    "DomainError",
    "Error",
    "ParseError",
    "PrecisionError",
    "ResidualError",
    "SchemaError",
    "bound",
    "length",
    "mixed_volume",
    "mv",
    "parse_laurent",
    "reference_examples",
    "verify",
]


def _text(document):
    return document if isinstance(document, str) else json.dumps(document)


def mixed_volume(polytopes, method="sum"):
    """Mixed volume of n vertex lists in R^n, as a Fraction."""
    data = [[[str(c) for c in v] for v in p] for p in polytopes]
    return Fraction(_core.mixed_volume(data, method))


def length(coefficients):
    """Logarithmic length as a dict {prime: Fraction}, value sum c_p log p."""
    logs = json.loads(_core.length([str(c) for c in coefficients]))["logs"]
    return {int(p): Fraction(c) for p, c in logs.items()}


def mv(document, cross_check=False):
    return json.loads(_core.mv(_text(document), cross_check))


def bound(document, metric=None, budget=None):
    return json.loads(_core.bound(_text(document), metric, budget))


def verify(document, metric=None, budget=None):
    return json.loads(_core.verify(_text(document), metric, budget))


def reference_examples(grid="", budget=8):
    return json.loads(_core.reference_examples(grid, budget))
