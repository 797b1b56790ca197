"""Exact construction, checking and classification of Lie bialgebra extensions."""

import json

from ._core import (
    LbextError,
    canonical_scalar,
    corpus_entries,
    corpus_text,
    run_cli,
    scalar_binop,
)
from ._core import classify_json as _classify_json

__all__ = [
    "LbextError",
    "canonical_scalar",
    "classify",
    "corpus_entries",
    "corpus_text",
    "run_cli",
    "scalar_binop",
]


def classify(base, samples=()):
    """Classify flag datums over a corpus bialgebra or bialgebra file.

    samples: iterable of A vectors, each a list of scalar strings.
    """
    return json.loads(_classify_json(base, [[str(c) for c in s] for s in samples]))
