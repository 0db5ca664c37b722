"""Python bindings for the nichebench rating and benchmarking engines.

The ``*_json`` methods return the exact documents the CLI and HTTP service
emit; the convenience wrappers below decode them.
"""

import json

from ._core import (  # noqa: F401
    Dataset,
    NichebenchError,
    band,
    cpp,
    h_index,
    normalize,
    percentage_scores,
    preset_weights,
    weighted_total,
)

__all__ = [
    "Dataset",
    "NichebenchError",
    "band",
    "benchmark",
    "cpp",
    "h_index",
    "normalize",
    "percentage_scores",
    "preset_weights",
    "rate",
    "weighted_total",
]


def rate(dataset, subject, level, **kwargs):
    """Rating table as a list of row dicts."""
    return json.loads(dataset.rate_json(subject, level, **kwargs))


def benchmark(dataset, institutions, subject, level, **kwargs):
    """Benchmark profile as a dict."""
    return json.loads(dataset.benchmark_json(institutions, subject, level, **kwargs))
