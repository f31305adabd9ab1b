"""Sarcasm detection with weighted semigraphs."""

from ._core import (
    ClassLabel,
    Document,
    Model,
    PolarityResult,
    MetricsReport,
    SarcasmError,
    Tagger,
    __version__,
    classify_vertices,
    evaluate,
    is_uniform,
    load_corpus,
    metrics,
    preprocess,
    stratified_split,
)

__all__ = [
    "ClassLabel",
    "Document",
    "Model",
    "PolarityResult",
    "MetricsReport",
    "SarcasmError",
    "Tagger",
    "classify_vertices",
    "evaluate",
    "is_uniform",
    "load_corpus",
    "metrics",
    "preprocess",
    "stratified_split",
]
