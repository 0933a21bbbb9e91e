"""Requirements classification toolkit.

Thin wrapper around the compiled extension module. The heavy lifting
(preprocessing pipeline, classifiers, topic models, clustering, metrics)
lives in C++; this package exposes the operations that are useful from
scripts and notebooks.
"""

from ._core import (
    DataError,
    UsageError,
    analyze,
    cohen_kappa,
    compare_reports,
    default_config,
    evaluate_confusion,
    hopkins,
    normalize_text,
    preprocess_text,
    run_evaluate,
    silhouette,
)

__all__ = [
    "DataError",
    "UsageError",
    "analyze",
    "cohen_kappa",
    "compare_reports",
    "default_config",
    "evaluate_confusion",
    "hopkins",
    "normalize_text",
    "preprocess_text",
    "run_evaluate",
    "silhouette",
]
