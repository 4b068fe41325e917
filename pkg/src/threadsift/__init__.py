"""threadsift: single-pass adaptive relevance filtering for comment threads.

An article is profiled into a topic vocabulary and a benchmark score;
comments are scored against it one at a time, accepted or rejected
against a base threshold, and high-scoring comments grow the vocabulary
so the filter tolerates gradual topic drift.
"""
from .filtering import (
    AdaptiveState,
    CommentRecord,
    ConfigError,
    FilterConfig,
    ScoredComment,
    Verdict,
    classify,
    grow_vocabulary,
    process_comment,
    run_pipeline,
    score_comment,
)
from .profiling import (
    ArticleProfile,
    EmptyArticle,
    Vocabulary,
    build_article_profile,
    extract_vocabulary,
    sentence_intersection_counts,
)
from .reporting import RunReport, compute_report, sweep
from .textnorm import NormalizedText, normalize

__version__ = "0.1.0"

__all__ = [
    "AdaptiveState",
    "ArticleProfile",
    "CommentRecord",
    "ConfigError",
    "EmptyArticle",
    "FilterConfig",
    "NormalizedText",
    "RunReport",
    "ScoredComment",
    "Verdict",
    "Vocabulary",
    "build_article_profile",
    "classify",
    "compute_report",
    "extract_vocabulary",
    "grow_vocabulary",
    "normalize",
    "process_comment",
    "run_pipeline",
    "score_comment",
    "sentence_intersection_counts",
    "sweep",
]
