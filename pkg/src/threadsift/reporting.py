"""Run reports and threshold sweeps.

Karma means use the commenter's karma as a relevance proxy. The -1
karma sentinel (karma unavailable) is excluded from every mean but the
comment still counts toward the verdict tallies.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from statistics import fmean

from .filtering import (
    KARMA_UNAVAILABLE,
    AdaptiveState,
    CommentRecord,
    FilterConfig,
    ScoredComment,
    Verdict,
    run_pipeline,
)
from .profiling import ArticleProfile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunReport:
    """Outcome of one pipeline run, in the shape of the result tables.

    Skipped-but-processed comments (text present, zero surviving
    sentences) are tallied with the rejected ones, so accepted_count +
    rejected_count always equals total_comments. Means are None when
    their bucket is empty.
    """

    total_comments: int
    accepted_count: int
    rejected_count: int
    mean_karma_accepted: float | None
    mean_karma_rejected: float | None
    mean_karma_all: float | None
    original_vocab_size: int
    final_vocab_size: int
    success_rate: float | None
    rejected_fraction: float
    article_score: float
    theta_min: float
    theta_best: float
    grow_enabled: bool


def _karma_mean(karmas: list[int]) -> float | None:
    usable = [k for k in karmas if k != KARMA_UNAVAILABLE]
    return fmean(usable) if usable else None


def compute_report(
    scored: list[ScoredComment],
    profile: ArticleProfile,
    state: AdaptiveState,
    config: FilterConfig,
) -> RunReport:
    """Aggregate verdicts and karma statistics for one run.

    Records skipped for missing text are excluded from every tally.
    """
    accepted_karma: list[int] = []
    rejected_karma: list[int] = []
    accepted = 0
    rejected = 0
    for sc in scored:
        if not sc.record.text:
            continue
        if sc.verdict is Verdict.ACCEPTED:
            accepted += 1
            accepted_karma.append(sc.record.karma)
        else:
            rejected += 1
            rejected_karma.append(sc.record.karma)

    mean_accepted = _karma_mean(accepted_karma)
    mean_rejected = _karma_mean(rejected_karma)
    mean_all = _karma_mean(accepted_karma + rejected_karma)

    success_rate = None
    if mean_accepted is not None and mean_all is not None and mean_accepted != 0:
        success_rate = (mean_accepted - mean_all) / mean_accepted

    total = accepted + rejected
    return RunReport(
        total_comments=total,
        accepted_count=accepted,
        rejected_count=rejected,
        mean_karma_accepted=mean_accepted,
        mean_karma_rejected=mean_rejected,
        mean_karma_all=mean_all,
        original_vocab_size=len(profile.original_vocab),
        final_vocab_size=len(state.adaptive_vocab),
        success_rate=success_rate,
        rejected_fraction=rejected / total if total else 0.0,
        article_score=profile.article_score,
        theta_min=config.theta_min,
        theta_best=config.theta_best,
        grow_enabled=config.grow_enabled,
    )


def sweep(
    article_text: str,
    comments: list[CommentRecord],
    theta_min_grid: list[float],
    theta_best_grid: list[float],
    grow_enabled: bool = True,
    min_word_length: int = 4,
) -> list[tuple[float, float, RunReport]]:
    """One independent pipeline run per valid (theta_min, theta_best) cell.

    Cells with theta_best < theta_min are skipped with a warning. Rows
    come back ordered by (theta_min, theta_best).
    """
    if not theta_min_grid or not theta_best_grid:
        raise ValueError("threshold grids must be non-empty")

    rows = []
    for theta_min in sorted(theta_min_grid):
        for theta_best in sorted(theta_best_grid):
            if theta_best < theta_min:
                logger.warning(
                    "skipping invalid sweep cell theta_min=%g theta_best=%g",
                    theta_min,
                    theta_best,
                )
                continue
            config = FilterConfig(
                theta_min=theta_min,
                theta_best=theta_best,
                grow_enabled=grow_enabled,
                min_word_length=min_word_length,
            )
            _, report, _ = run_pipeline(article_text, comments, config)
            rows.append((theta_min, theta_best, report))
    return rows
