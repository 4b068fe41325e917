"""The streaming filter core.

Each comment is normalized, scored against the current vocabulary,
classified against the base threshold, and (if it clears the higher
adaptive threshold) harvested for new vocabulary words. Single pass,
in arrival order; nothing is ever re-scored.

Two deliberate asymmetries:
  * the score denominator is ALWAYS the original article vocabulary
    size, even after growth, so scores stay comparable across a run;
  * acceptance depends only on theta_min, growth only on theta_best.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .profiling import (
    ArticleProfile,
    Vocabulary,
    build_article_profile,
    extract_vocabulary,
    mean_ratio_score,
    sentence_intersection_counts,
)
from .textnorm import NormalizedText, normalize

KARMA_UNAVAILABLE = -1


class ConfigError(ValueError):
    """Invalid filter configuration (bad range or theta_best < theta_min)."""


@dataclass(frozen=True)
class CommentRecord:
    """One harvested comment: identifier, cleaned text, commenter karma."""

    id: int
    text: str
    karma: int = KARMA_UNAVAILABLE


class Verdict(enum.Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class FilterConfig:
    """Thresholds are fractions of the article's benchmark score."""

    theta_min: float
    theta_best: float
    grow_enabled: bool = True
    min_word_length: int = 4

    def __post_init__(self):
        if not 0.0 < self.theta_min <= 1.0:
            raise ConfigError(f"theta_min must be in (0, 1], got {self.theta_min}")
        if not 0.0 < self.theta_best <= 1.0:
            raise ConfigError(f"theta_best must be in (0, 1], got {self.theta_best}")
        if self.theta_best < self.theta_min:
            raise ConfigError(
                f"theta_best ({self.theta_best}) must be >= theta_min ({self.theta_min})"
            )
        if self.min_word_length < 2:
            raise ConfigError(f"min_word_length must be >= 2, got {self.min_word_length}")


@dataclass
class AdaptiveState:
    """The growing vocabulary; always a superset of the article's own."""

    adaptive_vocab: Vocabulary
    words_added_total: int = 0
    comments_processed: int = 0

    @classmethod
    def from_profile(cls, profile: ArticleProfile) -> "AdaptiveState":
        return cls(adaptive_vocab=profile.original_vocab)


@dataclass(frozen=True)
class ScoredComment:
    record: CommentRecord
    score: float
    surviving_sentence_count: int
    verdict: Verdict
    grew_vocabulary: bool = False
    new_words_added: int = 0


def score_comment(
    norm: NormalizedText, adaptive_vocab: Vocabulary, original_vocab_size: int
) -> tuple[float, int]:
    """Score a normalized comment against the current vocabulary.

    The denominator is the original article vocabulary size, never the
    grown size. Returns (score, surviving_sentence_count).
    """
    if original_vocab_size < 1:
        raise ValueError("original_vocab_size must be >= 1")
    counts = sentence_intersection_counts(norm, adaptive_vocab)
    return mean_ratio_score(counts, original_vocab_size), len(counts)


def classify(score: float, article_score: float, theta_min: float) -> Verdict:
    """Accepted iff score >= theta_min * article_score."""
    if score >= theta_min * article_score:
        return Verdict.ACCEPTED
    return Verdict.REJECTED


def grow_vocabulary(
    state: AdaptiveState, norm: NormalizedText, min_word_length: int
) -> int:
    """Add the comment's eligible words to the adaptive vocabulary.

    Eligibility follows the same length/acronym rule as article
    extraction. Returns the number of words actually added.
    """
    eligible = extract_vocabulary(norm, min_word_length)
    new_words = eligible.words - state.adaptive_vocab.words
    if new_words:
        state.adaptive_vocab = Vocabulary(
            words=state.adaptive_vocab.words | new_words,
            created_with_min_word_length=min_word_length,
        )
        state.words_added_total += len(new_words)
    return len(new_words)


def process_comment(
    state: AdaptiveState,
    profile: ArticleProfile,
    config: FilterConfig,
    record: CommentRecord,
) -> ScoredComment:
    """Run one comment through the filter, mutating state in place.

    Records with missing text are Skipped without touching state at all.
    Comments whose cleaned sentences all vanish are Skipped too, but do
    count as processed.
    """
    if not record.text:
        return ScoredComment(
            record=record, score=0.0, surviving_sentence_count=0, verdict=Verdict.SKIPPED
        )

    norm = normalize(record.text, config.min_word_length)
    score, surviving = score_comment(
        norm, state.adaptive_vocab, len(profile.original_vocab)
    )
    state.comments_processed += 1

    if surviving == 0:
        return ScoredComment(
            record=record, score=0.0, surviving_sentence_count=0, verdict=Verdict.SKIPPED
        )

    grew = False
    added = 0
    if config.grow_enabled and score >= config.theta_best * profile.article_score:
        added = grow_vocabulary(state, norm, config.min_word_length)
        grew = True

    verdict = classify(score, profile.article_score, config.theta_min)
    return ScoredComment(
        record=record,
        score=score,
        surviving_sentence_count=surviving,
        verdict=verdict,
        grew_vocabulary=grew,
        new_words_added=added,
    )


def run_pipeline(article_text, comments, config: FilterConfig):
    """Profile the article, then fold every comment through the filter.

    comments is any iterable of CommentRecord, consumed once, in order.
    Returns (scored list, RunReport, final AdaptiveState). Raises
    EmptyArticle if the article has no eligible words.
    """
    from .reporting import compute_report

    profile = build_article_profile(article_text, config.min_word_length)
    state = AdaptiveState.from_profile(profile)
    scored = [process_comment(state, profile, config, record) for record in comments]
    report = compute_report(scored, profile, state, config)
    return scored, report, state
