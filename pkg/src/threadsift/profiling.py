"""Article profiling: topic vocabulary extraction and the benchmark score.

The benchmark score for a text is

    mean(per-sentence vocabulary hits) / vocabulary_size * surviving_sentences

which collapses algebraically to total_hits / vocabulary_size. Both forms
are kept around because tests assert they agree.
"""
from __future__ import annotations

from dataclasses import dataclass

from .textnorm import NormalizedText, normalize

DEFAULT_MIN_WORD_LENGTH = 4


class EmptyArticle(ValueError):
    """Article text yields no eligible vocabulary words."""


@dataclass(frozen=True)
class Vocabulary:
    """A set of eligible lowercase words.

    Words are either at least created_with_min_word_length long or were
    admitted by the acronym rule (length in [2, min_word_length)).
    """

    words: frozenset[str]
    created_with_min_word_length: int

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self.words


@dataclass(frozen=True)
class ArticleProfile:
    """Frozen quantitative profile of one article."""

    original_vocab: Vocabulary
    surviving_sentence_count: int
    per_sentence_counts: tuple[int, ...]
    article_score: float


def extract_vocabulary(norm: NormalizedText, min_word_length: int) -> Vocabulary:
    """Distinct tokens of sufficient length, plus detected acronyms."""
    words = {t for t in norm.tokens() if len(t) >= min_word_length}
    words |= norm.acronyms
    return Vocabulary(words=frozenset(words), created_with_min_word_length=min_word_length)


def sentence_intersection_counts(norm: NormalizedText, vocab: Vocabulary) -> list[int]:
    """Per-sentence count of tokens present in vocab, with multiplicity.

    Sentences with zero hits are dropped; the remaining counts keep
    sentence order.
    """
    counts = []
    for sentence in norm.sentences:
        hits = sum(1 for token in sentence if token in vocab)
        if hits > 0:
            counts.append(hits)
    return counts


def mean_ratio_score(counts: list[int] | tuple[int, ...], denominator_size: int) -> float:
    """mean(count / denominator_size) * len(counts); 0.0 for no counts.

    Computed in the equivalent sum form, total / denominator_size, which
    is a single correctly-rounded division. Tests hold the two forms to
    within 1e-9 of each other.
    """
    if not counts:
        return 0.0
    return sum(counts) / denominator_size


def build_article_profile(
    article_text: str, min_word_length: int = DEFAULT_MIN_WORD_LENGTH
) -> ArticleProfile:
    """Normalize an article, freeze its vocabulary, compute its score.

    Raises EmptyArticle when no eligible words exist, since a score
    denominator of zero makes the whole pipeline meaningless.
    """
    norm = normalize(article_text, min_word_length)
    vocab = extract_vocabulary(norm, min_word_length)
    if not vocab.words:
        raise EmptyArticle("article has no eligible vocabulary words")

    counts = sentence_intersection_counts(norm, vocab)
    return ArticleProfile(
        original_vocab=vocab,
        surviving_sentence_count=len(counts),
        per_sentence_counts=tuple(counts),
        article_score=mean_ratio_score(counts, len(vocab.words)),
    )
