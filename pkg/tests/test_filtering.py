import random

import pytest

from threadsift.filtering import (
    AdaptiveState,
    CommentRecord,
    ConfigError,
    FilterConfig,
    Verdict,
    classify,
    grow_vocabulary,
    process_comment,
    run_pipeline,
    score_comment,
)
from threadsift.profiling import Vocabulary, build_article_profile
from threadsift.textnorm import normalize

from conftest import alpha_words


def test_config_validation():
    FilterConfig(theta_min=0.05, theta_best=0.10)
    with pytest.raises(ConfigError):
        FilterConfig(theta_min=0.9, theta_best=0.1)
    with pytest.raises(ConfigError):
        FilterConfig(theta_min=0.0, theta_best=0.1)
    with pytest.raises(ConfigError):
        FilterConfig(theta_min=0.1, theta_best=1.5)
    with pytest.raises(ConfigError):
        FilterConfig(theta_min=0.1, theta_best=0.2, min_word_length=1)


def test_article_scores_its_own_benchmark():
    text = "solar panels power villages. battery storage helps panels at night."
    profile = build_article_profile(text, 4)
    score, surviving = score_comment(
        normalize(text, 4), profile.original_vocab, len(profile.original_vocab)
    )
    assert score == pytest.approx(profile.article_score)
    assert surviving == profile.surviving_sentence_count


def test_zero_overlap_scores_zero():
    vocab = Vocabulary(frozenset({"alpha", "bravo"}), 4)
    score, surviving = score_comment(normalize("nothing matches here.", 4), vocab, 2)
    assert score == 0.0
    assert surviving == 0


def test_hand_computed_score():
    vocab = Vocabulary(frozenset({"alpha", "bravo"}), 4)
    norm = normalize("alpha charlie. bravo alpha delta.", 4)
    score, surviving = score_comment(norm, vocab, 2)
    assert score == pytest.approx(1.5)
    assert surviving == 2


def test_denominator_stays_original_after_growth():
    original = Vocabulary(frozenset({"alpha", "bravo"}), 4)
    grown = Vocabulary(frozenset({"alpha", "bravo", "charlie", "delta"}), 4)
    norm = normalize("alpha charlie delta.", 4)
    score, _ = score_comment(norm, grown, len(original))
    assert score == pytest.approx(3 / 2)  # not 3/4


def test_classify_thresholds():
    assert classify(0.10, 1.94, 0.05) is Verdict.ACCEPTED
    assert classify(0.097, 1.94, 0.05) is Verdict.ACCEPTED  # boundary is inclusive
    assert classify(0.0969, 1.94, 0.05) is Verdict.REJECTED
    assert classify(0.0, 1.5, 0.05) is Verdict.REJECTED


def test_grow_vocabulary_adds_eligible_words():
    state = AdaptiveState(adaptive_vocab=Vocabulary(frozenset({"alpha", "bravo"}), 4))
    added = grow_vocabulary(state, normalize("alpha charlie. delta!", 4), 4)
    assert added == 2
    assert state.adaptive_vocab.words == frozenset({"alpha", "bravo", "charlie", "delta"})
    assert state.words_added_total == 2


def test_grow_vocabulary_no_new_words():
    state = AdaptiveState(adaptive_vocab=Vocabulary(frozenset({"alpha"}), 4))
    assert grow_vocabulary(state, normalize("alpha alpha.", 4), 4) == 0
    assert grow_vocabulary(state, normalize("an it to be.", 4), 4) == 0
    assert state.words_added_total == 0


def _profile_and_config(**overrides):
    # article with score 1.5 and vocab {alpha, bravo}
    profile = build_article_profile("alpha alpha bravo.", 4)
    defaults = dict(theta_min=0.5, theta_best=0.9, grow_enabled=True, min_word_length=4)
    defaults.update(overrides)
    return profile, FilterConfig(**defaults)


def test_process_comment_growth_and_acceptance():
    profile, config = _profile_and_config()
    assert profile.article_score == pytest.approx(1.5)
    state = AdaptiveState.from_profile(profile)

    # score 1.5 >= 1.35 growth cutoff and >= 0.75 acceptance cutoff
    sc = process_comment(state, profile, config, CommentRecord(1, "alpha bravo alpha."))
    assert sc.score == pytest.approx(1.5)
    assert sc.verdict is Verdict.ACCEPTED
    assert sc.grew_vocabulary

    # score 1.0 < 1.35: accepted but no growth
    sc = process_comment(state, profile, config, CommentRecord(2, "alpha bravo extra."))
    assert sc.verdict is Verdict.ACCEPTED
    assert not sc.grew_vocabulary
    assert "extra" not in state.adaptive_vocab.words


def test_process_comment_missing_text():
    profile, config = _profile_and_config()
    state = AdaptiveState.from_profile(profile)
    sc = process_comment(state, profile, config, CommentRecord(1, ""))
    assert sc.verdict is Verdict.SKIPPED
    assert state.comments_processed == 0


def test_process_comment_zero_survivors_counts_as_processed():
    profile, config = _profile_and_config()
    state = AdaptiveState.from_profile(profile)
    sc = process_comment(state, profile, config, CommentRecord(1, "nothing shared."))
    assert sc.verdict is Verdict.SKIPPED
    assert sc.surviving_sentence_count == 0
    assert state.comments_processed == 1


def test_growth_disabled_keeps_vocab_frozen():
    profile, config = _profile_and_config(grow_enabled=False)
    state = AdaptiveState.from_profile(profile)
    sc = process_comment(state, profile, config, CommentRecord(1, "alpha bravo alpha newword."))
    assert sc.verdict is Verdict.ACCEPTED
    assert not sc.grew_vocabulary
    assert state.adaptive_vocab.words == profile.original_vocab.words


def test_run_pipeline_empty_stream():
    scored, report, state = run_pipeline(
        "alpha alpha bravo.", [], FilterConfig(theta_min=0.5, theta_best=0.9)
    )
    assert scored == []
    assert report.total_comments == 0
    assert report.final_vocab_size == report.original_vocab_size
    assert report.mean_karma_accepted is None


def test_run_pipeline_identity_comment():
    article = "alpha alpha bravo."
    scored, report, _ = run_pipeline(
        article,
        [CommentRecord(1, article, karma=10)],
        FilterConfig(theta_min=0.5, theta_best=0.9),
    )
    assert scored[0].verdict is Verdict.ACCEPTED
    assert scored[0].new_words_added == 0
    assert report.accepted_count == 1


def test_drift_zero_article_overlap_accepted():
    # a high scorer grows the vocabulary; a later comment sharing NO words
    # with the article is accepted purely via grown words
    article = "alpha alpha bravo."
    comments = [
        CommentRecord(1, "alpha bravo alpha charlie delta echoes."),
        CommentRecord(2, "charlie delta echoes. charlie echoes delta charlie."),
    ]
    config = FilterConfig(theta_min=0.5, theta_best=0.9)
    scored, _, state = run_pipeline(article, comments, config)
    assert scored[0].grew_vocabulary
    article_words = {"alpha", "bravo"}
    second_words = set(normalize(comments[1].text, 4).tokens())
    assert not (second_words & article_words)
    assert scored[1].verdict is Verdict.ACCEPTED


def _random_thread(rng, n_comments):
    pool = alpha_words("word", 40)
    article = ". ".join(" ".join(rng.sample(pool[:20], rng.randint(3, 8)))
                        for _ in range(rng.randint(2, 6)))
    comments = []
    for i in range(n_comments):
        text = " ".join(rng.choice(pool) for _ in range(rng.randint(1, 25)))
        comments.append(CommentRecord(i, text, karma=rng.randint(0, 5000)))
    return article, comments


def test_vocabulary_monotonicity_of_scores():
    rng = random.Random(42)
    pool = alpha_words("word", 30)
    for _ in range(200):
        text = " ".join(rng.choice(pool) for _ in range(rng.randint(1, 20)))
        norm = normalize(text, 4)
        small_words = frozenset(rng.sample(pool, rng.randint(1, 15)))
        extra = frozenset(rng.sample(pool, rng.randint(0, 15)))
        small = Vocabulary(small_words, 4)
        big = Vocabulary(small_words | extra, 4)
        denom = 10
        assert score_comment(norm, small, denom)[0] <= score_comment(norm, big, denom)[0]


def test_growth_chain_and_count_conservation():
    rng = random.Random(1)
    article, comments = _random_thread(rng, 120)
    config = FilterConfig(theta_min=0.3, theta_best=0.6)
    profile = build_article_profile(article, 4)
    state = AdaptiveState.from_profile(profile)
    previous = set(profile.original_vocab.words)
    total_added = 0
    for record in comments:
        sc = process_comment(state, profile, config, record)
        assert profile.original_vocab.words <= state.adaptive_vocab.words
        assert previous <= state.adaptive_vocab.words
        previous = set(state.adaptive_vocab.words)
        total_added += sc.new_words_added
    assert len(state.adaptive_vocab) == len(profile.original_vocab) + total_added
    assert state.words_added_total == total_added


def test_baseline_inclusion_grow_accepts_superset():
    rng = random.Random(99)
    for _ in range(20):
        article, comments = _random_thread(rng, rng.randint(30, 80))
        base = dict(theta_min=0.3, theta_best=0.5)
        scored_off, _, _ = run_pipeline(article, comments, FilterConfig(grow_enabled=False, **base))
        scored_on, _, _ = run_pipeline(article, comments, FilterConfig(grow_enabled=True, **base))
        accepted_off = {s.record.id for s in scored_off if s.verdict is Verdict.ACCEPTED}
        accepted_on = {s.record.id for s in scored_on if s.verdict is Verdict.ACCEPTED}
        assert accepted_off <= accepted_on


def test_pipeline_is_deterministic():
    rng = random.Random(5)
    article, comments = _random_thread(rng, 60)
    config = FilterConfig(theta_min=0.2, theta_best=0.5)
    first = run_pipeline(article, comments, config)
    second = run_pipeline(article, comments, config)
    assert first[0] == second[0]
    assert first[1] == second[1]
    assert first[2].adaptive_vocab.words == second[2].adaptive_vocab.words
