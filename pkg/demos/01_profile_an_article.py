"""Profile an article: vocabulary, per-sentence hits, benchmark score.

The benchmark score is what every comment gets measured against: the
mean per-sentence ratio of vocabulary words, times the number of
surviving sentences.
"""
from threadsift import build_article_profile, normalize

ARTICLE = """\
Solar panels now power the village grid.
Battery storage keeps the village lights on through the night.
Cheap imported panels changed rural electricity forever.
The village council funds ongoing panel repairs and grid upkeep.
"""

norm = normalize(ARTICLE)
print("cleaned sentences:")
for sentence in norm.sentences:
    print("  ", " ".join(sentence))

profile = build_article_profile(ARTICLE)
print(f"\nvocabulary ({len(profile.original_vocab)} words):")
print("  ", ", ".join(sorted(profile.original_vocab.words)))
print("\nper-sentence vocabulary hits:", list(profile.per_sentence_counts))
print(f"benchmark score: {profile.article_score:.4f}")
print(f"a comment needs {0.1 * profile.article_score:.4f} at theta_min=0.1 to pass")
