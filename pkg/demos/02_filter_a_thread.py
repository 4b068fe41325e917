"""Filter a small comment thread and watch the vocabulary adapt.

High-scoring comments donate their new words to the vocabulary, so a
late comment can be accepted even though it shares nothing with the
original article (topic drift).
"""
from threadsift import CommentRecord, FilterConfig, run_pipeline

ARTICLE = """\
Solar panels now power the village grid.
Battery storage keeps the village lights on through the night.
"""

COMMENTS = [
    CommentRecord(1, "Solar panels plus battery storage beat diesel generators "
                     "for village power at night.", karma=3200),
    CommentRecord(2, "Diesel generators are louder anyway.", karma=230),
    CommentRecord(3, "I prefer pineapple pizza honestly.", karma=9000),
    CommentRecord(4, "Generators guzzle diesel; panels just sit there.", karma=640),
]

config = FilterConfig(theta_min=0.10, theta_best=0.30, grow_enabled=True)
scored, report, state = run_pipeline(ARTICLE, COMMENTS, config)

for sc in scored:
    grew = f" (+{sc.new_words_added} words)" if sc.grew_vocabulary else ""
    print(f"comment {sc.record.id}: score {sc.score:.3f} -> {sc.verdict.value}{grew}")

print(f"\nvocabulary: {report.original_vocab_size} -> {report.final_vocab_size} words")
print(f"accepted {report.accepted_count} / rejected {report.rejected_count}")
print(f"mean karma accepted: {report.mean_karma_accepted}")
print(f"mean karma rejected: {report.mean_karma_rejected}")

# comment 4 shares no words with the article; it rides on words that
# comment 1 donated ("diesel", "generators")
