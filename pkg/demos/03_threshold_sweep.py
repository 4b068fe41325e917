"""Sweep both thresholds over a grid to find a permissible setting.

Raising theta_min trades comment volume for relevance; theta_best
controls how eagerly the vocabulary grows. Every valid grid cell gets
its own independent pipeline run.
"""
from pathlib import Path

from threadsift import sweep
from threadsift.storage import read_comments_csv

FIXTURES = Path(__file__).parent.parent / "tests" / "fixtures"

article = (FIXTURES / "synthetic_article.txt").read_text(encoding="utf-8")
comments = read_comments_csv(FIXTURES / "synthetic_comments.csv")

rows = sweep(
    article,
    comments,
    theta_min_grid=[0.05, 0.1, 0.2, 0.4],
    theta_best_grid=[0.1, 0.3, 0.6],
)

print(f"{'θ_min':>6} {'θ_best':>7} {'acc':>4} {'rej':>4} {'vocab':>11} {'karma(acc)':>11}")
for theta_min, theta_best, report in rows:
    vocab = f"{report.original_vocab_size}->{report.final_vocab_size}"
    karma = "-" if report.mean_karma_accepted is None else f"{report.mean_karma_accepted:.0f}"
    print(f"{theta_min:>6} {theta_best:>7} {report.accepted_count:>4} "
          f"{report.rejected_count:>4} {vocab:>11} {karma:>11}")
