"""Harvest a Hacker News thread and filter it end to end.

Hits the live HN API, so it needs network access. The harvester walks
the comment tree breadth-first at a polite 200 ms per request; a big
thread takes a while (two requests per comment: item + author karma).

Usage: python3 demos/04_harvest_a_thread.py [story_id]
"""
import sys

from threadsift import FilterConfig, run_pipeline
from threadsift.hnclient import HnClient

story_id = int(sys.argv[1]) if len(sys.argv) > 1 else 12804870

client = HnClient()  # live API, 200 ms between requests
print(f"harvesting story {story_id} ...")
article_text, comments = client.harvest_thread(story_id)
print(f"got {len(comments)} comments")

config = FilterConfig(theta_min=0.005, theta_best=0.02)
scored, report, _ = run_pipeline(article_text, comments, config)

print(f"benchmark score: {report.article_score:.4f}")
print(f"accepted {report.accepted_count} / rejected {report.rejected_count}")
print(f"vocabulary: {report.original_vocab_size} -> {report.final_vocab_size}")
print(f"mean karma accepted: {report.mean_karma_accepted}")
print(f"mean karma overall:  {report.mean_karma_all}")
if report.success_rate is not None:
    print(f"karma lift: {report.success_rate:+.1%}")
