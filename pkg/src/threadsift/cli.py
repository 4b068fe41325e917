"""Command-line entry point: fetch, filter, sweep, report.

Exit codes: 0 success, 1 usage/config error, 2 I/O error, 3 network
error. Diagnostics go to stderr, results to stdout.
"""
from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from .filtering import ConfigError, FilterConfig, run_pipeline
from .hnclient import DecodeError, HnClient, NetworkError
from .profiling import EmptyArticle
from .reporting import sweep
from .storage import (
    CsvFormatError,
    ReportFormatError,
    format_report,
    load_article_text,
    read_comments_csv,
    read_report,
    write_comments_csv,
    write_report,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_NETWORK = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threadsift",
        description="Adaptive relevance filtering for comment threads.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fetch = sub.add_parser("fetch", help="harvest a Hacker News thread")
    p_fetch.add_argument("story_id", type=int)
    p_fetch.add_argument("--out-dir", required=True)
    p_fetch.add_argument("--rate-ms", type=int, default=200)
    p_fetch.add_argument("--base-url", default=None, help=argparse.SUPPRESS)

    p_filter = sub.add_parser("filter", help="run the filtering pipeline")
    p_filter.add_argument("--article", required=True)
    p_filter.add_argument("--comments", required=True)
    p_filter.add_argument("--theta-min", type=float, required=True)
    p_filter.add_argument("--theta-best", type=float, required=True)
    p_filter.add_argument("--no-grow", action="store_true")
    p_filter.add_argument("--min-word-len", type=int, default=4)
    p_filter.add_argument("--report", dest="report_path", default=None)
    p_filter.add_argument("--verdicts", dest="verdicts_path", default=None)

    p_sweep = sub.add_parser("sweep", help="grid-sweep the two thresholds")
    p_sweep.add_argument("--article", required=True)
    p_sweep.add_argument("--comments", required=True)
    p_sweep.add_argument("--theta-min-grid", required=True)
    p_sweep.add_argument("--theta-best-grid", required=True)
    p_sweep.add_argument("--no-grow", action="store_true")
    p_sweep.add_argument("--min-word-len", type=int, default=4)

    p_report = sub.add_parser("report", help="pretty-print a saved report")
    p_report.add_argument("file")

    return parser


def _parse_grid(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigError(f"bad threshold grid {text!r}")


def _cmd_fetch(args) -> int:
    kwargs = {"min_interval_ms": args.rate_ms}
    if args.base_url:
        kwargs["base_url"] = args.base_url
    client = HnClient(**kwargs)
    article_text, comments = client.harvest_thread(args.story_id)

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "article.txt").write_text(article_text, encoding="utf-8")
    write_comments_csv(out_dir / "comments.csv", comments)
    print(f"wrote {out_dir / 'article.txt'} and {out_dir / 'comments.csv'} "
          f"({len(comments)} comments)")
    return EXIT_OK


def _cmd_filter(args) -> int:
    config = FilterConfig(
        theta_min=args.theta_min,
        theta_best=args.theta_best,
        grow_enabled=not args.no_grow,
        min_word_length=args.min_word_len,
    )
    article_text = load_article_text(args.article)
    comments = read_comments_csv(args.comments)
    scored, report, _ = run_pipeline(article_text, comments, config)

    sys.stdout.write(format_report(report))
    if args.report_path:
        write_report(args.report_path, report)
    if args.verdicts_path:
        with open(args.verdicts_path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["id", "score", "verdict", "karma", "new_words_added"])
            for sc in scored:
                writer.writerow([
                    sc.record.id,
                    repr(sc.score),
                    sc.verdict.value,
                    sc.record.karma,
                    sc.new_words_added,
                ])
    return EXIT_OK


def _cmd_sweep(args) -> int:
    rows = sweep(
        load_article_text(args.article),
        read_comments_csv(args.comments),
        _parse_grid(args.theta_min_grid),
        _parse_grid(args.theta_best_grid),
        grow_enabled=not args.no_grow,
        min_word_length=args.min_word_len,
    )
    writer = csv.writer(sys.stdout)
    writer.writerow([
        "theta_min", "theta_best", "total_comments", "accepted_count",
        "rejected_count", "mean_karma_accepted", "mean_karma_rejected",
        "success_rate", "original_vocab_size", "final_vocab_size",
    ])
    for theta_min, theta_best, report in rows:
        writer.writerow([
            theta_min, theta_best, report.total_comments, report.accepted_count,
            report.rejected_count,
            "" if report.mean_karma_accepted is None else repr(report.mean_karma_accepted),
            "" if report.mean_karma_rejected is None else repr(report.mean_karma_rejected),
            "" if report.success_rate is None else repr(report.success_rate),
            report.original_vocab_size, report.final_vocab_size,
        ])
    return EXIT_OK


def _cmd_report(args) -> int:
    report = read_report(args.file)
    width = max(len(f) for f in report.__dataclass_fields__)
    for name in report.__dataclass_fields__:
        value = getattr(report, name)
        shown = "(absent)" if value is None else value
        print(f"{name:<{width}}  {shown}")
    return EXIT_OK


_COMMANDS = {
    "fetch": _cmd_fetch,
    "filter": _cmd_filter,
    "sweep": _cmd_sweep,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, EmptyArticle) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CsvFormatError, ReportFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (NetworkError, DecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NETWORK


if __name__ == "__main__":
    sys.exit(main())
