"""File formats: comments CSV, run configuration, report serialization.

The comments CSV matches the harvester's historical output: header row
`comment,karma`, standard quoting. Run configs and reports are flat
`key = value` text files; `#` starts a comment line.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass, fields
from pathlib import Path

from .filtering import CommentRecord, ConfigError, FilterConfig
from .reporting import RunReport

CSV_HEADER = ["comment", "karma"]


class CsvFormatError(ValueError):
    """Comments CSV has a bad header or an unparseable row."""


class ReportFormatError(ValueError):
    """Serialized report is missing fields or has bad values."""


@dataclass(frozen=True)
class ThreadDataset:
    """An article plus its comments, as loaded from disk."""

    article_text: str
    comments: list[CommentRecord]
    source_story_id: int | None = None


@dataclass(frozen=True)
class RunConfig:
    """Filter settings plus where the article and comments live."""

    filter: FilterConfig
    article_path: str | None = None
    comments_path: str | None = None


# The ten documented preset threshold pairs, keyed by article slug.
# Paths name the historical dataset files; callers supply their own data.
_PRESET_TABLE = {
    "article-1": (0.05, 0.10, "Warning Microsoft Signature PC program now requires that you cant run Linux"),
    "article-2": (0.01, 0.05, "AnABTestingStory"),
    "article-3": (0.01, 0.05, "Researchers teleport particle of light six kilometres"),
    "article-4": (0.01, 0.05, "A 16-year-old British girl earns £48,000 helping Chinese people name their babies"),
    "article-5": (0.03, 0.08, "The Bizarre Role Reversal of Apple and Microsoft"),
    "article-6": (0.03, 0.08, "Of course smart homes are targets for hackers"),
    "article-7": (0.02, 0.10, "Soylent halts sales of its powder as customers keep getting sick"),
    "article-8": (0.04, 0.10, "Google AI invents its own cryptographic algorithm"),
    "article-9": (0.04, 0.10, "General questions about the Airbnb Community Commitment"),
    "article-10": (0.005, 0.02, "Cognitive bias cheat sheet"),
}

PRESET_NAMES = tuple(_PRESET_TABLE)


def write_comments_csv(path, comments: list[CommentRecord]) -> None:
    """Write records as UTF-8 CSV with header `comment,karma`."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for record in comments:
            writer.writerow([record.text, record.karma])


def read_comments_csv(path) -> list[CommentRecord]:
    """Read a `comment,karma` CSV back into records.

    Record ids are 1-based data row numbers; the CSV format does not
    carry the original item ids.
    """
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CsvFormatError(f"{path}: empty file, expected header {CSV_HEADER}")
        if header != CSV_HEADER:
            raise CsvFormatError(f"{path}: bad header {header!r}, expected {CSV_HEADER}")

        records = []
        for row_number, row in enumerate(reader, start=1):
            if len(row) != 2:
                raise CsvFormatError(
                    f"{path}: row {row_number}: expected 2 fields, got {len(row)}"
                )
            text, karma_text = row
            try:
                karma = int(karma_text)
            except ValueError:
                raise CsvFormatError(
                    f"{path}: row {row_number}: non-integer karma {karma_text!r}"
                )
            records.append(CommentRecord(id=row_number, text=text, karma=karma))
    return records


def load_article_text(path) -> str:
    """Read an article file as UTF-8, replacing undecodable bytes."""
    return Path(path).read_text(encoding="utf-8", errors="replace")


# -- flat key/value files -------------------------------------------


def _parse_kv_lines(lines, source: str) -> dict[str, str]:
    values = {}
    for line_number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"{source}: line {line_number}: expected 'key = value'")
        key, _, value = stripped.partition("=")
        values[key.strip()] = value.strip()
    return values


def _parse_bool(text: str, source: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise ConfigError(f"{source}: bad boolean {text!r}")


def load_run_config(name_or_path) -> RunConfig:
    """Load a bundled preset by name or a `key = value` config file.

    File keys: theta_min, theta_best (required); grow_enabled,
    min_word_length, article, comments (optional).
    """
    name = str(name_or_path)
    if name in _PRESET_TABLE:
        theta_min, theta_best, stem = _PRESET_TABLE[name]
        return RunConfig(
            filter=FilterConfig(theta_min=theta_min, theta_best=theta_best),
            article_path=f"{stem}.txt",
            comments_path=f"{stem}_full_comments.csv",
        )

    path = Path(name_or_path)
    if not path.exists():
        raise ConfigError(f"no preset or config file named {name!r}")
    values = _parse_kv_lines(path.read_text(encoding="utf-8").splitlines(), str(path))

    for required in ("theta_min", "theta_best"):
        if required not in values:
            raise ConfigError(f"{path}: missing required key {required!r}")
    try:
        theta_min = float(values["theta_min"])
        theta_best = float(values["theta_best"])
        min_word_length = int(values.get("min_word_length", 4))
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}")
    grow_enabled = _parse_bool(values.get("grow_enabled", "true"), str(path))

    return RunConfig(
        filter=FilterConfig(
            theta_min=theta_min,
            theta_best=theta_best,
            grow_enabled=grow_enabled,
            min_word_length=min_word_length,
        ),
        article_path=values.get("article"),
        comments_path=values.get("comments"),
    )


def format_report(report: RunReport) -> str:
    """Serialize a report as `key = value` lines, omitting absent values.

    Note for parity with older tooling: the legacy "rejection" number
    equals accepted/(accepted+rejected) - 1, i.e. -rejected_fraction.
    """
    lines = []
    for f in fields(report):
        value = getattr(report, f.name)
        if value is None:
            continue
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, float):
            value = repr(value)
        lines.append(f"{f.name} = {value}")
    return "\n".join(lines) + "\n"


def write_report(path, report: RunReport) -> None:
    Path(path).write_text(format_report(report), encoding="utf-8")


def read_report(path) -> RunReport:
    """Parse a serialized report back into a RunReport."""
    source = str(path)
    values = _parse_kv_lines(
        Path(path).read_text(encoding="utf-8").splitlines(), source
    )
    kwargs = {}
    try:
        for f in fields(RunReport):
            if f.name not in values:
                kwargs[f.name] = None
                continue
            raw = values[f.name]
            if f.name == "grow_enabled":
                kwargs[f.name] = raw.lower() == "true"
            elif f.name in ("total_comments", "accepted_count", "rejected_count",
                            "original_vocab_size", "final_vocab_size"):
                kwargs[f.name] = int(raw)
            else:
                kwargs[f.name] = float(raw)
    except ValueError as exc:
        raise ReportFormatError(f"{source}: {exc}")

    for required in ("total_comments", "accepted_count", "rejected_count",
                     "original_vocab_size", "final_vocab_size", "article_score",
                     "theta_min", "theta_best", "grow_enabled", "rejected_fraction"):
        if kwargs[required] is None:
            raise ReportFormatError(f"{source}: missing required key {required!r}")
    return RunReport(**kwargs)
