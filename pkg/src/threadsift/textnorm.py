"""Text normalization: raw text -> cleaned sentences of lowercase tokens.

Sentence boundaries are exactly . ; ? ! and newline. Everything outside
a-z (after case folding) becomes a space, so digits, accented letters and
symbols are lost by design. Acronyms (short all-caps runs) are detected
before case folding, since folding destroys the information.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

_BOUNDARY_RE = re.compile(r"[.;?!\n]")
# A standalone run of uppercase letters, not touching any other letter.
_CAPS_RUN_RE = re.compile(r"(?<![A-Za-z])[A-Z]{2,}(?![A-Za-z])")
_NON_ALPHA_RE = re.compile(r"[^a-z]+")


@dataclass(frozen=True)
class NormalizedText:
    """Cleaned sentences plus the acronyms spotted in the raw text.

    sentences: ordered, each a non-empty list of lowercase a-z tokens.
    acronyms: case-folded tokens that appeared fully capitalized in the
        raw text with length in [2, min_word_length).
    source_char_count: length of the raw input string.
    """

    sentences: tuple[tuple[str, ...], ...]
    acronyms: frozenset[str] = field(default_factory=frozenset)
    source_char_count: int = 0

    def tokens(self):
        """Iterate every token in sentence order."""
        for sentence in self.sentences:
            yield from sentence


def detect_acronyms(raw_text: str, min_word_length: int) -> frozenset[str]:
    """Find standalone all-caps runs of length 2..min_word_length-1.

    Runs at or above min_word_length survive the length filter on their
    own, so they are not treated as acronyms. Results are case-folded so
    they match lowercase tokens downstream.
    """
    found = set()
    for match in _CAPS_RUN_RE.finditer(raw_text):
        run = match.group()
        if len(run) < min_word_length:
            found.add(run.lower())
    return frozenset(found)


def normalize(raw_text: str, min_word_length: int = 4) -> NormalizedText:
    """Normalize raw text into cleaned sentences.

    Tokens of all lengths are kept here; length filtering belongs to
    vocabulary extraction. Total over all inputs, including empty text.
    """
    if min_word_length < 2:
        raise ValueError(f"min_word_length must be >= 2, got {min_word_length}")

    acronyms = detect_acronyms(raw_text, min_word_length)

    sentences = []
    for segment in _BOUNDARY_RE.split(raw_text):
        cleaned = _NON_ALPHA_RE.sub(" ", segment.lower())
        tokens = cleaned.split()
        if tokens:
            sentences.append(tuple(tokens))

    return NormalizedText(
        sentences=tuple(sentences),
        acronyms=acronyms,
        source_char_count=len(raw_text),
    )
