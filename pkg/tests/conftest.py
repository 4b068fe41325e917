import json
import string
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def alpha_words(prefix, n):
    """n distinct purely-alphabetic words; digits would not survive cleaning."""
    letters = string.ascii_lowercase
    words = []
    for i in range(n):
        suffix = letters[i // (26 * 26)] + letters[(i // 26) % 26] + letters[i % 26]
        words.append(prefix + suffix)
    return words


@pytest.fixture(scope="session")
def synthetic_article():
    return (FIXTURES / "synthetic_article.txt").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def synthetic_comments_path():
    return FIXTURES / "synthetic_comments.csv"


@pytest.fixture(scope="session")
def expected_run():
    return json.loads((FIXTURES / "expected_run.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def hn_fixture():
    return json.loads((FIXTURES / "hn_thread.json").read_text(encoding="utf-8"))
