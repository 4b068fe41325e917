"""Hacker News harvester over the public Firebase-style JSON API.

Walks a story's comment tree breadth-first (direct children first, then
grandchildren, level by level), skipping deleted or vanished items, and
pairs every surviving comment with its own author's karma. A shared
rate limiter keeps at least min_interval_ms between any two requests.
"""
from __future__ import annotations

import html
import json
import time
from dataclasses import dataclass

import requests

from .filtering import KARMA_UNAVAILABLE, CommentRecord

DEFAULT_BASE_URL = "https://hacker-news.firebaseio.com"
DEFAULT_MIN_INTERVAL_MS = 200
_MAX_ATTEMPTS = 3
_BACKOFF_SECONDS = 0.5


class NetworkError(Exception):
    """Transport failure after the retry policy is exhausted."""


class DecodeError(Exception):
    """Response body is not valid JSON."""


@dataclass(frozen=True)
class HnItem:
    """One item from the /v0/item endpoint; absent fields stay None."""

    id: int
    title: str | None = None
    text: str | None = None
    by: str | None = None
    kids: tuple[int, ...] | None = None
    deleted: bool = False


def clean_html(raw: str) -> str:
    """Decode entities, turn <p> into newlines, drop italic tags.

    Newline is a sentence boundary downstream, so paragraph breaks
    survive as boundaries instead of gluing words together.
    """
    text = html.unescape(raw)
    return text.replace("<p>", "\n").replace("<i>", "").replace("</i>", "")


class HnClient:
    """Rate-limited, retrying client for the HN item/user endpoints.

    base_url is configurable so recorded fixtures can stand in for the
    live API; clock/sleep are injectable for the same reason.
    """

    def __init__(
        self,
        base_url: str = DEFAULT_BASE_URL,
        min_interval_ms: int = DEFAULT_MIN_INTERVAL_MS,
        session=None,
        clock=time.monotonic,
        sleep=time.sleep,
    ):
        self.base_url = base_url.rstrip("/")
        self.min_interval_ms = min_interval_ms
        self._session = session or requests.Session()
        self._clock = clock
        self._sleep = sleep
        self._last_request_at: float | None = None

    # -- transport ---------------------------------------------------

    def _wait_for_slot(self):
        if self._last_request_at is None:
            return
        interval = self.min_interval_ms / 1000.0
        elapsed = self._clock() - self._last_request_at
        if elapsed < interval:
            self._sleep(interval - elapsed)

    def _get_json(self, path: str):
        """GET {base}/{path}, returning parsed JSON (possibly None)."""
        url = f"{self.base_url}{path}"
        last_error: Exception | None = None
        for attempt in range(_MAX_ATTEMPTS):
            if attempt > 0:
                self._sleep(_BACKOFF_SECONDS * 2 ** (attempt - 1))
            self._wait_for_slot()
            self._last_request_at = self._clock()
            try:
                response = self._session.get(url, timeout=30)
                response.raise_for_status()
                return json.loads(response.text)
            except (json.JSONDecodeError, ValueError) as exc:
                last_error = DecodeError(f"malformed JSON from {url}: {exc}")
            except requests.RequestException as exc:
                last_error = NetworkError(f"request to {url} failed: {exc}")
        raise last_error

    # -- API surface -------------------------------------------------

    def fetch_item(self, item_id: int) -> HnItem | None:
        """Fetch one item; None when the API returns a JSON null."""
        if item_id <= 0:
            raise ValueError(f"item id must be positive, got {item_id}")
        payload = self._get_json(f"/v0/item/{item_id}.json")
        if payload is None:
            return None
        kids = payload.get("kids")
        return HnItem(
            id=payload.get("id", item_id),
            title=payload.get("title"),
            text=payload.get("text"),
            by=payload.get("by"),
            kids=tuple(kids) if kids is not None else None,
            deleted=bool(payload.get("deleted", False)),
        )

    def fetch_user_karma(self, username: str) -> int | None:
        """Karma for a user, or None when the user or field is missing."""
        if not username:
            raise ValueError("username must be non-empty")
        payload = self._get_json(f"/v0/user/{username}.json")
        if payload is None:
            return None
        karma = payload.get("karma")
        return int(karma) if karma is not None else None

    def harvest_thread(self, story_id: int) -> tuple[str, list[CommentRecord]]:
        """Collect a story's article text and full comment tree.

        Deleted items are dropped and their subtrees are not traversed.
        Each record carries its own author's karma, -1 when unavailable.
        """
        story = self.fetch_item(story_id)
        if story is None:
            raise NetworkError(f"story {story_id} does not exist")

        title = story.title or ""
        body = clean_html(story.text) if story.text else ""
        article_text = f"{title}\n{body}"

        comments: list[CommentRecord] = []
        frontier = list(story.kids or ())
        while frontier:
            next_frontier: list[int] = []
            for item_id in frontier:
                item = self.fetch_item(item_id)
                if item is None or item.deleted:
                    continue
                karma = None
                if item.by:
                    karma = self.fetch_user_karma(item.by)
                comments.append(
                    CommentRecord(
                        id=item.id,
                        text=clean_html(item.text) if item.text else "",
                        karma=karma if karma is not None else KARMA_UNAVAILABLE,
                    )
                )
                next_frontier.extend(item.kids or ())
            frontier = next_frontier
        return article_text, comments
